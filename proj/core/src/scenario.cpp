#include "nlat/scenario.hpp"

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "render_detail.hpp"

namespace nlat {

namespace {

using json = nlohmann::ordered_json;

const json& require(const json& j, const char* key, const char* where) {
  auto it = j.find(key);
  if (it == j.end())
    throw ScenarioError(std::string("scenario: missing '") + key + "' in " + where);
  return *it;
}

MappingClassSpec::Kind parse_kind(const std::string& s) {
  if (s == "multi_twist") return MappingClassSpec::Kind::MultiTwist;
  if (s == "projective_twist") return MappingClassSpec::Kind::ProjectiveTwist;
  if (s == "multi_reflection") return MappingClassSpec::Kind::MultiReflection;
  throw ScenarioError("scenario: unknown mapping class type '" + s + "'");
}

const char* kind_name(MappingClassSpec::Kind k) {
  switch (k) {
    case MappingClassSpec::Kind::MultiTwist: return "multi_twist";
    case MappingClassSpec::Kind::ProjectiveTwist: return "projective_twist";
    case MappingClassSpec::Kind::MultiReflection: return "multi_reflection";
  }
  return "";
}

SurfaceConfig parse_components(const json& arr, SurfaceComponent::Kind kind,
                               const char* where) {
  if (!arr.is_array())
    throw ScenarioError(std::string("scenario: '") + where + "' must be an array");
  SurfaceConfig cfg;
  for (const json& e : arr) {
    if (!e.is_object() || !e.contains("euler") || !e["euler"].is_number_integer())
      throw ScenarioError(std::string("scenario: each entry of '") + where +
                          "' needs an integer 'euler'");
    SurfaceComponent c;
    c.kind = kind;
    c.euler = e["euler"].get<long long>();
    c.count = e.value("count", static_cast<long long>(1));
    if (c.count < 1)
      throw ScenarioError(std::string("scenario: 'count' in '") + where +
                          "' must be >= 1");
    if (kind == SurfaceComponent::Kind::ProjectivePlane)
      c.essential = e.value("essential", true);
    cfg.components.push_back(c);
  }
  return cfg;
}

Verdict dispatch_twist(const Manifold& x, const SurfaceConfig& cfg) {
  // Mixed-sign sphere systems only make sense for the spin criterion; every
  // single-sign system goes through the covering criterion (which replays the
  // spin one on the universal cover by itself).
  bool mixed = cfg.sphere_count(2) > 0 && cfg.sphere_count(-2) > 0;
  if (mixed && x.spin && x.b1 == 0) return check_multi_twist_spin(x, cfg);
  return check_multi_twist(x, cfg);
}

std::string pi1_summary(const Pi1& p) {
  switch (p.kind) {
    case Pi1::Kind::Trivial: return "trivial";
    case Pi1::Kind::Finite:
      return p.tag.empty() ? "finite of order " + std::to_string(p.order) : p.tag;
    case Pi1::Kind::Unknown: return "unknown";
  }
  return "";
}

json condition_obj(const Condition& c) {
  json o;
  o["text"] = c.text;
  o["satisfied"] = c.satisfied;
  o["boundary"] = c.boundary;
  o["waived"] = c.waived;
  o["computed"] = c.computed;
  return o;
}

json manifold_obj(const Manifold& x) {
  json o;
  o["name"] = x.name;
  o["chi"] = x.chi;
  o["sigma"] = x.sigma;
  o["b1"] = x.b1;
  o["b2"] = x.b2();
  o["parity"] = to_string(x.parity);
  o["spin"] = x.spin;
  o["cover_spin"] = x.cover_spin;
  json p;
  p["kind"] = x.pi1.kind == Pi1::Kind::Trivial
                  ? "trivial"
                  : (x.pi1.kind == Pi1::Kind::Finite ? "finite" : "unknown");
  p["order"] = x.pi1.order;
  p["tag"] = x.pi1.tag;
  o["pi1"] = p;
  o["lattice"] = x.lattice.has_value() ? json(x.lattice->label) : json(nullptr);
  json caps;
  caps["sphere_minus2"] = x.capacities.sphere_minus2;
  caps["sphere_plus2"] = x.capacities.sphere_plus2;
  caps["sphere_minus1"] = x.capacities.sphere_minus1;
  caps["sphere_plus1"] = x.capacities.sphere_plus1;
  caps["plane_minus1"] = x.capacities.plane_minus1;
  caps["plane_plus1"] = x.capacities.plane_plus1;
  o["capacities"] = caps;
  if (x.chi_h.has_value()) o["chi_h"] = *x.chi_h;
  return o;
}

}  // namespace

namespace detail {

nlohmann::ordered_json verdict_obj(const Verdict& v) {
  json o;
  o["conclusion"] = to_string(v.conclusion);
  o["rule"] = v.rule;
  json conds = json::array();
  for (const Condition& c : v.conditions) conds.push_back(condition_obj(c));
  o["conditions"] = conds;
  o["citations"] = v.citations;
  o["notes"] = v.notes;
  if (v.char_vector.has_value()) {
    json cv;
    cv["lattice"] = v.char_vector->lattice.label;
    cv["rank"] = v.char_vector->lattice.rank();
    json coords = json::array();
    for (const Int& c : v.char_vector->coordinates) coords.push_back(c.str());
    cv["coordinates"] = coords;
    o["char_vector"] = cv;
  } else {
    o["char_vector"] = nullptr;
  }
  return o;
}

}  // namespace detail

namespace {

json mapping_obj(const MappingClassSpec& mc) {
  json o;
  o["type"] = kind_name(mc.kind);
  if (mc.kind == MappingClassSpec::Kind::MultiReflection) {
    o["k"] = mc.reflections;
    o["xprime"] = mc.xprime;
    o["h1_ok"] = mc.h1_ok.has_value() ? json(*mc.h1_ok) : json(nullptr);
    return o;
  }
  json comps = json::array();
  for (const SurfaceComponent& c : mc.config.components) {
    json e;
    e["euler"] = c.euler;
    e["count"] = c.count;
    if (c.kind == SurfaceComponent::Kind::ProjectivePlane)
      e["essential"] = c.essential;
    comps.push_back(e);
  }
  o[mc.kind == MappingClassSpec::Kind::MultiTwist ? "spheres" : "planes"] = comps;
  return o;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ScenarioError(std::string("scenario: ") + e.what());
  }
  if (!j.is_object()) throw ScenarioError("scenario: top level must be an object");

  Scenario s;
  if (j.contains("build")) {
    if (!j["build"].is_string())
      throw ScenarioError("scenario: 'build' must be a string");
    s.build = j["build"].get<std::string>();
  }

  const json& mc = require(j, "mapping_class", "the scenario");
  if (!mc.is_object())
    throw ScenarioError("scenario: 'mapping_class' must be an object");
  const json& type = require(mc, "type", "mapping_class");
  if (!type.is_string())
    throw ScenarioError("scenario: 'type' must be a string");
  s.mapping_class.kind = parse_kind(type.get<std::string>());

  switch (s.mapping_class.kind) {
    case MappingClassSpec::Kind::MultiTwist:
      s.mapping_class.config =
          parse_components(require(mc, "spheres", "mapping_class"),
                           SurfaceComponent::Kind::Sphere, "spheres");
      break;
    case MappingClassSpec::Kind::ProjectiveTwist:
      s.mapping_class.config =
          parse_components(require(mc, "planes", "mapping_class"),
                           SurfaceComponent::Kind::ProjectivePlane, "planes");
      break;
    case MappingClassSpec::Kind::MultiReflection: {
      const json& k = require(mc, "k", "mapping_class");
      if (!k.is_number_integer())
        throw ScenarioError("scenario: 'k' must be an integer");
      s.mapping_class.reflections = k.get<long long>();
      const json& xp = require(mc, "xprime", "mapping_class");
      if (!xp.is_string())
        throw ScenarioError("scenario: 'xprime' must be a string");
      s.mapping_class.xprime = xp.get<std::string>();
      if (mc.contains("h1_ok")) {
        if (!mc["h1_ok"].is_boolean())
          throw ScenarioError("scenario: 'h1_ok' must be a boolean");
        s.mapping_class.h1_ok = mc["h1_ok"].get<bool>();
      }
      break;
    }
  }

  if (j.contains("options")) {
    const json& o = j["options"];
    if (!o.is_object()) throw ScenarioError("scenario: 'options' must be an object");
    if (o.contains("as_paper")) {
      if (!o["as_paper"].is_boolean())
        throw ScenarioError("scenario: 'as_paper' must be a boolean");
      s.as_paper = o["as_paper"].get<bool>();
    }
    if (o.contains("format")) {
      if (!o["format"].is_string())
        throw ScenarioError("scenario: 'format' must be a string");
      s.format = o["format"].get<std::string>();
      if (s.format != "text" && s.format != "json")
        throw ScenarioError("scenario: format must be 'text' or 'json'");
    }
  }
  return s;
}

ScenarioResult run_scenario(const Scenario& s) {
  try {
    const MappingClassSpec& mc = s.mapping_class;

    if (mc.kind == MappingClassSpec::Kind::MultiReflection) {
      if (mc.xprime.empty())
        throw ScenarioError("scenario: multi_reflection requires 'xprime'");
      if (mc.reflections < 1)
        throw ScenarioError("scenario: multi_reflection requires k >= 1");
      Manifold xp = parse_build(mc.xprime);
      Manifold x = xp;
      for (long long i = 0; i < mc.reflections; ++i)
        x = connected_sum(x, block_cp2bar());
      if (!s.build.empty()) {
        Manifold given = parse_build(s.build);
        if (given.chi != x.chi || given.sigma != x.sigma) {
          std::ostringstream msg;
          msg << "scenario: build '" << s.build << "' does not match X' # "
              << mc.reflections << " CP2bar: (chi, sigma) = (" << given.chi
              << ", " << given.sigma << ") vs (" << x.chi << ", " << x.sigma
              << ")";
          throw ScenarioError(msg.str());
        }
        x = given;
      }
      ScenarioResult r;
      r.manifold = x;
      r.verdict = check_multi_reflection(xp, mc.reflections, mc.h1_ok, s.as_paper);
      return r;
    }

    if (s.build.empty()) throw ScenarioError("scenario: missing 'build'");
    Manifold x = parse_build(s.build);
    std::vector<std::string> defects = validate_config(x, mc.config);
    if (!defects.empty()) {
      std::string msg = "scenario: configuration rejected";
      for (const std::string& d : defects) msg += "; " + d;
      throw ScenarioError(msg);
    }

    ScenarioResult r;
    r.manifold = x;
    if (mc.kind == MappingClassSpec::Kind::MultiTwist) {
      r.verdict = dispatch_twist(x, mc.config);
    } else {
      r.verdict = check_projective_twist(x, mc.config);
      r.nontrivial = projective_twist_nontrivial(x);
    }
    return r;
  } catch (const ScenarioError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ScenarioError(std::string("scenario: ") + e.what());
  }
}

std::string manifold_summary(const Manifold& x) {
  std::ostringstream out;
  out << "chi = " << x.chi << ", sigma = " << x.sigma << ", b1 = " << x.b1
      << ", b2 = " << x.b2() << ", " << to_string(x.parity)
      << ", pi1 = " << pi1_summary(x.pi1);
  if (x.spin)
    out << ", spin";
  else if (x.cover_spin)
    out << ", spin cover";
  return out.str();
}

std::string verdict_json(const Verdict& v) { return detail::verdict_obj(v).dump(2) + "\n"; }

std::string scenario_json(const Scenario& s, const ScenarioResult& r) {
  json o;
  o["build"] = s.build;
  o["as_paper"] = s.as_paper;
  o["mapping_class"] = mapping_obj(s.mapping_class);
  o["manifold"] = manifold_obj(r.manifold);
  o["verdict"] = detail::verdict_obj(r.verdict);
  if (r.nontrivial.has_value()) o["nontrivial"] = detail::verdict_obj(*r.nontrivial);
  return o.dump(2) + "\n";
}

std::string scenario_text(const Scenario& s, const ScenarioResult& r) {
  std::ostringstream out;
  out << (s.build.empty() ? r.manifold.name : s.build) << "\n";
  out << "  " << manifold_summary(r.manifold) << "\n";
  out << verdict_report(r.verdict);
  if (r.nontrivial.has_value()) {
    out << "nontriviality:\n";
    out << verdict_report(*r.nontrivial);
  }
  return out.str();
}

}  // namespace nlat
