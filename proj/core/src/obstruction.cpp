#include "nlat/obstruction.hpp"

#include <stdexcept>

namespace nlat {

namespace {

std::string bool_str(bool b) { return b ? "true" : "false"; }

struct SphereCounts {
  long long plus = 0;
  long long minus = 0;
};

SphereCounts count_twist_spheres(const SurfaceConfig& cfg) {
  SphereCounts k;
  for (const auto& comp : cfg.components) {
    if (comp.kind != SurfaceComponent::Kind::Sphere)
      throw std::invalid_argument("multi-twist configurations consist of spheres");
    if (comp.count < 0) throw std::invalid_argument("negative sphere count");
    if (comp.euler == 2)
      k.plus += comp.count;
    else if (comp.euler == -2)
      k.minus += comp.count;
    else
      throw std::invalid_argument("twist spheres must have normal Euler number -2 or +2");
  }
  if (k.plus + k.minus == 0) throw std::invalid_argument("empty sphere configuration");
  return k;
}

std::string conclusion_phrase(Conclusion c) {
  switch (c) {
    case Conclusion::ObstructedNoFiniteOrder:
      return "obstructed: no finite order representative";
    case Conclusion::ObstructedNoInvolution:
      return "obstructed: no smooth involution representative";
    case Conclusion::NontrivialClass:
      return "the mapping class is nontrivial";
    case Conclusion::Inapplicable:
      return "inapplicable: a boundary exclusion holds";
    case Conclusion::HypothesisFailure:
      return "hypothesis failure: the criterion is silent";
  }
  return "";
}

// H1 status derivable from the invariant record alone.
struct H1Status {
  bool known = false;
  bool ok = false;
  std::string detail;
};

H1Status h1_from_record(const Manifold& x) {
  if (x.b1 > 0)
    return {true, false, "b1 = " + std::to_string(x.b1) + " gives infinite order classes"};
  switch (x.pi1.kind) {
    case Pi1::Kind::Trivial:
      return {true, true, "pi1 trivial, H1 = 0"};
    case Pi1::Kind::Finite: {
      long long m = x.pi1.order;
      if (m % 2 == 1)
        return {true, true, "|pi1| = " + std::to_string(m) + " is odd, so H1 is of odd order"};
      // groups of order 2 and 4 are abelian, so H1 = pi1 has 2-torsion
      if (m == 2 || m == 4)
        return {true, false, "|pi1| = " + std::to_string(m) + " forces 2-torsion in H1"};
      return {false, false,
              "|pi1| = " + std::to_string(m) + " does not determine the 2-torsion of H1"};
    }
    default:
      return {false, false, "fundamental group record is unknown"};
  }
}

}  // namespace

std::string to_string(Conclusion c) {
  switch (c) {
    case Conclusion::ObstructedNoFiniteOrder: return "obstructed-no-finite-order";
    case Conclusion::ObstructedNoInvolution: return "obstructed-no-involution";
    case Conclusion::NontrivialClass: return "nontrivial-class";
    case Conclusion::Inapplicable: return "inapplicable";
    case Conclusion::HypothesisFailure: return "hypothesis-failure";
  }
  return "";
}

Conclusion grade_conditions(const std::vector<Condition>& conditions, Conclusion on_success) {
  bool all = true;
  bool boundary_failed = false;
  for (const auto& c : conditions) {
    if (c.satisfied || c.waived) continue;
    all = false;
    if (c.boundary) boundary_failed = true;
  }
  if (all) return on_success;
  return boundary_failed ? Conclusion::Inapplicable : Conclusion::HypothesisFailure;
}

Verdict check_multi_twist_spin(const Manifold& x, const SurfaceConfig& cfg) {
  if (!x.spin) throw std::invalid_argument("the spin criterion needs a spin manifold");
  if (x.b1 != 0) throw std::invalid_argument("the spin criterion needs b1 = 0");
  SphereCounts k = count_twist_spheres(cfg);

  Verdict v;
  v.rule = "lem:multitwist";
  v.citations = {"lem:multitwist"};
  if (x.sigma > 0) v.citations.push_back("rk:positivesign");

  v.conditions.push_back(
      {"X is spin with b1(X) = 0", true, false, false, "spin = true, b1 = 0"});
  if (x.sigma == 0) {
    v.conditions.push_back({"sigma(X) != 0", false, true, false, "sigma(X) = 0"});
    v.conclusion = grade_conditions(v.conditions, Conclusion::ObstructedNoFiniteOrder);
    return v;
  }

  Rat half = Rat(x.sigma) / 2;
  long long diff = k.plus - k.minus;
  v.conditions.push_back({"sigma(X)/2 != k+ - k-", Rat(diff) != half, true, false,
                          "sigma(X)/2 = " + half.str() + ", k+ - k- = " + std::to_string(diff)});

  long long kh = x.sigma < 0 ? k.plus : k.minus;
  Rat window = Rat(x.sigma < 0 ? -x.sigma : x.sigma) / 16 + 1;
  bool in_window = kh == 0 || (kh > 0 && Rat(kh) < window);
  v.conditions.push_back({x.sigma < 0 ? "k+ = 0 or -sigma/16 + 1 > k+ > 0"
                                      : "k- = 0 or sigma/16 + 1 > k- > 0",
                          in_window, false, false,
                          (x.sigma < 0 ? "k+ = " : "k- = ") + std::to_string(kh) +
                              ", window bound = " + window.str()});

  v.conclusion = grade_conditions(v.conditions, Conclusion::ObstructedNoFiniteOrder);
  return v;
}

Verdict check_multi_twist(const Manifold& x, const SurfaceConfig& cfg) {
  if (x.pi1.kind == Pi1::Kind::Unknown)
    throw std::invalid_argument("fundamental group record is unknown");
  SphereCounts counts = count_twist_spheres(cfg);
  if (counts.plus > 0 && counts.minus > 0)
    throw std::invalid_argument("the covered criterion needs spheres of a single Euler number");
  long long euler = counts.minus > 0 ? -2 : 2;
  long long k = counts.plus + counts.minus;
  long long order = x.pi1.order;

  Verdict v;
  v.rule = "thm:obstruction1";
  v.citations = {"thm:obstruction1", "lem:multitwist"};
  if (euler == 2) v.citations.push_back("rk:positivesign");

  v.conditions.push_back({"pi1(X) is finite", x.b1 == 0, false, false,
                          "|pi1| = " + std::to_string(order) +
                              ", b1 = " + std::to_string(x.b1)});
  v.conditions.push_back({"the universal cover of X is spin", x.cover_spin, false, false,
                          "cover spin = " + bool_str(x.cover_spin)});

  bool sign_ok = (euler == -2 && x.sigma < 0) || (euler == 2 && x.sigma > 0);
  v.conditions.push_back({euler == -2 ? "sigma(X) < 0 with (-2)-spheres"
                                      : "sigma(X) > 0 with (+2)-spheres",
                          sign_ok, true, false,
                          "sigma(X) = " + std::to_string(x.sigma) +
                              ", spheres of Euler number " + std::to_string(euler)});

  Rat bound = Rat(x.sigma < 0 ? -x.sigma : x.sigma) / 2;
  v.conditions.push_back({euler == -2 ? "k != -sigma(X)/2" : "k != sigma(X)/2",
                          Rat(k) != bound, true, false,
                          "k = " + std::to_string(k) + ", |sigma(X)|/2 = " + bound.str()});

  v.conclusion = grade_conditions(v.conditions, Conclusion::ObstructedNoFiniteOrder);

  if (x.b1 == 0 && x.cover_spin && sign_ok) {
    Verdict sub =
        check_multi_twist_spin(universal_cover(x), lift_surface_config(cfg, order));
    if (sub.conclusion != v.conclusion)
      throw std::logic_error("cover cross-check disagrees with the covered criterion");
    v.notes.push_back("confirmed by the spin criterion on the degree-" +
                      std::to_string(order) + " universal cover (" +
                      std::to_string(order * k) + " spheres)");
  }
  return v;
}

Verdict check_projective_twist(const Manifold& x, const SurfaceConfig& cfg) {
  if (x.pi1.kind == Pi1::Kind::Unknown)
    throw std::invalid_argument("fundamental group record is unknown");
  long long kp = 0, km = 0;
  for (const auto& comp : cfg.components) {
    if (comp.kind != SurfaceComponent::Kind::ProjectivePlane)
      throw std::invalid_argument(
          "projective multi-twist configurations consist of projective planes");
    if (!comp.essential)
      throw std::invalid_argument("the criterion needs essential projective planes");
    if (comp.count < 0) throw std::invalid_argument("negative plane count");
    if (comp.euler == 1)
      kp += comp.count;
    else if (comp.euler == -1)
      km += comp.count;
    else
      throw std::invalid_argument("projective planes must have normal Euler number -1 or +1");
  }
  if (kp > 0 && km > 0)
    throw std::invalid_argument("the criterion needs planes of a single Euler number");
  if (kp + km == 0) throw std::invalid_argument("empty plane configuration");
  long long euler = km > 0 ? -1 : 1;
  long long k = kp + km;

  Verdict v;
  v.rule = "cor:obstruction";
  v.citations = {"cor:obstruction", "rk:multiPT", "thm:obstruction1"};

  v.conditions.push_back({"pi1(X) is finite", x.b1 == 0, false, false,
                          "|pi1| = " + std::to_string(x.pi1.order) +
                              ", b1 = " + std::to_string(x.b1)});
  v.conditions.push_back({"the universal cover of X is spin", x.cover_spin, false, false,
                          "cover spin = " + bool_str(x.cover_spin)});
  v.conditions.push_back({euler == -1 ? "sigma(X) < -1" : "sigma(X) > 1",
                          euler == -1 ? x.sigma < -1 : x.sigma > 1, true, false,
                          "sigma(X) = " + std::to_string(x.sigma)});
  long long excluded = euler == -1 ? -x.sigma : x.sigma;
  v.conditions.push_back({euler == -1 ? "k != -sigma(X)" : "k != sigma(X)", k != excluded,
                          true, false,
                          "k = " + std::to_string(k) +
                              ", excluded value = " + std::to_string(excluded)});

  v.conclusion = grade_conditions(v.conditions, Conclusion::ObstructedNoFiniteOrder);
  v.notes.push_back("each essential plane lifts to a sphere of Euler number " +
                    std::to_string(2 * euler) + " in a double cover");
  return v;
}

Verdict projective_twist_nontrivial(const Manifold& x) {
  if (x.capacities.plane_minus1 + x.capacities.plane_plus1 <= 0)
    throw std::invalid_argument("no essential projective plane available");
  long long b2 = x.b2();
  if ((b2 + x.sigma) % 2 != 0)
    throw std::invalid_argument("b2 and sigma have different parities");
  long long bp = (b2 + x.sigma) / 2;
  long long bm = (b2 - x.sigma) / 2;

  Verdict v;
  v.rule = "prop:essential";
  v.citations = {"prop:essential"};
  bool separated = bp != x.b1 - 1 || bm != x.b1;
  v.conditions.push_back({"b+(X) != b1(X) - 1 or b-(X) != b1(X)", separated, false, false,
                          "b+ = " + std::to_string(bp) + ", b- = " + std::to_string(bm) +
                              ", b1 = " + std::to_string(x.b1)});
  if (x.b1 == 0)
    v.notes.push_back("b1 = 0 makes b+(X) = b1(X) - 1 impossible, so the class is "
                      "always nontrivial");
  v.conclusion = grade_conditions(v.conditions, Conclusion::NontrivialClass);
  return v;
}

Verdict check_multi_reflection(const Manifold& xprime, long long k,
                               std::optional<bool> h1_ok, bool as_paper) {
  if (k < 1)
    throw std::invalid_argument("a multi-reflection needs k >= 1 exceptional spheres");

  Verdict v;
  v.rule = "thm:obstruction2";
  v.citations = {"thm:obstruction2", "lem:multireflection", "prop:MR"};

  long long sigma_x = xprime.sigma - k;

  auto waive = [&](Condition& c, const std::string& why) {
    if (!c.satisfied && as_paper) {
      c.waived = true;
      v.notes.push_back("as-paper override: " + why);
    }
  };

  Condition spin_c{"X' is spin", xprime.spin, false, false,
                   "spin(X') = " + bool_str(xprime.spin)};
  waive(spin_c, "X' = " + xprime.name +
                    " is not spin; the hypothesis is waived and the discrepancy recorded");
  v.conditions.push_back(spin_c);

  H1Status h1 = h1_from_record(xprime);
  bool h1_val = false;
  std::string h1_detail = h1.detail;
  if (h1.known)
    h1_val = h1.ok;
  else if (h1_ok.has_value()) {
    h1_val = *h1_ok;
    h1_detail += *h1_ok ? "; asserted to hold" : "; asserted to fail";
  } else
    h1_detail += "; no assertion provided";
  Condition h1_c{"H1(X') has no 2-torsion and no infinite order elements", h1_val, false,
                 false, h1_detail};
  waive(h1_c, "the first homology hypothesis fails (" + h1_detail +
                  "); waived and the discrepancy recorded");
  v.conditions.push_back(h1_c);

  v.conditions.push_back({"sigma(X') < 0", xprime.sigma < 0, false, false,
                          "sigma(X') = " + std::to_string(xprime.sigma)});

  Rat half = Rat(-sigma_x) / 2;
  v.conditions.push_back({"k != -sigma(X)/2", Rat(k) != half, true, false,
                          "k = " + std::to_string(k) +
                              ", sigma(X) = sigma(X') - k = " + std::to_string(sigma_x) +
                              ", -sigma(X)/2 = " + half.str()});

  if (xprime.lattice.has_value()) {
    Lattice l =
        direct_sum(*xprime.lattice, standard_lattice(std::to_string(k) + "*<-1>"));
    std::vector<Int> c(static_cast<std::size_t>(xprime.lattice->rank()), Int(0));
    for (long long i = 0; i < k; ++i) c.push_back(Int(1));
    bool characteristic = is_characteristic(l, c);
    if (xprime.spin && !characteristic)
      throw std::logic_error("characteristic vector check failed on a spin summand");
    Condition cc{"c = e_1 + ... + e_k is characteristic in Q_X", characteristic, false,
                 false,
                 characteristic ? "verified in the explicit form"
                                : "fails in the explicit form"};
    waive(cc, "c = e_1 + ... + e_k is not characteristic in the explicit form; the "
              "spin-c construction does not literally apply");
    v.conditions.push_back(cc);
    if (characteristic) v.char_vector = CharVector{l, c};
  }

  v.notes.push_back("c1^2(s) - sigma(X) = -sigma(X') = " + std::to_string(-xprime.sigma));
  v.notes.push_back("the reflection action e_i -> -e_i gives R_S^*(s) = conjugate(s)");

  v.conclusion = grade_conditions(v.conditions, Conclusion::ObstructedNoInvolution);
  return v;
}

std::string verdict_report(const Verdict& v) {
  std::string out = "rule " + v.rule + ": " + conclusion_phrase(v.conclusion) + "\n";
  for (const auto& c : v.conditions) {
    out += "  [";
    out += c.satisfied ? "ok" : (c.waived ? "waived" : (c.boundary ? "boundary" : "failed"));
    out += "] " + c.text + "  (" + c.computed + ")\n";
  }
  if (!v.citations.empty()) {
    out += "  see:";
    for (std::size_t i = 0; i < v.citations.size(); ++i)
      out += (i == 0 ? " " : ", ") + v.citations[i];
    out += "\n";
  }
  for (const auto& n : v.notes) out += "  note: " + n + "\n";
  return out;
}

}  // namespace nlat
