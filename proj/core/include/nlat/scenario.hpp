#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "nlat/manifold.hpp"
#include "nlat/obstruction.hpp"

namespace nlat {

// Any defect in the scenario input: malformed JSON, unknown manifold grammar,
// a surface configuration the manifold cannot carry, or a build expression
// inconsistent with the declared reflection data.
struct ScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MappingClassSpec {
  enum class Kind { MultiTwist, ProjectiveTwist, MultiReflection };

  Kind kind = Kind::MultiTwist;
  SurfaceConfig config;        // twist kinds
  long long reflections = 0;   // multi-reflection: number of reflected spheres
  std::string xprime;          // multi-reflection: build expression for X'
  std::optional<bool> h1_ok;   // multi-reflection: external H1 assertion
};

struct Scenario {
  std::string build;  // may be empty for multi-reflection (then derived)
  MappingClassSpec mapping_class;
  bool as_paper = false;
  std::string format = "text";  // "text" or "json"
};

// Parses a scenario document. Throws ScenarioError on any malformed field.
Scenario parse_scenario(const std::string& text);

struct ScenarioResult {
  Manifold manifold;
  Verdict verdict;
  // Projective twists also run the essential-class nontriviality check.
  std::optional<Verdict> nontrivial;
};

// Builds the manifold, validates the configuration against its capacities and
// dispatches to the matching criterion. Input defects throw ScenarioError;
// internal invariant violations propagate as std::logic_error.
ScenarioResult run_scenario(const Scenario& s);

// One-line invariant summary of a manifold record, shared by the reports.
std::string manifold_summary(const Manifold& x);

std::string verdict_json(const Verdict& v);
std::string scenario_json(const Scenario& s, const ScenarioResult& r);
std::string scenario_text(const Scenario& s, const ScenarioResult& r);

}  // namespace nlat
