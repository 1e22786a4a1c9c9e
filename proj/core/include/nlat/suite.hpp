#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nlat/obstruction.hpp"

namespace nlat {

// One line of the worked-example table: a manifold family member, the mapping
// class acting on it, and the verdicts the criteria produce for it.
struct SuiteRow {
  std::string name;
  std::string build;
  std::string action;
  std::string invariants;
  std::string result;
  std::optional<Verdict> verdict;
  std::optional<Verdict> as_paper;   // reflection rows: verdict under the override
  std::optional<Verdict> secondary;  // projective rows: nontriviality check
};

// The full worked-example table. Deterministic: same rows, same order,
// same strings on every call.
std::vector<SuiteRow> paper_suite();

std::string suite_text(const std::vector<SuiteRow>& rows);
std::string suite_json(const std::vector<SuiteRow>& rows);

}  // namespace nlat
