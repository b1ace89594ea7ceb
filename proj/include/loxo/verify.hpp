#pragma once

// The built-in verification suite: numbered criteria covering the
// Gudermannian identities, connection coefficients, flatness, conformal
// flattening, auto-parallel residuals, projection straightness, the Gaussian
// family, and the kappa-deformed functions.  Shared by the `verify` CLI
// command and the acceptance test binary.

#include <map>
#include <string>
#include <vector>

namespace loxo::verify {

struct SubCheck {
  std::string name;
  double measured;
  double tolerance;
  const char* comparator;  // "<=" or ">="
  bool pass;
};

struct CriterionResult {
  int index;
  std::string slug;
  std::string title;
  bool pass;
  std::vector<SubCheck> checks;
};

// Relative scales applied to a criterion's tolerances, keyed by slug
// (scale > 1 loosens a "<=" bound and lowers a ">=" bound).
using ToleranceScales = std::map<std::string, double>;

// Criteria 1-10, which run fully in-process.
std::vector<CriterionResult> run_core_criteria(
    const ToleranceScales& scales = {});

// Criterion 11: runs `<exe> verify --json --core-only` twice and requires
// exit 0 and byte-identical reports.
CriterionResult run_cli_determinism(const std::string& exe_path);

// Keeps only criteria whose slug contains `only` (empty keeps everything).
std::vector<CriterionResult> filter_by_slug(std::vector<CriterionResult> all,
                                            const std::string& only);

bool all_pass(const std::vector<CriterionResult>& results);

std::string report_text(const std::vector<CriterionResult>& results,
                        bool detail);
std::string report_json(const std::vector<CriterionResult>& results);

}  // namespace loxo::verify
