#ifndef WRZ_ACCEPTANCE_HPP
#define WRZ_ACCEPTANCE_HPP

#include <ostream>
#include <string>
#include <vector>

namespace wrz {

/// Outcome of one verification criterion.
struct CriterionResult {
  std::string id;       // "A1".."A12"
  std::string summary;  // measured values, one line
  bool pass = false;
  double seconds = 0.0;
};

/// Runs the verification suite. quick = criteria A1-A5 only; full adds the
/// Monte Carlo and adjudication criteria A6-A12.
std::vector<CriterionResult> run_acceptance(bool full);

/// One "Axx PASS/FAIL (t s): summary" line per criterion.
void print_acceptance(const std::vector<CriterionResult>& results, std::ostream& os);

bool all_pass(const std::vector<CriterionResult>& results);

}  // namespace wrz

#endif
