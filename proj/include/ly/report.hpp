#ifndef LY_REPORT_HPP
#define LY_REPORT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "ly/rational.hpp"

namespace ly {

/// One failing basis tuple: the tuple of basis indices and the exact
/// residual vector of the identity evaluated there.
struct Witness {
  std::vector<std::size_t> tuple;
  Vec residual;
};

/// Result of checking one identity family over all basis tuples.
/// Witness storage is capped; total_violations always counts everything.
struct CheckReport {
  std::string axiom_id;
  std::size_t total_violations = 0;
  std::vector<Witness> witnesses;
  std::size_t max_witnesses = 16;

  bool ok() const { return total_violations == 0; }

  void add(std::vector<std::size_t> tuple, Vec residual) {
    ++total_violations;
    if (witnesses.size() < max_witnesses)
      witnesses.push_back({std::move(tuple), std::move(residual)});
  }

  /// Records the residual only when it is nonzero.
  void record(std::vector<std::size_t> tuple, Vec residual) {
    if (!is_zero(residual)) add(std::move(tuple), std::move(residual));
  }
};

inline bool all_ok(const std::vector<CheckReport>& rs) {
  for (const auto& r : rs)
    if (!r.ok()) return false;
  return true;
}

}  // namespace ly

#endif
