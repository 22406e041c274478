#ifndef LY_COMPAT_HPP
#define LY_COMPAT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "ly/lya.hpp"
#include "ly/rep.hpp"
#include "ly/report.hpp"

namespace ly {

/// Two Lie Yamaguti structures on one basis. Validity (each component plus
/// the mixed identities CY1-CY4) is computed, never assumed.
struct CompatibleLy {
  std::size_t dim = 0;
  std::vector<std::string> basis_names;
  BilinearMap pi1, pi2;
  TrilinearMap omega1, omega2;

  LyAlgebra component(int i) const;
};

struct Weights {
  Rat k1, k2;
};

CompatibleLy abelian_compatible(std::size_t dim);

/// Pairs a single algebra with itself (always compatible when `a` is valid).
CompatibleLy self_pair(const LyAlgebra& a);

/// Lifts a pair of Lie brackets via [x,y,z]_i = [[x,y]_j, z]_i (i != j).
/// Both brackets must satisfy Jacobi.
CompatibleLy lift_compatible_lie(const BilinearMap& b1, const BilinearMap& b2,
                                 std::vector<std::string> basis_names = {});

/// Component LY reports (prerequisites), the four mixed identities CY1-CY4,
/// and a fifth informational report (mixed cyclic trilinear sum; the
/// identity family the paper's later (CLY5) citations appear to use).
std::vector<CheckReport> check_compatible(const CompatibleLy& c,
                                          std::size_t max_witnesses = 16);

bool is_compatible(const CompatibleLy& c);

/// k1*structure1 + k2*structure2; validity not asserted.
LyAlgebra linear_combination(const CompatibleLy& c, const Weights& w);

extern const std::vector<Weights> kDefaultWeightSamples;  // Prop 3.1 samples

/// Runs check_lya on the linear combination at each sample weight pair;
/// one aggregated report per sample.
std::vector<CheckReport> check_prop31(
    const CompatibleLy& c,
    const std::vector<Weights>& samples = kDefaultWeightSamples);

CompatibleLy compat_direct_sum(const CompatibleLy& a, const CompatibleLy& b);

CheckReport check_compat_homomorphism(const CompatibleLy& c1,
                                      const CompatibleLy& c2,
                                      const LinearMap& phi,
                                      std::size_t max_witnesses = 16);

/// Component representations on a shared V; D = D1 + D2 is derived.
struct CompatRepresentation {
  Representation rep1, rep2;
};

CompatRepresentation compat_adjoint(const CompatibleLy& c);

/// Component rep conditions (prerequisites), the six mixed conditions of
/// the compatible-representation definition, and the D = D1 + D2 identity.
std::vector<CheckReport> check_compat_representation(
    const CompatibleLy& c, const CompatRepresentation& r,
    std::size_t max_witnesses = 16);

CompatibleLy compat_semidirect(const CompatibleLy& c,
                               const CompatRepresentation& r);

CheckReport check_compat_derivation(const CompatibleLy& c, const LinearMap& d,
                                    std::size_t max_witnesses = 16);

/// T_(a,b): z -> k1 [a,b,z]_1 + k2 [a,b,z]_2.
LinearMap inner_derivation(const CompatibleLy& c, std::size_t a, std::size_t b,
                           const Weights& w);

}  // namespace ly

#endif
