#ifndef LY_COHOM_HPP
#define LY_COHOM_HPP

#include <cstddef>
#include <vector>

#include "ly/cochain.hpp"
#include "ly/compat.hpp"
#include "ly/rep.hpp"
#include "ly/report.hpp"

namespace ly {

/// Coboundary of a linear map f: L -> V (the degree-1 pair):
///   (d1 f)(x,y)   = rho(x) f(y) - rho(y) f(x) - f([x,y])
///   (d2 f)(x,y,z) = D(x,y) f(z) + mu(y,z) f(x) - mu(x,z) f(y) - f([x,y,z])
Cochain delta0(const Matrix& f, const LyAlgebra& a, const Representation& rep);

/// Coboundary of a V-valued cochain; dispatches to delta0 at degree 0,
/// otherwise evaluates the two alternating sums with
/// X_k o X_l := [x_k,y_k,x_l]^y_l + x_l^[x_k,y_k,y_l].
Cochain delta(const Cochain& f, const LyAlgebra& a, const Representation& rep,
              std::size_t degree_cap = 3);

/// Cross-validation: with adjoint coefficients, delta(f) must equal
/// (-1)^p [Pi, f] (p = internal degree; plain [Pi, f] at degree 0).
CheckReport delta_vs_bracket(const Cochain& f, const LyAlgebra& a,
                             std::size_t max_witnesses = 16);

/// Element of the compatible complex: degree n holds n cochains of
/// internal degree n - 1 (a single linear map at n = 1).
struct CompatTuple {
  std::size_t degree = 0;
  std::vector<Cochain> comps;

  bool is_zero() const;
  Vec coords() const;
  bool operator==(const CompatTuple&) const = default;
};

CompatTuple zero_tuple(std::size_t dim, std::size_t degree);
CompatTuple tuple_from_coords(std::size_t dim, std::size_t degree,
                              const Vec& coords);
std::size_t tuple_space_dim(std::size_t dim, std::size_t degree);

/// Staggered differential of the compatible complex:
/// (F_1,..,F_n) -> ([Pi1,F_1], .., [Pi2,F_{i-1}]+[Pi1,F_i], .., [Pi2,F_n]).
CompatTuple delta_c(const CompatTuple& t, const CompatibleLy& c,
                    std::size_t degree_cap = 3);

struct CohomologyDims {
  std::size_t kernel_dim = 0, image_dim = 0, h_dim = 0;
};

/// Exact dimensions at tuple degree n >= 1 (degree 1 is the bottom of the
/// complex, so image_dim is 0 there). Assembles the differentials column by
/// column and checks im inside ker before subtracting.
CohomologyDims cohomology_dim(const CompatibleLy& c, std::size_t n,
                              std::size_t degree_cap = 2,
                              std::size_t dim_cap = 4);

/// First-order perturbation data (mu_i, lambda_i); nothing is assumed
/// beyond arity and skewness.
struct DeformationGenerator {
  BilinearMap mu1, mu2;
  TrilinearMap lambda1, lambda2;
};

DeformationGenerator zero_generator(std::size_t dim);
/// The generator whose degree-1 data is the structure of c itself.
DeformationGenerator structure_generator(const CompatibleLy& c);
/// Coboundary generator of a linear map: ([Pi1,f], [Pi2,f]).
DeformationGenerator coboundary_generator(const CompatibleLy& c,
                                          const Matrix& f);

/// The deformed pair at a fixed scalar t; validity is not asserted.
CompatibleLy deform(const CompatibleLy& c, const DeformationGenerator& g,
                    const Rat& t);

/// Extracts the t^0, t^1, t^2 coefficients of the three Maurer-Cartan
/// residuals of the deformed pair by exact interpolation at t = 1, 2, 3.
/// Reports: base-i (should vanish when c is compatible), deg1-1 / deg1-2 /
/// deg1-mixed (the infinitesimal cocycle equations), deg2-* (quadratic
/// self-consistency). Witness tuples are flat coordinate indices.
std::vector<CheckReport> check_deformation_generator(
    const CompatibleLy& c, const DeformationGenerator& g,
    std::size_t max_witnesses = 16);

/// If deform(c, g, t) passes check_compatible at t = 1, 2, 3, the pair
/// (G1, G2) must be killed by delta_c. When the precondition fails the
/// theorem is vacuous and the report says so in its axiom_id.
CheckReport verify_cocycle_theorem(const CompatibleLy& c,
                                   const DeformationGenerator& g,
                                   std::size_t max_witnesses = 16);

}  // namespace ly

#endif
