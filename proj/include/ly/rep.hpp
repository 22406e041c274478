#ifndef LY_REP_HPP
#define LY_REP_HPP

#include <cstddef>
#include <vector>

#include "ly/lya.hpp"
#include "ly/matrix.hpp"
#include "ly/report.hpp"

namespace ly {

/// Action maps rho(e_i) and mu(e_i, e_j) on a space V. mu lives on ordered
/// pairs; no symmetry is imposed.
class Representation {
 public:
  Representation() = default;
  Representation(std::size_t alg_dim, std::size_t v_dim);

  std::size_t alg_dim() const { return alg_dim_; }
  std::size_t v_dim() const { return v_dim_; }

  Matrix& rho(std::size_t i) { return rho_[i]; }
  const Matrix& rho(std::size_t i) const { return rho_[i]; }
  Matrix& mu(std::size_t i, std::size_t j) { return mu_[i * alg_dim_ + j]; }
  const Matrix& mu(std::size_t i, std::size_t j) const {
    return mu_[i * alg_dim_ + j];
  }

  /// Linear extensions in the algebra arguments.
  Matrix rho_of(const Vec& x) const;
  Matrix mu_of(const Vec& x, const Vec& y) const;

 private:
  std::size_t alg_dim_ = 0, v_dim_ = 0;
  std::vector<Matrix> rho_, mu_;
};

/// A representation together with the linear map T on V of a Rota-Baxter
/// pair (checked against the RB intertwining identities).
struct RbRepresentation {
  Representation rep;
  LinearMap t_map;
};

/// D(x,y) = mu(y,x) - mu(x,y) + [rho(x), rho(y)] - rho([x,y]).
Matrix derived_d(const Representation& rep, const LyAlgebra& a, std::size_t i,
                 std::size_t j);
Matrix derived_d(const Representation& rep, const LyAlgebra& a, const Vec& x,
                 const Vec& y);

/// The five representation conditions, one report each, on all basis tuples.
std::vector<CheckReport> check_representation(const LyAlgebra& a,
                                              const Representation& rep,
                                              std::size_t max_witnesses = 16);

/// rho(x) = [x, .], mu(x,y) = [., x, y].
Representation adjoint(const LyAlgebra& a);

/// Semidirect product on L + V. The construction is if-and-only-if: it
/// passes check_lya exactly when rep passes check_representation.
LyAlgebra semidirect(const LyAlgebra& a, const Representation& rep);

/// Intertwining identities of (V, T) for a Rota-Baxter pair (a, r).
CheckReport check_rb_representation(const LyAlgebra& a, const LinearMap& r,
                                    const RbRepresentation& rb_rep,
                                    std::size_t max_witnesses = 16);

}  // namespace ly

#endif
