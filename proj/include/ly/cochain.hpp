#ifndef LY_COCHAIN_HPP
#define LY_COCHAIN_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "ly/compat.hpp"
#include "ly/matrix.hpp"
#include "ly/rational.hpp"

namespace ly {

/// Basis of wedge^2 L: pairs (i,j) with i < j, ordered lexicographically.
std::size_t wedge_count(std::size_t dim);
std::size_t wedge_index(std::size_t dim, std::size_t i, std::size_t j);
std::pair<std::size_t, std::size_t> wedge_pair(std::size_t dim, std::size_t w);

/// Coefficient vector over the wedge basis.
using WVec = Vec;
WVec wedge_of(std::size_t dim, const Vec& x, const Vec& y);

/// A (p,q)-shuffle of {0..p+q-1}: ascending on the first p slots and on the
/// last q slots. perm[slot] = original index.
struct Shuffle {
  std::vector<std::size_t> perm;
  int sign = 1;
};
std::vector<Shuffle> shuffles(std::size_t p, std::size_t q);

/// V-valued cochain of internal degree p on L:
///   p = 0: a single linear map L -> V;
///   p >= 1: a pair (f, g) with f: (wedge^2 L)^p -> V and
///   g: (wedge^2 L)^p x L -> V, stored densely on basis tuples.
class Cochain {
 public:
  Cochain() = default;
  Cochain(std::size_t dim, std::size_t val_dim, std::size_t degree);

  static Cochain from_linear_map(std::size_t dim, const Matrix& m);
  /// The structure cochain Pi = (pi, omega), degree 1, values in L.
  static Cochain of_structure(const LyAlgebra& a);

  std::size_t dim() const { return dim_; }
  std::size_t val_dim() const { return val_dim_; }
  std::size_t degree() const { return degree_; }

  /// Dimension of the whole cochain space at this (dim, val_dim, degree).
  static std::size_t space_dim(std::size_t dim, std::size_t val_dim,
                               std::size_t degree);

  // Degree-0 access.
  Matrix& f0() { return f0_; }
  const Matrix& f0() const { return f0_; }

  // Entry access on basis tuples (degree >= 1). ws.size() == degree.
  Rat& f_at(const std::vector<std::size_t>& ws, std::size_t out);
  const Rat& f_at(const std::vector<std::size_t>& ws, std::size_t out) const;
  Rat& g_at(const std::vector<std::size_t>& ws, std::size_t z, std::size_t out);
  const Rat& g_at(const std::vector<std::size_t>& ws, std::size_t z,
                  std::size_t out) const;

  Vec f_val(const std::vector<std::size_t>& ws) const;
  Vec g_val(const std::vector<std::size_t>& ws, std::size_t z) const;
  /// g with a general vector in the final L slot.
  Vec g_val_vec(const std::vector<std::size_t>& ws, const Vec& z) const;
  /// f with one general wedge argument spliced in at position pos.
  Vec f_mixed(const std::vector<std::size_t>& pre, const WVec& mid,
              const std::vector<std::size_t>& post) const;
  Vec g_mixed(const std::vector<std::size_t>& pre, const WVec& mid,
              const std::vector<std::size_t>& post, std::size_t z) const;

  Cochain operator+(const Cochain& o) const;
  Cochain operator-(const Cochain& o) const;
  Cochain scaled(const Rat& k) const;
  bool is_zero() const;
  bool operator==(const Cochain&) const = default;

  /// Flat coordinates (f entries then g entries); inverse of from_coords.
  Vec coords() const;
  static Cochain from_coords(std::size_t dim, std::size_t val_dim,
                             std::size_t degree, const Vec& coords);

 private:
  std::size_t flat(const std::vector<std::size_t>& ws) const;
  std::size_t dim_ = 0, val_dim_ = 0, degree_ = 0, np_ = 0, tuples_ = 0;
  Matrix f0_;
  std::vector<Rat> f_, g_;
};

/// The circle product of the graded space of L-valued cochains; both
/// degrees must be >= 1. Result has degree p + q.
Cochain circle(const Cochain& P, const Cochain& Q);

/// [P,Q] = P o Q - (-1)^{pq} Q o P. A degree-0 operand is supported when
/// the other operand has degree 1 (the structure-bracket case).
Cochain graded_bracket(const Cochain& P, const Cochain& Q);

/// [Pi,Pi] for the structure cochain of a; zero iff LY3 and LY4 hold.
Cochain mc_residual(const LyAlgebra& a);

/// ([Pi1,Pi1], [Pi2,Pi2], [Pi1,Pi2]) for a compatible pair.
std::vector<Cochain> mc_pair_residual(const CompatibleLy& c);

}  // namespace ly

#endif
