#ifndef LY_LYA_HPP
#define LY_LYA_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "ly/matrix.hpp"
#include "ly/rational.hpp"
#include "ly/report.hpp"

namespace ly {

/// Structure constants of a skew bilinear bracket:
/// [e_i, e_j] = sum_k c(i,j,k) e_k, with c(i,j,k) = -c(j,i,k).
/// Construction takes only i<j entries and antisymmetrizes.
class BilinearMap {
 public:
  BilinearMap() = default;
  explicit BilinearMap(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {}

  std::size_t dim() const { return dim_; }

  /// Sets [e_i, e_j] coefficient of e_k; requires i < j.
  void set(std::size_t i, std::size_t j, std::size_t k, const Rat& v);
  const Rat& at(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }

  /// [e_i, e_j] as a coefficient vector.
  Vec bracket(std::size_t i, std::size_t j) const;
  /// Bilinear extension to arbitrary vectors.
  Vec bracket(const Vec& x, const Vec& y) const;

  BilinearMap scaled(const Rat& k) const;
  BilinearMap plus(const BilinearMap& o, const Rat& k1, const Rat& k2) const;
  bool operator==(const BilinearMap&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rat> c_;
};

/// Structure constants of a trilinear bracket skew in its first two slots:
/// [e_i, e_j, e_k] = sum_l d(i,j,k,l) e_l, with d(i,j,k,l) = -d(j,i,k,l).
class TrilinearMap {
 public:
  TrilinearMap() = default;
  explicit TrilinearMap(std::size_t dim)
      : dim_(dim), d_(dim * dim * dim * dim) {}

  std::size_t dim() const { return dim_; }

  /// Sets [e_i, e_j, e_k] coefficient of e_l; requires i < j.
  void set(std::size_t i, std::size_t j, std::size_t k, std::size_t l, const Rat& v);
  const Rat& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return d_[((i * dim_ + j) * dim_ + k) * dim_ + l];
  }

  Vec bracket(std::size_t i, std::size_t j, std::size_t k) const;
  Vec bracket(const Vec& x, const Vec& y, const Vec& z) const;

  TrilinearMap scaled(const Rat& k) const;
  TrilinearMap plus(const TrilinearMap& o, const Rat& k1, const Rat& k2) const;
  bool operator==(const TrilinearMap&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rat> d_;
};

/// A linear map between (bases of) two algebras; matrix is dst_dim x src_dim.
struct LinearMap {
  Matrix matrix;
  std::size_t src_dim() const { return matrix.cols(); }
  std::size_t dst_dim() const { return matrix.rows(); }
  Vec operator()(const Vec& x) const { return matrix.apply(x); }
  Vec on_basis(std::size_t i) const;
};

/// A Lie Yamaguti algebra given by structure constants. Axiom status
/// (LY1-LY4) is computed by check_lya, never assumed.
struct LyAlgebra {
  std::size_t dim = 0;
  std::vector<std::string> basis_names;
  BilinearMap pi;
  TrilinearMap omega;

  Vec bi(std::size_t i, std::size_t j) const { return pi.bracket(i, j); }
  Vec tri(std::size_t i, std::size_t j, std::size_t k) const {
    return omega.bracket(i, j, k);
  }
};

LyAlgebra abelian_lya(std::size_t dim);

/// Evaluates LY1-LY4 on every ordered basis tuple. All four reports empty
/// iff the structure constants define a Lie Yamaguti algebra.
std::vector<CheckReport> check_lya(const LyAlgebra& a,
                                   std::size_t max_witnesses = 16);

/// Jacobi identity of a bilinear bracket on all basis triples.
CheckReport check_jacobi(const BilinearMap& b, std::size_t max_witnesses = 16);

/// Lifts a Lie algebra: omega(x,y,z) := [[x,y],z]. Throws if Jacobi fails.
LyAlgebra from_lie(const BilinearMap& b,
                   std::vector<std::string> basis_names = {});

/// Block-diagonal brackets on the direct sum.
LyAlgebra direct_sum(const LyAlgebra& a, const LyAlgebra& b);

/// phi([x,y]) = [phi x, phi y] and the trilinear analogue, on basis tuples.
CheckReport check_homomorphism(const LyAlgebra& a, const LyAlgebra& b,
                               const LinearMap& phi,
                               std::size_t max_witnesses = 16);

/// Leibniz rule for both brackets on basis tuples.
CheckReport check_derivation(const LyAlgebra& a, const LinearMap& d,
                             std::size_t max_witnesses = 16);

/// Exact basis of the space of derivations, via the kernel of the
/// linearized Leibniz constraints.
std::vector<LinearMap> derivation_space(const LyAlgebra& a);

}  // namespace ly

#endif
