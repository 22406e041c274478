#ifndef LY_RB_HPP
#define LY_RB_HPP

#include <cstddef>
#include <vector>

#include "ly/compat.hpp"
#include "ly/lya.hpp"
#include "ly/report.hpp"

namespace ly {

/// The two stated Rota-Baxter trilinear identities differ and are not
/// reconcilable by skew-symmetry, so the convention is always explicit:
///   SectionTwo: [Rx,Ry,Rz] = R([Rx,Ry,z] + [Ry,Rz,x] - [Rx,Rz,y])
///   SectionSix: [Rx,Ry,Rz] = R([Rx,Ry,z] + [Rx,y,Rz] + [x,Ry,Rz])
/// The induced triple product follows the same split (see induce_pre_lya).
enum class RbConvention { SectionTwo, SectionSix };

/// Pre-Lie Yamaguti structure constants. Neither operation carries any
/// symmetry; identity status is computed by check_pre_lya, never assumed.
class PreLy {
 public:
  PreLy() = default;
  explicit PreLy(std::size_t dim)
      : dim_(dim), s_(dim * dim * dim), t_(dim * dim * dim * dim) {}

  std::size_t dim() const { return dim_; }

  Rat& star_at(std::size_t i, std::size_t j, std::size_t k) {
    return s_[(i * dim_ + j) * dim_ + k];
  }
  const Rat& star_at(std::size_t i, std::size_t j, std::size_t k) const {
    return s_[(i * dim_ + j) * dim_ + k];
  }
  Rat& triple_at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return t_[((i * dim_ + j) * dim_ + k) * dim_ + l];
  }
  const Rat& triple_at(std::size_t i, std::size_t j, std::size_t k,
                       std::size_t l) const {
    return t_[((i * dim_ + j) * dim_ + k) * dim_ + l];
  }

  Vec star(const Vec& x, const Vec& y) const;
  Vec triple(const Vec& x, const Vec& y, const Vec& z) const;

  /// Derived operations: the commutator, the associator and the brace
  ///   [x,y]_C = x*y - y*x,
  ///   (x,y,z) = (x*y)*z - x*(y*z),
  ///   {x,y,z}_D = {z,y,x} - {z,x,y} + (y,x,z) - (x,y,z).
  Vec commutator_c(const Vec& x, const Vec& y) const;
  Vec associator(const Vec& x, const Vec& y, const Vec& z) const;
  Vec triple_d(const Vec& x, const Vec& y, const Vec& z) const;

  bool operator==(const PreLy&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rat> s_, t_;
};

/// Two pre-Lie Yamaguti structures on one basis; CPLY1-5 are computed.
struct CompatPreLy {
  PreLy p1, p2;
};

/// The five pre-Lie Yamaguti identities, one report each (PLY1-PLY5).
std::vector<CheckReport> check_pre_lya(const PreLy& p,
                                       std::size_t max_witnesses = 16);

/// Component identities (prefixed 1:/2:) then the five mixed identities
/// CPLY1-CPLY5 over all basis tuples.
std::vector<CheckReport> check_compat_pre_lya(const CompatPreLy& cp,
                                              std::size_t max_witnesses = 16);

/// The two derived-bracket identities (i) and (ii), for both (i,j)
/// orderings. Witness tuples are (identity, i, basis indices...).
CheckReport check_lemma41(const CompatPreLy& cp,
                          std::size_t max_witnesses = 16);

/// Sub-adjacent structure: [x,y]_c = x*y - y*x,
/// [x,y,z]_c = {x,y,z}_D + {x,y,z} - {y,x,z}.
LyAlgebra subadjacent_one(const PreLy& p);
CompatibleLy subadjacent(const CompatPreLy& cp);

/// Both bilinear identity forms are evaluated and asserted equal before
/// recording violations; the trilinear identity follows the convention.
CheckReport check_rb(const LyAlgebra& a, const LinearMap& r, RbConvention conv,
                     std::size_t max_witnesses = 16);

/// check_rb against both components; witness tuples gain a leading 1/2.
CheckReport check_rb_compatible(const CompatibleLy& c, const LinearMap& r,
                                RbConvention conv,
                                std::size_t max_witnesses = 16);

/// x*y = [Rx,y]; the triple product is [Ry,Rz,x] under SectionTwo and
/// [x,Ry,Rz] under SectionSix. Throws when check_rb fails under conv.
PreLy induce_pre_lya(const LyAlgebra& a, const LinearMap& r,
                     RbConvention conv);
CompatPreLy induce_compat_pre_lya(const CompatibleLy& c, const LinearMap& r,
                                  RbConvention conv);

/// phi must be a homomorphism of the pairs; then phi R1 = R2 phi exactly.
CheckReport check_rb_homomorphism(const CompatibleLy& c1, const LinearMap& r1,
                                  const CompatibleLy& c2, const LinearMap& r2,
                                  const LinearMap& phi,
                                  std::size_t max_witnesses = 16);

/// All dim x dim matrices with entries drawn from entry_set that pass the
/// RB identities, in lexicographic entry order. Throws when
/// |entry_set|^(dim^2) exceeds max_candidates.
std::vector<LinearMap> search_rb(const LyAlgebra& a, RbConvention conv,
                                 const std::vector<Rat>& entry_set,
                                 std::size_t max_candidates = 1u << 22);
std::vector<LinearMap> search_rb(const CompatibleLy& c, RbConvention conv,
                                 const std::vector<Rat>& entry_set,
                                 std::size_t max_candidates = 1u << 22);

}  // namespace ly

#endif
