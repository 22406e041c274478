#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ly/rb.hpp"
#include "ly/rep.hpp"

using namespace ly;

static CompatibleLy dim2_pair() {
  BilinearMap p1(2), p2(2);
  TrilinearMap o1(2), o2(2);
  p1.set(0, 1, 0, 1);
  o1.set(0, 1, 1, 0, 1);
  p2.set(0, 1, 0, 2);
  o2.set(0, 1, 1, 0, 3);
  return {2, {"e1", "e2"}, p1, p2, o1, o2};
}

static LyAlgebra heisenberg() {
  BilinearMap b(3);
  b.set(0, 1, 2, 1);
  return {3, {"e1", "e2", "e3"}, b, TrilinearMap(3)};
}

TEST_CASE("pre-Lie Yamaguti identities: zero and perturbed structures") {
  PreLy zero(2);
  for (const auto& r : check_pre_lya(zero)) CHECK(r.ok());
  CHECK(zero.star(unit_vec(2, 0), unit_vec(2, 1)) == Vec(2));
  // a random sparse structure generally fails
  PreLy bad(2);
  bad.star_at(0, 0, 1) = 1;
  bad.triple_at(0, 1, 0, 0) = 1;
  bool any_fail = false;
  for (const auto& r : check_pre_lya(bad)) any_fail |= !r.ok();
  CHECK(any_fail);
}

TEST_CASE("derived operations of a pre-Lie structure") {
  PreLy p(2);
  p.star_at(0, 1, 0) = 1;  // e1 * e2 = e1
  Vec e1 = unit_vec(2, 0), e2 = unit_vec(2, 1);
  CHECK(p.commutator_c(e1, e2) == e1);
  CHECK(p.commutator_c(e2, e1) == Vec{-1, 0});
  // (e1,e2,e2) = (e1*e2)*e2 - e1*(e2*e2) = e1*e2 = e1
  CHECK(p.associator(e1, e2, e2) == e1);
  // {x,y,z}_D with zero triple reduces to (y,x,z) - (x,y,z)
  CHECK(p.triple_d(e1, e2, e2) == Vec{-1, 0});
}

TEST_CASE("subadjacent of the zero structure is abelian") {
  auto a = subadjacent_one(PreLy(3));
  CHECK(a.pi == BilinearMap(3));
  CHECK(a.omega == TrilinearMap(3));
  auto c = subadjacent(CompatPreLy{PreLy(2), PreLy(2)});
  CHECK(is_compatible(c));
}

TEST_CASE("check_rb basics") {
  auto a = dim2_pair().component(1);
  LinearMap zero{Matrix(2, 2)};
  CHECK(check_rb(a, zero, RbConvention::SectionTwo).ok());
  CHECK(check_rb(a, zero, RbConvention::SectionSix).ok());
  // identity on an abelian algebra passes; on a nonabelian one it fails
  LinearMap id{Matrix::identity(2)};
  CHECK(check_rb(abelian_lya(2), id, RbConvention::SectionTwo).ok());
  CHECK(!check_rb(a, id, RbConvention::SectionSix).ok());
  CHECK_THROWS(check_rb(a, LinearMap{Matrix(3, 3)}, RbConvention::SectionTwo));
}

TEST_CASE("search_rb: abelian algebra accepts every matrix") {
  auto sols = search_rb(abelian_lya(2), RbConvention::SectionTwo, {0, 1});
  CHECK(sols.size() == 16);
  // the zero matrix is always a solution and comes first lexicographically
  CHECK(sols[0].matrix == Matrix(2, 2));
  CHECK_THROWS(search_rb(abelian_lya(3), RbConvention::SectionTwo,
                         {0, 1, 2, 3}, 1000));
}

TEST_CASE("inverse of an invertible derivation is a Rota-Baxter operator") {
  auto a = heisenberg();
  auto c = self_pair(a);
  // find an invertible derivation as a generic combination of the basis
  auto basis = derivation_space(a);
  REQUIRE(!basis.empty());
  std::optional<LinearMap> dinv;
  for (std::size_t trial = 0; trial < basis.size() + 1 && !dinv; ++trial) {
    Matrix m(a.dim, a.dim);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      Rat w = trial < basis.size() ? Rat(b == trial ? 1 : 0)
                                   : Rat(int(b) + 1);
      m = m + basis[b].matrix.scaled(w);
    }
    if (auto inv = inverse(m)) dinv = LinearMap{*inv};
  }
  REQUIRE(dinv.has_value());
  CHECK(check_rb_compatible(c, *dinv, RbConvention::SectionSix).ok());
}

TEST_CASE("search_rb on the dim-2 pair; induced structures check out") {
  auto c = dim2_pair();
  auto sols = search_rb(c, RbConvention::SectionSix, {-1, 0, 1});
  CHECK(sols.size() == 15);  // frozen from an independent exhaustive grid
  bool saw_nonzero = false;
  for (const auto& r : sols) {
    CHECK(check_rb_compatible(c, r, RbConvention::SectionSix).ok());
    auto cp = induce_compat_pre_lya(c, r, RbConvention::SectionSix);
    CHECK(all_ok(check_compat_pre_lya(cp)));
    CHECK(check_lemma41(cp).ok());
    auto sub = subadjacent(cp);
    CHECK(is_compatible(sub));
    // the commutator of the sub-adjacent bilinear part recomputes [.,.]_c
    for (std::size_t i = 0; i < c.dim; ++i)
      for (std::size_t j = 0; j < c.dim; ++j) {
        Vec ei = unit_vec(c.dim, i), ej = unit_vec(c.dim, j);
        CHECK(sub.pi1.bracket(ei, ej) == cp.p1.commutator_c(ei, ej));
        CHECK(sub.pi2.bracket(ei, ej) == cp.p2.commutator_c(ei, ej));
      }
    if (!(r.matrix == Matrix(2, 2))) saw_nonzero = true;
  }
  CHECK(saw_nonzero);
}

TEST_CASE("section-two induction on a searched solution") {
  auto a = dim2_pair().component(1);
  auto sols = search_rb(a, RbConvention::SectionTwo, {-1, 0, 1});
  CHECK(!sols.empty());
  for (const auto& r : sols) {
    auto p = induce_pre_lya(a, r, RbConvention::SectionTwo);
    for (const auto& rep : check_pre_lya(p)) {
      INFO(rep.axiom_id);
      CHECK(rep.ok());
    }
  }
  // cross-convention use is rejected when the identities fail
  LinearMap id{Matrix::identity(2)};
  CHECK_THROWS(induce_pre_lya(a, id, RbConvention::SectionTwo));
}

TEST_CASE("induced brace matches the derived-representation expression") {
  // {x,y,z}_D computed from the definition equals D(Rx,Ry)z with adjoint
  // coefficients, for RB-induced structures under the section-six split.
  auto c = dim2_pair();
  auto sols = search_rb(c, RbConvention::SectionSix, {-1, 0, 1});
  for (const auto& r : sols) {
    auto cp = induce_compat_pre_lya(c, r, RbConvention::SectionSix);
    const PreLy* ps[2] = {&cp.p1, &cp.p2};
    for (int i = 1; i <= 2; ++i) {
      auto a = c.component(i);
      auto rep = adjoint(a);
      for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t y = 0; y < 2; ++y)
          for (std::size_t z = 0; z < 2; ++z) {
            Vec lhs = ps[i - 1]->triple_d(unit_vec(2, x), unit_vec(2, y),
                                          unit_vec(2, z));
            Vec rhs = derived_d(rep, a, r.on_basis(x), r.on_basis(y))
                          .apply(unit_vec(2, z));
            CHECK(lhs == rhs);
          }
    }
  }
}

TEST_CASE("self-compatible valid pre-structure passes the mixed identities") {
  auto a = dim2_pair().component(1);
  auto sols = search_rb(a, RbConvention::SectionSix, {-1, 0, 1});
  REQUIRE(!sols.empty());
  auto p = induce_pre_lya(a, sols.back(), RbConvention::SectionSix);
  CompatPreLy cp{p, p};
  CHECK(all_ok(check_compat_pre_lya(cp)));
  CHECK(check_lemma41(cp).ok());
  auto sub = subadjacent(cp);
  CHECK(is_compatible(sub));
  CHECK(sub.pi1 == sub.pi2);
}

TEST_CASE("rb homomorphism intertwining") {
  auto c = dim2_pair();
  LinearMap zero{Matrix(2, 2)}, id{Matrix::identity(2)};
  CHECK(check_rb_homomorphism(c, zero, c, zero, id).ok());
  CHECK(check_rb_homomorphism(c, id, c, id, zero).ok());
  // same pair, different operators, identity map: intertwining fails
  auto bad = check_rb_homomorphism(c, id, c, zero, id);
  CHECK(bad.axiom_id == "rb-homomorphism");
  CHECK(!bad.ok());
  // phi that is not a homomorphism: precondition reported
  Matrix m(2, 2);
  m.at(0, 1) = 1;
  m.at(1, 0) = 1;
  auto pre = check_rb_homomorphism(c, zero, c, zero, LinearMap{m});
  CHECK(pre.axiom_id.find("precondition") != std::string::npos);
}

TEST_CASE("the two conventions really differ on the corpus") {
  auto c = dim2_pair();
  auto s2 = search_rb(c, RbConvention::SectionTwo, {-1, 0, 1});
  auto s6 = search_rb(c, RbConvention::SectionSix, {-1, 0, 1});
  // both contain zero; the solution sets are recorded independently
  CHECK(!s2.empty());
  CHECK(!s6.empty());
}
