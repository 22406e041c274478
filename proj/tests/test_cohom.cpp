#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ly/cohom.hpp"

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

static CompatibleLy lifted_pair() {
  BilinearMap b1(3), b2(3);
  b1.set(0, 1, 0, 1);
  b2.set(0, 1, 0, 1);
  b2.set(0, 1, 2, 1);
  return lift_compatible_lie(b1, b2);
}

static Matrix random_map(std::size_t d, std::mt19937& rng) {
  Matrix m(d, d);
  std::uniform_int_distribution<int> val(-2, 2);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) m.at(r, c) = val(rng);
  return m;
}

static Cochain random_cochain(std::size_t dim, std::size_t degree,
                              std::mt19937& rng) {
  std::size_t n = Cochain::space_dim(dim, dim, degree);
  Vec coords(n);
  std::uniform_int_distribution<int> val(-2, 2);
  for (auto& q : coords) q = val(rng);
  return Cochain::from_coords(dim, dim, degree, coords);
}

TEST_CASE("delta0: zero map, identity map, single entries") {
  auto a = dim2_pair().component(1);
  auto rep = adjoint(a);
  CHECK(delta0(Matrix(2, 2), a, rep).is_zero());
  // f = id with adjoint coefficients: d1(id)(x,y) = [x,y]+[y,x]-[x,y] wait--
  // evaluate directly: d1(id)(x,y) = [x,y] - [y,x] - [x,y] = [x,y].
  auto d = delta0(Matrix::identity(2), a, rep);
  CHECK(d.f_val({0}) == a.bi(0, 1));
  // d2(id)(x,y,z) = D(x,y)z + [z,y,x]... check against the formula directly.
  for (std::size_t z = 0; z < 2; ++z) {
    Vec expect = derived_d(rep, a, 0, 1).apply(unit_vec(2, z));
    Vec t1 = rep.mu(1, z).apply(unit_vec(2, 0));
    Vec t2 = rep.mu(0, z).apply(unit_vec(2, 1));
    Vec t3 = a.tri(0, 1, z);
    for (std::size_t k = 0; k < 2; ++k) expect[k] += t1[k] - t2[k] - t3[k];
    CHECK(d.g_val({0}, z) == expect);
  }
}

TEST_CASE("delta composes to zero with adjoint coefficients") {
  std::mt19937 rng(5);
  std::vector<LyAlgebra> algs = {dim2_pair().component(1),
                                 dim2_pair().component(2),
                                 lifted_pair().component(1),
                                 lifted_pair().component(2), abelian_lya(2)};
  for (const auto& a : algs) {
    auto rep = adjoint(a);
    for (int trial = 0; trial < 25; ++trial) {
      auto f = Cochain::from_linear_map(a.dim, random_map(a.dim, rng));
      CHECK(delta(delta(f, a, rep), a, rep).is_zero());
    }
  }
}

TEST_CASE("delta composes to zero starting from degree 1") {
  std::mt19937 rng(9);
  auto a = dim2_pair().component(1);
  auto rep = adjoint(a);
  for (int trial = 0; trial < 5; ++trial) {
    auto f = random_cochain(2, 1, rng);
    CHECK(delta(delta(f, a, rep), a, rep).is_zero());
  }
}

TEST_CASE("delta equals the graded bracket with the structure cochain") {
  auto a = dim2_pair().component(1);
  // exhaustive single-entry sweep at degree 0 and 1
  for (std::size_t deg = 0; deg <= 1; ++deg) {
    std::size_t n = Cochain::space_dim(2, 2, deg);
    for (std::size_t i = 0; i < n; ++i) {
      Vec e(n);
      e[i] = 1;
      auto f = Cochain::from_coords(2, 2, deg, e);
      auto rep = delta_vs_bracket(f, a);
      INFO("degree ", deg, " entry ", i);
      CHECK(rep.ok());
    }
  }
}

TEST_CASE("delta vs bracket on random degree-2 cochains at dim 3") {
  std::mt19937 rng(13);
  auto c = lifted_pair();
  for (int i = 1; i <= 2; ++i) {
    auto a = c.component(i);
    for (int trial = 0; trial < 3; ++trial)
      CHECK(delta_vs_bracket(random_cochain(3, 2, rng), a).ok());
  }
}

TEST_CASE("delta_c: squares to zero and matches componentwise brackets") {
  auto c = dim2_pair();
  std::mt19937 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    CompatTuple t{1, {Cochain::from_linear_map(2, random_map(2, rng))}};
    auto d1 = delta_c(t, c);
    CHECK(d1.degree == 2);
    // first slot [Pi1,f], last slot [Pi2,f]
    auto pi1 = Cochain::of_structure(c.component(1));
    auto pi2 = Cochain::of_structure(c.component(2));
    CHECK(d1.comps[0] == graded_bracket(pi1, t.comps[0]));
    CHECK(d1.comps[1] == graded_bracket(pi2, t.comps[0]));
    CHECK(delta_c(d1, c).is_zero());
  }
  // degree-2 start as well
  for (int trial = 0; trial < 3; ++trial) {
    CompatTuple t{2, {random_cochain(2, 1, rng), random_cochain(2, 1, rng)}};
    CHECK(delta_c(delta_c(t, c), c).is_zero());
  }
  CHECK(delta_c(zero_tuple(2, 2), c).is_zero());
}

TEST_CASE("cohomology dimensions") {
  auto ab = abelian_compatible(2);
  auto h1 = cohomology_dim(ab, 1);
  CHECK(h1.kernel_dim == 4);  // zero differential: everything is a cocycle
  CHECK(h1.image_dim == 0);
  CHECK(h1.h_dim == tuple_space_dim(2, 1));

  auto c = dim2_pair();
  auto n1 = cohomology_dim(c, 1);
  auto n2 = cohomology_dim(c, 2);
  // rank-nullity of the assembled matrices
  CHECK(n1.kernel_dim <= tuple_space_dim(2, 1));
  CHECK(n2.image_dim == tuple_space_dim(2, 1) - n1.kernel_dim);
  CHECK(n2.kernel_dim >= n2.image_dim);
  // frozen values from the exact rank computation
  CHECK(n1.kernel_dim == 2);
  CHECK(n1.h_dim == 2);
  CHECK(n2.kernel_dim == 5);
  CHECK(n2.h_dim == 3);
  CHECK_THROWS(cohomology_dim(c, 0));
  CHECK_THROWS(cohomology_dim(c, 5));
}

TEST_CASE("deform: zero generator and structure generator") {
  auto c = dim2_pair();
  auto z = deform(c, zero_generator(2), 7);
  CHECK(z.pi1 == c.pi1);
  CHECK(z.omega2 == c.omega2);
  // self-deformation scales the structure by 1 + t
  auto s = deform(c, structure_generator(c), 1);
  CHECK(s.pi1 == c.pi1.plus(c.pi1, 1, 1));
  CHECK(is_compatible(s));
}

TEST_CASE("deformation generator coefficient extraction") {
  auto c = dim2_pair();
  // zero generator: every coefficient vanishes
  for (const auto& r : check_deformation_generator(c, zero_generator(2)))
    CHECK(r.ok());
  // self-deformation: degree-1 vanishes by the MC equations of c,
  // degree-2 is the (zero) MC residual of c
  for (const auto& r : check_deformation_generator(c, structure_generator(c)))
    CHECK(r.ok());
  // degree-1 coefficients equal the mixed-bracket equations
  std::mt19937 rng(31);
  Matrix m = random_map(2, rng);
  auto g = coboundary_generator(c, m);
  auto reports = check_deformation_generator(c, g);
  for (const auto& r : reports) {
    if (r.axiom_id.rfind("base", 0) == 0 || r.axiom_id.rfind("deg1", 0) == 0) {
      INFO(r.axiom_id);
      CHECK(r.ok());  // coboundaries satisfy the cocycle equations
    }
  }
}

TEST_CASE("degree-1 coefficients match the bracket equations directly") {
  auto c = dim2_pair();
  std::mt19937 rng(37);
  // random generator, generally not a cocycle
  DeformationGenerator g = zero_generator(2);
  g.mu1.set(0, 1, 1, 1);
  g.lambda2.set(0, 1, 0, 0, 1);
  auto pi1 = Cochain::of_structure(c.component(1));
  auto pi2 = Cochain::of_structure(c.component(2));
  auto g1 = Cochain::of_structure({2, c.basis_names, g.mu1, g.lambda1});
  auto g2 = Cochain::of_structure({2, c.basis_names, g.mu2, g.lambda2});
  auto reports = check_deformation_generator(c, g);
  // [Pi_i + tG_i, Pi_j + tG_j] has t-coefficient [Pi_i,G_j] + [G_i,Pi_j]
  Vec want1 = (graded_bracket(pi1, g1) + graded_bracket(g1, pi1)).coords();
  Vec want2 = (graded_bracket(pi2, g2) + graded_bracket(g2, pi2)).coords();
  Vec wantm = (graded_bracket(pi1, g2) + graded_bracket(g1, pi2)).coords();
  auto find = [&](const std::string& id) -> const CheckReport& {
    for (const auto& r : reports)
      if (r.axiom_id == id) return r;
    throw std::logic_error("missing report");
  };
  auto check_matches = [&](const std::string& id, const Vec& want) {
    const auto& r = find(id);
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < want.size(); ++i)
      if (sgn(want[i]) != 0) ++nonzero;
    CHECK(r.total_violations == nonzero);
    for (const auto& w : r.witnesses)
      CHECK(w.residual[0] == want[w.tuple[0]]);
  };
  check_matches("deg1-1", want1);
  check_matches("deg1-2", want2);
  check_matches("deg1-mixed", wantm);
}

TEST_CASE("cocycle theorem") {
  auto c = dim2_pair();
  CHECK(verify_cocycle_theorem(c, zero_generator(2)).ok());
  auto self = verify_cocycle_theorem(c, structure_generator(c));
  CHECK(self.axiom_id == "cocycle-theorem");  // precondition holds
  CHECK(self.ok());
  // a generator violating the degree-1 equations: precondition fails
  DeformationGenerator bad = zero_generator(2);
  bad.mu1.set(0, 1, 1, 1);
  auto r = verify_cocycle_theorem(c, bad);
  CHECK(r.axiom_id.find("vacuous") != std::string::npos);
  CHECK(r.ok());
  // coboundary generators are genuine deformations here: check and verify
  std::mt19937 rng(41);
  auto g = coboundary_generator(c, random_map(2, rng));
  auto rep = verify_cocycle_theorem(c, g);
  if (rep.axiom_id == "cocycle-theorem") CHECK(rep.ok());
}
