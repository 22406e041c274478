#include "ly/compat.hpp"

#include <stdexcept>

namespace ly {

namespace {

std::vector<std::string> default_names(std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
  return names;
}

void acc(Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
}

void sub(Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
}

Vec flatten(const Matrix& m) {
  Vec v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m.at(r, c));
  return v;
}

void record_matrix(CheckReport& rep, std::vector<std::size_t> tuple,
                   const Matrix& residual) {
  if (!residual.is_zero()) rep.add(std::move(tuple), flatten(residual));
}

}  // namespace

LyAlgebra CompatibleLy::component(int i) const {
  if (i != 1 && i != 2) throw std::invalid_argument("component: i must be 1 or 2");
  return {dim, basis_names, i == 1 ? pi1 : pi2, i == 1 ? omega1 : omega2};
}

CompatibleLy abelian_compatible(std::size_t dim) {
  return {dim, default_names(dim), BilinearMap(dim), BilinearMap(dim),
          TrilinearMap(dim), TrilinearMap(dim)};
}

CompatibleLy self_pair(const LyAlgebra& a) {
  return {a.dim, a.basis_names, a.pi, a.pi, a.omega, a.omega};
}

CompatibleLy lift_compatible_lie(const BilinearMap& b1, const BilinearMap& b2,
                                 std::vector<std::string> basis_names) {
  if (b1.dim() != b2.dim())
    throw std::invalid_argument("lift_compatible_lie: dim mismatch");
  const std::size_t d = b1.dim();
  auto jac1 = check_jacobi(b1);
  auto jac2 = check_jacobi(b2);
  if (!jac1.ok() || !jac2.ok())
    throw std::invalid_argument("lift_compatible_lie: Jacobi fails");
  // [x,y,z]_i = [[x,y]_j, z]_i with i != j
  auto lift = [&](const BilinearMap& inner, const BilinearMap& outer) {
    TrilinearMap om(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
          Vec v = outer.bracket(inner.bracket(i, j), unit_vec(d, k));
          for (std::size_t l = 0; l < d; ++l)
            if (sgn(v[l]) != 0) om.set(i, j, k, l, v[l]);
        }
    return om;
  };
  if (basis_names.empty()) basis_names = default_names(d);
  return {d, std::move(basis_names), b1, b2, lift(b2, b1), lift(b1, b2)};
}

std::vector<CheckReport> check_compatible(const CompatibleLy& c,
                                          std::size_t max_witnesses) {
  const std::size_t d = c.dim;
  std::vector<CheckReport> out;
  for (int i = 1; i <= 2; ++i) {
    auto comp = check_lya(c.component(i), max_witnesses);
    for (auto& r : comp) {
      r.axiom_id = std::to_string(i) + ":" + r.axiom_id;
      out.push_back(std::move(r));
    }
  }

  CheckReport cy1{"CY1"}, cy2{"CY2"}, cy3{"CY3"}, cy4{"CY4"}, cy5{"CY5-info"};
  for (auto* r : {&cy1, &cy2, &cy3, &cy4, &cy5}) r->max_witnesses = max_witnesses;

  const auto& p1 = c.pi1;
  const auto& p2 = c.pi2;
  const auto& o1 = c.omega1;
  const auto& o2 = c.omega2;
  auto e = [&](std::size_t i) { return unit_vec(d, i); };

  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      for (std::size_t z = 0; z < d; ++z) {
        // CY1: [[x,y]_1,z]_2 + c.p. + [[x,y]_2,z]_1 + c.p. = 0
        Vec r(d);
        acc(r, p2.bracket(p1.bracket(x, y), e(z)));
        acc(r, p2.bracket(p1.bracket(y, z), e(x)));
        acc(r, p2.bracket(p1.bracket(z, x), e(y)));
        acc(r, p1.bracket(p2.bracket(x, y), e(z)));
        acc(r, p1.bracket(p2.bracket(y, z), e(x)));
        acc(r, p1.bracket(p2.bracket(z, x), e(y)));
        cy1.record({x, y, z}, std::move(r));

        // CY5-info: the cyclic trilinear sums of each component, separately.
        // Prop 3.1 taken over all weights forces these (see the docs); the
        // report is informational and does not affect compatibility status.
        Vec r5(d);
        acc(r5, o1.bracket(x, y, z));
        acc(r5, o1.bracket(y, z, x));
        acc(r5, o1.bracket(z, x, y));
        cy5.record({1, x, y, z}, std::move(r5));
        Vec r5b(d);
        acc(r5b, o2.bracket(x, y, z));
        acc(r5b, o2.bracket(y, z, x));
        acc(r5b, o2.bracket(z, x, y));
        cy5.record({2, x, y, z}, std::move(r5b));

        for (std::size_t t = 0; t < d; ++t) {
          // CY2: [[x,y]_1,z,t]_2 + cyclic(x,y,z) + (1 <-> 2) = 0
          Vec r2(d);
          acc(r2, o2.bracket(p1.bracket(x, y), e(z), e(t)));
          acc(r2, o2.bracket(p1.bracket(y, z), e(x), e(t)));
          acc(r2, o2.bracket(p1.bracket(z, x), e(y), e(t)));
          acc(r2, o1.bracket(p2.bracket(x, y), e(z), e(t)));
          acc(r2, o1.bracket(p2.bracket(y, z), e(x), e(t)));
          acc(r2, o1.bracket(p2.bracket(z, x), e(y), e(t)));
          cy2.record({x, y, z, t}, std::move(r2));
        }
      }

  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) {
          // CY4: [a,b,[x,y]_1]_2 + [a,b,[x,y]_2]_1
          //    = [[a,b,x]_1,y]_2 + [x,[a,b,y]_1]_2
          //    + [[a,b,x]_2,y]_1 + [x,[a,b,y]_2]_1
          Vec r4 = o2.bracket(e(a), e(b), p1.bracket(x, y));
          acc(r4, o1.bracket(e(a), e(b), p2.bracket(x, y)));
          sub(r4, p2.bracket(o1.bracket(a, b, x), e(y)));
          sub(r4, p2.bracket(e(x), o1.bracket(a, b, y)));
          sub(r4, p1.bracket(o2.bracket(a, b, x), e(y)));
          sub(r4, p1.bracket(e(x), o2.bracket(a, b, y)));
          cy4.record({a, b, x, y}, std::move(r4));

          for (std::size_t z = 0; z < d; ++z) {
            // CY3: [a,b,[x,y,z]_1]_2 + [a,b,[x,y,z]_2]_1
            //    = sum of the six Leibniz terms
            Vec r3 = o2.bracket(e(a), e(b), o1.bracket(x, y, z));
            acc(r3, o1.bracket(e(a), e(b), o2.bracket(x, y, z)));
            sub(r3, o2.bracket(o1.bracket(a, b, x), e(y), e(z)));
            sub(r3, o2.bracket(e(x), o1.bracket(a, b, y), e(z)));
            sub(r3, o2.bracket(e(x), e(y), o1.bracket(a, b, z)));
            sub(r3, o1.bracket(o2.bracket(a, b, x), e(y), e(z)));
            sub(r3, o1.bracket(e(x), o2.bracket(a, b, y), e(z)));
            sub(r3, o1.bracket(e(x), e(y), o2.bracket(a, b, z)));
            cy3.record({a, b, x, y, z}, std::move(r3));
          }
        }

  out.push_back(std::move(cy1));
  out.push_back(std::move(cy2));
  out.push_back(std::move(cy3));
  out.push_back(std::move(cy4));
  out.push_back(std::move(cy5));
  return out;
}

bool is_compatible(const CompatibleLy& c) {
  for (const auto& r : check_compatible(c, 1))
    if (r.axiom_id != "CY5-info" && !r.ok()) return false;
  return true;
}

LyAlgebra linear_combination(const CompatibleLy& c, const Weights& w) {
  return {c.dim, c.basis_names, c.pi1.plus(c.pi2, w.k1, w.k2),
          c.omega1.plus(c.omega2, w.k1, w.k2)};
}

const std::vector<Weights> kDefaultWeightSamples = {
    {1, 1}, {1, -1}, {2, 3}, {1, 0}, {0, 1}};

std::vector<CheckReport> check_prop31(const CompatibleLy& c,
                                      const std::vector<Weights>& samples) {
  std::vector<CheckReport> out;
  for (const auto& w : samples) {
    CheckReport agg{"prop31(" + render(w.k1) + "," + render(w.k2) + ")"};
    for (const auto& r : check_lya(linear_combination(c, w))) {
      agg.total_violations += r.total_violations;
      for (const auto& wit : r.witnesses)
        if (agg.witnesses.size() < agg.max_witnesses) agg.witnesses.push_back(wit);
    }
    out.push_back(std::move(agg));
  }
  return out;
}

CompatibleLy compat_direct_sum(const CompatibleLy& a, const CompatibleLy& b) {
  LyAlgebra s1 = direct_sum(a.component(1), b.component(1));
  LyAlgebra s2 = direct_sum(a.component(2), b.component(2));
  return {s1.dim, s1.basis_names, s1.pi, s2.pi, s1.omega, s2.omega};
}

CheckReport check_compat_homomorphism(const CompatibleLy& c1,
                                      const CompatibleLy& c2,
                                      const LinearMap& phi,
                                      std::size_t max_witnesses) {
  CheckReport out{"compat-homomorphism"};
  out.max_witnesses = max_witnesses;
  for (int i = 1; i <= 2; ++i) {
    auto r = check_homomorphism(c1.component(i), c2.component(i), phi,
                                max_witnesses);
    out.total_violations += r.total_violations;
    for (auto& wit : r.witnesses) {
      wit.tuple.insert(wit.tuple.begin(), static_cast<std::size_t>(i));
      if (out.witnesses.size() < out.max_witnesses)
        out.witnesses.push_back(std::move(wit));
    }
  }
  return out;
}

CompatRepresentation compat_adjoint(const CompatibleLy& c) {
  return {adjoint(c.component(1)), adjoint(c.component(2))};
}

std::vector<CheckReport> check_compat_representation(
    const CompatibleLy& c, const CompatRepresentation& r,
    std::size_t max_witnesses) {
  const std::size_t d = c.dim;
  LyAlgebra a1 = c.component(1), a2 = c.component(2);
  const auto& r1 = r.rep1;
  const auto& r2 = r.rep2;
  if (r1.alg_dim() != d || r2.alg_dim() != d || r1.v_dim() != r2.v_dim())
    throw std::invalid_argument("check_compat_representation: dimension mismatch");

  std::vector<CheckReport> out;
  for (int i = 1; i <= 2; ++i) {
    auto comp = check_representation(i == 1 ? a1 : a2, i == 1 ? r1 : r2,
                                     max_witnesses);
    for (auto& rep : comp) {
      rep.axiom_id = std::to_string(i) + ":" + rep.axiom_id;
      out.push_back(std::move(rep));
    }
  }

  std::vector<CheckReport> mixed;
  for (int cnum = 1; cnum <= 6; ++cnum)
    mixed.push_back({"crep" + std::to_string(cnum), 0, {}, max_witnesses});
  CheckReport dsum{"D-sum", 0, {}, max_witnesses};

  auto e = [&](std::size_t i) { return unit_vec(d, i); };
  auto D1 = [&](std::size_t i, std::size_t j) { return derived_d(r1, a1, i, j); };
  auto D2 = [&](std::size_t i, std::size_t j) { return derived_d(r2, a2, i, j); };

  // Combined representation at weights (1,1) for the D = D1 + D2 identity.
  Representation comb(d, r1.v_dim());
  for (std::size_t i = 0; i < d; ++i) {
    comb.rho(i) = r1.rho(i) + r2.rho(i);
    for (std::size_t j = 0; j < d; ++j)
      comb.mu(i, j) = r1.mu(i, j) + r2.mu(i, j);
  }
  LyAlgebra comb_alg = linear_combination(c, {1, 1});

  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      // (6) rho1([x,y]_2) + rho2([x,y]_1)
      //   = rho1(x)rho2(y) - rho1(y)rho2(x) + rho2(x)rho1(y) - rho2(y)rho1(x)
      record_matrix(mixed[5], {x, y},
                    r1.rho_of(a2.bi(x, y)) + r2.rho_of(a1.bi(x, y)) -
                        r1.rho(x) * r2.rho(y) + r1.rho(y) * r2.rho(x) -
                        r2.rho(x) * r1.rho(y) + r2.rho(y) * r1.rho(x));
      record_matrix(dsum, {x, y},
                    derived_d(comb, comb_alg, x, y) - D1(x, y) - D2(x, y));
      for (std::size_t z = 0; z < d; ++z) {
        // (1)
        record_matrix(
            mixed[0], {x, y, z},
            r2.mu_of(a1.bi(x, y), e(z)) + r1.mu_of(a2.bi(x, y), e(z)) -
                r2.mu(x, z) * r1.rho(y) - r1.mu(x, z) * r2.rho(y) +
                r2.mu(y, z) * r1.rho(x) + r1.mu(y, z) * r2.rho(x));
        // (2)
        record_matrix(
            mixed[1], {x, y, z},
            r2.mu_of(e(x), a1.bi(y, z)) + r1.mu_of(e(x), a2.bi(y, z)) -
                r2.rho(y) * r1.mu(x, z) - r1.rho(y) * r2.mu(x, z) +
                r2.rho(z) * r1.mu(x, y) + r1.rho(z) * r2.mu(x, y));
        // (3)
        record_matrix(mixed[2], {x, y, z},
                      r1.rho_of(a2.tri(x, y, z)) + r2.rho_of(a1.tri(x, y, z)) -
                          commutator(D1(x, y), r2.rho(z)) -
                          commutator(D2(x, y), r1.rho(z)));
        for (std::size_t w = 0; w < d; ++w) {
          // (4)
          record_matrix(
              mixed[3], {x, y, z, w},
              r2.mu(z, w) * r1.mu(x, y) + r1.mu(z, w) * r2.mu(x, y) +
                  D2(y, z) * r1.mu(x, w) + D1(y, z) * r2.mu(x, w) -
                  r2.mu(y, w) * r1.mu(x, z) - r1.mu(y, w) * r2.mu(x, z) -
                  r2.mu_of(e(x), a1.tri(y, z, w)) -
                  r1.mu_of(e(x), a2.tri(y, z, w)));
          // (5)
          record_matrix(
              mixed[4], {x, y, z, w},
              r2.mu_of(a1.tri(x, y, z), e(w)) + r1.mu_of(a2.tri(x, y, z), e(w)) +
                  r2.mu_of(e(z), a1.tri(x, y, w)) +
                  r1.mu_of(e(z), a2.tri(x, y, w)) -
                  commutator(D2(x, y), r1.mu(z, w)) -
                  commutator(D1(x, y), r2.mu(z, w)));
        }
      }
    }

  for (auto& m : mixed) out.push_back(std::move(m));
  out.push_back(std::move(dsum));
  return out;
}

CompatibleLy compat_semidirect(const CompatibleLy& c,
                               const CompatRepresentation& r) {
  LyAlgebra s1 = semidirect(c.component(1), r.rep1);
  LyAlgebra s2 = semidirect(c.component(2), r.rep2);
  return {s1.dim, s1.basis_names, s1.pi, s2.pi, s1.omega, s2.omega};
}

CheckReport check_compat_derivation(const CompatibleLy& c, const LinearMap& d,
                                    std::size_t max_witnesses) {
  CheckReport out{"compat-derivation"};
  out.max_witnesses = max_witnesses;
  for (int i = 1; i <= 2; ++i) {
    auto r = check_derivation(c.component(i), d, max_witnesses);
    out.total_violations += r.total_violations;
    for (auto& wit : r.witnesses) {
      wit.tuple.insert(wit.tuple.begin(), static_cast<std::size_t>(i));
      if (out.witnesses.size() < out.max_witnesses)
        out.witnesses.push_back(std::move(wit));
    }
  }
  return out;
}

LinearMap inner_derivation(const CompatibleLy& c, std::size_t a, std::size_t b,
                           const Weights& w) {
  if (a >= c.dim || b >= c.dim)
    throw std::out_of_range("inner_derivation: basis index out of range");
  Matrix m(c.dim, c.dim);
  for (std::size_t z = 0; z < c.dim; ++z) {
    Vec v1 = c.omega1.bracket(a, b, z);
    Vec v2 = c.omega2.bracket(a, b, z);
    for (std::size_t r = 0; r < c.dim; ++r)
      m.at(r, z) = w.k1 * v1[r] + w.k2 * v2[r];
  }
  return {std::move(m)};
}

}  // namespace ly
