#include "ly/cohom.hpp"

#include <stdexcept>

namespace ly {

namespace {

void add_to(Vec& acc, const Vec& v, const Rat& k = 1) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += k * v[i];
}

std::vector<std::size_t> without(const std::vector<std::size_t>& ws,
                                 std::size_t k) {
  std::vector<std::size_t> out;
  out.reserve(ws.size() - 1);
  for (std::size_t i = 0; i < ws.size(); ++i)
    if (i != k) out.push_back(ws[i]);
  return out;
}

// X_k o X_l = [x_k,y_k,x_l]^y_l + x_l^[x_k,y_k,y_l] on basis wedges.
WVec circ_wedge(const LyAlgebra& a, std::size_t wk, std::size_t wl) {
  auto [xk, yk] = wedge_pair(a.dim, wk);
  auto [xl, yl] = wedge_pair(a.dim, wl);
  WVec out = wedge_of(a.dim, a.tri(xk, yk, xl), unit_vec(a.dim, yl));
  add_to(out, wedge_of(a.dim, unit_vec(a.dim, xl), a.tri(xk, yk, yl)));
  return out;
}

bool next_tuple(std::vector<std::size_t>& t, std::size_t base) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (++t[i] < base) return true;
    t[i] = 0;
  }
  return false;
}

void compare_into(CheckReport& rep, const Cochain& a, const Cochain& b) {
  Vec ca = a.coords(), cb = b.coords();
  for (std::size_t i = 0; i < ca.size(); ++i)
    rep.record({i}, {ca[i] - cb[i]});
}

}  // namespace

Cochain delta0(const Matrix& f, const LyAlgebra& a, const Representation& rep) {
  std::size_t d = a.dim, vd = rep.v_dim();
  if (f.cols() != d || f.rows() != vd || rep.alg_dim() != d)
    throw std::invalid_argument("delta0: dimension mismatch");
  Cochain out(d, vd, 1);
  for (std::size_t w = 0; w < wedge_count(d); ++w) {
    auto [x, y] = wedge_pair(d, w);
    Vec fx = f.apply(unit_vec(d, x)), fy = f.apply(unit_vec(d, y));
    Vec v = rep.rho(x).apply(fy);
    add_to(v, rep.rho(y).apply(fx), -1);
    add_to(v, f.apply(a.bi(x, y)), -1);
    for (std::size_t k = 0; k < vd; ++k) out.f_at({w}, k) = v[k];
    for (std::size_t z = 0; z < d; ++z) {
      Vec g = derived_d(rep, a, x, y).apply(f.apply(unit_vec(d, z)));
      add_to(g, rep.mu(y, z).apply(fx));
      add_to(g, rep.mu(x, z).apply(fy), -1);
      add_to(g, f.apply(a.tri(x, y, z)), -1);
      for (std::size_t k = 0; k < vd; ++k) out.g_at({w}, z, k) = g[k];
    }
  }
  return out;
}

Cochain delta(const Cochain& f, const LyAlgebra& a, const Representation& rep,
              std::size_t degree_cap) {
  if (f.degree() == 0) return delta0(f.f0(), a, rep);
  if (f.degree() > degree_cap)
    throw std::runtime_error("delta: degree above cap");
  std::size_t d = a.dim, vd = f.val_dim(), n = f.degree(), np = wedge_count(d);
  if (f.dim() != d || rep.v_dim() != vd || rep.alg_dim() != d)
    throw std::invalid_argument("delta: dimension mismatch");
  Cochain out(d, vd, n + 1);
  if (np == 0) return out;  // dim 1: the wedge space is empty
  int nsign = n % 2 ? -1 : 1;
  std::vector<std::size_t> ws(n + 1, 0);
  do {
    std::vector<std::size_t> head(ws.begin(), ws.end() - 1);
    auto [xn, yn] = wedge_pair(d, ws[n]);

    // f part.
    Vec fv = rep.rho(xn).apply(f.g_val(head, yn));
    add_to(fv, rep.rho(yn).apply(f.g_val(head, xn)), -1);
    add_to(fv, f.g_val_vec(head, a.bi(xn, yn)), -1);
    for (auto& q : fv) q *= nsign;
    for (std::size_t k = 0; k < n; ++k) {
      auto [xk, yk] = wedge_pair(d, ws[k]);
      int sk = k % 2 ? -1 : 1;  // (-1)^{(k+1)+1} with 1-based k
      add_to(fv, derived_d(rep, a, xk, yk).apply(f.f_val(without(ws, k))), sk);
    }
    for (std::size_t k = 0; k <= n; ++k)
      for (std::size_t l = k + 1; l <= n; ++l) {
        int sk = k % 2 ? 1 : -1;  // (-1)^{k} with 1-based k
        std::vector<std::size_t> pre, post;
        for (std::size_t i = 0; i < l; ++i)
          if (i != k) pre.push_back(ws[i]);
        for (std::size_t i = l + 1; i <= n; ++i) post.push_back(ws[i]);
        add_to(fv, f.f_mixed(pre, circ_wedge(a, ws[k], ws[l]), post), sk);
      }
    for (std::size_t k = 0; k < vd; ++k) out.f_at(ws, k) = fv[k];

    // g part.
    for (std::size_t z = 0; z < d; ++z) {
      Vec gv = rep.mu(yn, z).apply(f.g_val(head, xn));
      add_to(gv, rep.mu(xn, z).apply(f.g_val(head, yn)), -1);
      for (auto& q : gv) q *= nsign;
      for (std::size_t k = 0; k <= n; ++k) {
        auto [xk, yk] = wedge_pair(d, ws[k]);
        int sk = k % 2 ? -1 : 1;
        auto rest = without(ws, k);
        add_to(gv, derived_d(rep, a, xk, yk).apply(f.g_val(rest, z)), sk);
        add_to(gv, f.g_val_vec(rest, a.tri(xk, yk, z)), -sk);
      }
      for (std::size_t k = 0; k <= n; ++k)
        for (std::size_t l = k + 1; l <= n; ++l) {
          int sk = k % 2 ? 1 : -1;
          std::vector<std::size_t> pre, post;
          for (std::size_t i = 0; i < l; ++i)
            if (i != k) pre.push_back(ws[i]);
          for (std::size_t i = l + 1; i <= n; ++i) post.push_back(ws[i]);
          add_to(gv, f.g_mixed(pre, circ_wedge(a, ws[k], ws[l]), post, z), sk);
        }
      for (std::size_t k = 0; k < vd; ++k) out.g_at(ws, z, k) = gv[k];
    }
  } while (next_tuple(ws, np));
  return out;
}

CheckReport delta_vs_bracket(const Cochain& f, const LyAlgebra& a,
                             std::size_t max_witnesses) {
  CheckReport rep{"delta-vs-bracket"};
  rep.max_witnesses = max_witnesses;
  Cochain d = delta(f, a, adjoint(a));
  Cochain br = graded_bracket(Cochain::of_structure(a), f);
  if (f.degree() % 2) br = br.scaled(-1);
  compare_into(rep, d, br);
  return rep;
}

bool CompatTuple::is_zero() const {
  for (const auto& c : comps)
    if (!c.is_zero()) return false;
  return true;
}

Vec CompatTuple::coords() const {
  Vec out;
  for (const auto& c : comps) {
    Vec cc = c.coords();
    out.insert(out.end(), cc.begin(), cc.end());
  }
  return out;
}

CompatTuple zero_tuple(std::size_t dim, std::size_t degree) {
  if (degree == 0) throw std::invalid_argument("zero_tuple: degree >= 1");
  CompatTuple t{degree, {}};
  for (std::size_t i = 0; i < degree; ++i)
    t.comps.emplace_back(dim, dim, degree - 1);
  return t;
}

std::size_t tuple_space_dim(std::size_t dim, std::size_t degree) {
  return degree * Cochain::space_dim(dim, dim, degree - 1);
}

CompatTuple tuple_from_coords(std::size_t dim, std::size_t degree,
                              const Vec& coords) {
  if (coords.size() != tuple_space_dim(dim, degree))
    throw std::invalid_argument("tuple_from_coords: size mismatch");
  CompatTuple t{degree, {}};
  std::size_t step = Cochain::space_dim(dim, dim, degree - 1);
  for (std::size_t i = 0; i < degree; ++i)
    t.comps.push_back(Cochain::from_coords(
        dim, dim, degree - 1,
        Vec(coords.begin() + i * step, coords.begin() + (i + 1) * step)));
  return t;
}

CompatTuple delta_c(const CompatTuple& t, const CompatibleLy& c,
                    std::size_t degree_cap) {
  std::size_t n = t.degree;
  if (n == 0 || t.comps.size() != n)
    throw std::invalid_argument("delta_c: malformed tuple");
  if (n > degree_cap) throw std::runtime_error("delta_c: degree above cap");
  Cochain pi1 = Cochain::of_structure(c.component(1));
  Cochain pi2 = Cochain::of_structure(c.component(2));
  CompatTuple out = zero_tuple(c.dim, n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    Cochain v(c.dim, c.dim, n);
    if (i > 0) v = v + graded_bracket(pi2, t.comps[i - 1]);
    if (i < n) v = v + graded_bracket(pi1, t.comps[i]);
    out.comps[i] = v;
  }
  return out;
}

namespace {

// delta_c at tuple degree n as an exact matrix over the flat coordinates.
Matrix delta_c_matrix(const CompatibleLy& c, std::size_t n,
                      std::size_t degree_cap) {
  std::size_t cols = tuple_space_dim(c.dim, n);
  std::size_t rows = tuple_space_dim(c.dim, n + 1);
  Matrix m(rows, cols);
  Vec e(cols);
  for (std::size_t col = 0; col < cols; ++col) {
    e[col] = 1;
    Vec img = delta_c(tuple_from_coords(c.dim, n, e), c, degree_cap).coords();
    for (std::size_t r = 0; r < rows; ++r) m.at(r, col) = img[r];
    e[col] = 0;
  }
  return m;
}

}  // namespace

CohomologyDims cohomology_dim(const CompatibleLy& c, std::size_t n,
                              std::size_t degree_cap, std::size_t dim_cap) {
  if (n == 0) throw std::invalid_argument("cohomology_dim: degree >= 1");
  if (n > degree_cap || c.dim > dim_cap)
    throw std::runtime_error("cohomology_dim: resource cap exceeded");
  Matrix up = delta_c_matrix(c, n, degree_cap);
  CohomologyDims out;
  out.kernel_dim = up.cols() - rank(up);
  if (n > 1) {
    Matrix down = delta_c_matrix(c, n - 1, degree_cap);
    if (!(up * down).is_zero())
      throw std::logic_error("cohomology_dim: image not inside kernel");
    out.image_dim = rank(down);
  }
  out.h_dim = out.kernel_dim - out.image_dim;
  return out;
}

DeformationGenerator zero_generator(std::size_t dim) {
  return {BilinearMap(dim), BilinearMap(dim), TrilinearMap(dim),
          TrilinearMap(dim)};
}

DeformationGenerator structure_generator(const CompatibleLy& c) {
  return {c.pi1, c.pi2, c.omega1, c.omega2};
}

namespace {

// Reads a value-in-L degree-1 cochain back into structure-constant maps.
void unpack_degree1(const Cochain& f, BilinearMap& bi, TrilinearMap& tri) {
  std::size_t d = f.dim();
  bi = BilinearMap(d);
  tri = TrilinearMap(d);
  for (std::size_t w = 0; w < wedge_count(d); ++w) {
    auto [i, j] = wedge_pair(d, w);
    for (std::size_t k = 0; k < d; ++k) bi.set(i, j, k, f.f_at({w}, k));
    for (std::size_t z = 0; z < d; ++z)
      for (std::size_t l = 0; l < d; ++l) tri.set(i, j, z, l, f.g_at({w}, z, l));
  }
}

}  // namespace

DeformationGenerator coboundary_generator(const CompatibleLy& c,
                                          const Matrix& f) {
  Cochain f0 = Cochain::from_linear_map(c.dim, f);
  Cochain b1 = graded_bracket(Cochain::of_structure(c.component(1)), f0);
  Cochain b2 = graded_bracket(Cochain::of_structure(c.component(2)), f0);
  DeformationGenerator g = zero_generator(c.dim);
  unpack_degree1(b1, g.mu1, g.lambda1);
  unpack_degree1(b2, g.mu2, g.lambda2);
  return g;
}

CompatibleLy deform(const CompatibleLy& c, const DeformationGenerator& g,
                    const Rat& t) {
  return {c.dim, c.basis_names, c.pi1.plus(g.mu1, 1, t),
          c.pi2.plus(g.mu2, 1, t), c.omega1.plus(g.lambda1, 1, t),
          c.omega2.plus(g.lambda2, 1, t)};
}

std::vector<CheckReport> check_deformation_generator(
    const CompatibleLy& c, const DeformationGenerator& g,
    std::size_t max_witnesses) {
  // The three residuals are quadratic in t, so values at t = 1, 2, 3
  // determine the coefficients exactly.
  std::vector<std::vector<Vec>> vals;  // vals[t-1][residual] = coords
  for (int t = 1; t <= 3; ++t) {
    auto rs = mc_pair_residual(deform(c, g, t));
    std::vector<Vec> row;
    for (const auto& r : rs) row.push_back(r.coords());
    vals.push_back(std::move(row));
  }
  const char* names[3] = {"1", "2", "mixed"};
  std::vector<CheckReport> out;
  for (std::size_t r = 0; r < 3; ++r) {
    const Vec &p1 = vals[0][r], &p2 = vals[1][r], &p3 = vals[2][r];
    Vec a0(p1.size()), a1(p1.size()), a2(p1.size());
    for (std::size_t i = 0; i < p1.size(); ++i) {
      a2[i] = (p3[i] - 2 * p2[i] + p1[i]) / 2;
      a1[i] = p2[i] - p1[i] - 3 * a2[i];
      a0[i] = p1[i] - a1[i] - a2[i];
    }
    const Vec* coeffs[3] = {&a0, &a1, &a2};
    const char* deg[3] = {"base", "deg1", "deg2"};
    for (int dgr = 0; dgr < 3; ++dgr) {
      CheckReport rep{std::string(deg[dgr]) + "-" + names[r]};
      rep.max_witnesses = max_witnesses;
      for (std::size_t i = 0; i < p1.size(); ++i)
        rep.record({i}, {(*coeffs[dgr])[i]});
      out.push_back(std::move(rep));
    }
  }
  return out;
}

CheckReport verify_cocycle_theorem(const CompatibleLy& c,
                                   const DeformationGenerator& g,
                                   std::size_t max_witnesses) {
  for (int t = 1; t <= 3; ++t) {
    if (!is_compatible(deform(c, g, t))) {
      CheckReport rep{"cocycle-theorem (vacuous: deformed pair not "
                      "compatible at t = " + std::to_string(t) + ")"};
      rep.max_witnesses = max_witnesses;
      return rep;
    }
  }
  CompatTuple pair{2, {Cochain::of_structure({c.dim, c.basis_names, g.mu1,
                                              g.lambda1}),
                       Cochain::of_structure({c.dim, c.basis_names, g.mu2,
                                              g.lambda2})}};
  CheckReport rep{"cocycle-theorem"};
  rep.max_witnesses = max_witnesses;
  Vec img = delta_c(pair, c).coords();
  for (std::size_t i = 0; i < img.size(); ++i) rep.record({i}, {img[i]});
  return rep;
}

}  // namespace ly
