#include "ly/lya.hpp"

#include <stdexcept>

namespace ly {

void BilinearMap::set(std::size_t i, std::size_t j, std::size_t k, const Rat& v) {
  if (i >= j) throw std::invalid_argument("BilinearMap::set: requires i < j");
  if (j >= dim_ || k >= dim_) throw std::out_of_range("BilinearMap::set: index");
  c_[(i * dim_ + j) * dim_ + k] = v;
  c_[(j * dim_ + i) * dim_ + k] = -v;
}

Vec BilinearMap::bracket(std::size_t i, std::size_t j) const {
  Vec out(dim_);
  for (std::size_t k = 0; k < dim_; ++k) out[k] = at(i, j, k);
  return out;
}

Vec BilinearMap::bracket(const Vec& x, const Vec& y) const {
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      Rat f = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) out[k] += f * at(i, j, k);
    }
  }
  return out;
}

BilinearMap BilinearMap::scaled(const Rat& k) const {
  BilinearMap out = *this;
  for (auto& q : out.c_) q *= k;
  return out;
}

BilinearMap BilinearMap::plus(const BilinearMap& o, const Rat& k1, const Rat& k2) const {
  if (dim_ != o.dim_) throw std::invalid_argument("BilinearMap::plus: dim mismatch");
  BilinearMap out(dim_);
  for (std::size_t i = 0; i < c_.size(); ++i)
    out.c_[i] = k1 * c_[i] + k2 * o.c_[i];
  return out;
}

void TrilinearMap::set(std::size_t i, std::size_t j, std::size_t k, std::size_t l,
                       const Rat& v) {
  if (i >= j) throw std::invalid_argument("TrilinearMap::set: requires i < j");
  if (j >= dim_ || k >= dim_ || l >= dim_)
    throw std::out_of_range("TrilinearMap::set: index");
  d_[((i * dim_ + j) * dim_ + k) * dim_ + l] = v;
  d_[((j * dim_ + i) * dim_ + k) * dim_ + l] = -v;
}

Vec TrilinearMap::bracket(std::size_t i, std::size_t j, std::size_t k) const {
  Vec out(dim_);
  for (std::size_t l = 0; l < dim_; ++l) out[l] = at(i, j, k, l);
  return out;
}

Vec TrilinearMap::bracket(const Vec& x, const Vec& y, const Vec& z) const {
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      Rat f = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (sgn(z[k]) == 0) continue;
        Rat g = f * z[k];
        for (std::size_t l = 0; l < dim_; ++l) out[l] += g * at(i, j, k, l);
      }
    }
  }
  return out;
}

TrilinearMap TrilinearMap::scaled(const Rat& k) const {
  TrilinearMap out = *this;
  for (auto& q : out.d_) q *= k;
  return out;
}

TrilinearMap TrilinearMap::plus(const TrilinearMap& o, const Rat& k1,
                                const Rat& k2) const {
  if (dim_ != o.dim_) throw std::invalid_argument("TrilinearMap::plus: dim mismatch");
  TrilinearMap out(dim_);
  for (std::size_t i = 0; i < d_.size(); ++i)
    out.d_[i] = k1 * d_[i] + k2 * o.d_[i];
  return out;
}

Vec LinearMap::on_basis(std::size_t i) const {
  Vec out(dst_dim());
  for (std::size_t r = 0; r < dst_dim(); ++r) out[r] = matrix.at(r, i);
  return out;
}

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

}  // namespace

LyAlgebra abelian_lya(std::size_t dim) {
  return {dim, default_names(dim), BilinearMap(dim), TrilinearMap(dim)};
}

std::vector<CheckReport> check_lya(const LyAlgebra& a, std::size_t max_witnesses) {
  if (a.pi.dim() != a.dim || a.omega.dim() != a.dim)
    throw std::invalid_argument("check_lya: tensor dims disagree with algebra dim");
  const std::size_t d = a.dim;
  const auto& pi = a.pi;
  const auto& om = a.omega;
  CheckReport ly1{"LY1"}, ly2{"LY2"}, ly3{"LY3"}, ly4{"LY4"};
  for (auto* r : {&ly1, &ly2, &ly3, &ly4}) r->max_witnesses = max_witnesses;

  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      for (std::size_t z = 0; z < d; ++z) {
        // LY1: [[x,y],z] + c.p. + [x,y,z] + c.p. = 0
        Vec r(d);
        acc(r, pi.bracket(pi.bracket(x, y), unit_vec(d, z)));
        acc(r, pi.bracket(pi.bracket(y, z), unit_vec(d, x)));
        acc(r, pi.bracket(pi.bracket(z, x), unit_vec(d, y)));
        acc(r, om.bracket(x, y, z));
        acc(r, om.bracket(y, z, x));
        acc(r, om.bracket(z, x, y));
        ly1.record({x, y, z}, std::move(r));

        for (std::size_t w = 0; w < d; ++w) {
          // LY2: [[x,y],z,w] + [[y,z],x,w] + [[z,x],y,w] = 0
          Vec r2(d);
          acc(r2, om.bracket(pi.bracket(x, y), unit_vec(d, z), unit_vec(d, w)));
          acc(r2, om.bracket(pi.bracket(y, z), unit_vec(d, x), unit_vec(d, w)));
          acc(r2, om.bracket(pi.bracket(z, x), unit_vec(d, y), unit_vec(d, w)));
          ly2.record({x, y, z, w}, std::move(r2));

          // LY3: [x,y,[z,w]] = [[x,y,z],w] + [z,[x,y,w]]
          Vec r3 = om.bracket(unit_vec(d, x), unit_vec(d, y), pi.bracket(z, w));
          sub(r3, pi.bracket(om.bracket(x, y, z), unit_vec(d, w)));
          sub(r3, pi.bracket(unit_vec(d, z), om.bracket(x, y, w)));
          ly3.record({x, y, z, w}, std::move(r3));

          for (std::size_t t = 0; t < d; ++t) {
            // LY4: [x,y,[z,w,t]] = [[x,y,z],w,t] + [z,[x,y,w],t] + [z,w,[x,y,t]]
            Vec r4 = om.bracket(unit_vec(d, x), unit_vec(d, y), om.bracket(z, w, t));
            sub(r4, om.bracket(om.bracket(x, y, z), unit_vec(d, w), unit_vec(d, t)));
            sub(r4, om.bracket(unit_vec(d, z), om.bracket(x, y, w), unit_vec(d, t)));
            sub(r4, om.bracket(unit_vec(d, z), unit_vec(d, w), om.bracket(x, y, t)));
            ly4.record({x, y, z, w, t}, std::move(r4));
          }
        }
      }
  return {ly1, ly2, ly3, ly4};
}

CheckReport check_jacobi(const BilinearMap& b, std::size_t max_witnesses) {
  const std::size_t d = b.dim();
  CheckReport rep{"Jacobi"};
  rep.max_witnesses = max_witnesses;
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      for (std::size_t z = 0; z < d; ++z) {
        Vec r(d);
        acc(r, b.bracket(b.bracket(x, y), unit_vec(d, z)));
        acc(r, b.bracket(b.bracket(y, z), unit_vec(d, x)));
        acc(r, b.bracket(b.bracket(z, x), unit_vec(d, y)));
        rep.record({x, y, z}, std::move(r));
      }
  return rep;
}

LyAlgebra from_lie(const BilinearMap& b, std::vector<std::string> basis_names) {
  auto jac = check_jacobi(b);
  if (!jac.ok())
    throw std::invalid_argument("from_lie: Jacobi identity fails");
  const std::size_t d = b.dim();
  TrilinearMap om(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Vec v = b.bracket(b.bracket(i, j), unit_vec(d, k));
        for (std::size_t l = 0; l < d; ++l)
          if (sgn(v[l]) != 0) om.set(i, j, k, l, v[l]);
      }
  if (basis_names.empty()) basis_names = default_names(d);
  return {d, std::move(basis_names), b, std::move(om)};
}

LyAlgebra direct_sum(const LyAlgebra& a, const LyAlgebra& b) {
  const std::size_t d = a.dim + b.dim;
  BilinearMap pi(d);
  TrilinearMap om(d);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = i + 1; j < a.dim; ++j) {
      for (std::size_t k = 0; k < a.dim; ++k) {
        pi.set(i, j, k, a.pi.at(i, j, k));
        for (std::size_t l = 0; l < a.dim; ++l)
          om.set(i, j, k, l, a.omega.at(i, j, k, l));
      }
    }
  for (std::size_t i = 0; i < b.dim; ++i)
    for (std::size_t j = i + 1; j < b.dim; ++j)
      for (std::size_t k = 0; k < b.dim; ++k) {
        pi.set(a.dim + i, a.dim + j, a.dim + k, b.pi.at(i, j, k));
        for (std::size_t l = 0; l < b.dim; ++l)
          om.set(a.dim + i, a.dim + j, a.dim + k, a.dim + l,
                 b.omega.at(i, j, k, l));
      }
  std::vector<std::string> names = a.basis_names;
  for (const auto& n : b.basis_names) names.push_back(n + "'");
  return {d, std::move(names), std::move(pi), std::move(om)};
}

CheckReport check_homomorphism(const LyAlgebra& a, const LyAlgebra& b,
                               const LinearMap& phi, std::size_t max_witnesses) {
  if (phi.src_dim() != a.dim || phi.dst_dim() != b.dim)
    throw std::invalid_argument("check_homomorphism: dimension mismatch");
  CheckReport rep{"homomorphism"};
  rep.max_witnesses = max_witnesses;
  for (std::size_t x = 0; x < a.dim; ++x)
    for (std::size_t y = 0; y < a.dim; ++y) {
      Vec r = phi(a.bi(x, y));
      sub(r, b.pi.bracket(phi.on_basis(x), phi.on_basis(y)));
      rep.record({x, y}, std::move(r));
      for (std::size_t z = 0; z < a.dim; ++z) {
        Vec r3 = phi(a.tri(x, y, z));
        sub(r3, b.omega.bracket(phi.on_basis(x), phi.on_basis(y), phi.on_basis(z)));
        rep.record({x, y, z}, std::move(r3));
      }
    }
  return rep;
}

CheckReport check_derivation(const LyAlgebra& a, const LinearMap& d,
                             std::size_t max_witnesses) {
  if (d.src_dim() != a.dim || d.dst_dim() != a.dim)
    throw std::invalid_argument("check_derivation: dimension mismatch");
  const std::size_t n = a.dim;
  CheckReport rep{"derivation"};
  rep.max_witnesses = max_witnesses;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Vec r = d(a.bi(x, y));
      sub(r, a.pi.bracket(d.on_basis(x), unit_vec(n, y)));
      sub(r, a.pi.bracket(unit_vec(n, x), d.on_basis(y)));
      rep.record({x, y}, std::move(r));
      for (std::size_t z = 0; z < n; ++z) {
        Vec r3 = d(a.tri(x, y, z));
        sub(r3, a.omega.bracket(d.on_basis(x), unit_vec(n, y), unit_vec(n, z)));
        sub(r3, a.omega.bracket(unit_vec(n, x), d.on_basis(y), unit_vec(n, z)));
        sub(r3, a.omega.bracket(unit_vec(n, x), unit_vec(n, y), d.on_basis(z)));
        rep.record({x, y, z}, std::move(r3));
      }
    }
  return rep;
}

std::vector<LinearMap> derivation_space(const LyAlgebra& a) {
  const std::size_t n = a.dim;
  // Unknowns: matrix entries d(r,c), flattened r*n + c.
  // One constraint row per (bracket identity component).
  const std::size_t nvars = n * n;
  std::vector<Vec> rows;
  auto emit = [&](const Vec& coeffs) { rows.push_back(coeffs); };

  // d[x,y] - [dx,y] - [x,dy] = 0, component l.
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t l = 0; l < n; ++l) {
        Vec row(nvars);
        // d applied to [x,y]: sum_k c(x,y,k) d(l,k)
        for (std::size_t k = 0; k < n; ++k)
          row[l * n + k] += a.pi.at(x, y, k);
        // [dx, y]: dx = sum_r d(r,x) e_r -> sum_r d(r,x) c(r,y,l)
        for (std::size_t r = 0; r < n; ++r) {
          row[r * n + x] -= a.pi.at(r, y, l);
          row[r * n + y] -= a.pi.at(x, r, l);
        }
        emit(row);
      }
  // d[x,y,z] - [dx,y,z] - [x,dy,z] - [x,y,dz] = 0, component l.
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t l = 0; l < n; ++l) {
          Vec row(nvars);
          for (std::size_t k = 0; k < n; ++k)
            row[l * n + k] += a.omega.at(x, y, z, k);
          for (std::size_t r = 0; r < n; ++r) {
            row[r * n + x] -= a.omega.at(r, y, z, l);
            row[r * n + y] -= a.omega.at(x, r, z, l);
            row[r * n + z] -= a.omega.at(x, y, r, l);
          }
          emit(row);
        }

  Matrix m(rows.size(), nvars);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < nvars; ++c) m.at(r, c) = rows[r][c];
  std::vector<LinearMap> basis;
  for (const auto& v : kernel_basis(m)) {
    Matrix dm(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) dm.at(r, c) = v[r * n + c];
    basis.push_back({std::move(dm)});
  }
  return basis;
}

}  // namespace ly
