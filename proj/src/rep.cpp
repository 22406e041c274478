#include "ly/rep.hpp"

#include <stdexcept>

namespace ly {

namespace {

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

Representation::Representation(std::size_t alg_dim, std::size_t v_dim)
    : alg_dim_(alg_dim),
      v_dim_(v_dim),
      rho_(alg_dim, Matrix(v_dim, v_dim)),
      mu_(alg_dim * alg_dim, Matrix(v_dim, v_dim)) {}

Matrix Representation::rho_of(const Vec& x) const {
  Matrix m(v_dim_, v_dim_);
  for (std::size_t i = 0; i < alg_dim_; ++i)
    if (sgn(x[i]) != 0) m = m + rho_[i].scaled(x[i]);
  return m;
}

Matrix Representation::mu_of(const Vec& x, const Vec& y) const {
  Matrix m(v_dim_, v_dim_);
  for (std::size_t i = 0; i < alg_dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < alg_dim_; ++j)
      if (sgn(y[j]) != 0) m = m + mu(i, j).scaled(x[i] * y[j]);
  }
  return m;
}

Matrix derived_d(const Representation& rep, const LyAlgebra& a, std::size_t i,
                 std::size_t j) {
  if (rep.alg_dim() != a.dim)
    throw std::invalid_argument("derived_d: dimension mismatch");
  return rep.mu(j, i) - rep.mu(i, j) + commutator(rep.rho(i), rep.rho(j)) -
         rep.rho_of(a.bi(i, j));
}

Matrix derived_d(const Representation& rep, const LyAlgebra& a, const Vec& x,
                 const Vec& y) {
  return rep.mu_of(y, x) - rep.mu_of(x, y) +
         commutator(rep.rho_of(x), rep.rho_of(y)) -
         rep.rho_of(a.pi.bracket(x, y));
}

std::vector<CheckReport> check_representation(const LyAlgebra& a,
                                              const Representation& rep,
                                              std::size_t max_witnesses) {
  if (rep.alg_dim() != a.dim)
    throw std::invalid_argument("check_representation: dimension mismatch");
  const std::size_t d = a.dim;
  std::vector<CheckReport> out;
  for (int c = 1; c <= 5; ++c)
    out.push_back({"rep" + std::to_string(c), 0, {}, max_witnesses});

  auto D = [&](std::size_t i, std::size_t j) { return derived_d(rep, a, i, j); };

  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      for (std::size_t z = 0; z < d; ++z) {
        // (1) mu([x,y],z) - mu(x,z) rho(y) + mu(y,z) rho(x) = 0
        record_matrix(out[0], {x, y, z},
                      rep.mu_of(a.bi(x, y), unit_vec(d, z)) -
                          rep.mu(x, z) * rep.rho(y) + rep.mu(y, z) * rep.rho(x));
        // (2) mu(x,[y,z]) - rho(y) mu(x,z) + rho(z) mu(x,y) = 0
        record_matrix(out[1], {x, y, z},
                      rep.mu_of(unit_vec(d, x), a.bi(y, z)) -
                          rep.rho(y) * rep.mu(x, z) + rep.rho(z) * rep.mu(x, y));
        // (3) rho([x,y,z]) = [D(x,y), rho(z)]
        record_matrix(out[2], {x, y, z},
                      rep.rho_of(a.tri(x, y, z)) -
                          commutator(D(x, y), rep.rho(z)));
        for (std::size_t w = 0; w < d; ++w) {
          // (4) mu(z,w) mu(x,y) - mu(y,w) mu(x,z) - mu(x,[y,z,w])
          //     + D(y,z) mu(x,w) = 0
          record_matrix(out[3], {x, y, z, w},
                        rep.mu(z, w) * rep.mu(x, y) -
                            rep.mu(y, w) * rep.mu(x, z) -
                            rep.mu_of(unit_vec(d, x), a.tri(y, z, w)) +
                            D(y, z) * rep.mu(x, w));
          // (5) mu([x,y,z],w) + mu(z,[x,y,w]) = [D(x,y), mu(z,w)]
          record_matrix(out[4], {x, y, z, w},
                        rep.mu_of(a.tri(x, y, z), unit_vec(d, w)) +
                            rep.mu_of(unit_vec(d, z), a.tri(x, y, w)) -
                            commutator(D(x, y), rep.mu(z, w)));
        }
      }
  return out;
}

Representation adjoint(const LyAlgebra& a) {
  const std::size_t d = a.dim;
  Representation rep(d, d);
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t z = 0; z < d; ++z) {
      Vec v = a.pi.bracket(x, z);
      for (std::size_t r = 0; r < d; ++r) rep.rho(x).at(r, z) = v[r];
    }
  }
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      for (std::size_t z = 0; z < d; ++z) {
        Vec v = a.tri(z, x, y);  // mu(x,y): z -> [z,x,y]
        for (std::size_t r = 0; r < d; ++r) rep.mu(x, y).at(r, z) = v[r];
      }
  return rep;
}

LyAlgebra semidirect(const LyAlgebra& a, const Representation& rep) {
  if (rep.alg_dim() != a.dim)
    throw std::invalid_argument("semidirect: dimension mismatch");
  const std::size_t d = a.dim, v = rep.v_dim(), n = d + v;
  BilinearMap pi(n);
  TrilinearMap om(n);

  auto set_bi = [&](std::size_t i, std::size_t j, std::size_t k, const Rat& q) {
    if (sgn(q) != 0) pi.set(i, j, k, q);
  };
  auto set_tri = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l,
                     const Rat& q) {
    if (sgn(q) != 0) om.set(i, j, k, l, q);
  };

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Vec b = a.bi(i, j);
      for (std::size_t k = 0; k < d; ++k) set_bi(i, j, k, b[k]);
      Matrix Dij = derived_d(rep, a, i, j);
      for (std::size_t k = 0; k < d; ++k) {
        Vec t = a.tri(i, j, k);
        for (std::size_t l = 0; l < d; ++l) set_tri(i, j, k, l, t[l]);
      }
      // [e_i, e_j, u_b] = D(e_i, e_j) u_b
      for (std::size_t b2 = 0; b2 < v; ++b2)
        for (std::size_t r = 0; r < v; ++r)
          set_tri(i, j, d + b2, d + r, Dij.at(r, b2));
    }
  // [e_i, u_b] = rho(e_i) u_b ; [e_i, u_b, e_k] = -mu(e_i, e_k) u_b
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t b = 0; b < v; ++b) {
      for (std::size_t r = 0; r < v; ++r)
        set_bi(i, d + b, d + r, rep.rho(i).at(r, b));
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t r = 0; r < v; ++r)
          set_tri(i, d + b, k, d + r, -rep.mu(i, k).at(r, b));
    }
  // [u_a, u_b, e_k] = mu(e_k, ...)? No: both first slots in V give zero, as
  // do all remaining combinations.

  std::vector<std::string> names = a.basis_names;
  for (std::size_t b = 0; b < v; ++b) names.push_back("u" + std::to_string(b + 1));
  return {n, std::move(names), std::move(pi), std::move(om)};
}

CheckReport check_rb_representation(const LyAlgebra& a, const LinearMap& r,
                                    const RbRepresentation& rb_rep,
                                    std::size_t max_witnesses) {
  const std::size_t d = a.dim;
  const auto& rep = rb_rep.rep;
  const Matrix& T = rb_rep.t_map.matrix;
  if (r.src_dim() != d || rep.alg_dim() != d || T.rows() != rep.v_dim())
    throw std::invalid_argument("check_rb_representation: dimension mismatch");
  CheckReport out{"rb-representation"};
  out.max_witnesses = max_witnesses;
  for (std::size_t x = 0; x < d; ++x) {
    Matrix rho_Rx = rep.rho_of(r.on_basis(x));
    // rho(Rx) T = T (rho(Rx) + rho(x) T)
    record_matrix(out, {x},
                  rho_Rx * T - T * rho_Rx - T * (rep.rho(x) * T));
    for (std::size_t y = 0; y < d; ++y) {
      Matrix mu_RxRy = rep.mu_of(r.on_basis(x), r.on_basis(y));
      Matrix mu_Rx_y = rep.mu_of(r.on_basis(x), unit_vec(d, y));
      Matrix mu_x_Ry = rep.mu_of(unit_vec(d, x), r.on_basis(y));
      // mu(Rx,Ry) T = T (mu(Rx,Ry) + mu(Rx,y) T + mu(x,Ry) T)
      record_matrix(out, {x, y},
                    mu_RxRy * T - T * mu_RxRy - T * (mu_Rx_y * T) -
                        T * (mu_x_Ry * T));
    }
  }
  return out;
}

}  // namespace ly
