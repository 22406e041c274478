#include "ly/cochain.hpp"

#include <stdexcept>

namespace ly {

std::size_t wedge_count(std::size_t dim) { return dim * (dim - 1) / 2; }

std::size_t wedge_index(std::size_t dim, std::size_t i, std::size_t j) {
  if (i >= j || j >= dim) throw std::invalid_argument("wedge_index: need i<j<dim");
  // pairs (0,1),(0,2),...,(0,d-1),(1,2),...
  return i * dim - i * (i + 1) / 2 + (j - i - 1);
}

std::pair<std::size_t, std::size_t> wedge_pair(std::size_t dim, std::size_t w) {
  for (std::size_t i = 0; i + 1 < dim; ++i) {
    std::size_t row = dim - i - 1;
    if (w < row) return {i, i + 1 + w};
    w -= row;
  }
  throw std::out_of_range("wedge_pair: index out of range");
}

WVec wedge_of(std::size_t dim, const Vec& x, const Vec& y) {
  WVec out(wedge_count(dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      out[wedge_index(dim, i, j)] = x[i] * y[j] - x[j] * y[i];
  return out;
}

std::vector<Shuffle> shuffles(std::size_t p, std::size_t q) {
  const std::size_t n = p + q;
  std::vector<Shuffle> out;
  // enumerate ascending p-subsets as the first block
  std::vector<std::size_t> first(p);
  for (std::size_t i = 0; i < p; ++i) first[i] = i;
  while (true) {
    Shuffle s;
    s.perm = first;
    std::vector<bool> used(n, false);
    for (auto v : first) used[v] = true;
    for (std::size_t v = 0; v < n; ++v)
      if (!used[v]) s.perm.push_back(v);
    // parity by inversion count
    std::size_t inv = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (s.perm[a] > s.perm[b]) ++inv;
    s.sign = (inv % 2 == 0) ? 1 : -1;
    out.push_back(std::move(s));
    // next subset
    if (p == 0) break;
    std::size_t k = p;
    while (k > 0 && first[k - 1] == n - p + k - 1) --k;
    if (k == 0) break;
    ++first[k - 1];
    for (std::size_t i = k; i < p; ++i) first[i] = first[i - 1] + 1;
  }
  return out;
}

Cochain::Cochain(std::size_t dim, std::size_t val_dim, std::size_t degree)
    : dim_(dim), val_dim_(val_dim), degree_(degree), np_(wedge_count(dim)) {
  if (degree == 0) {
    f0_ = Matrix(val_dim, dim);
  } else {
    tuples_ = 1;
    for (std::size_t i = 0; i < degree; ++i) tuples_ *= np_;
    f_.resize(tuples_ * val_dim);
    g_.resize(tuples_ * dim_ * val_dim);
  }
}

Cochain Cochain::from_linear_map(std::size_t dim, const Matrix& m) {
  Cochain c(dim, m.rows(), 0);
  c.f0_ = m;
  return c;
}

Cochain Cochain::of_structure(const LyAlgebra& a) {
  Cochain c(a.dim, a.dim, 1);
  for (std::size_t w = 0; w < c.np_; ++w) {
    auto [i, j] = wedge_pair(a.dim, w);
    Vec b = a.bi(i, j);
    for (std::size_t k = 0; k < a.dim; ++k) c.f_[w * a.dim + k] = b[k];
    for (std::size_t z = 0; z < a.dim; ++z) {
      Vec t = a.tri(i, j, z);
      for (std::size_t k = 0; k < a.dim; ++k)
        c.g_[(w * a.dim + z) * a.dim + k] = t[k];
    }
  }
  return c;
}

std::size_t Cochain::space_dim(std::size_t dim, std::size_t val_dim,
                               std::size_t degree) {
  if (degree == 0) return dim * val_dim;
  std::size_t t = 1;
  for (std::size_t i = 0; i < degree; ++i) t *= wedge_count(dim);
  return t * val_dim + t * dim * val_dim;
}

std::size_t Cochain::flat(const std::vector<std::size_t>& ws) const {
  if (ws.size() != degree_) throw std::invalid_argument("Cochain: arity mismatch");
  std::size_t idx = 0;
  for (auto w : ws) idx = idx * np_ + w;
  return idx;
}

Rat& Cochain::f_at(const std::vector<std::size_t>& ws, std::size_t out) {
  return f_[flat(ws) * val_dim_ + out];
}
const Rat& Cochain::f_at(const std::vector<std::size_t>& ws,
                         std::size_t out) const {
  return f_[flat(ws) * val_dim_ + out];
}
Rat& Cochain::g_at(const std::vector<std::size_t>& ws, std::size_t z,
                   std::size_t out) {
  return g_[(flat(ws) * dim_ + z) * val_dim_ + out];
}
const Rat& Cochain::g_at(const std::vector<std::size_t>& ws, std::size_t z,
                         std::size_t out) const {
  return g_[(flat(ws) * dim_ + z) * val_dim_ + out];
}

Vec Cochain::f_val(const std::vector<std::size_t>& ws) const {
  std::size_t base = flat(ws) * val_dim_;
  return Vec(f_.begin() + base, f_.begin() + base + val_dim_);
}

Vec Cochain::g_val(const std::vector<std::size_t>& ws, std::size_t z) const {
  std::size_t base = (flat(ws) * dim_ + z) * val_dim_;
  return Vec(g_.begin() + base, g_.begin() + base + val_dim_);
}

Vec Cochain::g_val_vec(const std::vector<std::size_t>& ws, const Vec& z) const {
  Vec out(val_dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    if (sgn(z[k]) == 0) continue;
    std::size_t base = (flat(ws) * dim_ + k) * val_dim_;
    for (std::size_t o = 0; o < val_dim_; ++o) out[o] += z[k] * g_[base + o];
  }
  return out;
}

Vec Cochain::f_mixed(const std::vector<std::size_t>& pre, const WVec& mid,
                     const std::vector<std::size_t>& post) const {
  Vec out(val_dim_);
  std::vector<std::size_t> ws = pre;
  ws.push_back(0);
  ws.insert(ws.end(), post.begin(), post.end());
  for (std::size_t w = 0; w < np_; ++w) {
    if (sgn(mid[w]) == 0) continue;
    ws[pre.size()] = w;
    std::size_t base = flat(ws) * val_dim_;
    for (std::size_t o = 0; o < val_dim_; ++o) out[o] += mid[w] * f_[base + o];
  }
  return out;
}

Vec Cochain::g_mixed(const std::vector<std::size_t>& pre, const WVec& mid,
                     const std::vector<std::size_t>& post, std::size_t z) const {
  Vec out(val_dim_);
  std::vector<std::size_t> ws = pre;
  ws.push_back(0);
  ws.insert(ws.end(), post.begin(), post.end());
  for (std::size_t w = 0; w < np_; ++w) {
    if (sgn(mid[w]) == 0) continue;
    ws[pre.size()] = w;
    std::size_t base = (flat(ws) * dim_ + z) * val_dim_;
    for (std::size_t o = 0; o < val_dim_; ++o) out[o] += mid[w] * g_[base + o];
  }
  return out;
}

Cochain Cochain::operator+(const Cochain& o) const {
  if (dim_ != o.dim_ || val_dim_ != o.val_dim_ || degree_ != o.degree_)
    throw std::invalid_argument("Cochain::operator+: shape mismatch");
  Cochain out = *this;
  if (degree_ == 0) {
    out.f0_ = f0_ + o.f0_;
    return out;
  }
  for (std::size_t i = 0; i < f_.size(); ++i) out.f_[i] += o.f_[i];
  for (std::size_t i = 0; i < g_.size(); ++i) out.g_[i] += o.g_[i];
  return out;
}

Cochain Cochain::operator-(const Cochain& o) const {
  return *this + o.scaled(-1);
}

Cochain Cochain::scaled(const Rat& k) const {
  Cochain out = *this;
  if (degree_ == 0) {
    out.f0_ = f0_.scaled(k);
    return out;
  }
  for (auto& q : out.f_) q *= k;
  for (auto& q : out.g_) q *= k;
  return out;
}

bool Cochain::is_zero() const {
  if (degree_ == 0) return f0_.is_zero();
  for (const auto& q : f_)
    if (sgn(q) != 0) return false;
  for (const auto& q : g_)
    if (sgn(q) != 0) return false;
  return true;
}

Vec Cochain::coords() const {
  if (degree_ == 0) {
    Vec out;
    out.reserve(dim_ * val_dim_);
    for (std::size_t r = 0; r < f0_.rows(); ++r)
      for (std::size_t c = 0; c < f0_.cols(); ++c) out.push_back(f0_.at(r, c));
    return out;
  }
  Vec out = f_;
  out.insert(out.end(), g_.begin(), g_.end());
  return out;
}

Cochain Cochain::from_coords(std::size_t dim, std::size_t val_dim,
                             std::size_t degree, const Vec& coords) {
  Cochain c(dim, val_dim, degree);
  if (coords.size() != space_dim(dim, val_dim, degree))
    throw std::invalid_argument("Cochain::from_coords: size mismatch");
  if (degree == 0) {
    std::size_t k = 0;
    for (std::size_t r = 0; r < val_dim; ++r)
      for (std::size_t col = 0; col < dim; ++col) c.f0_.at(r, col) = coords[k++];
    return c;
  }
  std::copy(coords.begin(), coords.begin() + c.f_.size(), c.f_.begin());
  std::copy(coords.begin() + c.f_.size(), coords.end(), c.g_.begin());
  return c;
}

namespace {

// Iterates over all basis wedge tuples of length n.
bool next_tuple(std::vector<std::size_t>& t, std::size_t base) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (++t[i] < base) return true;
    t[i] = 0;
  }
  return false;
}

void add_to(std::vector<Rat>::iterator dst, const Vec& v, int sign,
            const Rat& extra) {
  for (std::size_t i = 0; i < v.size(); ++i)
    *(dst + i) += (sign > 0 ? extra : -extra) * v[i];
}

std::vector<std::size_t> pick(const std::vector<std::size_t>& ws,
                              const std::vector<std::size_t>& perm,
                              std::size_t from, std::size_t to) {
  std::vector<std::size_t> out;
  out.reserve(to - from);
  for (std::size_t i = from; i < to; ++i) out.push_back(ws[perm[i]]);
  return out;
}

}  // namespace

Cochain circle(const Cochain& P, const Cochain& Q) {
  if (P.dim() != Q.dim() || P.val_dim() != P.dim() || Q.val_dim() != Q.dim())
    throw std::invalid_argument("circle: needs L-valued cochains on one L");
  const std::size_t p = P.degree(), q = Q.degree();
  if (p < 1 || q < 1) throw std::invalid_argument("circle: degrees must be >= 1");
  const std::size_t d = P.dim(), r = p + q, np = wedge_count(d);
  Cochain out(d, d, r);
  if (np == 0) return out;  // dim 1: the wedge space is empty

  const auto top = shuffles(p, q);
  // Shuffles of the first k+q-1 arguments into (k-1, q) blocks, per k.
  std::vector<std::vector<Shuffle>> mids;
  for (std::size_t k = 1; k <= p; ++k) mids.push_back(shuffles(k - 1, q));

  const int mc_sign = (p * q) % 2 == 0 ? 1 : -1;

  std::vector<std::size_t> ws(r, 0);
  do {
    // --- f part and g part share the k-sums; compute f first ---
    Vec facc(d);
    for (const auto& s : top) {
      if (s.perm[r - 1] != r - 1) continue;
      Vec inner = Q.f_val(pick(ws, s.perm, p, r));
      Vec v = P.g_val_vec(pick(ws, s.perm, 0, p), inner);
      add_to(facc.begin(), v, s.sign * mc_sign, 1);
    }
    for (std::size_t k = 1; k <= p; ++k) {
      const int ksign = ((k - 1) * q) % 2 == 0 ? 1 : -1;
      auto [xi, yi] = wedge_pair(d, ws[k + q - 1]);
      std::vector<std::size_t> post(ws.begin() + k + q, ws.end());
      for (const auto& s : mids[k - 1]) {
        auto pre = pick(ws, s.perm, 0, k - 1);
        auto block = pick(ws, s.perm, k - 1, k + q - 1);
        // x_{k+q} wedge Q2(..., y_{k+q})
        WVec w1 = wedge_of(d, unit_vec(d, xi), Q.g_val(block, yi));
        add_to(facc.begin(), P.f_mixed(pre, w1, post), s.sign * ksign, 1);
        // Q2(..., x_{k+q}) wedge y_{k+q}
        WVec w2 = wedge_of(d, Q.g_val(block, xi), unit_vec(d, yi));
        add_to(facc.begin(), P.f_mixed(pre, w2, post), s.sign * ksign, 1);
      }
    }
    for (std::size_t o = 0; o < d; ++o) out.f_at(ws, o) = facc[o];

    for (std::size_t z = 0; z < d; ++z) {
      Vec gacc(d);
      for (const auto& s : top) {
        Vec inner = Q.g_val(pick(ws, s.perm, p, r), z);
        Vec v = P.g_val_vec(pick(ws, s.perm, 0, p), inner);
        add_to(gacc.begin(), v, s.sign * mc_sign, 1);
      }
      for (std::size_t k = 1; k <= p; ++k) {
        const int ksign = ((k - 1) * q) % 2 == 0 ? 1 : -1;
        auto [xi, yi] = wedge_pair(d, ws[k + q - 1]);
        std::vector<std::size_t> post(ws.begin() + k + q, ws.end());
        for (const auto& s : mids[k - 1]) {
          auto pre = pick(ws, s.perm, 0, k - 1);
          auto block = pick(ws, s.perm, k - 1, k + q - 1);
          WVec w1 = wedge_of(d, unit_vec(d, xi), Q.g_val(block, yi));
          add_to(gacc.begin(), P.g_mixed(pre, w1, post, z), s.sign * ksign, 1);
          WVec w2 = wedge_of(d, Q.g_val(block, xi), unit_vec(d, yi));
          add_to(gacc.begin(), P.g_mixed(pre, w2, post, z), s.sign * ksign, 1);
        }
      }
      for (std::size_t o = 0; o < d; ++o) out.g_at(ws, z, o) = gacc[o];
    }
  } while (next_tuple(ws, np));
  return out;
}

Cochain graded_bracket(const Cochain& P, const Cochain& Q) {
  const std::size_t p = P.degree(), q = Q.degree();
  if (p == 0 || q == 0) {
    const Cochain& Pi = p == 0 ? Q : P;
    const Cochain& f = p == 0 ? P : Q;
    if (Pi.degree() != 1)
      throw std::invalid_argument(
          "graded_bracket: degree-0 operand needs a degree-1 partner");
    const std::size_t d = Pi.dim();
    // Unpack Pi as a structure and apply the adjoint-coefficient formula:
    // [Pi,f]_1(x,y) = pi(x,f y) - pi(y,f x) - f(pi(x,y))
    // [Pi,f]_2(x,y,z) = om(x,y,f z) + om(f x,y,z) - om(f y,x,z) - f(om(x,y,z))
    BilinearMap pi(d);
    TrilinearMap om(d);
    for (std::size_t w = 0; w < wedge_count(d); ++w) {
      auto [i, j] = wedge_pair(d, w);
      Vec b = Pi.f_val({w});
      for (std::size_t k = 0; k < d; ++k)
        if (sgn(b[k]) != 0) pi.set(i, j, k, b[k]);
      for (std::size_t z = 0; z < d; ++z) {
        Vec t = Pi.g_val({w}, z);
        for (std::size_t k = 0; k < d; ++k)
          if (sgn(t[k]) != 0) om.set(i, j, z, k, t[k]);
      }
    }
    const Matrix& m = f.f0();
    Cochain out(d, d, 1);
    auto e = [&](std::size_t i) { return unit_vec(d, i); };
    for (std::size_t w = 0; w < wedge_count(d); ++w) {
      auto [i, j] = wedge_pair(d, w);
      Vec fi = m.apply(e(i)), fj = m.apply(e(j));
      Vec v = pi.bracket(e(i), fj);
      Vec t = pi.bracket(e(j), fi);
      for (std::size_t k = 0; k < d; ++k) v[k] -= t[k];
      Vec w3 = m.apply(pi.bracket(i, j));
      for (std::size_t k = 0; k < d; ++k) v[k] -= w3[k];
      for (std::size_t k = 0; k < d; ++k) out.f_at({w}, k) = v[k];
      for (std::size_t z = 0; z < d; ++z) {
        Vec fz = m.apply(e(z));
        Vec g = om.bracket(e(i), e(j), fz);
        Vec g2 = om.bracket(fi, e(j), e(z));
        Vec g3 = om.bracket(fj, e(i), e(z));
        Vec g4 = m.apply(om.bracket(i, j, z));
        for (std::size_t k = 0; k < d; ++k)
          out.g_at({w}, z, k) = g[k] + g2[k] - g3[k] - g4[k];
      }
    }
    // [f,Pi] = -(-1)^{0*1}[Pi,f] = -[Pi,f]
    return p == 0 ? out.scaled(-1) : out;
  }
  Cochain a = circle(P, Q);
  Cochain b = circle(Q, P);
  return (p * q) % 2 == 0 ? a - b : a + b;
}

Cochain mc_residual(const LyAlgebra& a) {
  Cochain Pi = Cochain::of_structure(a);
  return graded_bracket(Pi, Pi);
}

std::vector<Cochain> mc_pair_residual(const CompatibleLy& c) {
  Cochain p1 = Cochain::of_structure(c.component(1));
  Cochain p2 = Cochain::of_structure(c.component(2));
  return {graded_bracket(p1, p1), graded_bracket(p2, p2),
          graded_bracket(p1, p2)};
}

}  // namespace ly
