#include "ly/rb.hpp"

#include <stdexcept>

namespace ly {

namespace {

void add_to(Vec& acc, const Vec& v, const Rat& k = 1) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += k * v[i];
}

Vec sub(Vec a, const Vec& b) {
  add_to(a, b, -1);
  return a;
}

}  // namespace

Vec PreLy::star(const Vec& x, const Vec& y) const {
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (is_zero(y[j])) continue;
      for (std::size_t k = 0; k < dim_; ++k)
        out[k] += x[i] * y[j] * star_at(i, j, k);
    }
  }
  return out;
}

Vec PreLy::triple(const Vec& x, const Vec& y, const Vec& z) const {
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (is_zero(y[j])) continue;
      for (std::size_t k = 0; k < dim_; ++k) {
        if (is_zero(z[k])) continue;
        for (std::size_t l = 0; l < dim_; ++l)
          out[l] += x[i] * y[j] * z[k] * triple_at(i, j, k, l);
      }
    }
  }
  return out;
}

Vec PreLy::commutator_c(const Vec& x, const Vec& y) const {
  return sub(star(x, y), star(y, x));
}

Vec PreLy::associator(const Vec& x, const Vec& y, const Vec& z) const {
  return sub(star(star(x, y), z), star(x, star(y, z)));
}

Vec PreLy::triple_d(const Vec& x, const Vec& y, const Vec& z) const {
  Vec out = triple(z, y, x);
  add_to(out, triple(z, x, y), -1);
  add_to(out, associator(y, x, z));
  add_to(out, associator(x, y, z), -1);
  return out;
}

namespace {

// Iterates all basis tuples of the given arity.
template <typename F>
void for_tuples(std::size_t dim, std::size_t arity, F&& body) {
  std::vector<std::size_t> t(arity, 0);
  while (true) {
    body(t);
    std::size_t i = arity;
    while (i-- > 0) {
      if (++t[i] < dim) break;
      t[i] = 0;
      if (i == 0) return;
    }
  }
}

Vec e_(std::size_t d, std::size_t i) { return unit_vec(d, i); }

}  // namespace

std::vector<CheckReport> check_pre_lya(const PreLy& p,
                                       std::size_t max_witnesses) {
  std::size_t d = p.dim();
  std::vector<CheckReport> out;
  for (int k = 1; k <= 5; ++k) {
    out.push_back({"PLY" + std::to_string(k)});
    out.back().max_witnesses = max_witnesses;
  }
  for_tuples(d, 4, [&](const std::vector<std::size_t>& t) {
    Vec x = e_(d, t[0]), y = e_(d, t[1]), z = e_(d, t[2]), w = e_(d, t[3]);
    Vec r1 = p.triple(z, p.commutator_c(x, y), w);
    add_to(r1, p.triple(p.star(y, z), x, w), -1);
    add_to(r1, p.triple(p.star(x, z), y, w));
    out[0].record(t, std::move(r1));

    Vec r2 = p.triple(x, y, p.commutator_c(z, w));
    add_to(r2, p.star(z, p.triple(x, y, w)), -1);
    add_to(r2, p.star(w, p.triple(x, y, z)));
    out[1].record(t, std::move(r2));

    Vec r5 = p.star(p.triple_d(x, y, z), w);
    add_to(r5, p.star(p.triple(x, y, z), w));
    add_to(r5, p.star(p.triple(y, x, z), w), -1);
    add_to(r5, p.triple_d(x, y, p.star(z, w)), -1);
    add_to(r5, p.star(z, p.triple_d(x, y, w)));
    out[4].record(t, std::move(r5));
  });
  for_tuples(d, 5, [&](const std::vector<std::size_t>& tp) {
    Vec x = e_(d, tp[0]), y = e_(d, tp[1]), z = e_(d, tp[2]), w = e_(d, tp[3]),
        t = e_(d, tp[4]);
    Vec r3 = p.triple(p.triple(x, y, z), w, t);
    add_to(r3, p.triple(p.triple(x, y, w), z, t), -1);
    add_to(r3, p.triple(x, y, p.triple_d(z, w, t)), -1);
    add_to(r3, p.triple(x, y, p.triple(z, w, t)), -1);
    add_to(r3, p.triple(x, y, p.triple(w, z, t)));
    add_to(r3, p.triple_d(z, w, p.triple(x, y, t)));
    out[2].record(tp, std::move(r3));

    Vec r4 = p.triple(z, p.triple_d(x, y, w), t);
    add_to(r4, p.triple(z, p.triple(x, y, w), t));
    add_to(r4, p.triple(z, p.triple(y, x, w), t), -1);
    add_to(r4, p.triple(z, w, p.triple_d(x, y, t)));
    add_to(r4, p.triple(z, w, p.triple(x, y, t)));
    add_to(r4, p.triple(z, w, p.triple(y, x, t)), -1);
    add_to(r4, p.triple_d(x, y, p.triple(z, w, t)), -1);
    add_to(r4, p.triple(p.triple_d(x, y, z), w, t));
    out[3].record(tp, std::move(r4));
  });
  return out;
}

std::vector<CheckReport> check_compat_pre_lya(const CompatPreLy& cp,
                                              std::size_t max_witnesses) {
  std::vector<CheckReport> out;
  for (int c = 1; c <= 2; ++c)
    for (auto& r :
         check_pre_lya(c == 1 ? cp.p1 : cp.p2, max_witnesses)) {
      r.axiom_id = std::to_string(c) + ":" + r.axiom_id;
      out.push_back(std::move(r));
    }
  std::size_t d = cp.p1.dim();
  const PreLy* ps[2] = {&cp.p1, &cp.p2};
  std::size_t base = out.size();
  for (int k = 1; k <= 5; ++k) {
    out.push_back({"CPLY" + std::to_string(k)});
    out.back().max_witnesses = max_witnesses;
  }
  for_tuples(d, 4, [&](const std::vector<std::size_t>& t) {
    Vec x = e_(d, t[0]), y = e_(d, t[1]), z = e_(d, t[2]), w = e_(d, t[3]);
    Vec r1(d), r2(d), r5(d);
    for (int i = 0; i < 2; ++i) {
      const PreLy &pi = *ps[i], &pj = *ps[1 - i];
      add_to(r1, pj.triple(z, pi.commutator_c(x, y), w));
      add_to(r1, pj.triple(pi.star(y, z), x, w), -1);
      add_to(r1, pj.triple(pi.star(x, z), y, w));

      add_to(r2, pj.triple(x, y, pi.commutator_c(z, w)));
      add_to(r2, pi.star(z, pj.triple(x, y, w)), -1);
      add_to(r2, pi.star(w, pj.triple(x, y, z)));

      add_to(r5, pj.star(pi.triple_d(x, y, z), w));
      add_to(r5, pj.star(pi.triple(x, y, z), w));
      add_to(r5, pj.star(pi.triple(y, x, z), w), -1);
      add_to(r5, pj.triple_d(x, y, pi.star(z, w)), -1);
      add_to(r5, pi.star(z, pj.triple_d(x, y, w)));
    }
    out[base + 0].record(t, std::move(r1));
    out[base + 1].record(t, std::move(r2));
    out[base + 4].record(t, std::move(r5));
  });
  for_tuples(d, 5, [&](const std::vector<std::size_t>& tp) {
    Vec x = e_(d, tp[0]), y = e_(d, tp[1]), z = e_(d, tp[2]), w = e_(d, tp[3]),
        t = e_(d, tp[4]);
    Vec r3(d), r4(d);
    for (int i = 0; i < 2; ++i) {
      const PreLy &pi = *ps[i], &pj = *ps[1 - i];
      add_to(r3, pj.triple(pi.triple(x, y, z), w, t));
      add_to(r3, pj.triple(pi.triple(x, y, w), z, t), -1);
      add_to(r3, pj.triple(x, y, pi.triple_d(z, w, t)), -1);
      add_to(r3, pj.triple(x, y, pi.triple(z, w, t)), -1);
      add_to(r3, pj.triple(x, y, pi.triple(w, z, t)));
      add_to(r3, pj.triple_d(z, w, pi.triple(x, y, t)));

      add_to(r4, pj.triple(z, pi.triple_d(x, y, w), t));
      add_to(r4, pj.triple(z, pi.triple(x, y, w), t));
      add_to(r4, pj.triple(z, pi.triple(y, x, w), t), -1);
      add_to(r4, pj.triple(z, w, pi.triple_d(x, y, t)));
      add_to(r4, pj.triple(z, w, pi.triple(x, y, t)));
      add_to(r4, pj.triple(z, w, pi.triple(y, x, t)), -1);
      add_to(r4, pj.triple_d(x, y, pi.triple(z, w, t)), -1);
      add_to(r4, pj.triple(pi.triple_d(x, y, z), w, t));
    }
    out[base + 2].record(tp, std::move(r3));
    out[base + 3].record(tp, std::move(r4));
  });
  return out;
}

CheckReport check_lemma41(const CompatPreLy& cp, std::size_t max_witnesses) {
  CheckReport rep{"lemma41"};
  rep.max_witnesses = max_witnesses;
  std::size_t d = cp.p1.dim();
  const PreLy* ps[2] = {&cp.p1, &cp.p2};
  for (int i = 0; i < 2; ++i) {
    const PreLy &pi = *ps[i], &pj = *ps[1 - i];
    for_tuples(d, 4, [&](const std::vector<std::size_t>& t) {
      Vec x = e_(d, t[0]), y = e_(d, t[1]), z = e_(d, t[2]), w = e_(d, t[3]);
      Vec r = pj.triple_d(pi.commutator_c(x, y), z, w);
      add_to(r, pj.triple_d(pi.commutator_c(y, z), x, w));
      add_to(r, pj.triple_d(pi.commutator_c(z, x), y, w));
      std::vector<std::size_t> tag = {0, std::size_t(i)};
      tag.insert(tag.end(), t.begin(), t.end());
      rep.record(tag, std::move(r));
    });
    for_tuples(d, 5, [&](const std::vector<std::size_t>& tp) {
      Vec x = e_(d, tp[0]), y = e_(d, tp[1]), z = e_(d, tp[2]),
          w = e_(d, tp[3]), t = e_(d, tp[4]);
      Vec r = pj.triple_d(x, y, pi.triple_d(z, w, t));
      add_to(r, pj.triple_d(pi.triple_d(x, y, z), w, t), -1);
      add_to(r, pj.triple_d(pi.triple(x, y, z), w, t), -1);
      add_to(r, pj.triple_d(pi.triple(y, x, z), w, t));
      add_to(r, pj.triple_d(z, pi.triple_d(x, y, w), t), -1);
      add_to(r, pj.triple_d(z, pi.triple(x, y, w), t), -1);
      add_to(r, pj.triple_d(z, pi.triple(y, x, w), t));
      add_to(r, pj.triple_d(z, w, pi.triple_d(x, y, t)), -1);
      std::vector<std::size_t> tag = {1, std::size_t(i)};
      tag.insert(tag.end(), tp.begin(), tp.end());
      rep.record(tag, std::move(r));
    });
  }
  return rep;
}

LyAlgebra subadjacent_one(const PreLy& p) {
  std::size_t d = p.dim();
  BilinearMap bi(d);
  TrilinearMap tri(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Vec b = p.commutator_c(e_(d, i), e_(d, j));
      for (std::size_t k = 0; k < d; ++k) bi.set(i, j, k, b[k]);
      for (std::size_t k = 0; k < d; ++k) {
        Vec t = p.triple_d(e_(d, i), e_(d, j), e_(d, k));
        add_to(t, p.triple(e_(d, i), e_(d, j), e_(d, k)));
        add_to(t, p.triple(e_(d, j), e_(d, i), e_(d, k)), -1);
        for (std::size_t l = 0; l < d; ++l) tri.set(i, j, k, l, t[l]);
      }
    }
  return {d, {}, bi, tri};
}

CompatibleLy subadjacent(const CompatPreLy& cp) {
  LyAlgebra a1 = subadjacent_one(cp.p1), a2 = subadjacent_one(cp.p2);
  return {a1.dim, a1.basis_names, a1.pi, a2.pi, a1.omega, a2.omega};
}

CheckReport check_rb(const LyAlgebra& a, const LinearMap& r, RbConvention conv,
                     std::size_t max_witnesses) {
  std::size_t d = a.dim;
  if (r.src_dim() != d || r.dst_dim() != d)
    throw std::invalid_argument("check_rb: dimension mismatch");
  CheckReport rep{conv == RbConvention::SectionTwo ? "rb(sec2)" : "rb(sec6)"};
  rep.max_witnesses = max_witnesses;
  auto R = [&](const Vec& v) { return r(v); };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec x = e_(d, i), y = e_(d, j), rx = r.on_basis(i), ry = r.on_basis(j);
      // the two stated bilinear forms coincide by skew-symmetry; both are
      // evaluated and must agree exactly
      Vec lhs = a.pi.bracket(rx, ry);
      Vec form2 = sub(lhs, R(sub(a.pi.bracket(rx, y), a.pi.bracket(ry, x))));
      Vec rhs6(a.pi.bracket(x, ry));
      add_to(rhs6, a.pi.bracket(rx, y));
      Vec form6 = sub(lhs, R(rhs6));
      if (!(form2 == form6))
        throw std::logic_error("check_rb: bilinear forms disagree");
      rep.record({i, j}, std::move(form2));
    }
  for_tuples(d, 3, [&](const std::vector<std::size_t>& t) {
    Vec x = e_(d, t[0]), y = e_(d, t[1]), z = e_(d, t[2]);
    Vec rx = R(x), ry = R(y), rz = R(z);
    Vec res = a.omega.bracket(rx, ry, rz);
    Vec inner(d);
    if (conv == RbConvention::SectionTwo) {
      inner = a.omega.bracket(rx, ry, z);
      add_to(inner, a.omega.bracket(ry, rz, x));
      add_to(inner, a.omega.bracket(rx, rz, y), -1);
    } else {
      inner = a.omega.bracket(rx, ry, z);
      add_to(inner, a.omega.bracket(rx, y, rz));
      add_to(inner, a.omega.bracket(x, ry, rz));
    }
    add_to(res, R(inner), -1);
    rep.record(t, std::move(res));
  });
  return rep;
}

CheckReport check_rb_compatible(const CompatibleLy& c, const LinearMap& r,
                                RbConvention conv, std::size_t max_witnesses) {
  CheckReport rep{std::string("rb-compatible(") +
                  (conv == RbConvention::SectionTwo ? "sec2" : "sec6") + ")"};
  rep.max_witnesses = max_witnesses;
  for (int i = 1; i <= 2; ++i) {
    CheckReport part = check_rb(c.component(i), r, conv, max_witnesses);
    rep.total_violations += part.total_violations;
    for (auto& w : part.witnesses) {
      w.tuple.insert(w.tuple.begin(), std::size_t(i));
      if (rep.witnesses.size() < rep.max_witnesses)
        rep.witnesses.push_back(std::move(w));
    }
  }
  return rep;
}

PreLy induce_pre_lya(const LyAlgebra& a, const LinearMap& r,
                     RbConvention conv) {
  if (!check_rb(a, r, conv).ok())
    throw std::invalid_argument("induce_pre_lya: not a Rota-Baxter operator");
  std::size_t d = a.dim;
  PreLy p(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec s = a.pi.bracket(r.on_basis(i), e_(d, j));
      for (std::size_t k = 0; k < d; ++k) p.star_at(i, j, k) = s[k];
      for (std::size_t k = 0; k < d; ++k) {
        Vec t = conv == RbConvention::SectionTwo
                    ? a.omega.bracket(r.on_basis(j), r.on_basis(k), e_(d, i))
                    : a.omega.bracket(e_(d, i), r.on_basis(j), r.on_basis(k));
        for (std::size_t l = 0; l < d; ++l) p.triple_at(i, j, k, l) = t[l];
      }
    }
  return p;
}

CompatPreLy induce_compat_pre_lya(const CompatibleLy& c, const LinearMap& r,
                                  RbConvention conv) {
  return {induce_pre_lya(c.component(1), r, conv),
          induce_pre_lya(c.component(2), r, conv)};
}

CheckReport check_rb_homomorphism(const CompatibleLy& c1, const LinearMap& r1,
                                  const CompatibleLy& c2, const LinearMap& r2,
                                  const LinearMap& phi,
                                  std::size_t max_witnesses) {
  CheckReport hom = check_compat_homomorphism(c1, c2, phi, max_witnesses);
  if (!hom.ok()) {
    hom.axiom_id = "rb-homomorphism (precondition: homomorphism fails)";
    return hom;
  }
  CheckReport rep{"rb-homomorphism"};
  rep.max_witnesses = max_witnesses;
  Matrix lhs = phi.matrix * r1.matrix, rhs = r2.matrix * phi.matrix;
  for (std::size_t col = 0; col < lhs.cols(); ++col) {
    Vec res(lhs.rows());
    for (std::size_t row = 0; row < lhs.rows(); ++row)
      res[row] = lhs.at(row, col) - rhs.at(row, col);
    rep.record({col}, std::move(res));
  }
  return rep;
}

namespace {

template <typename Check>
std::vector<LinearMap> search_rb_impl(std::size_t d, Check&& passes,
                                      const std::vector<Rat>& entry_set,
                                      std::size_t max_candidates) {
  if (entry_set.empty()) return {};
  std::size_t cells = d * d;
  double total = 1;
  for (std::size_t i = 0; i < cells; ++i) {
    total *= double(entry_set.size());
    if (total > double(max_candidates))
      throw std::runtime_error("search_rb: resource cap exceeded");
  }
  std::vector<LinearMap> out;
  std::vector<std::size_t> idx(cells, 0);
  while (true) {
    Matrix m(d, d);
    for (std::size_t i = 0; i < cells; ++i)
      m.at(i / d, i % d) = entry_set[idx[i]];
    LinearMap r{m};
    if (passes(r)) out.push_back(r);
    std::size_t i = cells;
    bool done = true;
    while (i-- > 0) {
      if (++idx[i] < entry_set.size()) {
        done = false;
        break;
      }
      idx[i] = 0;
    }
    if (done) return out;
  }
}

}  // namespace

std::vector<LinearMap> search_rb(const LyAlgebra& a, RbConvention conv,
                                 const std::vector<Rat>& entry_set,
                                 std::size_t max_candidates) {
  return search_rb_impl(
      a.dim, [&](const LinearMap& r) { return check_rb(a, r, conv, 1).ok(); },
      entry_set, max_candidates);
}

std::vector<LinearMap> search_rb(const CompatibleLy& c, RbConvention conv,
                                 const std::vector<Rat>& entry_set,
                                 std::size_t max_candidates) {
  return search_rb_impl(
      c.dim,
      [&](const LinearMap& r) {
        return check_rb_compatible(c, r, conv, 1).ok();
      },
      entry_set, max_candidates);
}

}  // namespace ly
