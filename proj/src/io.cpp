#include "ly/io.hpp"

#include <fstream>

namespace ly {

namespace {

std::size_t get_nat(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned())
    throw IoError(std::string("missing or bad \"") + key + "\"");
  return j[key].get<std::size_t>();
}

Rat get_rat(const Json& j, const char* key) {
  if (!j.contains(key)) throw IoError(std::string("missing \"") + key + "\"");
  try {
    if (j[key].is_number_integer()) return Rat(j[key].get<long>());
    return parse_rat(j[key].get<std::string>());
  } catch (const std::exception& e) {
    throw IoError(std::string("bad rational for \"") + key + "\": " + e.what());
  }
}

std::vector<std::string> get_basis(const Json& j, std::size_t dim) {
  std::vector<std::string> names;
  if (j.contains("basis")) {
    for (const auto& n : j["basis"]) names.push_back(n.get<std::string>());
    if (names.size() != dim) throw IoError("basis length != dim");
  }
  return names;
}

void check_index(std::size_t v, std::size_t dim, const char* what) {
  if (v >= dim) throw IoError(std::string(what) + " index out of range");
}

BilinearMap bilinear_from_json(const Json& j, std::size_t dim) {
  BilinearMap b(dim);
  if (!j.is_array()) throw IoError("\"bilinear\" must be an array");
  for (const auto& e : j) {
    std::size_t i = get_nat(e, "i"), jj = get_nat(e, "j"), k = get_nat(e, "k");
    check_index(i, dim, "bilinear");
    check_index(jj, dim, "bilinear");
    check_index(k, dim, "bilinear");
    if (i >= jj) throw IoError("bilinear entries require i < j");
    b.set(i, jj, k, get_rat(e, "v"));
  }
  return b;
}

TrilinearMap trilinear_from_json(const Json& j, std::size_t dim) {
  TrilinearMap t(dim);
  if (!j.is_array()) throw IoError("\"trilinear\" must be an array");
  for (const auto& e : j) {
    std::size_t i = get_nat(e, "i"), jj = get_nat(e, "j"), k = get_nat(e, "k"),
                l = get_nat(e, "l");
    check_index(i, dim, "trilinear");
    check_index(jj, dim, "trilinear");
    check_index(k, dim, "trilinear");
    check_index(l, dim, "trilinear");
    if (i >= jj) throw IoError("trilinear entries require i < j");
    t.set(i, jj, k, l, get_rat(e, "v"));
  }
  return t;
}

Json bilinear_to_json(const BilinearMap& b) {
  Json out = Json::array();
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = i + 1; j < b.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k)
        if (!is_zero(b.at(i, j, k)))
          out.push_back({{"i", i}, {"j", j}, {"k", k},
                         {"v", render(b.at(i, j, k))}});
  return out;
}

Json trilinear_to_json(const TrilinearMap& t) {
  Json out = Json::array();
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = i + 1; j < t.dim(); ++j)
      for (std::size_t k = 0; k < t.dim(); ++k)
        for (std::size_t l = 0; l < t.dim(); ++l)
          if (!is_zero(t.at(i, j, k, l)))
            out.push_back({{"i", i}, {"j", j}, {"k", k}, {"l", l},
                           {"v", render(t.at(i, j, k, l))}});
  return out;
}

Json basis_to_json(const std::vector<std::string>& names, std::size_t dim) {
  Json b = Json::array();
  for (std::size_t i = 0; i < dim; ++i)
    b.push_back(i < names.size() ? names[i] : "e" + std::to_string(i + 1));
  return b;
}

}  // namespace

Json to_json(const LyAlgebra& a) {
  return {{"dim", a.dim},
          {"basis", basis_to_json(a.basis_names, a.dim)},
          {"bilinear", bilinear_to_json(a.pi)},
          {"trilinear", trilinear_to_json(a.omega)}};
}

LyAlgebra algebra_from_json(const Json& j) {
  std::size_t dim = get_nat(j, "dim");
  LyAlgebra a{dim, get_basis(j, dim), BilinearMap(dim), TrilinearMap(dim)};
  if (j.contains("bilinear")) a.pi = bilinear_from_json(j["bilinear"], dim);
  if (j.contains("trilinear"))
    a.omega = trilinear_from_json(j["trilinear"], dim);
  return a;
}

Json to_json(const CompatibleLy& c) {
  auto str = [&](const BilinearMap& b, const TrilinearMap& t) {
    return Json{{"bilinear", bilinear_to_json(b)},
                {"trilinear", trilinear_to_json(t)}};
  };
  return {{"dim", c.dim},
          {"basis", basis_to_json(c.basis_names, c.dim)},
          {"structure1", str(c.pi1, c.omega1)},
          {"structure2", str(c.pi2, c.omega2)}};
}

CompatibleLy compatible_from_json(const Json& j) {
  std::size_t dim = get_nat(j, "dim");
  CompatibleLy c{dim,
                 get_basis(j, dim),
                 BilinearMap(dim),
                 BilinearMap(dim),
                 TrilinearMap(dim),
                 TrilinearMap(dim)};
  for (int s = 1; s <= 2; ++s) {
    std::string key = "structure" + std::to_string(s);
    if (!j.contains(key)) throw IoError("missing \"" + key + "\"");
    const Json& str = j[key];
    BilinearMap b = str.contains("bilinear")
                        ? bilinear_from_json(str["bilinear"], dim)
                        : BilinearMap(dim);
    TrilinearMap t = str.contains("trilinear")
                         ? trilinear_from_json(str["trilinear"], dim)
                         : TrilinearMap(dim);
    (s == 1 ? c.pi1 : c.pi2) = b;
    (s == 1 ? c.omega1 : c.omega2) = t;
  }
  return c;
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(render(m.at(r, c)));
    rows.push_back(row);
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

Matrix matrix_from_json(const Json& j) {
  std::size_t rows = get_nat(j, "rows"), cols = get_nat(j, "cols");
  if (!j.contains("entries") || !j["entries"].is_array() ||
      j["entries"].size() != rows)
    throw IoError("matrix \"entries\" must have `rows` rows");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Json& row = j["entries"][r];
    if (!row.is_array() || row.size() != cols)
      throw IoError("matrix row length != cols");
    for (std::size_t c = 0; c < cols; ++c) {
      try {
        m.at(r, c) = row[c].is_number_integer()
                         ? Rat(row[c].get<long>())
                         : parse_rat(row[c].get<std::string>());
      } catch (const std::exception& e) {
        throw IoError(std::string("bad matrix entry: ") + e.what());
      }
    }
  }
  return m;
}

Json rep_to_json(const LyAlgebra& a, const Representation& r) {
  Json j = to_json(a);
  j["v_dim"] = r.v_dim();
  Json rho = Json::array(), mu = Json::array();
  for (std::size_t i = 0; i < r.alg_dim(); ++i) {
    if (!r.rho(i).is_zero())
      rho.push_back({{"i", i}, {"matrix", to_json(r.rho(i))["entries"]}});
    for (std::size_t jj = 0; jj < r.alg_dim(); ++jj)
      if (!r.mu(i, jj).is_zero())
        mu.push_back(
            {{"i", i}, {"j", jj}, {"matrix", to_json(r.mu(i, jj))["entries"]}});
  }
  j["rho"] = rho;
  j["mu"] = mu;
  return j;
}

std::pair<LyAlgebra, Representation> rep_from_json(const Json& j) {
  LyAlgebra a = algebra_from_json(j);
  std::size_t vd = get_nat(j, "v_dim");
  Representation r(a.dim, vd);
  auto read_matrix = [&](const Json& e) {
    Json wrapped = {{"rows", vd}, {"cols", vd}, {"entries", e["matrix"]}};
    return matrix_from_json(wrapped);
  };
  if (j.contains("rho"))
    for (const auto& e : j["rho"]) {
      std::size_t i = get_nat(e, "i");
      check_index(i, a.dim, "rho");
      r.rho(i) = read_matrix(e);
    }
  if (j.contains("mu"))
    for (const auto& e : j["mu"]) {
      std::size_t i = get_nat(e, "i"), jj = get_nat(e, "j");
      check_index(i, a.dim, "mu");
      check_index(jj, a.dim, "mu");
      r.mu(i, jj) = read_matrix(e);
    }
  return {a, r};
}

namespace {

Json star_to_json(const PreLy& p) {
  Json out = Json::array();
  for (std::size_t i = 0; i < p.dim(); ++i)
    for (std::size_t j = 0; j < p.dim(); ++j)
      for (std::size_t k = 0; k < p.dim(); ++k)
        if (!is_zero(p.star_at(i, j, k)))
          out.push_back({{"i", i}, {"j", j}, {"k", k},
                         {"v", render(p.star_at(i, j, k))}});
  return out;
}

Json triple_to_json(const PreLy& p) {
  Json out = Json::array();
  for (std::size_t i = 0; i < p.dim(); ++i)
    for (std::size_t j = 0; j < p.dim(); ++j)
      for (std::size_t k = 0; k < p.dim(); ++k)
        for (std::size_t l = 0; l < p.dim(); ++l)
          if (!is_zero(p.triple_at(i, j, k, l)))
            out.push_back({{"i", i}, {"j", j}, {"k", k}, {"l", l},
                           {"v", render(p.triple_at(i, j, k, l))}});
  return out;
}

PreLy prely_from_parts(const Json& j, std::size_t dim) {
  PreLy p(dim);
  if (j.contains("star"))
    for (const auto& e : j["star"]) {
      std::size_t i = get_nat(e, "i"), jj = get_nat(e, "j"),
                  k = get_nat(e, "k");
      check_index(i, dim, "star");
      check_index(jj, dim, "star");
      check_index(k, dim, "star");
      p.star_at(i, jj, k) = get_rat(e, "v");
    }
  if (j.contains("triple"))
    for (const auto& e : j["triple"]) {
      std::size_t i = get_nat(e, "i"), jj = get_nat(e, "j"),
                  k = get_nat(e, "k"), l = get_nat(e, "l");
      check_index(i, dim, "triple");
      check_index(jj, dim, "triple");
      check_index(k, dim, "triple");
      check_index(l, dim, "triple");
      p.triple_at(i, jj, k, l) = get_rat(e, "v");
    }
  return p;
}

}  // namespace

Json to_json(const PreLy& p) {
  return {{"dim", p.dim()},
          {"star", star_to_json(p)},
          {"triple", triple_to_json(p)}};
}

PreLy prely_from_json(const Json& j) {
  return prely_from_parts(j, get_nat(j, "dim"));
}

Json to_json(const CompatPreLy& cp) {
  Json j1 = to_json(cp.p1), j2 = to_json(cp.p2);
  j1.erase("dim");
  j2.erase("dim");
  return {{"dim", cp.p1.dim()}, {"pre1", j1}, {"pre2", j2}};
}

CompatPreLy compat_prely_from_json(const Json& j) {
  std::size_t dim = get_nat(j, "dim");
  if (!j.contains("pre1") || !j.contains("pre2"))
    throw IoError("missing \"pre1\"/\"pre2\"");
  return {prely_from_parts(j["pre1"], dim), prely_from_parts(j["pre2"], dim)};
}

Json to_json(const DeformationGenerator& g) {
  CompatibleLy shaped{g.mu1.dim(), {}, g.mu1, g.mu2, g.lambda1, g.lambda2};
  return to_json(shaped);
}

DeformationGenerator generator_from_json(const Json& j) {
  CompatibleLy shaped = compatible_from_json(j);
  return {shaped.pi1, shaped.pi2, shaped.omega1, shaped.omega2};
}

Json report_to_json(const CheckReport& r) {
  Json ws = Json::array();
  for (const auto& w : r.witnesses) {
    Json res = Json::array();
    for (const auto& q : w.residual) res.push_back(render(q));
    ws.push_back({{"tuple", w.tuple}, {"residual", res}});
  }
  return {{"check", r.axiom_id},
          {"status", r.ok() ? "pass" : "fail"},
          {"violations", r.total_violations},
          {"witnesses", ws}};
}

Json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw IoError(path + ": " + e.what());
  }
}

}  // namespace ly
