#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ly/io.hpp"

using namespace ly;

namespace {

constexpr int kExitFail = 1, kExitUsage = 2, kExitBadFile = 3, kExitCap = 4;

struct Emitter {
  std::string command;
  bool all_ok = true;

  void report(const CheckReport& r) {
    Json j = report_to_json(r);
    j["command"] = command;
    std::cout << j.dump() << "\n";
    all_ok = all_ok && r.ok();
  }
  void reports(const std::vector<CheckReport>& rs) {
    for (const auto& r : rs) report(r);
  }
  void value(const char* key, const Json& v) {
    std::cout << Json{{"command", command}, {key, v}}.dump() << "\n";
  }
  int finish() {
    std::cerr << command << ": " << (all_ok ? "all checks pass" : "FAILURES")
              << "\n";
    return all_ok ? 0 : kExitFail;
  }
};

RbConvention parse_convention(const std::string& s) {
  if (s == "sec2") return RbConvention::SectionTwo;
  if (s == "sec6") return RbConvention::SectionSix;
  throw CLI::ValidationError("--convention must be sec2 or sec6");
}

std::vector<Rat> parse_entries(const std::string& s) {
  std::vector<Rat> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rat(item));
  return out;
}

std::vector<Weights> parse_samples(const std::string& s) {
  std::vector<Weights> out;
  std::stringstream ss(s);
  std::string pair;
  while (std::getline(ss, pair, ';')) {
    auto comma = pair.find(',');
    if (comma == std::string::npos)
      throw CLI::ValidationError("--samples expects k1,k2;k1,k2;...");
    out.push_back({parse_rat(pair.substr(0, comma)),
                   parse_rat(pair.substr(comma + 1))});
  }
  return out;
}

bool is_compatible_file(const Json& j) { return j.contains("structure1"); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact checker for Lie Yamaguti structures"};
  app.require_subcommand(1);
  std::string corpus_dir = CORPUS_DIR;
  std::size_t max_witnesses = 16;
  app.add_option("--max-witnesses", max_witnesses, "witness cap per report");
  app.add_option("--corpus-dir", corpus_dir, "corpus location");

  std::string file, file2, convention = "sec6", entries = "-1,0,1", samples;
  std::size_t degree = 1, dim_cap = 4;

  auto* check = app.add_subcommand("check", "verify identity families");
  check->require_subcommand(1);
  const char* kinds[] = {"lya", "compatible", "rep", "pre-lya",
                         "compat-pre-lya", "rb"};
  for (const char* k : kinds) {
    auto* sub = check->add_subcommand(k);
    sub->add_option("file", file)->required();
    if (std::string(k) == "rb") {
      sub->add_option("matrix", file2)->required();
      sub->add_option("--convention", convention);
    }
  }
  auto* semidirect_cmd = app.add_subcommand("semidirect");
  semidirect_cmd->add_option("file", file)->required();
  auto* subadj = app.add_subcommand("subadjacent");
  subadj->add_option("file", file)->required();
  auto* induce = app.add_subcommand("induce-pre-lya");
  induce->add_option("file", file)->required();
  induce->add_option("matrix", file2)->required();
  induce->add_option("--convention", convention);
  auto* lincomb = app.add_subcommand("linear-combination");
  lincomb->add_option("file", file)->required();
  lincomb->add_option("--samples", samples);
  auto* cohom = app.add_subcommand("cohomology");
  cohom->add_option("file", file)->required();
  cohom->add_option("--degree", degree);
  cohom->add_option("--dim-cap", dim_cap);
  auto* deform_cmd = app.add_subcommand("deform-verify");
  deform_cmd->add_option("file", file)->required();
  deform_cmd->add_option("generator", file2)->required();
  auto* deriv = app.add_subcommand("derivations");
  deriv->add_option("file", file)->required();
  auto* search = app.add_subcommand("search-rb");
  search->add_option("file", file)->required();
  search->add_option("--entries", entries);
  search->add_option("--convention", convention);
  auto* corpus = app.add_subcommand("corpus");
  corpus->add_subcommand("list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    Emitter out;
    if (check->parsed()) {
      auto* sub = check->get_subcommands().front();
      out.command = "check " + sub->get_name();
      if (sub->get_name() == "lya") {
        out.reports(check_lya(algebra_from_json(load_file(file)),
                              max_witnesses));
      } else if (sub->get_name() == "compatible") {
        out.reports(check_compatible(compatible_from_json(load_file(file)),
                                     max_witnesses));
      } else if (sub->get_name() == "rep") {
        auto [a, rep] = rep_from_json(load_file(file));
        out.reports(check_representation(a, rep, max_witnesses));
      } else if (sub->get_name() == "pre-lya") {
        out.reports(check_pre_lya(prely_from_json(load_file(file)),
                                  max_witnesses));
      } else if (sub->get_name() == "compat-pre-lya") {
        auto cp = compat_prely_from_json(load_file(file));
        out.reports(check_compat_pre_lya(cp, max_witnesses));
        out.report(check_lemma41(cp, max_witnesses));
      } else {  // rb
        auto conv = parse_convention(convention);
        LinearMap r{matrix_from_json(load_file(file2))};
        Json j = load_file(file);
        if (is_compatible_file(j))
          out.report(check_rb_compatible(compatible_from_json(j), r, conv,
                                         max_witnesses));
        else
          out.report(check_rb(algebra_from_json(j), r, conv, max_witnesses));
      }
    } else if (semidirect_cmd->parsed()) {
      out.command = "semidirect";
      auto [a, rep] = rep_from_json(load_file(file));
      LyAlgebra s = semidirect(a, rep);
      out.value("algebra", to_json(s));
      out.reports(check_lya(s, max_witnesses));
    } else if (subadj->parsed()) {
      out.command = "subadjacent";
      auto cp = compat_prely_from_json(load_file(file));
      auto c = subadjacent(cp);
      out.value("compatible", to_json(c));
      out.reports(check_compatible(c, max_witnesses));
    } else if (induce->parsed()) {
      out.command = "induce-pre-lya";
      auto conv = parse_convention(convention);
      LinearMap r{matrix_from_json(load_file(file2))};
      Json j = load_file(file);
      if (is_compatible_file(j)) {
        auto cp = induce_compat_pre_lya(compatible_from_json(j), r, conv);
        out.value("compat-pre-lya", to_json(cp));
        out.reports(check_compat_pre_lya(cp, max_witnesses));
      } else {
        auto p = induce_pre_lya(algebra_from_json(j), r, conv);
        out.value("pre-lya", to_json(p));
        out.reports(check_pre_lya(p, max_witnesses));
      }
    } else if (lincomb->parsed()) {
      out.command = "linear-combination";
      auto c = compatible_from_json(load_file(file));
      auto ws = samples.empty() ? kDefaultWeightSamples
                                : parse_samples(samples);
      out.reports(check_prop31(c, ws));
    } else if (cohom->parsed()) {
      out.command = "cohomology";
      auto c = compatible_from_json(load_file(file));
      auto dims = cohomology_dim(c, degree, 2, dim_cap);
      out.value("dims", Json{{"n", degree},
                             {"kernel", dims.kernel_dim},
                             {"image", dims.image_dim},
                             {"h", dims.h_dim}});
    } else if (deform_cmd->parsed()) {
      out.command = "deform-verify";
      auto c = compatible_from_json(load_file(file));
      auto g = generator_from_json(load_file(file2));
      out.reports(check_deformation_generator(c, g, max_witnesses));
      out.report(verify_cocycle_theorem(c, g, max_witnesses));
    } else if (deriv->parsed()) {
      out.command = "derivations";
      auto a = algebra_from_json(load_file(file));
      Json basis = Json::array();
      for (const auto& d : derivation_space(a))
        basis.push_back(to_json(d.matrix));
      out.value("basis", basis);
    } else if (search->parsed()) {
      out.command = "search-rb";
      auto conv = parse_convention(convention);
      auto entry_set = parse_entries(entries);
      Json j = load_file(file);
      Json sols = Json::array();
      auto found = is_compatible_file(j)
                       ? search_rb(compatible_from_json(j), conv, entry_set)
                       : search_rb(algebra_from_json(j), conv, entry_set);
      for (const auto& r : found) sols.push_back(to_json(r.matrix));
      out.value("solutions", sols);
      std::cerr << "search-rb: " << found.size() << " solution(s)\n";
      return 0;
    } else if (corpus->parsed()) {
      out.command = "corpus list";
      Json manifest = load_file(corpus_dir + "/manifest.json");
      for (const auto& e : manifest["entries"]) out.value("entry", e);
      return 0;
    }
    return out.finish();
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadFile;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadFile;
  }
}
