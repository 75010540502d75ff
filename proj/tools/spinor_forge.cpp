#include "spinor_forge/catalog.hpp"
#include "spinor_forge/exact_groups.hpp"
#include "spinor_forge/report.hpp"
#include "spinor_forge/serialize.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <random>

using namespace spinor_forge;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2 };

struct Source {
  std::string catalog;
  std::string file;
};

void add_source(CLI::App* cmd, Source& src) {
  auto* c = cmd->add_option("--catalog", src.catalog, "catalog entry, e.g. spin7_pure or qk(2)");
  auto* f = cmd->add_option("--in", src.file, "ScaledSpinor JSON file");
  c->excludes(f);
  f->excludes(c);
}

ScaledSpinor load_spinor(const Source& src) {
  if (!src.catalog.empty()) return catalog_lookup(src.catalog).spinor;
  if (!src.file.empty()) return scaled_spinor_from_json(read_json_file(src.file));
  throw Error(ErrorCode::EmptyInput, "give --catalog NAME or --in FILE");
}

void print_pairs(std::ostream& out, const std::vector<PairCheck>& checks, bool squares) {
  for (const PairCheck& c : checks) {
    out << "  (" << c.k << "," << c.l << ") defect_norm2=" << c.defect_norm2;
    if (squares) out << " square_ok=" << (c.square_ok ? "true" : "false");
    out << " eta_nonzero=" << (c.eta_nonzero ? "true" : "false") << "\n";
  }
}

int verify(const std::string& kind, const Source& src, bool as_json, std::ostream& out) {
  if (kind == "spinc") {
    bool verdict;
    if (!src.file.empty()) {
      const json j = read_json_file(src.file);
      verdict = j.contains("r") ? check_spinc_pure(scaled_spinor_from_json(j))
                                : check_spinc_pure(spinor_vector_from_json(j));
    } else {
      verdict = check_spinc_pure(load_spinor(src));
    }
    if (as_json)
      out << json{{"spinc_pure", verdict}}.dump(2) << "\n";
    else
      out << "spinc_pure=" << (verdict ? "true" : "false") << "\n";
    return verdict ? kOk : kFailed;
  }
  const ScaledSpinor phi = load_spinor(src);
  if (kind == "pure") {
    const PurityReport rep = check_pure(phi);
    if (as_json) {
      out << to_json(rep).dump(2) << "\n";
    } else {
      out << "is_pure=" << (rep.is_pure ? "true" : "false") << "\n";
      print_pairs(out, rep.per_pair, true);
    }
    return rep.is_pure ? kOk : kFailed;
  }
  const ReducingReport rep = check_reducing(phi);
  if (as_json) {
    out << to_json(rep).dump(2) << "\n";
  } else {
    out << "is_reducing=" << (rep.is_reducing ? "true" : "false") << "\n";
    print_pairs(out, rep.per_pair, false);
  }
  return rep.is_reducing ? kOk : kFailed;
}

PairKey parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw Error(ErrorCode::ParseError, "--pair expects k,l");
  try {
    std::size_t used_k = 0, used_l = 0;
    const int k = std::stoi(text.substr(0, comma), &used_k);
    const int l = std::stoi(text.substr(comma + 1), &used_l);
    if (used_k != comma || used_l != text.size() - comma - 1) throw std::invalid_argument(text);
    return {k, l};
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::ParseError, "--pair expects k,l with integers, got '" + text + "'");
  }
}

int eta_command(const Source& src, const std::string& pair, const std::string& format, std::ostream& out) {
  const ScaledSpinor phi = load_spinor(src);
  const bool as_json = format == "json";
  if (!pair.empty()) {
    const auto [k, l] = parse_pair(pair);
    const TwoForm w = eta(phi, k, l);
    if (as_json)
      out << to_json(w).dump(2) << "\n";
    else
      out << w.to_text() << "\n";
    return kOk;
  }
  const EtaTable table = eta_table(phi);
  if (as_json) {
    out << to_json(table).dump(2) << "\n";
  } else {
    for (const auto& [key, w] : table) out << "eta" << key.first << key.second << " = " << w.to_text() << "\n";
  }
  return kOk;
}

json matrix_json(const RationalMatrix& X) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < X.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < X.cols(); ++j) row.push_back(to_json(X(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

int frame_test(const std::string& name, std::uint64_t seed, int trials, const std::string& kind, std::ostream& out) {
  if (trials < 1) throw Error(ErrorCode::IndexOutOfRange, "--trials must be positive");
  const ScaledSpinor phi = catalog_lookup(name).spinor;
  const Certificate cert = kind == "reducing" ? Certificate::Reducing : Certificate::Pure;
  std::mt19937_64 rng(seed);
  int rotations = 0, elements = 0;
  for (int t = 0; t < trials; ++t) {
    if (frame_rotation_check(phi, random_rotation(rng, phi.r()), cert)) ++rotations;
    const auto g = random_spin_word(rng, phi.n(), 1);
    const auto h = random_spin_word(rng, phi.r(), 1);
    if (equivariance_check(phi, g, h, cert)) ++elements;
  }
  const bool verdict = certify(phi, cert);
  out << "verdict=" << (verdict ? "true" : "false") << "\n"
      << "rotations_invariant=" << rotations << "/" << trials << "\n"
      << "group_elements_invariant=" << elements << "/" << trials << "\n";
  return rotations == trials && elements == trials ? kOk : kFailed;
}

int report(bool as_json, bool plain, std::ostream& out) {
  const std::vector<CriterionResult> rows = run_report();
  bool all = true;
  for (const CriterionResult& r : rows) all = all && r.pass;
  if (as_json) {
    json arr = json::array();
    for (const CriterionResult& r : rows)
      arr.push_back({{"name", r.name}, {"expected", r.expected}, {"computed", r.computed}, {"pass", r.pass}});
    out << arr.dump(2) << "\n";
  } else {
    if (!plain) out << "spinor_forge " << SPINOR_FORGE_VERSION << "\n";
    for (const CriterionResult& r : rows)
      out << (r.pass ? "PASS" : "FAIL") << "  " << r.id << ". " << r.name << ": " << r.computed << "\n";
    out << (all ? "all criteria pass" : "some criteria FAILED") << "\n";
  }
  return all ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact twisted spinor toolkit: eta forms, purity certificates, annihilators"};
  app.require_subcommand(1);

  auto* catalog_cmd = app.add_subcommand("catalog", "list or export catalog spinors");
  catalog_cmd->require_subcommand(1);
  catalog_cmd->add_subcommand("list", "list catalog names");
  auto* emit = catalog_cmd->add_subcommand("emit", "write a catalog spinor as JSON");
  std::string emit_name, emit_file;
  std::optional<int> emit_m, emit_n;
  emit->add_option("--name", emit_name, "catalog name (qk, generic, spinc, spin7_pure, spin7_reducing)")->required();
  emit->add_option("--m", emit_m, "twist count for qk");
  emit->add_option("--n", emit_n, "dimension for generic / half-dimension for spinc");
  emit->add_option("-o,--output", emit_file, "output file (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "certify a spinor");
  std::string verify_kind;
  Source verify_src;
  std::string verify_format = "text";
  verify_cmd->add_option("kind", verify_kind, "pure | reducing | spinc")
      ->required()
      ->check(CLI::IsMember({"pure", "reducing", "spinc"}));
  add_source(verify_cmd, verify_src);
  verify_cmd->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));

  auto* eta_cmd = app.add_subcommand("eta", "print the 2-forms eta_kl");
  Source eta_src;
  std::string eta_pair, eta_format = "text";
  add_source(eta_cmd, eta_src);
  eta_cmd->add_option("--pair", eta_pair, "k,l");
  eta_cmd->add_option("--format", eta_format)->check(CLI::IsMember({"text", "json"}));

  auto* ann_cmd = app.add_subcommand("annihilator", "common annihilator in spin(n) + spin(r)");
  std::vector<std::string> ann_files, ann_catalog;
  std::string ann_format = "json";
  ann_cmd->add_option("--in", ann_files, "ScaledSpinor JSON files");
  ann_cmd->add_option("--catalog", ann_catalog, "catalog entries");
  ann_cmd->add_option("--format", ann_format)->check(CLI::IsMember({"text", "json"}));

  auto* comm_cmd = app.add_subcommand("commutant", "commutant of the eta_hat set");
  Source comm_src;
  bool comm_skew = false;
  add_source(comm_cmd, comm_src);
  comm_cmd->add_flag("--skew", comm_skew, "restrict to antisymmetric endomorphisms");

  auto* frame_cmd = app.add_subcommand("frame-test", "random frame rotations and group elements");
  std::string frame_name, frame_kind = "pure";
  std::uint64_t frame_seed = 1;
  int frame_trials = 5;
  frame_cmd->add_option("--catalog", frame_name)->required();
  frame_cmd->add_option("--seed", frame_seed);
  frame_cmd->add_option("--trials", frame_trials);
  frame_cmd->add_option("--kind", frame_kind)->check(CLI::IsMember({"pure", "reducing"}));

  auto* report_cmd = app.add_subcommand("report", "run every regression criterion");
  bool report_json = false, report_plain = false;
  report_cmd->add_flag("--json", report_json);
  report_cmd->add_flag("--plain", report_plain, "omit the version banner");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  std::ostream& out = std::cout;
  try {
    if (*catalog_cmd) {
      if (catalog_cmd->got_subcommand("list")) {
        for (const std::string& name : catalog_names()) out << name << "\n";
        return kOk;
      }
      const std::optional<int> param = emit_m ? emit_m : emit_n;
      const CatalogEntry entry = catalog_lookup(emit_name, param);
      const std::string text = to_json(entry.spinor).dump(2) + "\n";
      if (emit_file.empty()) {
        out << text;
      } else {
        std::ofstream file(emit_file);
        if (!file) throw Error(ErrorCode::ParseError, "cannot write '" + emit_file + "'");
        file << text;
      }
      return kOk;
    }
    if (*verify_cmd) return verify(verify_kind, verify_src, verify_format == "json", out);
    if (*eta_cmd) return eta_command(eta_src, eta_pair, eta_format, out);
    if (*ann_cmd) {
      std::vector<ScaledSpinor> spinors;
      for (const std::string& name : ann_catalog) spinors.push_back(catalog_lookup(name).spinor);
      for (const std::string& file : ann_files) spinors.push_back(scaled_spinor_from_json(read_json_file(file)));
      const LieSubalgebra alg = annihilator(spinors);
      if (ann_format == "json") {
        out << to_json(alg).dump(2) << "\n";
      } else {
        out << "dim=" << alg.dim << " closed=" << (alg.closed ? "true" : "false") << "\n";
        for (const AmbientElement& x : alg.basis) out << "  " << x.to_text() << "\n";
      }
      return alg.closed ? kOk : kFailed;
    }
    if (*comm_cmd) {
      std::vector<Endo> hats;
      for (const auto& [key, h] : hat_table(eta_table(load_spinor(comm_src)))) hats.push_back(h);
      const CommutantResult res = commutant(hats, comm_skew);
      json basis = json::array();
      for (const RationalMatrix& X : res.basis) basis.push_back(matrix_json(X));
      out << json{{"dim", res.dim}, {"basis", std::move(basis)}}.dump(2) << "\n";
      return kOk;
    }
    if (*frame_cmd) return frame_test(frame_name, frame_seed, frame_trials, frame_kind, out);
    if (*report_cmd) return report(report_json, report_plain, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: ParseError: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
