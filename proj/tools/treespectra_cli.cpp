#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "treespectra/embedding.hpp"
#include "treespectra/io.hpp"
#include "treespectra/parallel.hpp"
#include "treespectra/verify.hpp"

namespace ts = treespectra;
namespace fs = std::filesystem;

namespace {

constexpr const char* kVersion = "treespectra 0.1.0";

struct NRange {
  int lo = 0, hi = 0;
};

NRange parse_range(const std::string& text) {
  NRange r;
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(text);
    } else {
      r.lo = std::stoi(text.substr(0, dots));
      r.hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    ts::fail(ts::Errc::bad_config, "cannot parse range '" + text + "' (use N or LO..HI)");
  }
  if (r.lo > r.hi) ts::fail(ts::Errc::bad_config, "empty range '" + text + "'");
  return r;
}

ts::VertexPair parse_pair(const std::string& text) {
  std::istringstream in(text);
  int a = 0, b = 0;
  char sep = ' ';
  if (!(in >> a)) ts::fail(ts::Errc::bad_config, "cannot parse pair '" + text + "'");
  if (!(in >> b)) {  // allow "i-j" and "i,j" too
    in.clear();
    if (!(in >> sep >> b)) ts::fail(ts::Errc::bad_config, "cannot parse pair '" + text + "'");
  }
  return ts::VertexPair(a, b);
}

std::vector<std::pair<int, int>> parse_choices(const std::string& text) {
  // comma-separated 1-based edge index pairs: "1 2,2 3"
  std::vector<std::pair<int, int>> out;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    ts::VertexPair p = parse_pair(part);
    out.emplace_back(p.first() - 1, p.second() - 1);
  }
  return out;
}

std::string out_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("TREESPEC_OUT")) return env;
  return ".";
}

std::string fresh_path(const std::string& dir, const std::string& stem, const std::string& ext) {
  fs::create_directories(dir);
  auto now = std::chrono::system_clock::now();
  std::time_t tt = std::chrono::system_clock::to_time_t(now);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y%m%d-%H%M%S", std::gmtime(&tt));
  std::string base = dir + "/" + stem + "-" + stamp;
  std::string path = base + ext;
  for (int k = 1; fs::exists(path); ++k) path = base + "-" + std::to_string(k) + ext;
  return path;
}

std::string fresh_fixed_path(const std::string& dir, const std::string& stem,
                             const std::string& ext) {
  fs::create_directories(dir);
  std::string path = dir + "/" + stem + ext;
  for (int k = 1; fs::exists(path); ++k) path = dir + "/" + stem + "-" + std::to_string(k) + ext;
  return path;
}

struct TreeSource {
  std::string file;
  std::string family;
  std::string n_text;
  std::uint64_t seed = 0;
  bool exhaustive = false;
};

void add_tree_source_flags(CLI::App* cmd, TreeSource& src, bool allow_exhaustive) {
  cmd->add_option("--file", src.file, "tree file: first line n, then n-1 lines 'i j'");
  cmd->add_option("--family", src.family, "path | star | bistar | random")
      ->check(CLI::IsMember({"path", "star", "bistar", "random"}));
  cmd->add_option("--n", src.n_text, "vertex count N, or range LO..HI for sweeps");
  cmd->add_option("--seed", src.seed, "seed for --family random");
  if (allow_exhaustive)
    cmd->add_flag("--exhaustive", src.exhaustive, "sweep all labeled trees for each n in --n");
}

ts::Tree make_family_tree(const std::string& family, int n, std::uint64_t seed) {
  if (family == "path") return ts::make_path(n);
  if (family == "star") return ts::make_star(n);
  if (family == "bistar") return ts::make_bistar(n);
  if (family == "random") return ts::random_tree(n, seed);
  ts::fail(ts::Errc::bad_config, "unknown family '" + family + "'");
}

int run_matrix(const TreeSource& src, const std::string& kind_name, const std::string& basis_name,
               const std::string& f_text, const std::string& choices_text,
               const std::string& dir, const std::string& format) {
  ts::PairKind kind = kind_name == "min4pc"   ? ts::PairKind::min4pc
                      : kind_name == "max4pc" ? ts::PairKind::max4pc
                                              : ts::PairKind::steiner2;
  ts::Tree tree = [&] {
    if (!src.file.empty()) return ts::read_tree_file(src.file);
    if (src.family.empty()) ts::fail(ts::Errc::bad_config, "need --file or --family");
    if (src.n_text.empty()) ts::fail(ts::Errc::bad_config, "need --n");
    NRange r = parse_range(src.n_text);
    if (r.lo != r.hi) ts::fail(ts::Errc::bad_config, "matrix takes a single --n");
    return make_family_tree(src.family, r.lo, src.seed);
  }();

  ts::ExactMatrix m(1, 1);
  std::vector<std::string> labels;
  std::string note;
  if (basis_name.empty()) {
    ts::PairMatrix full = ts::PairMatrix::build(tree, kind);
    m = full.entries();
    for (const ts::VertexPair& p : full.index().pairs()) labels.push_back(p.label());
    note = "full";
  } else {
    ts::PairBasis basis = [&] {
      if (basis_name == "min4pc") {
        if (!f_text.empty()) return ts::min4pc_basis(tree, parse_pair(f_text));
        auto fs_all = ts::non_edges(tree);
        if (fs_all.empty()) ts::fail(ts::Errc::no_non_edge_exists, "n = 2 has no non-edge");
        return ts::min4pc_basis(tree, fs_all.front());
      }
      if (basis_name == "steiner") {
        if (!choices_text.empty()) return ts::steiner_basis(tree, parse_choices(choices_text));
        return ts::steiner_basis(tree);
      }
      return ts::path_ordered_basis(tree);
    }();
    m = ts::restricted_pair_matrix(tree, kind, basis);
    for (const ts::VertexPair& p : basis.pairs()) labels.push_back(p.label());
    note = basis.describe();
  }

  std::string path;
  if (format == "json") {
    ts::Json j;
    j["version"] = kVersion;
    j["tree"] = ts::tree_to_text(tree);
    j["kind"] = kind_name;
    j["basis"] = note;
    if (src.family == "random") j["seed"] = src.seed;
    if (src.family == "bistar") j["labeling"] = "v_0..v_{n-1} mapped to 1..n";
    j["matrix"] = ts::matrix_to_json(m, labels, labels);
    path = fresh_path(dir, "matrix", ".json");
    ts::write_file(path, j.dump(2) + "\n");
  } else if (format == "csv") {
    path = fresh_path(dir, "matrix", ".csv");
    ts::write_file(path, ts::matrix_to_csv(m, labels, labels));
  } else {
    path = fresh_path(dir, "matrix", ".txt");
    ts::write_file(path, ts::matrix_to_text(m, labels, labels));
  }
  std::cout << "wrote " << path << " (" << kind_name << ", " << note << ", order " << m.rows()
            << ")\n";
  return 0;
}

int run_verify(const TreeSource& src, bool all_f, bool spot, std::size_t trials,
               std::uint64_t seed, int bound, const std::string& f_text, const std::string& dir,
               const std::string& format) {
  ts::VerifyOptions opt;
  opt.all_f = all_f;
  opt.spot_checks = spot;
  opt.trials = trials;
  opt.seed = seed;
  opt.entry_bound = bound;

  std::vector<ts::CheckResult> results;
  std::string config;

  if (!src.file.empty()) {
    ts::Tree tree = ts::read_tree_file(src.file);
    config = "file=" + src.file;
    if (!f_text.empty()) {
      opt.explicit_f = parse_pair(f_text);
      config += " f=" + f_text;
    }
    results = ts::verify_tree(tree, opt);
  } else if (src.exhaustive) {
    if (src.n_text.empty()) ts::fail(ts::Errc::bad_config, "need --n LO..HI");
    NRange r = parse_range(src.n_text);
    config = "exhaustive n=" + src.n_text;
    for (int n = r.lo; n <= r.hi; ++n) {
      ts::LabeledTreeRange range(n);
      std::vector<ts::Tree> trees(range.begin(), range.end());
      std::vector<std::vector<ts::CheckResult>> per(trees.size());
      ts::parallel_for(0, trees.size(),
                       [&](std::size_t i) { per[i] = ts::verify_tree(trees[i], opt); });
      // Serialize assembly: keep failures verbatim, fold passes into one line.
      std::size_t pass_count = 0;
      for (auto& chunk : per)
        for (ts::CheckResult& c : chunk) {
          if (c.pass) ++pass_count;
          else results.push_back(std::move(c));
        }
      results.push_back({"exhaustive.summary", "all labeled trees n=" + std::to_string(n),
                         "all checks pass",
                         std::to_string(pass_count) + " checks passed, " +
                             std::to_string(results.size()) + " failed so far",
                         true});
    }
  } else if (!src.family.empty()) {
    if (src.n_text.empty()) ts::fail(ts::Errc::bad_config, "need --n");
    NRange r = parse_range(src.n_text);
    config = "family=" + src.family + " n=" + src.n_text;
    if (src.family == "random") config += " seed=" + std::to_string(src.seed);
    for (int n = r.lo; n <= r.hi; ++n) {
      ts::Tree tree = make_family_tree(src.family, n, src.seed);
      auto generic = ts::verify_tree(tree, opt);
      results.insert(results.end(), generic.begin(), generic.end());
      if (src.family == "star") {
        auto fam = ts::verify_star(n);
        results.insert(results.end(), fam.begin(), fam.end());
      } else if (src.family == "bistar" && n >= 6) {
        auto fam = ts::verify_bistar(n);
        results.insert(results.end(), fam.begin(), fam.end());
      } else if (src.family == "path" && n >= 3) {
        auto fam = ts::verify_path(n);
        results.insert(results.end(), fam.begin(), fam.end());
      }
    }
  } else {
    ts::fail(ts::Errc::bad_config, "need --file, --family or --exhaustive");
  }

  config += " all_f=" + std::to_string(opt.all_f) + " spot=" + std::to_string(opt.spot_checks) +
            " trials=" + std::to_string(opt.trials) + " seed=" + std::to_string(opt.seed) +
            " bound=" + std::to_string(opt.entry_bound);

  std::size_t failures = 0;
  for (const ts::CheckResult& c : results)
    if (!c.pass) ++failures;

  std::string path;
  if (format == "csv") {
    std::ostringstream csv;
    csv << "id,inputs,expected,computed,pass\n";
    for (const ts::CheckResult& c : results)
      csv << '"' << c.id << "\",\"" << c.inputs << "\",\"" << c.expected << "\",\"" << c.computed
          << "\"," << (c.pass ? "true" : "false") << "\n";
    path = fresh_path(dir, "verify", ".csv");
    ts::write_file(path, csv.str());
  } else {
    ts::Json j;
    j["version"] = kVersion;
    j["command"] = "verify";
    j["config"] = config;
    ts::Json arr = ts::Json::array();
    for (const ts::CheckResult& c : results)
      arr.push_back(ts::Json{{"id", c.id},
                             {"inputs", c.inputs},
                             {"expected", c.expected},
                             {"computed", c.computed},
                             {"pass", c.pass}});
    j["results"] = std::move(arr);
    j["summary"] = ts::Json{{"checks", results.size()}, {"failures", failures}};
    path = fresh_path(dir, "verify", ".json");
    ts::write_file(path, j.dump(2) + "\n");
  }

  for (const ts::CheckResult& c : results)
    if (!c.pass)
      std::cout << "FAIL " << c.id << " [" << c.inputs << "] expected " << c.expected << ", got "
                << c.computed << "\n";
  std::cout << (failures == 0 ? "PASS" : "FAIL") << ": " << results.size() - failures << "/"
            << results.size() << " checks passed; report: " << path << "\n";
  return failures == 0 ? 0 : 1;
}

int run_scan(const std::string& n_text, const std::string& dir) {
  NRange r = parse_range(n_text);
  std::vector<ts::ConjectureRow> rows = ts::conjecture_scan(r.lo, r.hi);
  std::string path = fresh_fixed_path(dir, "conjectures", ".csv");
  ts::write_file(path, ts::conjectures_to_csv(rows));
  std::size_t peak_matches = 0, coeff_matches = 0;
  for (const ts::ConjectureRow& row : rows) {
    peak_matches += row.peak_is_n_minus_1;
    coeff_matches += row.a_2n5_matches;
  }
  std::cout << "scanned n=" << r.lo << ".." << r.hi << ": peak = n-1 in " << peak_matches << "/"
            << rows.size() << " cases, a_{2n-5} formula in " << coeff_matches << "/"
            << rows.size() << " cases; wrote " << path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spectral toolkit for the Min4PC / Max4PC / 2-Steiner distance matrices of "
               "trees"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string out_flag, format = "json";
  app.add_option("--out", out_flag, "output directory (default: $TREESPEC_OUT or .)");
  app.add_option("--format", format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  TreeSource msrc;
  std::string kind = "steiner2", basis_name, f_text, choices_text;
  CLI::App* matrix = app.add_subcommand("matrix", "write a pair matrix (full or restricted)");
  add_tree_source_flags(matrix, msrc, false);
  matrix->add_option("--kind", kind, "min4pc | max4pc | steiner2")
      ->check(CLI::IsMember({"min4pc", "max4pc", "steiner2"}));
  matrix->add_option("--basis", basis_name,
                     "restrict to a row-space basis: min4pc | steiner | path-ordered")
      ->check(CLI::IsMember({"min4pc", "steiner", "path-ordered"}));
  matrix->add_option("--f", f_text, "non-edge pair for the min4pc basis, e.g. '1 4'");
  matrix->add_option("--choices", choices_text,
                     "steiner basis block choices as 1-based edge pairs, e.g. '1 2,2 3'");

  TreeSource vsrc;
  bool all_f = false, spot = false;
  std::size_t trials = 10000;
  std::uint64_t vseed = 1;
  int bound = 3;
  std::string vf_text;
  CLI::App* verify = app.add_subcommand("verify", "run the theorem suite and write a report");
  add_tree_source_flags(verify, vsrc, true);
  verify->add_option("--f", vf_text, "restrict min4pc checks to this non-edge");
  verify->add_flag("--all-f", all_f, "check every valid f, not just the first");
  verify->add_flag("--spot-checks", spot, "randomized hypermetric / negative-type checks");
  verify->add_option("--trials", trials, "spot-check trials (default 10000)");
  verify->add_option("--spot-seed", vseed, "spot-check seed (default 1)");
  verify->add_option("--bound", bound, "spot-check entry bound (default 3)");

  std::string scan_range;
  CLI::App* scan = app.add_subcommand("scan", "peak-location / coefficient conjecture scan for paths");
  scan->add_option("--n", scan_range, "range LO..HI with 6 <= LO <= HI <= 60")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors exit 2, --help/--version exit 0
  }

  try {
    const std::string dir = out_dir(out_flag);
    if (matrix->parsed())
      return run_matrix(msrc, kind, basis_name, f_text, choices_text, dir, format);
    if (verify->parsed())
      return run_verify(vsrc, all_f, spot, trials, vseed, bound, vf_text, dir, format);
    if (scan->parsed()) return run_scan(scan_range, dir);
  } catch (const ts::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
