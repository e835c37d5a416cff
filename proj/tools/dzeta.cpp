// command-line front end: build the matrices, cross-check them against the
// coaction oracle, reproduce the worked examples, and run the spectral and
// conjecture scans
#include <CLI11.hpp>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "dzeta/coaction.hpp"
#include "dzeta/linalg.hpp"
#include "dzeta/matrices.hpp"
#include "dzeta/period_poly.hpp"
#include "dzeta/spectral.hpp"

namespace {

using namespace dzeta;

// explicit path wins, then DZETA_OUT_DIR with an auto-generated name,
// then stdout
int emit(const std::string& text, const std::string& path, const std::string& auto_name) {
  std::string target = path;
  if (target.empty()) {
    if (const char* dir = std::getenv("DZETA_OUT_DIR"); dir != nullptr && *dir != '\0')
      target = std::string(dir) + "/" + auto_name;
  }
  if (target.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(target);
  if (!out) {
    std::cerr << "error: cannot open " << target << " for writing\n";
    return 2;
  }
  out << text;
  std::cerr << "wrote " << target << "\n";
  return 0;
}

// run f(i) for i in [0, count) on `jobs` threads; first exception wins
void parallel_indices(size_t count, int jobs, const std::function<void(size_t)>& f) {
  if (jobs < 1) jobs = 1;
  if (jobs == 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  const int workers = std::min<int>(jobs, static_cast<int>(count));
  pool.reserve(static_cast<size_t>(workers));
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      try {
        for (size_t i; (i = next.fetch_add(1)) < count;) f(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  for (std::thread& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

std::vector<long> even_weights(long lo, long hi) {
  if (lo % 2 != 0) ++lo;
  std::vector<long> out;
  for (long k = lo; k <= hi; k += 2) out.push_back(k);
  return out;
}

// "A..B" -> [A, B]
bool parse_range(const std::string& s, long& lo, long& hi) {
  const auto pos = s.find("..");
  if (pos == std::string::npos) return false;
  try {
    lo = std::stol(s.substr(0, pos));
    hi = std::stol(s.substr(pos + 2));
  } catch (...) {
    return false;
  }
  return true;
}

// "9,3" -> IndexPair
bool parse_pair(const std::string& s, IndexPair& p) {
  const auto pos = s.find(',');
  if (pos == std::string::npos) return false;
  try {
    p.m1 = std::stol(s.substr(0, pos));
    p.m2 = std::stol(s.substr(pos + 1));
  } catch (...) {
    return false;
  }
  return true;
}

nlohmann::ordered_json index_json(long k) {
  auto arr = nlohmann::ordered_json::array();
  for (const IndexPair& p : totally_odd_index(k)) arr.push_back({p.m1, p.m2});
  return arr;
}

// ---------------------------------------------------------------- build

int cmd_build(int level, long weight, const std::string& part, const std::string& format,
              const std::string& out_path) {
  if (level == 1 && (part == "d" || part == "dc")) {
    std::cerr << "error: part '" << part << "' does not exist at level 1\n";
    return 2;
  }
  if (totally_odd_size(weight) == 0)
    std::cerr << "note: no totally odd indices at weight " << weight << "; matrices are empty\n";

  const MatrixBundle bundle = build_bundle(level, weight);
  std::string text;
  if (format == "json") {
    nlohmann::ordered_json j = bundle_to_json(bundle);
    if (part != "all")
      for (const char* key : {"c", "d", "dc"})
        if (part != key && j.contains(key)) j.erase(key);
    text = j.dump(2) + "\n";
  } else {
    std::vector<std::string> parts;
    if (part == "all") {
      parts = {"c"};
      if (level != 1) {
        parts.push_back("d");
        parts.push_back("dc");
      }
    } else {
      parts = {part};
    }
    text = bundle_to_csv(bundle, parts);
  }
  const std::string ext = format == "json" ? ".json" : ".csv";
  return emit(text, out_path,
              "build-level" + std::to_string(level) + "-k" + std::to_string(weight) + ext);
}

// ---------------------------------------------------------- oracle-check

int cmd_oracle_dump(int level, long weight, const std::string& m_str, const std::string& n_str) {
  IndexPair m{}, n{};
  if (!parse_pair(m_str, m) || !parse_pair(n_str, n)) {
    std::cerr << "error: --m and --n expect 'm1,m2'\n";
    return 2;
  }
  const nlohmann::ordered_json j = oracle_expansion_json(level, weight, m, n);
  std::cout << j.dump(2) << "\n";
  return j.at("match").get<bool>() ? 0 : 1;
}

int cmd_oracle_check(const std::vector<int>& levels, long min_w, long max_w, int jobs) {
  const std::vector<long> weights = even_weights(min_w, max_w);
  struct WeightResult {
    long entries = 0;
    std::string mismatch;  // empty when clean
  };
  std::vector<WeightResult> results(weights.size());

  parallel_indices(weights.size(), jobs, [&](size_t i) {
    const long k = weights[i];
    const auto idx = totally_odd_index(k);
    WeightResult res;
    for (int level : levels) {
      for (const IndexPair& m : idx)
        for (const IndexPair& n : idx) {
          const Rat direct = entry(level, k, m, n);
          const Rat oracle = oracle_entry(level, k, m, n);
          ++res.entries;
          if (direct != oracle && res.mismatch.empty()) {
            std::ostringstream os;
            os << "level " << level << " k " << k << " m (" << m.m1 << "," << m.m2 << ") n ("
               << n.m1 << "," << n.m2 << "): formula " << rat_str(direct) << " oracle "
               << rat_str(oracle);
            res.mismatch = os.str();
          }
        }
    }
    results[i] = std::move(res);
  });

  long total = 0;
  for (size_t i = 0; i < weights.size(); ++i) {
    total += results[i].entries;
    if (!results[i].mismatch.empty()) {
      std::cout << "MISMATCH " << results[i].mismatch << "\n";
      return 1;
    }
  }
  std::cout << "oracle agrees with the entry formula on " << total << " entries (levels";
  for (int level : levels) std::cout << " " << level;
  std::cout << ", weights " << min_w << ".." << max_w << ")\n";
  return 0;
}

// ---------------------------------------------------------- verify

RatMatrix mat_from_strings(const std::vector<std::vector<std::string>>& rows) {
  RatMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j)
      m(static_cast<Index>(i), static_cast<Index>(j)) = parse_rat(rows[i][j]);
  return m;
}

RatRowVector vec_from_strings(const std::vector<std::string>& entries) {
  RatRowVector v(static_cast<Index>(entries.size()));
  for (size_t i = 0; i < entries.size(); ++i) v(static_cast<Index>(i)) = parse_rat(entries[i]);
  return v;
}

struct CheckResult {
  bool ok = false;
  std::string detail;
};

CheckResult matrix_check(const RatMatrix& got, const RatMatrix& expected) {
  if (got.rows() != expected.rows() || got.cols() != expected.cols())
    return {false, "shape mismatch"};
  for (Index i = 0; i < got.rows(); ++i)
    for (Index j = 0; j < got.cols(); ++j)
      if (got(i, j) != expected(i, j))
        return {false, "entry (" + std::to_string(i) + "," + std::to_string(j) + "): got " +
                           rat_str(got(i, j)) + ", expected " + rat_str(expected(i, j))};
  return {true, "all entries match"};
}

CheckResult eigen_check(const RatMatrix& m, const RatRowVector& v, const std::string& mu_str) {
  const Rat mu = parse_rat(mu_str);
  const RatRowVector lhs = v * m;
  const RatRowVector rhs = v * mu;
  for (Index i = 0; i < lhs.cols(); ++i)
    if (lhs(i) != rhs(i))
      return {false, "component " + std::to_string(i) + ": got " + rat_str(lhs(i)) +
                         ", expected " + rat_str(rhs(i))};
  return {true, "v * M = " + mu_str + " * v"};
}

CheckResult involution_check(int level, const std::vector<std::string>& vec, int expected_sign) {
  const long k = 10;
  const HomogPoly p = from_vector(k, vec_from_strings(vec));
  const auto sign = atkin_lehner_sign(p, level);
  if (!sign) return {false, "no eigen-sign relation holds"};
  if (*sign != expected_sign)
    return {false, "sign " + std::to_string(*sign) + ", expected " +
                       std::to_string(expected_sign)};
  const Rat scale = Rat(-expected_sign) * pow_rat(static_cast<long>(level), (k - 2) / 2);
  const HomogPoly got = project_even_restricted(u_n(p, level), k);
  if (!(got == scale * p))
    return {false, "U_" + std::to_string(level) + " p != " + rat_str(scale) + " * p"};
  return {true, "sign " + std::to_string(expected_sign) + " and U_" + std::to_string(level) +
                    " p = " + rat_str(scale) + " * p"};
}

int cmd_verify(const std::string& only) {
  struct Check {
    std::string tag;
    std::string name;
    std::function<CheckResult()> run;
  };

  const std::vector<std::vector<std::string>> c2_12 = {
      {"6885/256", "5355/128", "-5355/128", "-26775/1024"},
      {"945/64", "441/32", "-13167/1024", "-945/64"},
      {"45/8", "1905/1024", "-15/16", "-45/8"},
      {"1533/1024", "0", "0", "-3/4"}};
  const std::vector<std::vector<std::string>> c3_12 = {
      {"3280/243", "45920/2187", "-45920/2187", "-783920/59049"},
      {"1820/243", "5096/729", "-398216/59049", "-1820/243"},
      {"80/27", "43720/59049", "-40/81", "-80/27"},
      {"39364/59049", "0", "0", "-4/9"}};
  const std::vector<std::vector<std::string>> dc2_10 = {
      {"-14", "0", "53/4"}, {"-6", "-15/16", "6"}, {"-127/64", "0", "1"}};
  const std::vector<std::vector<std::string>> dc3_10 = {
      {"-14", "0", "122/9"}, {"-6", "-40/81", "6"}, {"-1093/729", "0", "1"}};

  std::vector<Check> checks;
  checks.push_back({"golden-k12-level2", "C matrix, level 2, weight 12",
                    [&] { return matrix_check(build_c(2, 12), mat_from_strings(c2_12)); }});
  checks.push_back({"golden-k12-level3", "C matrix, level 3, weight 12",
                    [&] { return matrix_check(build_c(3, 12), mat_from_strings(c3_12)); }});
  checks.push_back({"golden-k10-level2", "D*C matrix, level 2, weight 10",
                    [&] { return matrix_check(build_dc(2, 10), mat_from_strings(dc2_10)); }});
  checks.push_back({"golden-k10-level3", "D*C matrix, level 3, weight 10",
                    [&] { return matrix_check(build_dc(3, 10), mat_from_strings(dc3_10)); }});

  checks.push_back({"k12-level2", "eigenvector (1,-3,3,-1) of C, level 2, weight 12", [] {
                      return eigen_check(build_c(2, 12),
                                         vec_from_strings({"1", "-3", "3", "-1"}), "-2073/1024");
                    }});
  checks.push_back({"k12-level3", "eigenvector (1,-3,3,-1) of C, level 3, weight 12", [] {
                      return eigen_check(build_c(3, 12),
                                         vec_from_strings({"1", "-3", "3", "-1"}), "-44224/59049");
                    }});
  checks.push_back({"k10-level2", "eigenvector (2,-7,8) of D*C, level 2, weight 10", [] {
                      return eigen_check(build_dc(2, 10), vec_from_strings({"2", "-7", "8"}),
                                         "-15/16");
                    }});
  checks.push_back({"k10-level3", "eigenvector (2,-9,18) of D*C, level 3, weight 10", [] {
                      return eigen_check(build_dc(3, 10), vec_from_strings({"2", "-9", "18"}),
                                         "-40/81");
                    }});
  checks.push_back({"k10-level3", "eigenvector (1,0,-9) of D*C, level 3, weight 10", [] {
                      return eigen_check(build_dc(3, 10), vec_from_strings({"1", "0", "-9"}),
                                         "-41/81");
                    }});

  checks.push_back({"wspace-k10-level2", "involution data for (2,-7,8), level 2",
                    [] { return involution_check(2, {"2", "-7", "8"}, -1); }});
  checks.push_back({"wspace-k10-level3", "involution data for (2,-9,18), level 3",
                    [] { return involution_check(3, {"2", "-9", "18"}, -1); }});
  checks.push_back({"wspace-k10-level3", "involution data for (1,0,-9), level 3",
                    [] { return involution_check(3, {"1", "0", "-9"}, 1); }});

  int ran = 0, passed = 0;
  for (const Check& check : checks) {
    if (!only.empty() && check.tag != only) continue;
    ++ran;
    const CheckResult r = check.run();
    passed += r.ok ? 1 : 0;
    std::cout << (r.ok ? "PASS" : "FAIL") << "  " << std::left << std::setw(20) << check.tag
              << "  " << check.name << " — " << r.detail << "\n";
  }
  if (ran == 0) {
    std::cerr << "error: no check matches tag '" << only << "'\n";
    return 2;
  }
  std::cout << passed << "/" << ran << " checks passed\n";
  return passed == ran ? 0 : 1;
}

// -------------------------------------------------------------- spectral

int cmd_spectral(const std::vector<int>& levels, long min_w, long max_w, int jobs,
                 const std::string& format, const std::string& out_path) {
  const std::vector<long> weights = even_weights(min_w, max_w);
  struct Item {
    int level;
    long weight;
  };
  std::vector<Item> items;
  for (long k : weights)
    for (int level : levels) items.push_back({level, k});

  std::vector<SpectralReport> reports(items.size());
  parallel_indices(items.size(), jobs,
                   [&](size_t i) { reports[i] = build_report(items[i].weight, items[i].level); });

  bool all_ok = true;
  for (const SpectralReport& r : reports) all_ok = all_ok && r.all_invariants_ok();

  std::string text;
  if (format == "json") {
    auto arr = nlohmann::ordered_json::array();
    for (const SpectralReport& r : reports) arr.push_back(report_to_json(r));
    text = arr.dump(2) + "\n";
  } else {
    text = reports_to_csv(reports);
  }
  const int rc = emit(text, out_path, format == "json" ? "spectral.json" : "spectral.csv");
  if (rc != 0) return rc;
  if (!all_ok) std::cerr << "spectral invariants failed for at least one weight\n";
  return all_ok ? 0 : 1;
}

// ----------------------------------------------------------- conjectures

int cmd_conjectures(const std::vector<int>& levels, long min_w, long max_w, int jobs) {
  const std::vector<long> weights = even_weights(min_w, max_w);
  struct Row {
    int level;
    long weight;
    int sign;
    long eig, series, wspace;
    bool match;
  };
  std::vector<std::vector<Row>> by_weight(weights.size());

  parallel_indices(weights.size(), jobs, [&](size_t i) {
    const long k = weights[i];
    for (int level : levels) {
      const auto dims = newform_dims(level, k);
      for (int sign : {+1, -1}) {
        Row row{level, k, sign, dims.at(sign), conjecture_series_dim(level, sign, k),
                static_cast<long>(w_space_basis(level, k, sign).size()), false};
        row.match = row.eig == row.series && row.series == row.wspace;
        by_weight[i].push_back(row);
      }
    }
  });

  std::cout << "level  weight  sign  eigenspace  series  wspace  match\n";
  bool all_match = true;
  for (const auto& rows : by_weight)
    for (const Row& r : rows) {
      std::cout << std::setw(5) << r.level << "  " << std::setw(6) << r.weight << "  "
                << std::setw(4) << (r.sign > 0 ? "+1" : "-1") << "  " << std::setw(10) << r.eig
                << "  " << std::setw(6) << r.series << "  " << std::setw(6) << r.wspace << "  "
                << (r.match ? "yes" : "NO") << "\n";
      all_match = all_match && r.match;
    }
  for (const auto& rows : by_weight)
    for (const Row& r : rows)
      if (!r.match)
        std::cout << "FINDING: level=" << r.level << " k=" << r.weight << " sign=" << r.sign
                  << " eigenspace=" << r.eig << " series=" << r.series << " wspace=" << r.wspace
                  << " — the three dimensions disagree\n";
  return all_match ? 0 : 1;
}

// ---------------------------------------------------------------- wspace

int cmd_wspace(int level, long weight, int sign, const std::string& out_path) {
  const auto basis = w_space_basis(level, weight, sign);
  nlohmann::ordered_json j;
  j["level"] = level;
  j["weight"] = weight;
  j["sign"] = sign;
  j["dimension"] = basis.size();
  auto rows = nlohmann::ordered_json::array();
  for (const RestrictedVector& v : basis) {
    auto row = nlohmann::ordered_json::array();
    for (Index i = 0; i < v.entries.cols(); ++i) row.push_back(rat_str(v.entries(i)));
    rows.push_back(std::move(row));
  }
  j["basis"] = std::move(rows);
  j["index"] = index_json(weight);
  return emit(j.dump(2) + "\n", out_path,
              "wspace-level" + std::to_string(level) + "-k" + std::to_string(weight) +
                  (sign > 0 ? "-plus" : "-minus") + ".json");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"totally odd double zeta matrices: exact construction and analysis"};
  app.require_subcommand(1);

  // build
  auto* build = app.add_subcommand("build", "construct C, D, D*C for one level and weight");
  int b_level = 0;
  long b_weight = 0;
  std::string b_part = "all", b_format = "json", b_out;
  build->add_option("--level", b_level, "level (1, 2 or 3)")->required()->check(CLI::Range(1, 3));
  build->add_option("--weight", b_weight, "even weight")->required();
  build->add_option("--part", b_part, "matrix to emit")
      ->check(CLI::IsMember({"c", "d", "dc", "all"}));
  build->add_option("--format", b_format, "output format")->check(CLI::IsMember({"json", "csv"}));
  build->add_option("-o,--output", b_out, "output file (default: stdout or DZETA_OUT_DIR)");

  // oracle-check
  auto* oracle = app.add_subcommand("oracle-check",
                                    "recompute every entry from the depth-2 derivations");
  std::vector<int> o_levels{2, 3};
  long o_min = 6, o_max = 40;
  int o_jobs = 1;
  bool o_dump = false;
  int o_level = 2;
  long o_weight = 12;
  std::string o_m = "9,3", o_n = "3,9";
  oracle->add_option("--levels", o_levels, "levels to check")
      ->check(CLI::Range(1, 3))
      ->delimiter(',');
  oracle->add_option("--min-weight", o_min, "first weight");
  oracle->add_option("--max-weight", o_max, "last weight");
  oracle->add_option("--jobs", o_jobs, "worker threads")->check(CLI::Range(1, 64));
  oracle->add_flag("--dump", o_dump, "print the term-by-term expansion of one entry");
  oracle->add_option("--level", o_level, "level for --dump")->check(CLI::Range(1, 3));
  oracle->add_option("--weight", o_weight, "weight for --dump");
  oracle->add_option("--m", o_m, "row index 'm1,m2' for --dump");
  oracle->add_option("--n", o_n, "column index 'n1,n2' for --dump");

  // verify
  auto* verify = app.add_subcommand("verify", "reproduce the worked examples bit for bit");
  std::string v_only;
  verify->add_option("--only", v_only, "run only the checks with this tag");

  // spectral
  auto* spectral = app.add_subcommand("spectral", "kernel, Hecke charpoly and bound checks");
  std::vector<int> s_levels{2, 3};
  long s_min = 6, s_max = 30;
  std::string s_weights, s_format = "csv", s_out;
  int s_jobs = 1;
  spectral->add_option("--levels", s_levels, "levels to scan")
      ->check(CLI::Range(2, 3))
      ->delimiter(',');
  spectral->add_option("--min-weight", s_min, "first weight");
  spectral->add_option("--max-weight", s_max, "last weight");
  spectral->add_option("--weights", s_weights, "weight range 'A..B' (overrides min/max)");
  spectral->add_option("--jobs", s_jobs, "worker threads")->check(CLI::Range(1, 64));
  spectral->add_option("--format", s_format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  spectral->add_option("-o,--output", s_out, "output file (default: stdout or DZETA_OUT_DIR)");

  // conjectures
  auto* conj = app.add_subcommand("conjectures",
                                  "compare eigenspace, series and relation-space dimensions");
  std::vector<int> c_levels{2, 3};
  long c_min = 6, c_max = 50;
  int c_jobs = 1;
  conj->add_option("--levels", c_levels, "levels to scan")->check(CLI::Range(2, 3))->delimiter(',');
  conj->add_option("--min-weight", c_min, "first weight");
  conj->add_option("--max-weight", c_max, "last weight");
  conj->add_option("--jobs", c_jobs, "worker threads")->check(CLI::Range(1, 64));

  // wspace
  auto* wspace = app.add_subcommand("wspace", "basis of the period-relation space");
  int w_level = 2, w_sign = 1;
  long w_weight = 12;
  std::string w_out;
  wspace->add_option("--level", w_level, "level (2 or 3)")->required()->check(CLI::Range(2, 3));
  wspace->add_option("--weight", w_weight, "even weight")->required();
  wspace->add_option("--sign", w_sign, "eigen-sign (+1 or -1)")
      ->required()
      ->check(CLI::IsMember({1, -1}));
  wspace->add_option("-o,--output", w_out, "output file (default: stdout or DZETA_OUT_DIR)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) {
      if (b_weight < 0 || b_weight % 2 != 0) {
        std::cerr << "error: --weight must be a non-negative even integer\n";
        return 2;
      }
      return cmd_build(b_level, b_weight, b_part, b_format, b_out);
    }
    if (oracle->parsed()) {
      if (o_dump) {
        if (o_weight < 6 || o_weight % 2 != 0) {
          std::cerr << "error: --weight must be an even integer >= 6\n";
          return 2;
        }
        return cmd_oracle_dump(o_level, o_weight, o_m, o_n);
      }
      return cmd_oracle_check(o_levels, o_min, o_max, o_jobs);
    }
    if (verify->parsed()) return cmd_verify(v_only);
    if (spectral->parsed()) {
      long lo = s_min, hi = s_max;
      if (!s_weights.empty() && !parse_range(s_weights, lo, hi)) {
        std::cerr << "error: --weights expects 'A..B'\n";
        return 2;
      }
      return cmd_spectral(s_levels, lo, hi, s_jobs, s_format, s_out);
    }
    if (conj->parsed()) return cmd_conjectures(c_levels, c_min, c_max, c_jobs);
    if (wspace->parsed()) {
      if (w_weight < 0 || w_weight % 2 != 0) {
        std::cerr << "error: --weight must be a non-negative even integer\n";
        return 2;
      }
      return cmd_wspace(w_level, w_weight, w_sign, w_out);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    // internal consistency failure: a mathematical invariant broke
    std::cerr << "inconsistency: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
