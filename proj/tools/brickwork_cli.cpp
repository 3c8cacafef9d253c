// Single-binary front end. Every subcommand emits one self-describing JSON
// document (artifact version + resolved config + result) so a run can be
// reproduced from its own output. Exact values are serialized as rational
// strings "a/b", never floats.

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "brickwork/characters.hpp"
#include "brickwork/hurwitz.hpp"
#include "brickwork/mc.hpp"
#include "brickwork/partition.hpp"
#include "brickwork/permutation.hpp"
#include "brickwork/rational.hpp"
#include "brickwork/rng.hpp"
#include "brickwork/schur.hpp"
#include "brickwork/series.hpp"
#include "brickwork/verify.hpp"
#include "brickwork/weingarten.hpp"
#include "brickwork/wick.hpp"

using nlohmann::ordered_json;
using namespace brickwork;

namespace {

constexpr const char* kVersion = "1.0.0";

// ---- input parsing ----

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      out.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  out.push_back(current);
  return out;
}

std::vector<Partition> parse_profiles(const std::string& text) {
  std::vector<Partition> profiles;
  for (const std::string& piece : split(text, ';')) profiles.push_back(Partition::parse(piece));
  if (profiles.empty()) throw validation_error("empty profile list");
  return profiles;
}

std::vector<int> parse_indices(const std::string& text) {
  std::vector<int> out;
  for (const std::string& piece : split(text, ',')) {
    std::size_t used = 0;
    const int v = std::stoi(piece, &used);
    if (used != piece.size() || v < 1) throw validation_error("bad index list: " + text);
    out.push_back(v);
  }
  return out;
}

Rat parse_rat(const std::string& text) {
  const std::optional<Rat> q = rat_parse(text);
  if (!q) throw validation_error("not a rational: " + text);
  return *q;
}

// "re:im,re:im,..." -> complex list; a bare "x" means x + 0i.
std::vector<std::complex<double>> parse_spectrum(const std::string& text) {
  std::vector<std::complex<double>> out;
  for (const std::string& piece : split(text, ',')) {
    const std::vector<std::string> parts = split(piece, ':');
    if (parts.empty() || parts.size() > 2) throw validation_error("bad spectrum entry: " + piece);
    std::size_t used = 0;
    const double re = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw validation_error("bad spectrum entry: " + piece);
    double im = 0.0;
    if (parts.size() == 2) {
      const double v = std::stod(parts[1], &used);
      if (used != parts[1].size()) throw validation_error("bad spectrum entry: " + piece);
      im = v;
    }
    out.emplace_back(re, im);
  }
  return out;
}

// ---- output plumbing ----

ordered_json make_doc(const std::string& subcommand, ordered_json config, ordered_json result) {
  ordered_json doc;
  doc["artifact"] = "brickwork";
  doc["version"] = kVersion;
  doc["subcommand"] = subcommand;
  doc["config"] = std::move(config);
  doc["result"] = std::move(result);
  return doc;
}

void emit(const ordered_json& doc, const std::string& path) {
  if (path.empty()) {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw validation_error("cannot open output file: " + path);
  out << doc.dump(2) << "\n";
}

ordered_json complex_json(std::complex<double> z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json estimate_json(const MCEstimate& est) {
  ordered_json j;
  j["mean"] = complex_json(est.mean);
  j["std_error"] = est.std_error;
  j["samples"] = est.samples;
  j["seed"] = est.seed;
  return j;
}

// Deterministic complex test matrix; `triangular` keeps only the upper
// triangle (including the diagonal), which is non-normal for generic draws.
Eigen::MatrixXcd generated_matrix(int N, std::uint64_t seed, bool triangular) {
  SplitMix64 rng(seed);
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(N, N);
  const double scale = 1.0 / std::sqrt(static_cast<double>(N));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      const std::complex<double> z = rng.next_complex_gaussian();
      if (!triangular || j >= i) M(i, j) = scale * z;
    }
  return M;
}

Eigen::MatrixXcd matrix_from_json(const nlohmann::json& entries, int N, const char* label) {
  if (!entries.is_array() || entries.size() != static_cast<std::size_t>(N) * N)
    throw validation_error(std::string(label) + ": expected " + std::to_string(N * N) +
                           " [re, im] pairs, row-major");
  Eigen::MatrixXcd M(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      const auto& e = entries[static_cast<std::size_t>(i * N + j)];
      if (!e.is_array() || e.size() != 2)
        throw validation_error(std::string(label) + ": entries must be [re, im] pairs");
      M(i, j) = std::complex<double>(e[0].get<double>(), e[1].get<double>());
    }
  return M;
}

// ---- subcommands ----

struct HurwitzCmd {
  std::string profiles_text;
  int euler = 2;
  std::string json_path;

  void run() const {
    const std::vector<Partition> profiles = parse_profiles(profiles_text);
    const int degree = profiles.front().weight();
    const Rat value = hurwitz_number({profiles, euler});
    ordered_json config{{"profiles", profiles_text}, {"euler", euler}};
    ordered_json result;
    result["value"] = rat_str(value);
    result["degree"] = degree;
    result["terms"] = enumerate_partitions(degree).size();
    emit(make_doc("hurwitz", config, result), json_path);
  }
};

struct OracleCmd {
  std::string profiles_text, kappa_text, mu_text;
  int bricks = -1;
  int degree = 0;
  int cap = kDefaultEnumerationCap;
  int workers = 1;
  std::string json_path;

  void run() const {
    FactorizationCount count;
    ordered_json config;
    if (!profiles_text.empty()) {
      const std::vector<Partition> profiles = parse_profiles(profiles_text);
      const int d = degree > 0 ? degree : profiles.front().weight();
      count = count_factorizations(profiles, d, cap, workers);
      config = {{"profiles", profiles_text}, {"degree", d}};
    } else {
      if (kappa_text.empty() || mu_text.empty() || bricks < 0)
        throw validation_error("need either --profiles or --kappa/--mu/--bricks");
      count = count_brickwork(Partition::parse(kappa_text), Partition::parse(mu_text), bricks,
                              cap, workers);
      config = {{"kappa", kappa_text}, {"mu", mu_text}, {"bricks", bricks}};
    }
    config["cap"] = cap;
    config["workers"] = workers;
    ordered_json result;
    result["value"] = rat_str(count.normalized);
    result["count_over_factorial"] = rat_str(count.normalized);
    result["raw_count"] = count.raw_count.get_str();
    emit(make_doc("oracle", config, result), json_path);
  }
};

struct WgCmd {
  std::string mu_text;
  int N = 0;
  std::string json_path;

  void run() const {
    const Rat value = weingarten_value(Partition::parse(mu_text), N);
    emit(make_doc("wg", {{"mu", mu_text}, {"N", N}}, {{"value", rat_str(value)}}), json_path);
  }
};

struct UIntegralCmd {
  std::string a_text, b_text, ap_text, bp_text;
  int N = 0;
  std::string json_path;

  void run() const {
    MonomialSpec spec;
    spec.a = parse_indices(a_text);
    spec.b = parse_indices(b_text);
    spec.ap = parse_indices(ap_text);
    spec.bp = parse_indices(bp_text);
    spec.N = N;
    const auto [row, col] = balance_numbers(spec);
    const Rat value = monomial_integral(spec);
    ordered_json config{{"a", a_text}, {"b", b_text}, {"ap", ap_text}, {"bp", bp_text}, {"N", N}};
    ordered_json result;
    result["value"] = rat_str(value);
    result["balance"] = ordered_json::array({row, col});
    emit(make_doc("uintegral", config, result), json_path);
  }
};

struct CharsCmd {
  int degree = 0;
  std::string json_path;

  void run() const {
    const CharacterTable table = character_table(degree);
    ordered_json rows = ordered_json::array(), cols = ordered_json::array(),
                 values = ordered_json::array();
    for (const Partition& l : table.row_labels) rows.push_back(l.str());
    for (const Partition& m : table.col_labels) cols.push_back(m.str());
    for (const auto& row : table.values) {
      ordered_json jrow = ordered_json::array();
      for (const Int& v : row) jrow.push_back(std::stoll(v.get_str()));
      values.push_back(std::move(jrow));
    }
    ordered_json result;
    result["rows"] = std::move(rows);
    result["columns"] = std::move(cols);
    result["values"] = std::move(values);
    emit(make_doc("chars", {{"degree", degree}}, result), json_path);
  }
};

struct SchurCmd {
  std::string lambda_text, p_text, brick_text;
  int principal_N = -1;
  std::string json_path;

  void run() const {
    const Partition lambda = Partition::parse(lambda_text);
    ordered_json config{{"lambda", lambda_text}};
    ordered_json result;
    if (principal_N >= 0) {
      config["principal"] = principal_N;
      result["value"] = rat_str(principal_specialization(lambda, principal_N));
      result["exact"] = true;
    } else if (!brick_text.empty()) {
      config["brick"] = brick_text;
      result["value"] = rat_str(brick_specialization<Rat>(lambda, parse_rat(brick_text)));
      result["exact"] = true;
    } else if (!p_text.empty()) {
      config["p"] = p_text;
      // "m:value,..." -- all-rational input stays on the exact path.
      struct Entry {
        int m;
        std::string text;
      };
      std::vector<Entry> entries;
      for (const std::string& piece : split(p_text, ',')) {
        const std::vector<std::string> kv = split(piece, ':');
        if (kv.size() != 2) throw validation_error("bad power-sum entry: " + piece);
        std::size_t used = 0;
        const int m = std::stoi(kv[0], &used);
        if (used != kv[0].size() || m < 1) throw validation_error("bad power-sum index: " + kv[0]);
        entries.push_back({m, kv[1]});
      }
      bool exact = true;
      for (const Entry& e : entries)
        if (!rat_parse(e.text)) exact = false;
      if (exact) {
        ExactPowerSums p;
        for (const Entry& e : entries) p.set(e.m, parse_rat(e.text));
        result["value"] = rat_str(schur_from_power_sums(lambda, p));
        result["exact"] = true;
      } else {
        ComplexPowerSums p;
        for (const Entry& e : entries) {
          std::size_t used = 0;
          const double v = std::stod(e.text, &used);
          if (used != e.text.size()) throw validation_error("bad power-sum value: " + e.text);
          p.set(e.m, std::complex<double>(v, 0.0));
        }
        result["value"] = complex_json(schur_from_power_sums(lambda, p));
        result["exact"] = false;
      }
    } else {
      throw validation_error("need one of --p, --principal, --brick");
    }
    emit(make_doc("schur", config, result), json_path);
  }
};

struct SeriesCmd {
  std::string model = "hermitian";
  int n = 1;
  int N = 3;
  int max_degree = 4;
  std::string repr = "both";
  bool with_sources = false;
  bool ignore_window = false;
  std::string json_path, csv_path;

  void run() const {
    if (model == "hermitian") {
      run_hermitian();
    } else if (model == "normal") {
      run_normal();
    } else {
      throw validation_error("unknown model: " + model);
    }
  }

  void run_hermitian() const {
    const bool want_moment = repr == "moment" || repr == "both" || repr == "all";
    const bool want_schur = repr == "schur" || repr == "both" || repr == "all";
    const bool want_hurwitz = repr == "hurwitz" || repr == "all";
    if (!want_moment && !want_schur && !want_hurwitz)
      throw validation_error("unknown repr: " + repr);

    ModelSpec spec;
    spec.n = n;
    spec.N = N;
    spec.validate();

    ordered_json coefficients = ordered_json::array();
    ordered_json calibration;
    NormalizationRule rule;
    const bool need_rule = want_hurwitz || with_sources;
    if (need_rule) {
      const int max_k = std::max(1, max_degree / 2);
      const CalibrationReport report = calibrate_normalization(n, max_k);
      rule = report.best_rule();
      calibration["rule"] = rule.kind == NormalizationRule::Kind::Uniform ? "uniform"
                                                                          : "length-shift";
      calibration["test_Ns"] = report.test_Ns;
      ordered_json cells = ordered_json::array();
      for (const auto& [key, value] : rule.cell)
        cells.push_back({{"n", key.first}, {"k", key.second}, {"exponent", value}});
      calibration["cells"] = std::move(cells);
    }

    auto push = [&](int degree, const Partition& mu, const ordered_json& kappa,
                    const char* which, const Rat& value) {
      ordered_json row;
      row["degree"] = degree;
      row["mu"] = mu.str();
      row["kappa"] = kappa;
      row["repr"] = which;
      row["value"] = rat_str(value);
      coefficients.push_back(std::move(row));
    };

    // Odd total degrees vanish identically, so only even degrees are listed.
    for (int d = 2; d <= max_degree; d += 2) {
      for (const Partition& mu : enumerate_partitions(d)) {
        if (want_moment) push(d, mu, nullptr, "moment", moment_coefficient(spec, mu));
        if (want_schur)
          push(d, mu, nullptr, "schur", schur_sum_coefficient(spec, mu, ignore_window));
        if (want_hurwitz)
          push(d, mu, nullptr, "hurwitz",
               hurwitz_sum_coefficient(spec, mu, rule, ignore_window));
        if (with_sources)
          for (const Partition& kappa : enumerate_partitions(d))
            push(d, mu, kappa.str(), "source",
                 source_coefficient(spec, kappa, mu, rule, ignore_window));
      }
    }

    ordered_json config{{"model", model},   {"n", n },
                        {"N", N},           {"max_degree", max_degree},
                        {"repr", repr},     {"sources", with_sources},
                        {"ignore_window", ignore_window}};
    ordered_json result;
    result["model"] = ordered_json{{"kind", "hermitian"}, {"n", n}, {"N", N}};
    result["coefficients"] = coefficients;
    if (need_rule) result["calibration"] = calibration;
    emit(make_doc("series", config, result), json_path);
    if (!csv_path.empty()) write_csv(coefficients);
  }

  void run_normal() const {
    const bool want_corrected = repr == "corrected" || repr == "all" || repr == "both";
    const bool want_frobenius = repr == "frobenius" || repr == "all";
    const bool want_lambda = repr == "lambda-sum" || repr == "all";
    if (!want_corrected && !want_frobenius && !want_lambda)
      throw validation_error("unknown repr for the normal model: " + repr);

    ordered_json coefficients = ordered_json::array();
    auto push = [&](int degree, const Partition& kappa, const Partition& mu,
                    const std::vector<Partition>& ts, const char* which, const Rat& value) {
      ordered_json row;
      row["degree"] = degree;
      row["kappa"] = kappa.str();
      row["mu"] = mu.str();
      ordered_json jt = ordered_json::array();
      for (const Partition& t : ts) jt.push_back(t.str());
      row["t"] = std::move(jt);
      row["repr"] = which;
      row["value"] = rat_str(value);
      coefficients.push_back(std::move(row));
    };

    for (int d = 1; d <= max_degree; ++d) {
      const std::vector<Partition> parts = enumerate_partitions(d);
      std::vector<std::vector<Partition>> tuples{{}};
      for (int i = 0; i < n; ++i) {
        std::vector<std::vector<Partition>> next;
        for (const auto& tuple : tuples)
          for (const Partition& t : parts) {
            std::vector<Partition> extended = tuple;
            extended.push_back(t);
            next.push_back(std::move(extended));
          }
        tuples = std::move(next);
      }
      for (const Partition& kappa : parts)
        for (const Partition& mu : parts)
          for (const auto& ts : tuples) {
            if (want_corrected)
              push(d, kappa, mu, ts, "corrected",
                   normal_model_corrected_coefficient(n, N, kappa, mu, ts));
            if (d % 2 == 0 && want_frobenius)
              push(d, kappa, mu, ts, "frobenius", normal_model_coefficient(n, kappa, mu, ts));
            if (d % 2 == 0 && want_lambda)
              push(d, kappa, mu, ts, "lambda-sum",
                   normal_model_lambda_sum_coefficient(n, N, kappa, mu, ts));
          }
    }

    ordered_json config{{"model", model},
                        {"n", n},
                        {"N", N},
                        {"max_degree", max_degree},
                        {"repr", repr}};
    ordered_json result;
    result["model"] = ordered_json{{"kind", "normal"}, {"n", n}, {"N", N}};
    result["coefficients"] = coefficients;
    emit(make_doc("series", config, result), json_path);
    if (!csv_path.empty())
      throw validation_error("--csv covers the hermitian coefficient table only");
  }

  void write_csv(const ordered_json& coefficients) const {
    std::ofstream out(csv_path);
    if (!out) throw validation_error("cannot open output file: " + csv_path);
    out << "degree,mu,kappa,repr,value\n";
    for (const auto& row : coefficients) {
      const std::string kappa = row["kappa"].is_null() ? "" : row["kappa"].get<std::string>();
      out << row["degree"].get<int>() << ",\"" << row["mu"].get<std::string>() << "\",\""
          << kappa << "\"," << row["repr"].get<std::string>() << ","
          << row["value"].get<std::string>() << "\n";
    }
  }
};

struct McMomentCmd {
  int n = 1;
  int N = 3;
  std::string mu_text;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 42;
  int workers = 0;
  std::string source_diag;
  std::string json_path;

  void run() const {
    const Partition mu = Partition::parse(mu_text);
    TraceWord word;
    word.n_factors = n;
    ordered_json config{{"n", n},       {"N", N},
                        {"mu", mu_text}, {"samples", samples},
                        {"seed", seed},  {"workers", resolved_workers(workers)}};
    if (!source_diag.empty()) {
      const std::vector<std::complex<double>> diag = parse_spectrum(source_diag);
      if (static_cast<int>(diag.size()) != N)
        throw validation_error("--source-diag needs exactly N entries");
      Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(N, N);
      for (int i = 0; i < N; ++i) C(i, i) = diag[static_cast<std::size_t>(i)];
      word.sources.assign(static_cast<std::size_t>(n), C);
      config["source_diag"] = source_diag;
    }
    const MCEstimate est = mc_moment(word, mu, N, samples, seed, resolved_workers(workers));
    ordered_json result;
    result["estimate"] = estimate_json(est);
    if (word.sources.empty() && n <= kWickMaxFactors &&
        mu.weight() <= (n == 1 ? kWickSingleCap : kWickProductCap)) {
      const Rat exact = product_word_moment(mu, n, N);
      result["exact"] = rat_str(exact);
      result["within_4se"] = est.within(rat_double(exact));
    }
    emit(make_doc("mc moment", config, result), json_path);
  }
};

struct McProp1Cmd {
  std::string lambda_text;
  int N = 3;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 7;
  int workers = 0;
  std::string matrix_file;
  std::string gen = "triangular";
  std::string json_path;

  void run() const {
    const Partition lambda = Partition::parse(lambda_text);
    Eigen::MatrixXcd A, B;
    ordered_json config{{"lambda", lambda_text}, {"N", N},
                        {"samples", samples},    {"seed", seed},
                        {"workers", resolved_workers(workers)}};
    if (!matrix_file.empty()) {
      std::ifstream in(matrix_file);
      if (!in) throw validation_error("cannot open matrix file: " + matrix_file);
      nlohmann::json doc;
      in >> doc;
      A = matrix_from_json(doc.at("A"), N, "A");
      B = matrix_from_json(doc.at("B"), N, "B");
      config["matrix_file"] = matrix_file;
    } else {
      if (gen != "full" && gen != "triangular")
        throw validation_error("--gen must be full or triangular");
      A = generated_matrix(N, seed * 2 + 1, false);
      B = generated_matrix(N, seed * 2 + 2, gen == "triangular");
      config["gen"] = gen;
    }
    const SchurSplitResult r = mc_schur_split(lambda, A, B, samples, seed,
                                              resolved_workers(workers));
    ordered_json result;
    result["estimate"] = estimate_json(r.estimate);
    result["exact"] = complex_json(r.exact);
    result["within_4se"] = std::abs(r.estimate.mean - r.exact) <=
                           std::max(4.0 * r.estimate.std_error, 1e-10);
    emit(make_doc("mc prop1", config, result), json_path);
  }
};

struct VerifyCmd {
  std::string suite;
  VerifyOptions options;
  std::string json_path;
  int exit_status = 0;

  void run() {
    std::vector<SuiteReport> reports;
    if (suite == "all") {
      for (const std::string& name : verify_suite_names())
        reports.push_back(run_verify_suite(name, options));
    } else {
      reports.push_back(run_verify_suite(suite, options));
    }

    bool all_ok = true;
    for (const SuiteReport& report : reports) {
      std::printf("suite %-20s %s (%.2f s)\n", report.suite.c_str(),
                  report.passed() ? "PASS" : "FAIL", report.seconds);
      for (const CheckResult& check : report.checks)
        std::printf("  [criterion %d] %-4s %s: %s (%.2f s)\n", check.criterion,
                    check.passed ? "ok" : "FAIL", check.name.c_str(), check.measured.c_str(),
                    check.seconds);
      all_ok = all_ok && report.passed();
    }

    if (!json_path.empty()) {
      ordered_json jsuites = ordered_json::array();
      for (const SuiteReport& report : reports) {
        ordered_json jchecks = ordered_json::array();
        for (const CheckResult& check : report.checks)
          jchecks.push_back({{"name", check.name},
                             {"criterion", check.criterion},
                             {"passed", check.passed},
                             {"measured", check.measured},
                             {"seconds", check.seconds}});
        jsuites.push_back({{"suite", report.suite},
                           {"passed", report.passed()},
                           {"seconds", report.seconds},
                           {"checks", jchecks}});
      }
      ordered_json config{{"suite", suite},
                          {"samples", options.samples},
                          {"seed", options.seed},
                          {"workers", resolved_workers(options.workers)}};
      ordered_json result;
      result["passed"] = all_ok;
      result["suites"] = std::move(jsuites);
      emit(make_doc("verify", config, result), json_path);
    }
    exit_status = all_ok ? 0 : 1;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact brickwork factorization counts, Schur averages, and series coefficients"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // Optional on-disk character cache, shared by every subcommand.
  std::string cache_path;
  if (const char* dir = std::getenv("BRICKWORK_CACHE_DIR"); dir != nullptr && *dir != '\0') {
    cache_path = std::string(dir) + "/characters.json";
    load_character_memo(cache_path);  // version mismatch or absence = cold cache
  }

  auto hurwitz_cmd = std::make_shared<HurwitzCmd>();
  {
    CLI::App* sc = app.add_subcommand("hurwitz", "character-sum count for branch profiles");
    sc->add_option("--profiles", hurwitz_cmd->profiles_text,
                   "semicolon-separated partitions, e.g. \"2,1,1;4;2,2\"")
        ->required();
    sc->add_option("--euler", hurwitz_cmd->euler, "target Euler characteristic (default 2)");
    sc->add_option("--json", hurwitz_cmd->json_path, "write the document here instead of stdout");
    sc->callback([hurwitz_cmd] { hurwitz_cmd->run(); });
  }

  auto oracle_cmd = std::make_shared<OracleCmd>();
  {
    CLI::App* sc = app.add_subcommand("oracle", "brute-force factorization count");
    sc->add_option("--profiles", oracle_cmd->profiles_text, "semicolon-separated partitions");
    sc->add_option("--degree", oracle_cmd->degree, "degree (default: weight of first profile)");
    sc->add_option("--kappa", oracle_cmd->kappa_text, "brickwork first profile");
    sc->add_option("--mu", oracle_cmd->mu_text, "brickwork second profile");
    sc->add_option("--bricks", oracle_cmd->bricks, "number of (2^k) profiles");
    sc->add_option("--cap", oracle_cmd->cap, "enumeration cap (default 8, hard limit 10)");
    sc->add_option("--workers", oracle_cmd->workers, "enumeration workers");
    sc->add_option("--json", oracle_cmd->json_path, "write the document here instead of stdout");
    sc->callback([oracle_cmd] { oracle_cmd->run(); });
  }

  auto wg_cmd = std::make_shared<WgCmd>();
  {
    CLI::App* sc = app.add_subcommand("wg", "Weingarten function value");
    sc->add_option("--mu", wg_cmd->mu_text, "cycle type")->required();
    sc->add_option("--N", wg_cmd->N, "unitary group dimension")->required();
    sc->add_option("--json", wg_cmd->json_path, "write the document here instead of stdout");
    sc->callback([wg_cmd] { wg_cmd->run(); });
  }

  auto ui_cmd = std::make_shared<UIntegralCmd>();
  {
    CLI::App* sc = app.add_subcommand("uintegral", "Haar-unitary entry-monomial integral");
    sc->add_option("--a", ui_cmd->a_text, "row indices of U factors")->required();
    sc->add_option("--b", ui_cmd->b_text, "column indices of U factors")->required();
    sc->add_option("--ap", ui_cmd->ap_text, "row indices of conj(U) factors")->required();
    sc->add_option("--bp", ui_cmd->bp_text, "column indices of conj(U) factors")->required();
    sc->add_option("--N", ui_cmd->N, "unitary group dimension")->required();
    sc->add_option("--json", ui_cmd->json_path, "write the document here instead of stdout");
    sc->callback([ui_cmd] { ui_cmd->run(); });
  }

  auto chars_cmd = std::make_shared<CharsCmd>();
  {
    CLI::App* sc = app.add_subcommand("chars", "full character table for one degree");
    sc->add_option("--degree", chars_cmd->degree, "symmetric group degree")->required();
    sc->add_option("--json", chars_cmd->json_path, "write the document here instead of stdout");
    sc->callback([chars_cmd] { chars_cmd->run(); });
  }

  auto schur_cmd = std::make_shared<SchurCmd>();
  {
    CLI::App* sc = app.add_subcommand("schur", "Schur function evaluation");
    sc->add_option("--lambda", schur_cmd->lambda_text, "partition")->required();
    sc->add_option("--p", schur_cmd->p_text,
                   "power sums \"m:value,...\"; rational values keep the exact path");
    sc->add_option("--principal", schur_cmd->principal_N, "evaluate at 1^N");
    sc->add_option("--brick", schur_cmd->brick_text, "evaluate at p = (0, c, 0, ...)");
    sc->add_option("--json", schur_cmd->json_path, "write the document here instead of stdout");
    sc->callback([schur_cmd] { schur_cmd->run(); });
  }

  auto series_cmd = std::make_shared<SeriesCmd>();
  {
    CLI::App* sc = app.add_subcommand("series", "perturbative coefficient tables");
    sc->add_option("--model", series_cmd->model, "hermitian | normal (default hermitian)");
    sc->add_option("--n", series_cmd->n, "number of independent factors")->required();
    sc->add_option("--N", series_cmd->N, "matrix size")->required();
    sc->add_option("--max-degree", series_cmd->max_degree, "largest total degree (default 4)");
    sc->add_option("--repr", series_cmd->repr,
                   "hermitian: moment|schur|hurwitz|both|all; normal: "
                   "corrected|frobenius|lambda-sum|all");
    sc->add_flag("--sources", series_cmd->with_sources,
                 "also list per-kappa source coefficients (hermitian)");
    sc->add_flag("--ignore-window", series_cmd->ignore_window,
                 "evaluate outside the validity window 2k <= N");
    sc->add_option("--json", series_cmd->json_path, "write the document here instead of stdout");
    sc->add_option("--csv", series_cmd->csv_path, "also write a CSV coefficient table");
    sc->callback([series_cmd] { series_cmd->run(); });
  }

  auto mc_moment_cmd = std::make_shared<McMomentCmd>();
  auto mc_prop1_cmd = std::make_shared<McProp1Cmd>();
  {
    CLI::App* mc = app.add_subcommand("mc", "Monte Carlo estimators");
    mc->require_subcommand(1);
    CLI::App* m = mc->add_subcommand("moment", "E[prod_i tr(W^mu_i)] for the product word");
    m->add_option("--n", mc_moment_cmd->n, "number of independent factors");
    m->add_option("--N", mc_moment_cmd->N, "matrix size")->required();
    m->add_option("--mu", mc_moment_cmd->mu_text, "exponent partition")->required();
    m->add_option("--samples", mc_moment_cmd->samples, "sample count (default 100000)");
    m->add_option("--seed", mc_moment_cmd->seed, "stream seed (default 42)");
    m->add_option("--workers", mc_moment_cmd->workers, "0 = available parallelism");
    m->add_option("--source-diag", mc_moment_cmd->source_diag,
                  "diagonal source spectrum \"re:im,...\" applied at every slot");
    m->add_option("--json", mc_moment_cmd->json_path, "write the document here instead of stdout");
    m->callback([mc_moment_cmd] { mc_moment_cmd->run(); });

    CLI::App* p = mc->add_subcommand("prop1", "split test for the Haar average of s_lambda(UAU*B)");
    p->add_option("--lambda", mc_prop1_cmd->lambda_text, "partition")->required();
    p->add_option("--N", mc_prop1_cmd->N, "matrix size")->required();
    p->add_option("--samples", mc_prop1_cmd->samples, "sample count (default 100000)");
    p->add_option("--seed", mc_prop1_cmd->seed, "stream seed (default 7)");
    p->add_option("--workers", mc_prop1_cmd->workers, "0 = available parallelism");
    p->add_option("--matrix-file", mc_prop1_cmd->matrix_file,
                  "JSON {\"A\": [[re, im], ...], \"B\": [...]}, row-major");
    p->add_option("--gen", mc_prop1_cmd->gen,
                  "generated matrices when no file: full | triangular (default)");
    p->add_option("--json", mc_prop1_cmd->json_path, "write the document here instead of stdout");
    p->callback([mc_prop1_cmd] { mc_prop1_cmd->run(); });
  }

  auto verify_cmd = std::make_shared<VerifyCmd>();
  {
    CLI::App* sc = app.add_subcommand("verify", "run a named verification suite");
    std::vector<std::string> names = verify_suite_names();
    names.push_back("all");
    sc->add_option("suite", verify_cmd->suite, "suite name")
        ->required()
        ->check(CLI::IsMember(names));
    sc->add_option("--samples", verify_cmd->options.samples, "MC sample count (default 100000)");
    sc->add_option("--seed", verify_cmd->options.seed, "MC stream seed (default 1)");
    sc->add_option("--workers", verify_cmd->options.workers, "0 = available parallelism");
    sc->add_option("--json", verify_cmd->json_path, "also write a machine-readable report");
    sc->callback([verify_cmd] { verify_cmd->run(); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const validation_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const cap_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const window_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const calibration_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  }

  if (!cache_path.empty()) save_character_memo(cache_path);
  return verify_cmd->exit_status;
}
