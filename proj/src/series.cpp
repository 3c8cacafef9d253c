#include "brickwork/series.hpp"

#include <algorithm>
#include <sstream>

#include "brickwork/characters.hpp"
#include "brickwork/hurwitz.hpp"
#include "brickwork/schur.hpp"
#include "brickwork/wick.hpp"

namespace brickwork {

namespace {

void check_window(int k, int N, bool allow) {
  if (!allow && 2 * k > N)
    throw window_error("outside validity window (2k > N); pass ignore-window to force");
}

// Bare Hurwitz column sum_kappa N^{l(kappa)} H(kappa, mu, (2^k)^n).
Rat bare_hurwitz_sum(int n, int N, const Partition& mu) {
  const int k = mu.weight() / 2;
  Rat total(0);
  for (const Partition& kappa : enumerate_partitions(2 * k))
    total += rat_pow(Rat(N), kappa.length()) * brickwork_hurwitz(kappa, mu, n);
  return total;
}

// ratio == N^e for some integer e?
std::optional<long> as_integer_power(const Rat& ratio, int N) {
  if (ratio <= 0) return std::nullopt;
  Rat r = ratio;
  long e = 0;
  while (r > 1) {
    r /= N;
    if (++e > 512) return std::nullopt;
  }
  while (r < 1) {
    r *= N;
    if (--e < -512) return std::nullopt;
  }
  return r == 1 ? std::optional<long>(e) : std::nullopt;
}

int moment_k_cap(int n) { return n == 1 ? kWickSingleCap / 2 : kWickProductCap / 2; }

}  // namespace

void ModelSpec::validate() const {
  if (n < 1 || n > kWickMaxFactors) throw validation_error("factor count outside 1..4");
  if (N < 1) throw validation_error("matrix size must be positive");
}

long NormalizationRule::exponent_for(int n, int k, const Partition& mu) const {
  auto it = cell.find({n, k});
  if (it == cell.end()) throw calibration_error("no calibrated cell for this (n, k)");
  return kind == Kind::Uniform ? it->second : mu.length() + it->second;
}

Rat moment_coefficient(const ModelSpec& model, const Partition& mu) {
  model.validate();
  if (mu.empty()) return Rat(1);
  return make_rat(int_pow(Int(model.N), static_cast<unsigned long>(mu.length())), z_of(mu)) *
         product_word_moment(mu, model.n, model.N);
}

Rat schur_sum_coefficient(const ModelSpec& model, const Partition& mu,
                          bool allow_outside_window) {
  model.validate();
  const int d = mu.weight();
  if (d == 0) return Rat(1);
  if (d % 2 != 0) return Rat(0);
  check_window(d / 2, model.N, allow_outside_window);

  const Rat n_pow = rat_pow(Rat(model.N), mu.length());
  Rat total(0);
  for (const Partition& lambda : enumerate_partitions(d)) {
    if (lambda.length() > model.N) continue;
    const Int chi = character(lambda, mu);
    if (chi == 0) continue;
    const Rat principal = principal_specialization(lambda, model.N);
    const Rat ratio = gaussian_schur_average(lambda, model.N) / principal;
    total += principal * make_rat(chi, z_of(mu)) * n_pow * rat_pow(ratio, model.n);
  }
  return total;
}

Rat hurwitz_sum_coefficient(const ModelSpec& model, const Partition& mu,
                            const NormalizationRule& rule, bool allow_outside_window) {
  model.validate();
  const int d = mu.weight();
  if (d == 0) return Rat(1);
  if (d % 2 != 0) return Rat(0);
  const int k = d / 2;
  check_window(k, model.N, allow_outside_window);
  return rat_pow(Rat(model.N), rule.exponent_for(model.n, k, mu)) *
         bare_hurwitz_sum(model.n, model.N, mu);
}

Rat source_coefficient(const ModelSpec& model, const Partition& kappa, const Partition& mu,
                       const NormalizationRule& rule, bool allow_outside_window) {
  model.validate();
  if (kappa.weight() != mu.weight()) throw validation_error("incompatible weights");
  const int d = mu.weight();
  if (d == 0) return Rat(1);
  if (d % 2 != 0) return Rat(0);
  const int k = d / 2;
  check_window(k, model.N, allow_outside_window);
  return rat_pow(Rat(model.N), rule.exponent_for(model.n, k, mu)) *
         brickwork_hurwitz(kappa, mu, model.n);
}

std::complex<double> spectrum_power_sum(const std::vector<std::complex<double>>& spectrum,
                                        const Partition& kappa) {
  std::complex<double> prod(1.0, 0.0);
  for (int part : kappa.parts()) {
    std::complex<double> s(0.0, 0.0);
    for (const auto& z : spectrum) s += std::pow(z, part);
    prod *= s;
  }
  return prod;
}

bool CalibrationReport::uniform_consistent() const {
  return !cells.empty() && std::all_of(cells.begin(), cells.end(), [](const CalibrationCell& c) {
    return c.integer_power_ok && c.uniform_alpha.has_value();
  });
}

bool CalibrationReport::length_shift_consistent() const {
  return !cells.empty() && std::all_of(cells.begin(), cells.end(), [](const CalibrationCell& c) {
    return c.integer_power_ok && c.length_shift.has_value();
  });
}

NormalizationRule CalibrationReport::best_rule() const {
  NormalizationRule rule;
  if (uniform_consistent()) {
    rule.kind = NormalizationRule::Kind::Uniform;
    for (const CalibrationCell& c : cells) rule.cell[{c.n, c.k}] = *c.uniform_alpha;
    return rule;
  }
  if (length_shift_consistent()) {
    rule.kind = NormalizationRule::Kind::LengthShift;
    for (const CalibrationCell& c : cells) rule.cell[{c.n, c.k}] = *c.length_shift;
    return rule;
  }
  throw calibration_error("no consistent normalization rule for the measured cells");
}

CalibrationReport calibrate_normalization(int n, int max_k, const std::vector<int>& test_Ns) {
  if (n < 1 || n > kWickMaxFactors) throw validation_error("factor count outside 1..4");
  if (max_k < 1) throw validation_error("need at least one degree to calibrate");
  if (test_Ns.size() < 3) throw validation_error("need >= 3 distinct N values");

  CalibrationReport report;
  report.n = n;
  report.max_k_requested = max_k;
  report.max_k_measured = std::min(max_k, moment_k_cap(n));
  report.test_Ns = test_Ns;

  for (int k = 1; k <= report.max_k_measured; ++k) {
    CalibrationCell cell;
    cell.n = n;
    cell.k = k;
    cell.hypothesis_alpha = -static_cast<long>(n - 1) * k;

    for (const Partition& mu : enumerate_partitions(2 * k)) {
      std::optional<long> e_mu;
      bool ok = true;
      for (int N : test_Ns) {
        const ModelSpec model{n, N, {}};
        const Rat m = moment_coefficient(model, mu);
        const Rat h = bare_hurwitz_sum(n, N, mu);
        if (h == 0 || m == 0) {
          ok = (h == 0) == (m == 0);  // both-zero is uninformative, one-sided is a failure
          if (!ok) break;
          continue;
        }
        const std::optional<long> e = as_integer_power(m / h, N);
        if (!e) {
          ok = false;
          break;
        }
        if (e_mu && *e_mu != *e) {
          ok = false;  // exponent drifts with N: not a pure N power
          break;
        }
        e_mu = e;
      }
      if (!ok || !e_mu) {
        cell.integer_power_ok = cell.integer_power_ok && ok;
        if (e_mu) cell.exponents.emplace_back(mu, *e_mu);
        continue;
      }
      cell.exponents.emplace_back(mu, *e_mu);
    }

    if (cell.integer_power_ok && !cell.exponents.empty()) {
      bool uniform = true, shifted = true;
      const long alpha0 = cell.exponents.front().second;
      const long shift0 = cell.exponents.front().second - cell.exponents.front().first.length();
      for (const auto& [mu, e] : cell.exponents) {
        uniform = uniform && (e == alpha0);
        shifted = shifted && (e - mu.length() == shift0);
      }
      if (uniform) cell.uniform_alpha = alpha0;
      if (shifted) cell.length_shift = shift0;
    }
    report.cells.push_back(std::move(cell));
  }
  return report;
}

Rat normal_model_coefficient(int n, const Partition& kappa, const Partition& mu,
                             const std::vector<Partition>& t_profiles) {
  if (n < 1) throw validation_error("need n >= 1");
  if (static_cast<int>(t_profiles.size()) != n)
    throw validation_error("need one t-profile per factor");
  const int d = mu.weight();
  if (kappa.weight() != d) throw validation_error("incompatible weights");
  for (const Partition& t : t_profiles)
    if (t.weight() != d) throw validation_error("incompatible weights");
  if (d % 2 != 0) throw validation_error("brickwork requires even degree");
  const int k = d / 2;

  BranchProfile data;
  data.euler = 2;
  data.profiles = {kappa, mu};
  for (const Partition& t : t_profiles) data.profiles.push_back(t);
  for (int i = 0; i < n; ++i) data.profiles.push_back(Partition::repeated(2, k));
  return hurwitz_number(data);
}

Rat normal_model_lambda_sum_coefficient(int n, int N, const Partition& kappa,
                                        const Partition& mu,
                                        const std::vector<Partition>& t_profiles) {
  if (n < 1) throw validation_error("need n >= 1");
  if (static_cast<int>(t_profiles.size()) != n)
    throw validation_error("need one t-profile per factor");
  const int d = mu.weight();
  if (kappa.weight() != d) throw validation_error("incompatible weights");
  const Int dfact = factorial(static_cast<unsigned long>(d));
  Rat total(0);
  for (const Partition& lambda : enumerate_partitions(d)) {
    if (lambda.length() > N) continue;
    // One (dim/d!) from each extracted Schur factor plus (1-n) from the
    // prefactor: 2 + n + (1 - n) = 3 powers regardless of n.
    Rat term = rat_pow(make_rat(dimension(lambda), dfact), 3);
    term *= normalized_character(lambda, kappa);
    term *= normalized_character(lambda, mu);
    for (const Partition& t : t_profiles) term *= normalized_character(lambda, t);
    total += term;
  }
  return total;
}

Rat normal_model_corrected_coefficient(int n, int N, const Partition& kappa,
                                       const Partition& mu,
                                       const std::vector<Partition>& t_profiles) {
  if (n < 1) throw validation_error("need n >= 1");
  if (static_cast<int>(t_profiles.size()) != n)
    throw validation_error("need one t-profile per factor");
  const int d = mu.weight();
  if (kappa.weight() != d) throw validation_error("incompatible weights");

  BranchProfile data;
  data.euler = 2;
  data.profiles = {kappa, mu};
  long length_sum = mu.length();
  for (const Partition& t : t_profiles) {
    if (t.weight() != d) throw validation_error("incompatible weights");
    data.profiles.push_back(t);
    length_sum += t.length();
  }
  return rat_pow(Rat(N), length_sum) *
         rat_pow(make_rat(Int(2), Int(N)), static_cast<long>(n) * d) * hurwitz_number(data);
}

NormalConsistencyReport check_normal_model_consistency(int n, int k, int N) {
  NormalConsistencyReport report;
  report.n = n;
  report.k = k;
  report.N = N;

  const std::vector<Partition> parts = enumerate_partitions(2 * k);
  std::vector<std::vector<Partition>> tuples;  // (kappa, mu, t_1..t_n)
  std::vector<Partition> cur;
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == n + 2) {
      tuples.push_back(cur);
      return;
    }
    for (const Partition& p : parts) {
      cur.push_back(p);
      self(self, depth + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);

  report.proportional = true;
  for (const auto& tuple : tuples) {
    const Partition& kappa = tuple[0];
    const Partition& mu = tuple[1];
    const std::vector<Partition> ts(tuple.begin() + 2, tuple.end());
    const Rat a = normal_model_lambda_sum_coefficient(n, N, kappa, mu, ts);
    const Rat b = normal_model_coefficient(n, kappa, mu, ts);
    std::ostringstream label;
    label << "kappa=" << kappa << " mu=" << mu;
    for (const Partition& t : ts) label << " t=" << t;
    if ((a == 0) != (b == 0)) {
      report.proportional = false;
      report.detail = "support mismatch at " + label.str();
      return report;
    }
    if (b == 0) continue;
    const Rat ratio = a / b;
    if (!report.constant) {
      report.constant = ratio;
    } else if (*report.constant != ratio) {
      report.proportional = false;
      report.detail = "ratio drift at " + label.str() + ": " + rat_str(ratio) +
                      " vs " + rat_str(*report.constant);
      return report;
    }
  }
  if (!report.constant) report.detail = "all coefficients vanish at this degree";
  return report;
}

}  // namespace brickwork
