#include "doctest.h"

#include <complex>

#include "brickwork/ensembles.hpp"
#include "brickwork/mc.hpp"
#include "brickwork/permutation.hpp"
#include "brickwork/schur.hpp"
#include "brickwork/series.hpp"

using namespace brickwork;

namespace {

ModelSpec model(int n, int N) {
    ModelSpec m;
    m.n = n;
    m.N = N;
    return m;
}

NormalizationRule length_rule(int n, int max_k) {
    NormalizationRule rule;
    rule.kind = NormalizationRule::Kind::LengthShift;
    for (int k = 1; k <= max_k; ++k) rule.cell[{n, k}] = -static_cast<long>(n) * k;
    return rule;
}

}  // namespace

TEST_CASE("model validation") {
    CHECK_THROWS_AS(model(0, 3).validate(), validation_error);
    CHECK_THROWS_AS(model(5, 3).validate(), validation_error);
    CHECK_THROWS_AS(model(1, 0).validate(), validation_error);
    CHECK_NOTHROW(model(4, 1).validate());
}

TEST_CASE("direct expansion coefficients") {
    for (int N : {1, 3, 5}) {
        Rat half_n2 = make_rat(Int(N) * N, 2);
        CHECK(moment_coefficient(model(1, N), Partition({2})) == half_n2);
        CHECK(moment_coefficient(model(1, N), Partition({1, 1})) == half_n2);
        CHECK(moment_coefficient(model(2, N), Partition({2})) == make_rat(1, 2));
        CHECK(moment_coefficient(model(2, N), Partition({1, 1})) == half_n2);
        CHECK(moment_coefficient(model(1, N), Partition()) == 1);
        CHECK(moment_coefficient(model(1, N), Partition({1})) == 0);
        CHECK(moment_coefficient(model(2, N), Partition({2, 1})) == 0);
    }
}

TEST_CASE("character-sum form equals the direct expansion at every tested size") {
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= (n == 1 ? 3 : 2); ++k)
            for (int N : {1, 2, 3, 4, 5})
                for (const auto& mu : enumerate_partitions(2 * k)) {
                    const Rat lhs = schur_sum_coefficient(model(n, N), mu, true);
                    const Rat rhs = moment_coefficient(model(n, N), mu);
                    INFO("n=", n, " N=", N, " mu=", mu.str());
                    CHECK(lhs == rhs);
                }
}

TEST_CASE("window enforcement") {
    CHECK_THROWS_AS(schur_sum_coefficient(model(1, 3), Partition({2, 2})), window_error);
    CHECK_NOTHROW(schur_sum_coefficient(model(1, 4), Partition({2, 2})));
    auto rule = length_rule(1, 2);
    CHECK_THROWS_AS(hurwitz_sum_coefficient(model(1, 3), Partition({2, 2}), rule), window_error);
    CHECK_NOTHROW(hurwitz_sum_coefficient(model(1, 4), Partition({2, 2}), rule));
    CHECK_THROWS_AS(source_coefficient(model(1, 3), Partition({4}), Partition({2, 2}), rule),
                    window_error);
}

TEST_CASE("calibration measures the exponent rule and refutes the uniform guess") {
    auto report = calibrate_normalization(1, 3);
    CHECK(report.max_k_measured == 3);
    CHECK(report.cells.size() == 3);
    for (const auto& cell : report.cells) {
        CHECK(cell.integer_power_ok);
        CHECK(cell.hypothesis_alpha == 0);  // -(n-1)k at n = 1
        CHECK_FALSE(cell.uniform_alpha.has_value());
        REQUIRE(cell.length_shift.has_value());
        CHECK(*cell.length_shift == -cell.k);
        // measured exponents are exactly l(mu) - k
        for (const auto& [mu, e] : cell.exponents)
            CHECK(e == static_cast<long>(mu.length()) - cell.k);
    }
    CHECK_FALSE(report.uniform_consistent());
    CHECK(report.length_shift_consistent());
    auto rule = report.best_rule();
    CHECK(rule.kind == NormalizationRule::Kind::LengthShift);
    CHECK(rule.exponent_for(1, 2, Partition({2, 2})) == 0);

    auto r2 = calibrate_normalization(2, 2);
    CHECK(r2.max_k_measured == 2);
    for (const auto& cell : r2.cells) {
        CHECK(cell.integer_power_ok);
        CHECK(cell.hypothesis_alpha == -cell.k);
        CHECK_FALSE(cell.uniform_alpha.has_value());
        REQUIRE(cell.length_shift.has_value());
        CHECK(*cell.length_shift == -2 * cell.k);
    }

    auto r3 = calibrate_normalization(3, 2, {2, 3, 4, 5});
    for (const auto& cell : r3.cells) {
        REQUIRE(cell.length_shift.has_value());
        CHECK(*cell.length_shift == -3 * cell.k);
    }

    CHECK(calibrate_normalization(1, 9).max_k_measured == 4);  // clamped by the pairing cap
    CHECK_THROWS_AS(calibrate_normalization(1, 0), validation_error);
    CHECK_THROWS_AS(calibrate_normalization(1, 2, {3, 4}), validation_error);
}

TEST_CASE("Hurwitz form with the measured rule reproduces the expansion") {
    for (int n = 1; n <= 3; ++n) {
        auto rule = length_rule(n, 2);
        for (int k = 1; k <= 2; ++k)
            for (int N : {3, 4, 5})
                for (const auto& mu : enumerate_partitions(2 * k)) {
                    const Rat lhs = hurwitz_sum_coefficient(model(n, N), mu, rule, true);
                    const Rat rhs = moment_coefficient(model(n, N), mu);
                    INFO("n=", n, " N=", N, " mu=", mu.str());
                    CHECK(lhs == rhs);
                }
    }
    // the uniform guess does hold on the diagonal l(mu) = k, e.g. mu = (2^k)
    NormalizationRule uniform;
    uniform.kind = NormalizationRule::Kind::Uniform;
    uniform.cell[{1, 1}] = 0;
    uniform.cell[{2, 1}] = -1;
    CHECK(hurwitz_sum_coefficient(model(1, 3), Partition({2}), uniform) ==
          moment_coefficient(model(1, 3), Partition({2})));
    CHECK(hurwitz_sum_coefficient(model(2, 3), Partition({2}), uniform) == make_rat(1, 2));
    // but fails off the diagonal: that is what calibration reports
    CHECK(hurwitz_sum_coefficient(model(1, 3), Partition({1, 1}), uniform) !=
          moment_coefficient(model(1, 3), Partition({1, 1})));

    NormalizationRule empty_rule;
    CHECK_THROWS_AS(hurwitz_sum_coefficient(model(1, 3), Partition({2}), empty_rule),
                    calibration_error);
}

TEST_CASE("per-profile source coefficients") {
    auto rule = length_rule(1, 2);
    for (int N : {3, 4, 5}) {
        CHECK(source_coefficient(model(1, N), Partition({1, 1}), Partition({2}), rule) ==
              make_rat(1, 2));
        CHECK(source_coefficient(model(1, N), Partition({2}), Partition({2}), rule) == 0);
        CHECK(source_coefficient(model(1, N), Partition({2}), Partition({1, 1}), rule) ==
              make_rat(N, 2));
        CHECK(source_coefficient(model(1, N), Partition({1, 1}), Partition({1, 1}), rule) == 0);
    }
    CHECK_THROWS_AS(source_coefficient(model(1, 3), Partition({1}), Partition({2}), rule),
                    validation_error);

    // collapsing the source profiles at C = identity recovers the plain column
    for (int n = 1; n <= 2; ++n) {
        auto nrule = length_rule(n, 2);
        for (int k = 1; k <= 2; ++k)
            for (int N : {4, 5})
                for (const auto& mu : enumerate_partitions(2 * k)) {
                    Rat sum(0);
                    for (const auto& kappa : enumerate_partitions(2 * k))
                        sum += rat_pow(Rat(N), kappa.length()) *
                               source_coefficient(model(n, N), kappa, mu, nrule, true);
                    CHECK(sum == hurwitz_sum_coefficient(model(n, N), mu, nrule, true));
                }
    }
}

TEST_CASE("sampled source-model moments match the source coefficients") {
    // E[prod_i tr((HC)^{mu_i})] = z_mu N^{-l(mu)} sum_kappa
    //   source_coefficient(kappa, mu) p_kappa(spec(C))
    const int N = 3;
    auto rule = length_rule(1, 1);
    const std::vector<std::complex<double>> spectrum = {{1.0, 0.0}, {0.5, 0.0}, {2.0, 0.0}};
    Eigen::VectorXcd diag(3);
    diag << spectrum[0], spectrum[1], spectrum[2];
    Eigen::MatrixXcd C = diag.asDiagonal();

    for (const auto& mu : {Partition({2}), Partition({1, 1})}) {
        std::complex<double> predicted(0.0, 0.0);
        for (const auto& kappa : enumerate_partitions(2)) {
            const Rat coeff = source_coefficient(model(1, N), kappa, mu, rule);
            predicted += rat_double(coeff) * spectrum_power_sum(spectrum, kappa);
        }
        predicted *= rat_double(z_of(mu)) / std::pow(double(N), double(mu.length()));

        TraceWord word;
        word.n_factors = 1;
        word.sources = {C};
        auto est = mc_moment(word, mu, N, 80000, 424242, 2);
        INFO("mu=", mu.str(), " mean=", est.mean.real(), " predicted=", predicted.real());
        CHECK(est.within(predicted));
    }
}

TEST_CASE("spectrum power sums and gauge freedom") {
    const std::vector<std::complex<double>> spec = {{1.0, 0.0}, {0.0, 1.0}};
    CHECK(std::abs(spectrum_power_sum(spec, Partition({2}))) < 1e-15);
    CHECK(std::abs(spectrum_power_sum(spec, Partition({1, 1})) -
                   std::complex<double>(0.0, 2.0)) < 1e-15);
    CHECK(spectrum_power_sum(spec, Partition()) == std::complex<double>(1.0, 0.0));
    // reordering the spectrum is invisible to every power sum
    const std::vector<std::complex<double>> shuffled = {{0.0, 1.0}, {1.0, 0.0}};
    for (const auto& kappa : enumerate_partitions(4))
        CHECK(std::abs(spectrum_power_sum(spec, kappa) - spectrum_power_sum(shuffled, kappa)) <
              1e-14);
}

TEST_CASE("normal-matrix model: brick form against the permutation oracle") {
    CHECK(normal_model_coefficient(1, Partition({1, 1}), Partition({1, 1}), {Partition({1, 1})}) ==
          0);
    CHECK(normal_model_coefficient(1, Partition({2}), Partition({2}), {Partition({1, 1})}) == 0);
    CHECK(normal_model_coefficient(1, Partition({2}), Partition({1, 1}), {Partition({1, 1})}) ==
          make_rat(1, 2));

    for (const auto& kappa : enumerate_partitions(2))
        for (const auto& mu : enumerate_partitions(2))
            for (const auto& t : enumerate_partitions(2)) {
                const Rat formula = normal_model_coefficient(1, kappa, mu, {t});
                const Rat oracle =
                    count_factorizations({kappa, mu, t, Partition({2})}, 2).normalized;
                CHECK(formula == oracle);
            }

    CHECK_THROWS_AS(normal_model_coefficient(1, Partition({2}), Partition({2}), {}),
                    validation_error);
    CHECK_THROWS_AS(
        normal_model_coefficient(1, Partition({2}), Partition({1}), {Partition({2})}),
        validation_error);
    CHECK_THROWS_AS(
        normal_model_coefficient(1, Partition({1}), Partition({1}), {Partition({1})}),
        validation_error);
}

TEST_CASE("normal-matrix model: the two printed forms disagree and the check says so") {
    // the character-sum form is nonzero where the brick form vanishes
    CHECK(normal_model_lambda_sum_coefficient(1, 4, Partition({1, 1}), Partition({1, 1}),
                                              {Partition({1, 1})}) == make_rat(1, 4));
    CHECK(normal_model_coefficient(1, Partition({1, 1}), Partition({1, 1}),
                                   {Partition({1, 1})}) == 0);
    // row cutoff: at N = 1 the two-row term drops out
    CHECK(normal_model_lambda_sum_coefficient(1, 1, Partition({1, 1}), Partition({1, 1}),
                                              {Partition({1, 1})}) == make_rat(1, 8));

    auto report = check_normal_model_consistency(1, 1, 4);
    CHECK_FALSE(report.proportional);
    CHECK_FALSE(report.detail.empty());

    // at n = 2, degree 2 every dimension is 1 and the even brick power squares
    // away, so the forms coincide up to the single (dim/d!) weight: 1/2
    auto report2 = check_normal_model_consistency(2, 1, 4);
    CHECK(report2.proportional);
    REQUIRE(report2.constant.has_value());
    CHECK(*report2.constant == make_rat(1, 2));
    // ... and the coincidence breaks at degree 4
    auto report3 = check_normal_model_consistency(2, 2, 8);
    CHECK_FALSE(report3.proportional);
    CHECK_FALSE(report3.detail.empty());
}

TEST_CASE("normal-matrix model: corrected coefficients carry the sampled moments") {
    // closed forms first
    for (int N : {1, 2, 3, 5}) {
        CHECK(normal_model_corrected_coefficient(1, N, Partition({2}), Partition({2}),
                                                 {Partition({1, 1})}) == 2 * Rat(N));
        CHECK(normal_model_corrected_coefficient(1, N, Partition({2}), Partition({2}),
                                                 {Partition({2})}) == 0);
        CHECK(normal_model_corrected_coefficient(1, N, Partition({1}), Partition({1}),
                                                 {Partition({1})}) == 2 * Rat(N));
    }

    // E[tr(M^2) tr(M*^2)] = z_2 z_2 N^{-2} sum_kappa N^{l(kappa)} x
    //   corrected(kappa, (2), {(2)} yields 0; {(1,1)} column carries it) -> 8
    auto exact_pair_moment = [](int N, const Partition& mu, const Partition& t) -> Rat {
        Rat sum(0);
        for (const auto& kappa : enumerate_partitions(mu.weight()))
            sum += rat_pow(Rat(N), kappa.length()) *
                   normal_model_corrected_coefficient(1, N, kappa, mu, {t});
        return Rat(z_of(mu) * z_of(t)) * sum /
               rat_pow(Rat(N), mu.length() + t.length());
    };
    for (int N : {1, 2, 3}) {
        CHECK(exact_pair_moment(N, Partition({2}), Partition({2})) == 8);
        CHECK(exact_pair_moment(N, Partition({1, 1}), Partition({1, 1})) == 8);
        CHECK(exact_pair_moment(N, Partition({1}), Partition({1})) == 2);
    }

    // Monte Carlo against the sampler
    struct Case {
        Partition mu, t;
        double exact;
    };
    const int N = 3;
    for (const auto& c : {Case{Partition({1}), Partition({1}), 2.0},
                          Case{Partition({2}), Partition({2}), 8.0},
                          Case{Partition({1, 1}), Partition({1, 1}), 8.0}}) {
        auto est = mc_run(120000, 777, 2, [&](SplitMix64& rng) {
            const Eigen::MatrixXcd M = sample_normal_matrix(N, rng);
            const auto p = power_sums_of_matrix(M, 2);
            const auto q = power_sums_of_matrix(M.adjoint(), 2);
            return p.monomial(c.mu) * q.monomial(c.t);
        });
        INFO("mu=", c.mu.str(), " mean=", est.mean.real(), ",", est.mean.imag(), " se=",
             est.std_error);
        CHECK(est.within(c.exact));
    }
}
