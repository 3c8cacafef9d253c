#include "doctest.h"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <thread>
#include <vector>

#include "brickwork/characters.hpp"
#include "brickwork/partition.hpp"

using namespace brickwork;

namespace {

// Independent oracle: evaluate s_lambda as the generating function of
// semistandard tableaux, then recover the character values by exact linear
// inversion of s_lambda = sum_mu chi_lambda(mu) p_mu / z_mu at generic
// rational points. Shares nothing with the border-strip recursion.
Rat ssyt_schur(const Partition& lam, const std::vector<Rat>& x) {
    if (lam.weight() == 0) return Rat(1);
    const auto& parts = lam.parts();
    const int rows = static_cast<int>(parts.size());
    const int K = static_cast<int>(x.size());
    std::vector<std::vector<int>> t(rows);
    for (int r = 0; r < rows; ++r) t[r].assign(parts[r], 0);
    Rat total = 0;
    std::function<void(int, int, const Rat&)> rec = [&](int r, int c, const Rat& prod) {
        if (r == rows) {
            total += prod;
            return;
        }
        int nr = r, nc = c + 1;
        if (nc == static_cast<int>(t[r].size())) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, t[r][c - 1]);           // rows weakly increase
        if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);       // columns strictly increase
        for (int v = lo; v <= K; ++v) {
            t[r][c] = v;
            rec(nr, nc, prod * x[v - 1]);
        }
    };
    rec(0, 0, Rat(1));
    return total;
}

Rat power_sum_monomial(const Partition& mu, const std::vector<Rat>& x) {
    Rat prod = 1;
    for (int part : mu.parts()) {
        Rat s = 0;
        for (const auto& xi : x) s += rat_pow(xi, part);
        prod *= s;
    }
    return prod;
}

// Exact Gaussian elimination; returns false if the system is singular.
bool solve_exact(std::vector<std::vector<Rat>> m, std::vector<Rat> rhs, std::vector<Rat>& out) {
    const int n = static_cast<int>(m.size());
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return false;
        std::swap(m[col], m[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col] / m[col][col];
            for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    out.assign(n, Rat(0));
    for (int r = 0; r < n; ++r) out[r] = rhs[r] / m[r][r];
    return true;
}

std::uint64_t lcg_step(std::uint64_t& s) {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return s >> 33;
}

}  // namespace

TEST_CASE("pinned character values") {
    CHECK(character(Partition({2}), Partition({2})) == 1);
    CHECK(character(Partition({1, 1}), Partition({2})) == -1);
    CHECK(character(Partition({2, 1}), Partition({3})) == -1);
    CHECK(character(Partition({2, 1}), Partition({2, 1})) == 0);
    CHECK(character(Partition({2, 1}), Partition({1, 1, 1})) == 2);
    CHECK(character(Partition({2, 2}), Partition({2, 2})) == 2);
    CHECK(character(Partition({2, 2}), Partition({3, 1})) == -1);
    CHECK(character(Partition({2, 2}), Partition({4})) == 0);
    CHECK(character(Partition({3, 2}), Partition({5})) == 0);
    CHECK(character(Partition({3, 2}), Partition({2, 2, 1})) == 1);
    CHECK(character(Partition(), Partition()) == 1);

    for (int d = 1; d <= 7; ++d)
        for (const auto& mu : enumerate_partitions(d)) {
            CHECK(character(Partition({d}), mu) == 1);  // trivial representation
            Int sign = (d - static_cast<int>(mu.length())) % 2 == 0 ? 1 : -1;
            CHECK(character(Partition::repeated(1, d), mu) == sign);  // sign representation
            CHECK(character(mu, Partition::repeated(1, d)) == dimension(mu));
        }
}

TEST_CASE("input validation and cap") {
    CHECK_THROWS_AS(character(Partition({2, 1}), Partition({2})), validation_error);
    CHECK_THROWS_AS(character(Partition({17}), Partition({17})), cap_error);
}

TEST_CASE("conjugating the row twists by the sign character") {
    for (int d = 1; d <= 7; ++d)
        for (const auto& lam : enumerate_partitions(d))
            for (const auto& mu : enumerate_partitions(d)) {
                Int sign = (d - static_cast<int>(mu.length())) % 2 == 0 ? 1 : -1;
                CHECK(character(conjugate(lam), mu) == sign * character(lam, mu));
            }
}

TEST_CASE("row and column orthogonality") {
    for (int d = 1; d <= 8; ++d) {
        auto table = character_table(d);
        const auto& ps = table.row_labels;
        REQUIRE(ps.size() == table.col_labels.size());
        const int n = static_cast<int>(ps.size());
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b) {
                Int row = 0, col = 0;
                for (int j = 0; j < n; ++j) {
                    row += class_size(ps[j]) * table.values[a][j] * table.values[b][j];
                    col += table.values[j][a] * table.values[j][b];
                }
                CHECK(row == (a == b ? factorial(d) : Int(0)));
                CHECK(col == (a == b ? z_of(ps[a]) : Int(0)));
            }
    }
}

TEST_CASE("normalized characters") {
    CHECK(normalized_character(Partition({2}), Partition({2})) == 1);
    CHECK(normalized_character(Partition({1, 1}), Partition({2})) == -1);
    CHECK(normalized_character(Partition({3, 1}), Partition({2, 1, 1})) == 2);
    // identity column: |C| = 1 and chi = dim, so phi = 1 for every row
    for (const auto& mu : enumerate_partitions(5))
        CHECK(normalized_character(mu, Partition::repeated(1, 5)) == 1);
}

TEST_CASE("tableau generating function inverts to the same characters") {
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    for (int d = 1; d <= 6; ++d) {
        auto mus = enumerate_partitions(d);
        const int n = static_cast<int>(mus.size());
        // generic rational evaluation points, one row of the system per point
        std::vector<std::vector<Rat>> points;
        for (int t = 0; t < n; ++t) {
            std::vector<Rat> x;
            for (int i = 0; i < d; ++i)
                x.push_back(make_rat(Int(1 + lcg_step(state) % 19), Int(1 + lcg_step(state) % 7)));
            points.push_back(std::move(x));
        }
        std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
        for (int t = 0; t < n; ++t)
            for (int j = 0; j < n; ++j) m[t][j] = power_sum_monomial(mus[j], points[t]) / Rat(z_of(mus[j]));
        for (const auto& lam : enumerate_partitions(d)) {
            std::vector<Rat> rhs;
            for (int t = 0; t < n; ++t) rhs.push_back(ssyt_schur(lam, points[t]));
            std::vector<Rat> sol;
            REQUIRE(solve_exact(m, rhs, sol));
            for (int j = 0; j < n; ++j) CHECK(Rat(character(lam, mus[j])) == sol[j]);
        }
    }
}

TEST_CASE("memo cache serializes and reloads") {
    clear_character_memo();
    character_table(5);
    auto populated = character_memo_size();
    CHECK(populated > 0);

    auto path = (std::filesystem::temp_directory_path() / "bw_char_cache_test.json").string();
    REQUIRE(save_character_memo(path));

    clear_character_memo();
    CHECK(character_memo_size() == 0);
    REQUIRE(load_character_memo(path));
    CHECK(character_memo_size() == populated);
    CHECK(character(Partition({3, 2}), Partition({2, 2, 1})) == 1);

    CHECK_FALSE(load_character_memo(path + ".does-not-exist"));
    std::filesystem::remove(path);
}

TEST_CASE("concurrent lookups agree") {
    clear_character_memo();
    std::vector<CharacterTable> tables(4);
    std::vector<std::thread> workers;
    for (int t = 0; t < 4; ++t)
        workers.emplace_back([&tables, t] { tables[t] = character_table(7); });
    for (auto& w : workers) w.join();
    for (int t = 1; t < 4; ++t) CHECK(tables[t].values == tables[0].values);
}
