#include "doctest.h"

#include <vector>

#include "brickwork/hurwitz.hpp"
#include "brickwork/permutation.hpp"

using namespace brickwork;

namespace {

Rat H(std::vector<Partition> profiles) {
    return hurwitz_number(BranchProfile{std::move(profiles), 2});
}

}  // namespace

TEST_CASE("pinned sphere counts at degree two") {
    CHECK(H({Partition({2}), Partition({1, 1}), Partition({2})}) == make_rat(1, 2));
    CHECK(H({Partition({2}), Partition({2}), Partition({2})}) == 0);
    CHECK(H({Partition({2}), Partition({2}), Partition({2}), Partition({2})}) == make_rat(1, 2));
    CHECK(H({Partition({1, 1}), Partition({1, 1})}) == make_rat(1, 2));
    CHECK(H({Partition({2}), Partition({2})}) == make_rat(1, 2));
    CHECK(H({Partition({2})}) == 0);
    CHECK(H({Partition({1, 1})}) == make_rat(1, 2));
}

TEST_CASE("degenerate inputs") {
    CHECK(hurwitz_number(BranchProfile{{}, 2}) == 1);
    CHECK(H({Partition(), Partition()}) == 1);
    CHECK_THROWS_AS(H({Partition({2}), Partition({3})}), validation_error);
}

TEST_CASE("brickwork wrapper") {
    CHECK(brickwork_hurwitz(Partition({2}), Partition({2}), 2) == make_rat(1, 2));
    CHECK(brickwork_hurwitz(Partition({2}), Partition({2}), 1) == 0);
    CHECK(brickwork_hurwitz(Partition({2}), Partition({1, 1}), 1) == make_rat(1, 2));
    CHECK(brickwork_hurwitz(Partition({1, 1}), Partition({2}), 2) == 0);
    CHECK(brickwork_hurwitz(Partition({1, 1}), Partition({1, 1}), 2) == make_rat(1, 2));
    // zero bricks leaves just (kappa, mu)
    CHECK(brickwork_hurwitz(Partition({2}), Partition({2}), 0) == make_rat(1, 2));
    CHECK(brickwork_hurwitz(Partition(), Partition(), 3) == 1);
    CHECK_THROWS_AS(brickwork_hurwitz(Partition({3}), Partition({3}), 1), validation_error);
    CHECK_THROWS_AS(brickwork_hurwitz(Partition({2}), Partition({1, 1, 1}), 1), validation_error);
}

TEST_CASE("character sum equals brute-force tuple count") {
    // every profile list of length 2 and 3 through degree 4
    for (int d = 1; d <= 4; ++d) {
        auto ps = enumerate_partitions(d);
        for (const auto& a : ps)
            for (const auto& b : ps) {
                CHECK(H({a, b}) == count_factorizations({a, b}, d).normalized);
                for (const auto& c : ps)
                    CHECK(H({a, b, c}) == count_factorizations({a, b, c}, d).normalized);
            }
    }
    // spot checks with four profiles at degree 4 and a pair at degree 6
    std::vector<Partition> quad = {Partition({2, 2}), Partition({3, 1}), Partition({2, 1, 1}),
                                   Partition({4})};
    CHECK(H(quad) == count_factorizations(quad, 4).normalized);
    std::vector<Partition> six = {Partition({3, 3}), Partition({2, 2, 2}), Partition({6})};
    CHECK(H(six) == count_factorizations(six, 6).normalized);
}

TEST_CASE("values are multiples of 1/d!") {
    for (int d = 1; d <= 5; ++d) {
        auto ps = enumerate_partitions(d);
        for (const auto& a : ps)
            for (const auto& b : ps) {
                Rat v = H({a, b, Partition::repeated(1, d)});
                Rat scaled = v * Rat(factorial(d));
                CHECK(scaled.get_den() == 1);
            }
    }
}

TEST_CASE("profile order is immaterial") {
    std::vector<Partition> profs = {Partition({2, 2}), Partition({3, 1}), Partition({2, 1, 1})};
    Rat base = H(profs);
    std::swap(profs[0], profs[2]);
    CHECK(H(profs) == base);
    std::swap(profs[0], profs[1]);
    CHECK(H(profs) == base);
}

TEST_CASE("adding an identity profile changes nothing") {
    for (int d = 1; d <= 4; ++d)
        for (const auto& a : enumerate_partitions(d))
            for (const auto& b : enumerate_partitions(d))
                CHECK(H({a, b, Partition::repeated(1, d)}) == H({a, b}));
}
