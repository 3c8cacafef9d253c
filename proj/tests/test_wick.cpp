#include "doctest.h"

#include "brickwork/schur.hpp"
#include "brickwork/wick.hpp"

using namespace brickwork;

TEST_CASE("single-matrix trace moments") {
    for (int N = 1; N <= 6; ++N) {
        Rat rN(N);
        CHECK(wick_expectation(Partition(), N) == 1);
        CHECK(wick_expectation(Partition({2}), N) == rN);
        CHECK(wick_expectation(Partition({1, 1}), N) == 1);
        CHECK(wick_expectation(Partition({1}), N) == 0);
        CHECK(wick_expectation(Partition({3}), N) == 0);
        CHECK(wick_expectation(Partition({3, 1}), N) == 3);  // N-free; at N=1 it is E[x^4]
        // quartic family
        CHECK(wick_expectation(Partition({4}), N) == 2 * rN + make_rat(1, N));
        CHECK(wick_expectation(Partition({2, 2}), N) == rN * rN + 2);
        CHECK(wick_expectation(Partition({2, 1, 1}), N) == rN + 2 * make_rat(1, N));
        CHECK(wick_expectation(Partition({1, 1, 1, 1}), N) == 3);
        // sextic spot values (genus expansion: 5 planar + 10 genus-one pairings)
        CHECK(wick_expectation(Partition({6}), N) == 5 * rN + 10 * make_rat(1, N));
        CHECK(wick_expectation(Partition({2, 2, 2}), N) == rN * rN * rN + 6 * rN + 8 * make_rat(1, N));
    }
}

TEST_CASE("product-word moments") {
    for (int N = 1; N <= 5; ++N) {
        CHECK(product_word_moment(Partition({2}), 2, N) == make_rat(1, N));
        CHECK(product_word_moment(Partition({1, 1}), 2, N) == 1);
        CHECK(product_word_moment(Partition({2}), 3, N) == make_rat(1, N));
        CHECK(product_word_moment(Partition({1, 1}), 3, N) == make_rat(1, Int(N) * N));
        CHECK(product_word_moment(Partition({1}), 2, N) == 0);
        CHECK(product_word_moment(Partition(), 4, N) == 1);
    }
    CHECK(product_word_moment(Partition({2}), 1, 3) == wick_expectation(Partition({2}), 3));
}

TEST_CASE("caps and validation") {
    CHECK_THROWS_AS(product_word_moment(Partition({10}), 1, 3), cap_error);
    CHECK_THROWS_AS(product_word_moment(Partition({4, 2}), 2, 3), cap_error);
    CHECK_THROWS_AS(product_word_moment(Partition({2}), 5, 3), validation_error);
    CHECK_THROWS_AS(product_word_moment(Partition({2}), 0, 3), validation_error);
    CHECK_THROWS_AS(product_word_moment(Partition({2}), 2, 0), validation_error);
    CHECK(product_word_moment(Partition({8}), 1, 3).get_den() != 0);  // boundary accepted
    CHECK(product_word_moment(Partition({2, 2}), 2, 3).get_den() != 0);
}

TEST_CASE("average Schur polynomials of a Gaussian matrix") {
    for (int N = 1; N <= 6; ++N) {
        CHECK(gaussian_schur_average(Partition({2}), N) == make_rat(N + 1, 2));
        CHECK(gaussian_schur_average(Partition({1, 1}), N) == make_rat(1 - N, 2));
        CHECK(gaussian_schur_average(Partition({1}), N) == 0);
        CHECK(gaussian_schur_average(Partition({2, 1}), N) == 0);
        CHECK(gaussian_schur_average(Partition(), N) == 1);
    }
}

TEST_CASE("Schur averages factor through the quadratic specialization") {
    // E[s_lambda(H)] = (prod of N + contents) * s_lambda at p = (0, 1/N, 0, ...)
    for (int d = 0; d <= 6; ++d)
        for (const auto& lam : enumerate_partitions(d))
            for (int N = 1; N <= 6; ++N) {
                Rat rhs = Rat(content_product(lam, N)) *
                          brick_specialization(lam, make_rat(1, N));
                CHECK(gaussian_schur_average(lam, N) == rhs);
            }
}
