#include "doctest.h"

#include <algorithm>
#include <set>

#include "brickwork/permutation.hpp"

using namespace brickwork;

TEST_CASE("composition convention: left factor acts first") {
    Perm s(3), t(3);
    s.img = {1, 0, 2};  // swap 0,1
    t.img = {0, 2, 1};  // swap 1,2
    Perm st = compose(s, t);
    CHECK(st.img == std::vector<int>{2, 0, 1});  // 0 -> 1 -> 2, 1 -> 0 -> 0, 2 -> 2 -> 1
    Perm ts = compose(t, s);
    CHECK(ts.img == std::vector<int>{1, 2, 0});
    CHECK(is_identity(compose(s, inverse(s))));
    CHECK(is_identity(compose(inverse(t), t)));
    CHECK(is_identity(Perm(5)));
    CHECK_FALSE(is_identity(s));
}

TEST_CASE("cycle types") {
    CHECK(cycle_type(Perm(4)) == Partition({1, 1, 1, 1}));
    Perm c(5);
    c.img = {1, 2, 0, 4, 3};
    CHECK(cycle_type(c) == Partition({3, 2}));
    CHECK(cycle_type(Perm(0)) == Partition());
}

TEST_CASE("class enumeration matches class sizes") {
    for (int d = 1; d <= 6; ++d) {
        std::set<std::vector<int>> seen;
        Int total = 0;
        for (const auto& mu : enumerate_partitions(d)) {
            auto elems = class_elements(mu);
            CHECK(Int(elems.size()) == class_size(mu));
            for (const auto& g : elems) {
                CHECK(cycle_type(g) == mu);
                seen.insert(g.img);
            }
            total += Int(elems.size());
        }
        CHECK(total == factorial(d));               // classes partition the group
        CHECK(Int(seen.size()) == factorial(d));    // no duplicates across classes
    }
    CHECK_THROWS_AS(class_elements(Partition({11})), cap_error);
    CHECK_THROWS_AS(class_elements(Partition({9})), cap_error);           // above default cap
    CHECK(class_elements(Partition({9}), kHardEnumerationCap).size() == 40320);
    CHECK_THROWS_AS(class_elements(Partition({9}), 20), cap_error);       // hard cap wins
}

TEST_CASE("fixed-point-free involutions") {
    const Int expected[] = {1, 1, 3, 15, 105};
    for (int k = 0; k <= 4; ++k) {
        auto invs = fixed_point_free_involutions(k);
        CHECK(Int(invs.size()) == expected[k]);
        for (const auto& g : invs) {
            CHECK(is_identity(compose(g, g)));
            CHECK(cycle_type(g) == Partition::repeated(2, k));
        }
    }
    CHECK_THROWS_AS(fixed_point_free_involutions(6), cap_error);
}

TEST_CASE("factorization counts at degree two") {
    auto r = count_factorizations({Partition({2}), Partition({2})}, 2);
    CHECK(r.raw_count == 1);
    CHECK(r.normalized == make_rat(1, 2));
    CHECK(count_factorizations({Partition({2}), Partition({1, 1})}, 2).raw_count == 0);
    CHECK(count_factorizations({Partition({1, 1}), Partition({1, 1})}, 2).normalized == make_rat(1, 2));
    CHECK(count_factorizations({Partition({2}), Partition({2}), Partition({2})}, 2).raw_count == 0);
    CHECK(count_factorizations({Partition({2}), Partition({2}), Partition({2}), Partition({2})}, 2).raw_count == 1);
}

TEST_CASE("factorization counts: degenerate and single-profile cases") {
    CHECK_THROWS_AS(count_factorizations({}, 0), validation_error);
    CHECK(count_factorizations({Partition(), Partition()}, 0).normalized == 1);
    CHECK(count_factorizations({Partition({1, 1, 1})}, 3).raw_count == 1);  // only the identity class
    CHECK(count_factorizations({Partition({2, 1})}, 3).raw_count == 0);
    CHECK_THROWS_AS(count_factorizations({Partition({2}), Partition({1, 1})}, 3), validation_error);
    CHECK_THROWS_AS(count_factorizations({Partition({6, 5})}, 11, kHardEnumerationCap), cap_error);
}

TEST_CASE("count is invariant under reordering the profile list") {
    std::vector<Partition> profs = {Partition({2, 1, 1}), Partition({2, 2}), Partition({3, 1})};
    auto base = count_factorizations(profs, 4);
    std::sort(profs.begin(), profs.end());
    do {
        CHECK(count_factorizations(profs, 4).raw_count == base.raw_count);
    } while (std::next_permutation(profs.begin(), profs.end()));
}

TEST_CASE("worker count does not change the answer") {
    std::vector<Partition> profs = {Partition({3, 2, 1}), Partition({2, 2, 2}), Partition({6})};
    auto serial = count_factorizations(profs, 6, kDefaultEnumerationCap, 1);
    auto threaded = count_factorizations(profs, 6, kDefaultEnumerationCap, 4);
    CHECK(serial.raw_count == threaded.raw_count);
    CHECK(serial.normalized == threaded.normalized);
}

TEST_CASE("brickwork profile assembly") {
    auto direct = count_factorizations(
        {Partition({2}), Partition({2}), Partition({2}), Partition({2})}, 2);
    auto packed = count_brickwork(Partition({2}), Partition({2}), 2);
    CHECK(direct.raw_count == packed.raw_count);
    CHECK(packed.normalized == make_rat(1, 2));
    CHECK(count_brickwork(Partition({2}), Partition({1, 1}), 1).normalized == make_rat(1, 2));
    CHECK(count_brickwork(Partition({1, 1}), Partition({2}), 1).normalized == make_rat(1, 2));
    CHECK(count_brickwork(Partition({2}), Partition({2}), 1).raw_count == 0);
    CHECK_THROWS_AS(count_brickwork(Partition({3}), Partition({3}), 1), validation_error);
    CHECK_THROWS_AS(count_brickwork(Partition({2, 1}), Partition({2}), 1), validation_error);
}
