#include "consim/errors.hpp"
#include "consim/nilstruct.hpp"
#include "consim/rng.hpp"

#include <doctest.h>

#include "test_util.hpp"

using namespace consim;

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(Partition({}), ValueError);
    CHECK_THROWS_AS(Partition({{2, 1}, {2, 2}}), ValueError);  // duplicate p
    CHECK_THROWS_AS(Partition({{0, 1}}), ValueError);
    CHECK_THROWS_AS(Partition({{1, 0}}), ValueError);
    const Partition part({{2, 3}, {4, 1}});
    CHECK(part.total() == 10);
    CHECK(part.substrip_count() == 6);
    CHECK_FALSE(part.descending());
    CHECK(part.canonical().descending());
    CHECK(part.canonical().p(1) == 4);
    CHECK(part.strip_offset(2) == 6);
    CHECK(part.substrip_offset({2, 3}) == 8);
    CHECK_THROWS_AS(part.substrip_offset({2, 5}), ValueError);
    CHECK_THROWS_AS(part.substrip_offset({3, 1}), ValueError);
}

TEST_CASE("build_block") {
    CHECK(build_block(2, 1) == CMatrix{{kZero, kOne}, {kZero, kZero}});
    CHECK(build_block(1, 3) == CMatrix::zeros(3, 3));
    const CMatrix j32 = build_block(3, 2);
    CHECK(j32.rows() == 6);
    CHECK(j32.block(0, 2, 2, 2) == CMatrix::identity(2));
    CHECK(j32.block(2, 4, 2, 2) == CMatrix::identity(2));
    CHECK(j32.block(0, 0, 2, 2).is_zero());
    CHECK(j32.block(2, 0, 4, 2).is_zero());
}

TEST_CASE("build_J on the 4+2 example") {
    CHECK(build_J(Partition({{2, 1}})) == CMatrix{{kZero, kOne}, {kZero, kZero}});
    CHECK(build_J(Partition({{1, 2}})) == CMatrix::zeros(2, 2));
    const CMatrix j = build_J(Partition({{4, 1}, {2, 1}}));
    CMatrix expected(6, 6);
    expected.at(0, 1) = kOne;
    expected.at(1, 2) = kOne;
    expected.at(2, 3) = kOne;
    expected.at(4, 5) = kOne;
    CHECK(j == expected);
}

TEST_CASE("build_J is nilpotent of index max p_i") {
    Rng rng(31);
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<std::pair<std::size_t, std::size_t>> parts;
        const std::size_t t = 1 + rng.below(3);
        for (std::size_t i = 0; i < t; ++i)
            parts.emplace_back(0, 1 + rng.below(2));
        // distinct p values
        std::size_t pmax = 0;
        for (std::size_t i = 0; i < t; ++i) {
            parts[i].first = 1 + rng.below(4);
            for (std::size_t k = 0; k < i; ++k)
                while (parts[k].first == parts[i].first) ++parts[i].first;
            pmax = std::max(pmax, parts[i].first);
        }
        const Partition part(parts);
        const CMatrix j = build_J(part);
        CMatrix power = CMatrix::identity(part.total());
        for (std::size_t k = 0; k + 1 < pmax; ++k) power = power * j;
        CHECK_FALSE(power.is_zero());
        CHECK((power * j).is_zero());
    }
}

TEST_CASE("weyr permutation on a single strip is the identity") {
    const Partition part({{1, 4}});
    const auto w = weyr_permutation(part);
    for (std::size_t k = 0; k < 4; ++k) CHECK(w.new_to_old[k] == k);
    CHECK(to_weyr(build_J(part), part) == build_J(part));
    const Partition two({{2, 1}});
    CHECK(to_weyr(build_J(two), two) == build_J(two));
}

TEST_CASE("weyr rearrangement of the 4+2 example") {
    const Partition part({{4, 1}, {2, 1}});
    // lexicographic substrip order: (1,1),(1,2),(2,1),(2,2),(3,1),(4,1)
    const auto w = weyr_permutation(part);
    CHECK(w.order[0] == SubstripIndex{1, 1});
    CHECK(w.order[1] == SubstripIndex{2, 1});
    CHECK(w.order[2] == SubstripIndex{1, 2});
    CHECK(w.order[3] == SubstripIndex{2, 2});
    CHECK(w.order[4] == SubstripIndex{1, 3});
    CHECK(w.order[5] == SubstripIndex{1, 4});

    CMatrix expected(6, 6);
    expected.at(0, 2) = kOne;  // (1,1) -> (2,1)
    expected.at(1, 3) = kOne;  // (1,2) -> (2,2)
    expected.at(2, 4) = kOne;  // (2,1) -> (3,1)
    expected.at(4, 5) = kOne;  // (3,1) -> (4,1)
    CHECK(to_weyr(build_J(part), part) == expected);
}

TEST_CASE("weyr rearrangement round-trips and matches the permutation matrix") {
    Rng rng(32);
    for (int trial = 0; trial < 15; ++trial) {
        const std::size_t q2 = 1 + rng.below(2);
        const Partition part({{3, 1 + rng.below(2)}, {1, q2}, {2, 1 + rng.below(2)}});
        const CMatrix m = rng.matrix(part.total(), part.total());
        const CMatrix p = weyr_permutation(part).matrix();
        CHECK(p.transpose() * p == CMatrix::identity(part.total()));
        const CMatrix mw = to_weyr(m, part);
        CHECK(mw == inverse(p) * m * p);
        CHECK(from_weyr(mw, part) == m);
    }
    CHECK_THROWS_AS(to_weyr(CMatrix::identity(3), Partition({{2, 1}})), ShapeError);
}
