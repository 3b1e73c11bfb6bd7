#include "consim/commutant.hpp"
#include "consim/errors.hpp"
#include "consim/rng.hpp"

#include <doctest.h>

#include "test_util.hpp"

using namespace consim;

TEST_CASE("single-strip J = 0: S is one free block") {
    const Partition part({{1, 3}});
    Rng rng(41);
    CommutantParams params(part);
    const CMatrix c = rng.matrix(3, 3);
    params.set_block(1, 1, 0, c);
    CHECK(synthesize_S(part, params) == c);
    CHECK(check_semicommute(build_J(part), synthesize_S(part, params)));
}

TEST_CASE("2x2 nilpotent block: S = [[c, c'], [0, conj c]]") {
    const Partition part({{2, 1}});
    CommutantParams params(part);
    const GaussianRational c = grq(1, 2, -3, 1), cp = gr(999);
    params.set_block(1, 1, 0, CMatrix{{c}});
    params.set_block(1, 1, 1, CMatrix{{cp}});
    const CMatrix s = synthesize_S(part, params);
    CHECK(s == CMatrix{{c, cp}, {kZero, c.conj()}});
    CHECK(check_semicommute(build_J(part), s));
}

TEST_CASE("check_semicommute") {
    CHECK(check_semicommute(CMatrix::zeros(3, 3), CMatrix{{kI, kOne, kZero},
                                                          {kZero, gr(2), kOne},
                                                          {kOne, kZero, kI}}));
    const CMatrix j = build_J(Partition({{2, 1}}));
    CHECK(check_semicommute(j, CMatrix::identity(2)));
    // Hand computation: S = diag(1, -1) gives conj(S)J = [[0,-1],[0,0]] = JS.
    CHECK(check_semicommute(j, CMatrix{{kOne, kZero}, {kZero, gr(-1)}}));
    // S = diag(i, i) fails: conj(S)J = -i*J but JS = i*J.
    CHECK_FALSE(check_semicommute(j, CMatrix{{kI, kZero}, {kZero, kI}}));
    CHECK_THROWS_AS(check_semicommute(j, CMatrix::identity(3)), ShapeError);
}

TEST_CASE("commutant dimension formula") {
    CHECK(commutant_dim(Partition({{1, 4}})).complex_dim == 16);
    CHECK(commutant_dim(Partition({{4, 1}, {2, 1}})).complex_dim == 10);
    const CommutantDim d = commutant_dim(Partition({{3, 2}, {2, 1}}));
    CHECK(d.complex_dim == 22);
    CHECK(d.real_dim == 44);
    const RealSolveResult oracle =
        solve_real_linear(commutant_system(build_J(Partition({{3, 2}, {2, 1}}))));
    CHECK(oracle.real_dim() == 44);
}

TEST_CASE("completeness against the realified oracle") {
    Rng rng(42);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<std::pair<std::size_t, std::size_t>> parts;
        const std::size_t t = 1 + rng.below(3);
        for (std::size_t i = 0; i < t; ++i) {
            std::size_t p = 1 + rng.below(4);
            for (std::size_t k = 0; k < i; ++k)
                while (parts[k].first == p) ++p;
            parts.emplace_back(p, 1 + rng.below(2));
        }
        const Partition part(parts);
        const SemilinearSystem sys = commutant_system(build_J(part));
        const RealSolveResult sol = solve_real_linear(sys);
        CHECK(sol.real_dim() == commutant_dim(part).real_dim);
        for (const auto& b : sol.basis) {
            CHECK(satisfies(sys, b));
            CHECK(synthesize_S(part, extract_params(part, b)) == b);
        }
    }
}

TEST_CASE("parameter extraction inverts synthesis") {
    Rng rng(43);
    for (int trial = 0; trial < 10; ++trial) {
        const Partition part({{3, 1 + rng.below(3)}, {5, 1 + rng.below(2)}});
        const CommutantParams params = sample_commutant(part, rng.next());
        CHECK(extract_params(part, synthesize_S(part, params)) == params);
    }
}

TEST_CASE("structured nonsingularity matches the determinant") {
    const Partition part({{2, 1}});
    CommutantParams params(part);
    params.set_block(1, 1, 0, CMatrix{{gr(2)}});
    params.set_block(1, 1, 1, CMatrix{{gr(999)}});
    CHECK(is_nonsingular_structured(part, params));
    CHECK(is_nonsingular(synthesize_S(part, params)));

    params.set_block(1, 1, 0, CMatrix{{kZero}});
    CHECK_FALSE(is_nonsingular_structured(part, params));
    CHECK(det(synthesize_S(part, params)) == kZero);

    Rng rng(44);
    const Partition two({{3, 2}, {2, 2}});
    for (int trial = 0; trial < 20; ++trial) {
        CommutantParams draw = sample_commutant(two, rng.next());
        if (rng.chance(1, 2)) {
            // rank-deficient diagonal block
            CMatrix singular(2, 2);
            singular.at(0, 0) = rng.gaussian();
            singular.at(0, 1) = rng.gaussian();
            const std::size_t i = 1 + rng.below(2);
            draw.set_block(i, i, 0, singular);
        }
        CHECK(is_nonsingular_structured(two, draw) ==
              is_nonsingular(synthesize_S(two, draw)));
    }
}

TEST_CASE("weyr triangularity of commutant members") {
    const Partition part({{5, 1}, {3, 2}, {2, 1}});
    Rng rng(45);
    for (int trial = 0; trial < 10; ++trial)
        CHECK(weyr_triangularity_check(part, sample_commutant(part, rng.next())));
    CHECK(weyr_triangularity_check(Partition({{1, 3}}),
                                   sample_commutant(Partition({{1, 3}}), 1)));
    CHECK_THROWS_AS(weyr_triangularity_check(Partition({{2, 1}, {4, 1}}),
                                             sample_commutant(Partition({{2, 1}, {4, 1}}), 1)),
                    ValueError);
}

TEST_CASE("sampling is deterministic and honors the nonsingular flag") {
    const Partition part({{4, 2}, {2, 1}});
    CHECK(sample_commutant(part, 99) == sample_commutant(part, 99));
    CHECK(is_nonsingular_structured(part, sample_commutant(part, 99, true)));
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const CommutantParams params = sample_commutant(part, seed);
        CHECK(check_semicommute(build_J(part), synthesize_S(part, params)));
    }
}

TEST_CASE("parameter bookkeeping rejects bad shapes and indices") {
    const Partition part({{3, 2}, {2, 1}});
    CommutantParams params(part);
    CHECK(params.count(1, 1) == 3);
    CHECK(params.count(1, 2) == 2);
    CHECK_THROWS_AS(params.set_block(1, 2, 0, CMatrix::identity(2)), ShapeError);
    CHECK_THROWS_AS(params.set_block(1, 2, 2, CMatrix(2, 1)), ValueError);
    CHECK_THROWS_AS(params.block(3, 1, 0), ValueError);
}
