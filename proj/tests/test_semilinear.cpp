#include "consim/errors.hpp"
#include "consim/rng.hpp"
#include "consim/semilinear.hpp"

#include <doctest.h>

#include "test_util.hpp"

using namespace consim;

TEST_CASE("apply conjugates after the linear action") {
    CHECK(apply(SemilinearMatrix{CMatrix{{kI}}}, CMatrix{{kOne}}) == CMatrix{{gr(0, -1)}});
    const SemilinearMatrix id2{CMatrix::identity(2)};
    CHECK(apply(id2, CMatrix{{kI}, {gr(2)}}) == CMatrix{{gr(0, -1)}, {gr(2)}});
    const SemilinearMatrix swap{CMatrix{{kZero, kOne}, {kOne, kZero}}};
    const GaussianRational a = grq(1, 2, 3, 1), b = gr(-2, 5);
    CHECK(apply(swap, CMatrix{{a}, {b}}) == CMatrix{{b.conj()}, {a.conj()}});
    CHECK_THROWS_AS(apply(id2, CMatrix{{kOne}}), ShapeError);
}

TEST_CASE("apply is additive and conjugate-homogeneous") {
    Rng rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + rng.below(3), m = 1 + rng.below(3);
        const SemilinearMatrix f{rng.matrix(m, n)};
        const CMatrix u = rng.matrix(n, 1), v = rng.matrix(n, 1);
        const GaussianRational alpha = rng.gaussian();
        CHECK(apply(f, u + v) == apply(f, u) + apply(f, v));
        CHECK(apply(f, alpha * u) == alpha.conj() * apply(f, u));
    }
}

TEST_CASE("compose gives the matrix of the linear composition") {
    const SemilinearMatrix idn{CMatrix::identity(3)};
    CHECK(compose(idn, idn) == CMatrix::identity(3));
    CHECK(compose(SemilinearMatrix{CMatrix{{kI}}}, SemilinearMatrix{CMatrix{{kOne}}}) ==
          CMatrix{{gr(0, -1)}});
    // conj(2i) * 3i = 6, cross-checked pointwise below.
    const SemilinearMatrix a{CMatrix{{gr(0, 2)}}}, b{CMatrix{{gr(0, 3)}}};
    const CMatrix composed = compose(a, b);
    CHECK(composed == CMatrix{{gr(6)}});
    const CMatrix u{{kOne}};
    CHECK(apply_linear(composed, u) == apply(a, apply(b, u)));
    CHECK_THROWS_AS(compose(a, SemilinearMatrix{CMatrix::identity(2)}), ShapeError);
}

TEST_CASE("compose matches pointwise application on random chains") {
    Rng rng(22);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t a = 1 + rng.below(3), b = 1 + rng.below(3), c = 1 + rng.below(3);
        const SemilinearMatrix f{rng.matrix(c, b)}, g{rng.matrix(b, a)};
        const CMatrix u = rng.matrix(a, 1);
        CHECK(apply_linear(compose(f, g), u) == apply(f, apply(g, u)));
    }
}

TEST_CASE("change of basis") {
    const SemilinearMatrix one{CMatrix{{kOne}}};
    CHECK(change_of_basis(one, CMatrix::identity(1), CMatrix::identity(1)) == one);
    // conj(i)^{-1} * 1 * i = -1
    CHECK(change_of_basis(one, CMatrix{{kI}}, CMatrix{{kI}}) ==
          SemilinearMatrix{CMatrix{{gr(-1)}}});
    CHECK_THROWS_AS(change_of_basis(one, CMatrix{{kZero}}, CMatrix{{kOne}}), SingularError);

    Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const SemilinearMatrix f{rng.matrix(3, 3)};
        const CMatrix s1 = rng.nonsingular_matrix(3), s2 = rng.nonsingular_matrix(3);
        const CMatrix t1 = rng.nonsingular_matrix(3), t2 = rng.nonsingular_matrix(3);
        CHECK(change_of_basis(change_of_basis(f, s1, s2), t1, t2) ==
              change_of_basis(f, s1 * t1, s2 * t2));
        CHECK(change_of_basis(change_of_basis(f, s1, s2), inverse(s1), inverse(s2)) == f);
    }
}

TEST_CASE("consimilarity transformation of pairs") {
    const MatrixPair p = make_pair_checked(CMatrix{{kI}}, CMatrix{{gr(2)}});
    CHECK(consim_transform(p, CMatrix::identity(1)) == p);
    const MatrixPair zeros{CMatrix::zeros(2, 2), CMatrix::zeros(2, 2)};
    Rng rng(24);
    CHECK(consim_transform(zeros, rng.nonsingular_matrix(2)) == zeros);
    for (int trial = 0; trial < 20; ++trial) {
        const MatrixPair r{rng.matrix(3, 3), rng.matrix(3, 3)};
        const CMatrix s = rng.nonsingular_matrix(3), t = rng.nonsingular_matrix(3);
        CHECK(consim_transform(consim_transform(r, s), t) == consim_transform(r, s * t));
    }
    CHECK_THROWS_AS(consim_transform(p, CMatrix{{kZero}}), SingularError);
    CHECK_THROWS_AS(make_pair_checked(CMatrix::identity(2), CMatrix::identity(3)), ShapeError);
}

TEST_CASE("invariant profile of (I, I)") {
    const MatrixPair p{CMatrix::identity(2), CMatrix::identity(2)};
    const InvariantProfile profile = consim_invariants(p, 1);
    CHECK(profile.words.size() == 4);
    for (const auto& w : profile.words) {
        // every word evaluates to I, char poly (x-1)^2
        CHECK(w.char_poly == std::vector<GaussianRational>{gr(1), gr(-2), gr(1)});
        CHECK(w.rank_powers == std::vector<std::size_t>{2, 2});
    }
    CHECK_THROWS_AS(consim_invariants(p, 0), ValueError);
}

TEST_CASE("invariant profiles are preserved by consimilarity") {
    Rng rng(25);
    for (int trial = 0; trial < 15; ++trial) {
        const std::size_t n = 1 + rng.below(3);
        const MatrixPair p{rng.matrix(n, n), rng.matrix(n, n)};
        const CMatrix s = rng.nonsingular_matrix(n);
        CHECK(consim_invariants(p, 2) == consim_invariants(consim_transform(p, s), 2));
    }
}

TEST_CASE("rank separation distinguishes non-consimilar pairs") {
    CMatrix a(2, 2);
    a.at(0, 1) = kOne;
    const MatrixPair p{a, CMatrix::zeros(2, 2)};
    const MatrixPair z{CMatrix::zeros(2, 2), CMatrix::zeros(2, 2)};
    const InvariantProfile pp = consim_invariants(p, 1), pz = consim_invariants(z, 1);
    CHECK(pp.rank_first == 1);
    CHECK(pz.rank_first == 0);
    CHECK_FALSE(pp == pz);
}
