#include "consim/biquiver.hpp"
#include "consim/errors.hpp"
#include "consim/rng.hpp"

#include <doctest.h>

#include "test_util.hpp"

using namespace consim;

namespace {

// The six-arrow demo graph: two dashed loops-and-edges around vertex 2, a
// full loop at 3, and parallel full/dashed arrows 2 -> 3.
Biquiver demo_biquiver() {
    Biquiver bq;
    bq.vertex_count = 3;
    bq.arrows = {
        {"alpha", 2, 1, ArrowKind::dashed},  {"beta", 3, 1, ArrowKind::full},
        {"gamma", 2, 2, ArrowKind::dashed},  {"delta", 2, 3, ArrowKind::full},
        {"epsilon", 2, 3, ArrowKind::dashed}, {"zeta", 3, 3, ArrowKind::full},
    };
    return bq;
}

}  // namespace

TEST_CASE("biquiver validation") {
    Biquiver bq = demo_biquiver();
    bq.validate();
    CHECK(bq.incidence(1) == 2);
    CHECK(bq.incidence(2) == 5);  // loop counted twice
    CHECK(bq.incidence(3) == 5);

    Biquiver dup = bq;
    dup.arrows.push_back({"alpha", 1, 1, ArrowKind::full});
    CHECK_THROWS_AS(dup.validate(), ValueError);
    Biquiver bad = bq;
    bad.arrows.push_back({"omega", 0, 1, ArrowKind::full});
    CHECK_THROWS_AS(bad.validate(), ValueError);
}

TEST_CASE("representation validation") {
    const Biquiver bq = demo_biquiver();
    Representation rep = random_rep(bq, {1, 2, 2}, 5);
    validate_representation(bq, rep);
    CHECK(rep.mats.at("alpha").rows() == 1);   // target dim
    CHECK(rep.mats.at("alpha").cols() == 2);   // source dim
    CHECK(rep.mats.at("delta").rows() == 2);

    Representation missing = rep;
    missing.mats.erase("zeta");
    CHECK_THROWS_AS(validate_representation(bq, missing), ValueError);
    Representation badshape = rep;
    badshape.mats.at("alpha") = CMatrix::identity(2);
    CHECK_THROWS_AS(validate_representation(bq, badshape), ShapeError);
}

TEST_CASE("base change: identity and the 1x1 dashed loop") {
    Biquiver loop;
    loop.vertex_count = 1;
    loop.arrows = {{"g", 1, 1, ArrowKind::dashed}};
    Representation rep;
    rep.dims = {1};
    rep.mats.emplace("g", CMatrix{{kOne}});
    // conj(i)^{-1} * 1 * i = -1
    const Representation out = base_change(loop, rep, {CMatrix{{kI}}});
    CHECK(out.mats.at("g") == CMatrix{{gr(-1)}});
    CHECK(base_change(loop, rep, {CMatrix::identity(1)}) == rep);
    CHECK_THROWS_AS(base_change(loop, rep, {CMatrix{{kZero}}}), SingularError);
}

TEST_CASE("base change is a left action on the demo biquiver") {
    const Biquiver bq = demo_biquiver();
    Rng rng(51);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<std::size_t> dims = {1 + rng.below(2), 1 + rng.below(2), 1 + rng.below(2)};
        const Representation rep = random_rep(bq, dims, rng.next());
        const auto s = random_base_change(dims, rng.next());
        const auto t = random_base_change(dims, rng.next());
        std::vector<CMatrix> st;
        for (std::size_t v = 0; v < dims.size(); ++v) st.push_back(s[v] * t[v]);
        CHECK(base_change(bq, base_change(bq, rep, s), t) == base_change(bq, rep, st));
    }
}

TEST_CASE("equiv_check") {
    const Biquiver bq = demo_biquiver();
    const std::vector<std::size_t> dims = {2, 1, 2};
    const Representation rep = random_rep(bq, dims, 7);
    const auto s = random_base_change(dims, 8);
    const Representation rep2 = base_change(bq, rep, s);
    CHECK(equiv_check(bq, rep, rep2, s));

    Representation perturbed = rep2;
    perturbed.mats.at("delta").at(0, 0) += kOne;
    CHECK_FALSE(equiv_check(bq, rep, perturbed, s));

    std::vector<CMatrix> ident;
    for (const std::size_t d : dims) ident.push_back(CMatrix::identity(d));
    CHECK(equiv_check(bq, rep, rep, ident));
}

TEST_CASE("random generators are deterministic and well-shaped") {
    const Biquiver bq = demo_biquiver();
    const std::vector<std::size_t> dims = {2, 2, 1};
    CHECK(random_rep(bq, dims, 9) == random_rep(bq, dims, 9));
    const auto s = random_base_change(dims, 10);
    const auto s2 = random_base_change(dims, 10);
    for (std::size_t v = 0; v < dims.size(); ++v) {
        CHECK(s[v] == s2[v]);
        CHECK(is_nonsingular(s[v]));
        CHECK(s[v].rows() == dims[v]);
    }
    const Representation rep = random_rep(bq, dims, 11);
    for (const auto& a : bq.arrows) {
        CHECK(rep.mats.at(a.id).rows() == dims[a.target - 1]);
        CHECK(rep.mats.at(a.id).cols() == dims[a.source - 1]);
    }
}
