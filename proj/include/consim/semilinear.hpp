#pragma once

#include "consim/cmatrix.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace consim {

// Matrix of a semilinear map in fixed bases: the map sends a coordinate
// vector u to conj(mat * u). Stored codomain-rows x domain-columns.
struct SemilinearMatrix {
    CMatrix mat;

    std::size_t domain_dim() const { return mat.cols(); }
    std::size_t codomain_dim() const { return mat.rows(); }

    friend bool operator==(const SemilinearMatrix& a, const SemilinearMatrix& b) {
        return a.mat == b.mat;
    }
};

// Pair of equal-sized square matrices, acted on entrywise by consimilarity.
struct MatrixPair {
    CMatrix first;
    CMatrix second;

    std::size_t size() const { return first.rows(); }

    friend bool operator==(const MatrixPair& a, const MatrixPair& b) {
        return a.first == b.first && a.second == b.second;
    }
};

MatrixPair make_pair_checked(CMatrix first, CMatrix second);  // validates shapes

// u as a column vector; returns conj(mat * u).
CMatrix apply(const SemilinearMatrix& a, const CMatrix& u);

// Plain linear action mat * u, for cross-checking compositions.
CMatrix apply_linear(const CMatrix& mat, const CMatrix& u);

// Matrix of the linear composition of two semilinear maps: conj(A.mat) * B.mat.
// Rectangular chains are allowed as long as the dimensions meet.
CMatrix compose(const SemilinearMatrix& a, const SemilinearMatrix& b);

// conj(S_cod)^{-1} * mat * S_dom.
SemilinearMatrix change_of_basis(const SemilinearMatrix& a, const CMatrix& s_dom,
                                 const CMatrix& s_cod);

// conj(S)^{-1} (A1, A2) S, entrywise.
MatrixPair consim_transform(const MatrixPair& p, const CMatrix& s);

/*
 * Consimilarity separator. Alternating products w = prod conj(A_a)*A_b are
 * carried to S^{-1} w S by every consimilarity transformation, so their
 * characteristic polynomials and power ranks are invariants; so are the
 * plain ranks of A1, A2. Equal profiles are necessary, not sufficient, for
 * consimilarity.
 */
struct WordInvariant {
    std::vector<std::pair<int, int>> word;   // letters (a, b), 1-based matrix slots
    std::vector<GaussianRational> char_poly;  // of the evaluated word
    std::vector<std::size_t> rank_powers;     // rank(w^k), k = 1..size

    friend bool operator==(const WordInvariant& x, const WordInvariant& y) {
        return x.word == y.word && x.char_poly == y.char_poly && x.rank_powers == y.rank_powers;
    }
};

struct InvariantProfile {
    std::size_t size = 0;
    std::size_t depth = 0;
    std::size_t rank_first = 0;
    std::size_t rank_second = 0;
    std::vector<WordInvariant> words;  // prefix (depth-first) order, deterministic

    friend bool operator==(const InvariantProfile& x, const InvariantProfile& y) {
        return x.size == y.size && x.depth == y.depth && x.rank_first == y.rank_first &&
               x.rank_second == y.rank_second && x.words == y.words;
    }
};

InvariantProfile consim_invariants(const MatrixPair& p, std::size_t depth);

}  // namespace consim
