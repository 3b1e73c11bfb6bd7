#include "consim/semilinear.hpp"

#include "consim/errors.hpp"

namespace consim {

MatrixPair make_pair_checked(CMatrix first, CMatrix second) {
    if (!first.is_square() || !second.is_square() || first.rows() != second.rows())
        throw ShapeError("matrix pair must be two square matrices of equal size");
    return MatrixPair{std::move(first), std::move(second)};
}

CMatrix apply(const SemilinearMatrix& a, const CMatrix& u) {
    if (u.cols() != 1 || u.rows() != a.domain_dim())
        throw ShapeError("vector length does not match the domain dimension");
    return conj(a.mat * u);
}

CMatrix apply_linear(const CMatrix& mat, const CMatrix& u) {
    if (u.cols() != 1 || u.rows() != mat.cols())
        throw ShapeError("vector length does not match the matrix");
    return mat * u;
}

CMatrix compose(const SemilinearMatrix& a, const SemilinearMatrix& b) {
    if (a.domain_dim() != b.codomain_dim())
        throw ShapeError("composition dimensions disagree");
    return conj(a.mat) * b.mat;
}

SemilinearMatrix change_of_basis(const SemilinearMatrix& a, const CMatrix& s_dom,
                                 const CMatrix& s_cod) {
    if (s_dom.rows() != a.domain_dim() || s_cod.rows() != a.codomain_dim())
        throw ShapeError("transition matrices do not match the map's dimensions");
    return SemilinearMatrix{inverse(conj(s_cod)) * a.mat * s_dom};
}

MatrixPair consim_transform(const MatrixPair& p, const CMatrix& s) {
    if (s.rows() != p.size()) throw ShapeError("transformation size mismatch");
    const CMatrix sinv = inverse(conj(s));
    return MatrixPair{sinv * p.first * s, sinv * p.second * s};
}

namespace {

// letters[2*(a-1) + (b-1)] = conj(A_a) * A_b
void collect_words(const std::vector<CMatrix>& letters, std::size_t depth,
                   std::vector<WordInvariant>& out, std::vector<std::pair<int, int>>& word,
                   const CMatrix& value) {
    if (!word.empty()) {
        WordInvariant inv;
        inv.word = word;
        inv.char_poly = char_poly(value);
        CMatrix power = value;
        for (std::size_t k = 1; k <= value.rows(); ++k) {
            inv.rank_powers.push_back(rank(power));
            if (k < value.rows()) power = power * value;
        }
        out.push_back(std::move(inv));
    }
    if (word.size() == depth) return;
    for (int a = 1; a <= 2; ++a) {
        for (int b = 1; b <= 2; ++b) {
            word.emplace_back(a, b);
            collect_words(letters, depth, out, word, value * letters[2 * (a - 1) + (b - 1)]);
            word.pop_back();
        }
    }
}

}  // namespace

InvariantProfile consim_invariants(const MatrixPair& p, std::size_t depth) {
    if (depth < 1) throw ValueError("invariant depth must be >= 1");
    if (!p.first.is_square() || p.first.rows() != p.second.rows() || !p.second.is_square())
        throw ShapeError("invariants need a pair of equal square matrices");
    InvariantProfile profile;
    profile.size = p.size();
    profile.depth = depth;
    profile.rank_first = rank(p.first);
    profile.rank_second = rank(p.second);
    std::vector<CMatrix> letters;
    letters.reserve(4);
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b)
            letters.push_back(conj(a == 1 ? p.first : p.second) * (b == 1 ? p.first : p.second));
    std::vector<std::pair<int, int>> word;
    collect_words(letters, depth, profile.words, word, CMatrix::identity(p.size()));
    return profile;
}

}  // namespace consim
