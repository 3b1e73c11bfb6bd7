#include "consim/realsolve.hpp"

#include "consim/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <utility>

namespace consim {

void SemilinearSystem::add_equation(MatrixEquation eq) {
    for (const auto& t : eq.terms) {
        if (t.left.cols() != rows_ || t.right.rows() != cols_)
            throw ShapeError("system term does not fit the unknown's shape");
        if (t.left.rows() != eq.rhs.rows() || t.right.cols() != eq.rhs.cols())
            throw ShapeError("system term does not match the equation's shape");
    }
    equations_.push_back(std::move(eq));
}

void SemilinearSystem::add_homogeneous(std::vector<SemilinearTerm> terms) {
    if (terms.empty()) throw ValueError("equation with no terms");
    MatrixEquation eq;
    eq.rhs = CMatrix::zeros(terms.front().left.rows(), terms.front().right.cols());
    eq.terms = std::move(terms);
    add_equation(std::move(eq));
}

namespace {

using Col = std::uint32_t;
using Entry = std::pair<Col, Rational>;

struct SparseRow {
    std::vector<Entry> lhs;  // sorted by column
    Rational rhs;
};

// a -= f * b, merging sorted entry lists; b's columns may enter a.
void combine(SparseRow& a, const SparseRow& b, const Rational& f) {
    std::vector<Entry> out;
    out.reserve(a.lhs.size() + b.lhs.size());
    std::size_t i = 0, j = 0;
    while (i < a.lhs.size() || j < b.lhs.size()) {
        if (j == b.lhs.size() || (i < a.lhs.size() && a.lhs[i].first < b.lhs[j].first)) {
            out.push_back(a.lhs[i++]);
        } else if (i == a.lhs.size() || b.lhs[j].first < a.lhs[i].first) {
            Rational v = -f * b.lhs[j].second;
            if (v != 0) out.emplace_back(b.lhs[j].first, std::move(v));
            ++j;
        } else {
            Rational v = a.lhs[i].second - f * b.lhs[j].second;
            if (v != 0) out.emplace_back(a.lhs[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    a.lhs = std::move(out);
    a.rhs -= f * b.rhs;
}

const Rational* find_col(const SparseRow& r, Col col) {
    auto it = std::lower_bound(r.lhs.begin(), r.lhs.end(), col,
                               [](const Entry& e, Col c) { return e.first < c; });
    return (it != r.lhs.end() && it->first == col) ? &it->second : nullptr;
}

struct Realifier {
    std::size_t m, n;

    Col x_index(std::size_t u, std::size_t v) const { return Col(2 * (u * n + v)); }
    Col y_index(std::size_t u, std::size_t v) const { return Col(2 * (u * n + v) + 1); }

    // Split the complex rows of one matrix equation into sparse real rows.
    void emit(const MatrixEquation& eq, std::vector<SparseRow>& rows, bool& inconsistent) const {
        const std::size_t out_rows = eq.rhs.rows(), out_cols = eq.rhs.cols();

        // Per-term sparsity of the known factors.
        struct TermNz {
            std::vector<std::vector<std::pair<std::size_t, GaussianRational>>> left_rows;
            std::vector<std::vector<std::pair<std::size_t, GaussianRational>>> right_cols;
            bool conj;
        };
        std::vector<TermNz> tnz;
        tnz.reserve(eq.terms.size());
        for (const auto& t : eq.terms) {
            TermNz z;
            z.conj = t.conj_unknown;
            z.left_rows.resize(out_rows);
            for (std::size_t r = 0; r < out_rows; ++r)
                for (std::size_t u = 0; u < m; ++u)
                    if (!t.left.at(r, u).is_zero()) z.left_rows[r].emplace_back(u, t.left.at(r, u));
            z.right_cols.resize(out_cols);
            for (std::size_t c = 0; c < out_cols; ++c)
                for (std::size_t v = 0; v < n; ++v)
                    if (!t.right.at(v, c).is_zero())
                        z.right_cols[c].emplace_back(v, t.right.at(v, c));
            tnz.push_back(std::move(z));
        }

        for (std::size_t r = 0; r < out_rows; ++r) {
            for (std::size_t c = 0; c < out_cols; ++c) {
                // Complex coefficient per unknown entry, plain and conjugated.
                std::map<std::size_t, GaussianRational> plain, conjd;
                for (const auto& z : tnz) {
                    for (const auto& [u, lv] : z.left_rows[r]) {
                        for (const auto& [v, rv] : z.right_cols[c]) {
                            auto& slot = (z.conj ? conjd : plain)[u * n + v];
                            slot += lv * rv;
                        }
                    }
                }
                // gamma*(x+iy) = (gx - hy) + i(hx + gy);
                // gamma*(x-iy) = (gx + hy) + i(hx - gy),  gamma = g + hi.
                std::map<Col, Rational> re_coeff, im_coeff;
                for (const auto& [uv, g] : plain) {
                    re_coeff[Col(2 * uv)] += g.re;
                    re_coeff[Col(2 * uv + 1)] -= g.im;
                    im_coeff[Col(2 * uv)] += g.im;
                    im_coeff[Col(2 * uv + 1)] += g.re;
                }
                for (const auto& [uv, g] : conjd) {
                    re_coeff[Col(2 * uv)] += g.re;
                    re_coeff[Col(2 * uv + 1)] += g.im;
                    im_coeff[Col(2 * uv)] += g.im;
                    im_coeff[Col(2 * uv + 1)] -= g.re;
                }
                auto finish = [&](const std::map<Col, Rational>& coeff, const Rational& rhs) {
                    SparseRow row;
                    for (const auto& [col, val] : coeff)
                        if (val != 0) row.lhs.emplace_back(col, val);
                    row.rhs = rhs;
                    if (row.lhs.empty()) {
                        if (rhs != 0) inconsistent = true;
                        return;
                    }
                    rows.push_back(std::move(row));
                };
                finish(re_coeff, eq.rhs.at(r, c).re);
                finish(im_coeff, eq.rhs.at(r, c).im);
            }
        }
    }
};

}  // namespace

RealSolveResult solve_real_linear(const SemilinearSystem& sys) {
    const std::size_t m = sys.unknown_rows(), n = sys.unknown_cols();
    const std::size_t ncols = 2 * m * n;
    Realifier real{m, n};

    bool inconsistent = false;
    std::vector<SparseRow> rows;
    for (const auto& eq : sys.equations()) real.emit(eq, rows, inconsistent);

    // Sparse Gauss-Jordan: repeatedly take the shortest unprocessed row,
    // pivot on its rarest column, and clear that column everywhere.
    std::vector<std::vector<std::uint32_t>> occ(ncols);
    for (std::uint32_t id = 0; id < rows.size(); ++id)
        for (const auto& e : rows[id].lhs) occ[e.first].push_back(id);

    using HeapItem = std::pair<std::size_t, std::uint32_t>;  // (nnz, row)
    std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<>> heap;
    for (std::uint32_t id = 0; id < rows.size(); ++id) heap.emplace(rows[id].lhs.size(), id);

    std::vector<bool> processed(rows.size(), false);
    std::vector<std::int64_t> pivot_row_of_col(ncols, -1);
    std::vector<std::pair<Col, std::uint32_t>> pivots;  // (col, row)

    while (!heap.empty()) {
        auto [nnz, id] = heap.top();
        heap.pop();
        if (processed[id]) continue;
        if (rows[id].lhs.size() != nnz) continue;  // stale entry; a fresh one exists
        if (rows[id].lhs.empty()) {
            if (rows[id].rhs != 0) inconsistent = true;
            processed[id] = true;
            continue;
        }

        Col pivot_col = rows[id].lhs.front().first;
        std::size_t best = occ[pivot_col].size();
        for (const auto& e : rows[id].lhs) {
            if (occ[e.first].size() < best) {
                best = occ[e.first].size();
                pivot_col = e.first;
            }
        }

        const Rational pivot_val = *find_col(rows[id], pivot_col);
        if (pivot_val != 1) {
            for (auto& e : rows[id].lhs) e.second /= pivot_val;
            rows[id].rhs /= pivot_val;
        }

        auto victims = std::move(occ[pivot_col]);
        occ[pivot_col].clear();
        for (std::uint32_t other : victims) {
            if (other == id) continue;
            const Rational* f = find_col(rows[other], pivot_col);
            if (!f) continue;  // stale occurrence
            const Rational factor = *f;
            combine(rows[other], rows[id], factor);
            for (const auto& e : rows[other].lhs) occ[e.first].push_back(other);
            if (!processed[other]) heap.emplace(rows[other].lhs.size(), other);
        }
        occ[pivot_col] = {id};

        processed[id] = true;
        pivot_row_of_col[pivot_col] = id;
        pivots.emplace_back(pivot_col, id);
    }

    RealSolveResult result;
    if (inconsistent) {
        result.consistent = false;
        return result;
    }

    // Free columns span the solution space; scatter each pivot row's
    // coefficients into the basis vector of the corresponding free column.
    std::vector<std::int64_t> basis_index(ncols, -1);
    std::vector<CMatrix> basis;
    for (std::size_t col = 0; col < ncols; ++col) {
        if (pivot_row_of_col[col] >= 0) continue;
        basis_index[col] = static_cast<std::int64_t>(basis.size());
        CMatrix b(m, n);
        const std::size_t uv = col / 2;
        GaussianRational& slot = b.at(uv / n, uv % n);
        slot = (col % 2 == 0) ? GaussianRational::one() : GaussianRational::i();
        basis.push_back(std::move(b));
    }
    CMatrix particular(m, n);
    for (const auto& [pcol, prow] : pivots) {
        const std::size_t uv = pcol / 2;
        const std::size_t u = uv / n, v = uv % n;
        const bool real_part = (pcol % 2 == 0);
        auto add_value = [&](CMatrix& target, const Rational& val) {
            if (real_part)
                target.at(u, v).re += val;
            else
                target.at(u, v).im += val;
        };
        add_value(particular, rows[prow].rhs);
        for (const auto& [col, coeff] : rows[prow].lhs) {
            if (col == pcol) continue;
            add_value(basis[static_cast<std::size_t>(basis_index[col])], -coeff);
        }
    }
    result.particular = std::move(particular);
    result.basis = std::move(basis);
    return result;
}

bool satisfies(const SemilinearSystem& sys, const CMatrix& s) {
    if (s.rows() != sys.unknown_rows() || s.cols() != sys.unknown_cols())
        throw ShapeError("candidate solution has the wrong shape");
    const CMatrix sc = conj(s);
    for (const auto& eq : sys.equations()) {
        CMatrix acc = CMatrix::zeros(eq.rhs.rows(), eq.rhs.cols());
        for (const auto& t : eq.terms) acc = acc + t.left * (t.conj_unknown ? sc : s) * t.right;
        if (acc != eq.rhs) return false;
    }
    return true;
}

}  // namespace consim
