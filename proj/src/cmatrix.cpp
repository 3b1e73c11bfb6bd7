#include "consim/cmatrix.hpp"

#include "consim/errors.hpp"

#include <sstream>

namespace consim {

CMatrix::CMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw ShapeError("ragged matrix literal");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GaussianRational::one();
    return m;
}

bool CMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

CMatrix CMatrix::block(std::size_t r0, std::size_t c0, std::size_t nrows,
                       std::size_t ncols) const {
    if (r0 + nrows > rows_ || c0 + ncols > cols_) throw ShapeError("block out of range");
    CMatrix b(nrows, ncols);
    for (std::size_t r = 0; r < nrows; ++r)
        for (std::size_t c = 0; c < ncols; ++c) b.at(r, c) = at(r0 + r, c0 + c);
    return b;
}

void CMatrix::set_block(std::size_t r0, std::size_t c0, const CMatrix& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw ShapeError("block out of range");
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) at(r0 + r, c0 + c) = b.at(r, c);
}

CMatrix CMatrix::transpose() const {
    CMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

std::string CMatrix::str() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r == 0 ? "[" : " ");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "[") << at(r, c).str();
        os << "]" << (r + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
}

CMatrix conj(const CMatrix& a) {
    CMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j).conj();
    return r;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("matrix add: shape mismatch");
    CMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
    return r;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("matrix sub: shape mismatch");
    CMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
    return r;
}

CMatrix operator-(const CMatrix& a) {
    CMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = -a.at(i, j);
    return r;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw ShapeError("matrix mul: inner dimensions disagree");
    CMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const GaussianRational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const GaussianRational& bkj = b.at(k, j);
                if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

CMatrix operator*(const GaussianRational& s, const CMatrix& a) {
    CMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = s * a.at(i, j);
    return r;
}

CMatrix direct_sum(const CMatrix& a, const CMatrix& b) {
    CMatrix r(a.rows() + b.rows(), a.cols() + b.cols());
    r.set_block(0, 0, a);
    r.set_block(a.rows(), a.cols(), b);
    return r;
}

CMatrix direct_sum(const std::vector<CMatrix>& blocks) {
    std::size_t rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    CMatrix r(rows, cols);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        r.set_block(r0, c0, b);
        r0 += b.rows();
        c0 += b.cols();
    }
    return r;
}

namespace {

// Row echelon by exact Gauss elimination; returns the pivot count and leaves
// the determinant of the leading square part in det_out when requested.
std::size_t echelon(CMatrix m, GaussianRational* det_out) {
    const std::size_t nr = m.rows(), nc = m.cols();
    GaussianRational d = GaussianRational::one();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < nc && rank < nr; ++col) {
        std::size_t piv = rank;
        while (piv < nr && m.at(piv, col).is_zero()) ++piv;
        if (piv == nr) continue;
        if (piv != rank) {
            for (std::size_t j = col; j < nc; ++j) std::swap(m.at(piv, j), m.at(rank, j));
            d = -d;
        }
        const GaussianRational p = m.at(rank, col);
        d *= p;
        const GaussianRational pinv = p.inverse();
        for (std::size_t i = rank + 1; i < nr; ++i) {
            if (m.at(i, col).is_zero()) continue;
            const GaussianRational f = m.at(i, col) * pinv;
            m.at(i, col) = GaussianRational::zero();
            for (std::size_t j = col + 1; j < nc; ++j) {
                if (!m.at(rank, j).is_zero()) m.at(i, j) -= f * m.at(rank, j);
            }
        }
        ++rank;
    }
    if (det_out) *det_out = (rank == nr && nr == nc) ? d : GaussianRational::zero();
    return rank;
}

}  // namespace

std::size_t rank(const CMatrix& a) { return echelon(a, nullptr); }

GaussianRational det(const CMatrix& a) {
    if (!a.is_square()) throw ShapeError("determinant of non-square matrix");
    GaussianRational d;
    echelon(a, &d);
    return d;
}

bool is_nonsingular(const CMatrix& a) {
    return a.is_square() && rank(a) == a.rows();
}

CMatrix inverse(const CMatrix& a) {
    if (!a.is_square()) throw ShapeError("inverse of non-square matrix");
    const std::size_t n = a.rows();
    // Gauss-Jordan on [A | I].
    CMatrix m(n, 2 * n);
    m.set_block(0, 0, a);
    m.set_block(0, n, CMatrix::identity(n));
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m.at(piv, col).is_zero()) ++piv;
        if (piv == n) throw SingularError("inverse of singular matrix");
        if (piv != col)
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(m.at(piv, j), m.at(col, j));
        const GaussianRational pinv = m.at(col, col).inverse();
        for (std::size_t j = col; j < 2 * n; ++j) m.at(col, j) = pinv * m.at(col, j);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m.at(i, col).is_zero()) continue;
            const GaussianRational f = m.at(i, col);
            m.at(i, col) = GaussianRational::zero();
            for (std::size_t j = col + 1; j < 2 * n; ++j)
                if (!m.at(col, j).is_zero()) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return m.block(0, n, n, n);
}

std::vector<GaussianRational> char_poly(const CMatrix& a) {
    if (!a.is_square()) throw ShapeError("characteristic polynomial of non-square matrix");
    const std::size_t n = a.rows();
    // Faddeev-LeVerrier; exact over the rationals since it only divides by
    // the integers 1..n.
    std::vector<GaussianRational> coeff(n + 1);
    coeff[n] = GaussianRational::one();
    CMatrix mk = CMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        const CMatrix am = a * mk;
        GaussianRational tr;
        for (std::size_t i = 0; i < n; ++i) tr += am.at(i, i);
        const GaussianRational ck =
            GaussianRational(Rational(-1, static_cast<long long>(k))) * tr;
        coeff[n - k] = ck;
        mk = am;
        for (std::size_t i = 0; i < n; ++i) mk.at(i, i) += ck;
    }
    return coeff;
}

}  // namespace consim
