#pragma once

#include "consim/gaussian.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace consim {

// Dense matrix over GaussianRational, row-major. Values are immutable in
// spirit: operations return fresh matrices; the few mutators (at, set_block)
// exist for construction code.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    // Row-by-row literal, mostly for tests.
    CMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

    static CMatrix zeros(std::size_t rows, std::size_t cols) { return CMatrix(rows, cols); }
    static CMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;

    const GaussianRational& at(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }
    GaussianRational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    CMatrix block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;
    void set_block(std::size_t r0, std::size_t c0, const CMatrix& b);

    CMatrix transpose() const;

    friend bool operator==(const CMatrix& a, const CMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const CMatrix& a, const CMatrix& b) { return !(a == b); }

    std::string str() const;  // debugging aid

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussianRational> entries_;
};

// Entrywise complex conjugate.
CMatrix conj(const CMatrix& a);

CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(const GaussianRational& s, const CMatrix& a);

CMatrix direct_sum(const CMatrix& a, const CMatrix& b);
CMatrix direct_sum(const std::vector<CMatrix>& blocks);

std::size_t rank(const CMatrix& a);
GaussianRational det(const CMatrix& a);
bool is_nonsingular(const CMatrix& a);
CMatrix inverse(const CMatrix& a);  // throws SingularError / ShapeError

// Coefficients of det(xI - A), ascending: index k holds the coefficient of
// x^k, with the leading coefficient fixed at 1.
std::vector<GaussianRational> char_poly(const CMatrix& a);

}  // namespace consim
