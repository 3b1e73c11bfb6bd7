#include "consim/rng.hpp"

#include "consim/errors.hpp"

namespace consim {

CMatrix Rng::matrix(std::size_t rows, std::size_t cols, long long max_num, long long max_den) {
    CMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = gaussian(max_num, max_den);
    return m;
}

CMatrix Rng::nonsingular_matrix(std::size_t n, long long max_num, long long max_den) {
    for (int attempt = 0; attempt < 256; ++attempt) {
        CMatrix m = matrix(n, n, max_num, max_den);
        if (is_nonsingular(m)) return m;
    }
    throw ValueError("failed to draw a nonsingular matrix");
}

}  // namespace consim
