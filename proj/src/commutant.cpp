#include "consim/commutant.hpp"

#include "consim/errors.hpp"
#include "consim/rng.hpp"

#include <algorithm>

namespace consim {

CommutantParams::CommutantParams(const Partition& part) : part_(part) {
    const std::size_t t = part.strip_count();
    offsets_.reserve(t * t);
    std::size_t total = 0;
    for (std::size_t i = 1; i <= t; ++i) {
        for (std::size_t j = 1; j <= t; ++j) {
            offsets_.push_back(total);
            total += std::min(part.p(i), part.p(j));
        }
    }
    blocks_.reserve(total);
    for (std::size_t i = 1; i <= t; ++i)
        for (std::size_t j = 1; j <= t; ++j)
            for (std::size_t k = 0; k < std::min(part.p(i), part.p(j)); ++k)
                blocks_.emplace_back(part.q(i), part.q(j));
}

std::size_t CommutantParams::count(std::size_t i, std::size_t j) const {
    return std::min(part_.p(i), part_.p(j));
}

std::size_t CommutantParams::slot(std::size_t i, std::size_t j, std::size_t k) const {
    const std::size_t t = part_.strip_count();
    if (i < 1 || i > t || j < 1 || j > t) throw ValueError("parameter strip index out of range");
    if (k >= count(i, j)) throw ValueError("parameter diagonal index out of range");
    return offsets_[(i - 1) * t + (j - 1)] + k;
}

const CMatrix& CommutantParams::block(std::size_t i, std::size_t j, std::size_t k) const {
    return blocks_[slot(i, j, k)];
}

void CommutantParams::set_block(std::size_t i, std::size_t j, std::size_t k, CMatrix value) {
    if (value.rows() != part_.q(i) || value.cols() != part_.q(j))
        throw ShapeError("parameter C_" + std::to_string(i) + std::to_string(j) + "^(" +
                         std::to_string(k) + ") must be " + std::to_string(part_.q(i)) + "x" +
                         std::to_string(part_.q(j)));
    blocks_[slot(i, j, k)] = std::move(value);
}

CMatrix synthesize_S(const Partition& part, const CommutantParams& params) {
    if (!(params.partition() == part)) throw ShapeError("parameters belong to another partition");
    const std::size_t t = part.strip_count();
    CMatrix s(part.total(), part.total());
    for (std::size_t i = 1; i <= t; ++i) {
        for (std::size_t j = 1; j <= t; ++j) {
            const std::size_t pi = part.p(i), pj = part.p(j);
            const std::size_t d = std::min(pi, pj);
            const std::size_t off = pj - d;
            for (std::size_t k = 0; k < d; ++k) {
                const CMatrix& c = params.block(i, j, k);
                const CMatrix cbar = conj(c);
                for (std::size_t r = 1; r + k <= d; ++r) {
                    const SubstripIndex row{i, r};
                    const SubstripIndex col{j, r + off + k};
                    s.set_block(part.substrip_offset(row), part.substrip_offset(col),
                                (r % 2 == 1) ? c : cbar);
                }
            }
        }
    }
    return s;
}

CommutantParams extract_params(const Partition& part, const CMatrix& s) {
    if (s.rows() != part.total() || s.cols() != part.total())
        throw ShapeError("matrix does not match the partition's size");
    const std::size_t t = part.strip_count();
    CommutantParams params(part);
    for (std::size_t i = 1; i <= t; ++i) {
        for (std::size_t j = 1; j <= t; ++j) {
            const std::size_t d = std::min(part.p(i), part.p(j));
            const std::size_t off = part.p(j) - d;
            for (std::size_t k = 0; k < d; ++k) {
                // Canonical copy: row 1 of the k-th diagonal, unconjugated.
                const std::size_t r0 = part.substrip_offset({i, 1});
                const std::size_t c0 = part.substrip_offset({j, off + 1 + k});
                params.set_block(i, j, k, s.block(r0, c0, part.q(i), part.q(j)));
            }
        }
    }
    return params;
}

bool check_semicommute(const CMatrix& j, const CMatrix& s) {
    if (!j.is_square() || !s.is_square() || j.rows() != s.rows())
        throw ShapeError("semicommute check needs equal square matrices");
    return conj(s) * j == j * s;
}

CommutantDim commutant_dim(const Partition& part) {
    CommutantDim dim;
    const std::size_t t = part.strip_count();
    for (std::size_t i = 1; i <= t; ++i)
        for (std::size_t j = 1; j <= t; ++j)
            dim.complex_dim += std::min(part.p(i), part.p(j)) * part.q(i) * part.q(j);
    dim.real_dim = 2 * dim.complex_dim;
    return dim;
}

bool is_nonsingular_structured(const Partition& part, const CommutantParams& params) {
    for (std::size_t i = 1; i <= part.strip_count(); ++i)
        if (!is_nonsingular(params.block(i, i, 0))) return false;
    return true;
}

bool weyr_triangularity_check(const Partition& part, const CommutantParams& params) {
    if (!part.descending())
        throw ValueError("triangularity check requires p_1 > p_2 > ... > p_t");
    const CMatrix sw = to_weyr(synthesize_S(part, params), part);
    const auto w = weyr_permutation(part);

    std::vector<std::size_t> bounds;  // start offset of each rearranged substrip
    bounds.reserve(w.order.size() + 1);
    std::size_t off = 0;
    for (const auto& s : w.order) {
        bounds.push_back(off);
        off += part.q(s.strip);
    }
    bounds.push_back(off);

    for (std::size_t slot_r = 0; slot_r < w.order.size(); ++slot_r)
        for (std::size_t slot_c = 0; slot_c < slot_r; ++slot_c)
            for (std::size_t r = bounds[slot_r]; r < bounds[slot_r + 1]; ++r)
                for (std::size_t c = bounds[slot_c]; c < bounds[slot_c + 1]; ++c)
                    if (!sw.at(r, c).is_zero()) return false;
    return true;
}

CommutantParams sample_commutant(const Partition& part, std::uint64_t seed, bool nonsingular) {
    Rng rng(seed);
    CommutantParams params(part);
    const std::size_t t = part.strip_count();
    for (std::size_t i = 1; i <= t; ++i) {
        for (std::size_t j = 1; j <= t; ++j) {
            for (std::size_t k = 0; k < params.count(i, j); ++k) {
                if (nonsingular && i == j && k == 0) {
                    params.set_block(i, j, k, rng.nonsingular_matrix(part.q(i)));
                } else {
                    params.set_block(i, j, k, rng.matrix(part.q(i), part.q(j)));
                }
            }
        }
    }
    return params;
}

SemilinearSystem commutant_system(const CMatrix& j) {
    if (!j.is_square()) throw ShapeError("commutant of a non-square matrix");
    const std::size_t n = j.rows();
    SemilinearSystem sys(n, n);
    SemilinearTerm lhs{CMatrix::identity(n), j, /*conj_unknown=*/true};
    SemilinearTerm rhs{-j, CMatrix::identity(n), /*conj_unknown=*/false};
    sys.add_homogeneous({lhs, rhs});
    return sys;
}

}  // namespace consim
