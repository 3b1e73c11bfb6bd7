#pragma once

#include "consim/cmatrix.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace consim {

/*
 * Block-layout bookkeeping for nilpotent block-Jordan matrices.
 *
 * A partition (p_1,q_1),...,(p_t,q_t) describes a matrix of size
 * N = sum p_i*q_i divided into t horizontal/vertical strips; strip i has
 * size p_i*q_i and is subdivided into p_i substrips of size q_i. Substrips
 * are addressed 1-based as (strip i, substrip alpha), printed "alpha,i".
 */

struct SubstripIndex {
    std::size_t strip = 1;     // i, 1..t
    std::size_t substrip = 1;  // alpha, 1..p_i

    friend bool operator==(const SubstripIndex& a, const SubstripIndex& b) {
        return a.strip == b.strip && a.substrip == b.substrip;
    }
    std::string str() const;  // "alpha,i"
};

class Partition {
public:
    explicit Partition(std::vector<std::pair<std::size_t, std::size_t>> parts);

    std::size_t strip_count() const { return parts_.size(); }
    std::size_t p(std::size_t i) const { return parts_[i - 1].first; }   // 1-based
    std::size_t q(std::size_t i) const { return parts_[i - 1].second; }  // 1-based
    const std::vector<std::pair<std::size_t, std::size_t>>& parts() const { return parts_; }

    std::size_t total() const;           // N
    std::size_t substrip_count() const;  // sum of p_i

    bool descending() const;  // p_1 > p_2 > ... > p_t
    Partition canonical() const;

    std::size_t strip_offset(std::size_t i) const;  // scalar offset of strip i
    std::size_t substrip_offset(const SubstripIndex& s) const;

    // All substrips in storage order: strip 1's substrips, then strip 2's, ...
    std::vector<SubstripIndex> substrips() const;

    void check_substrip(const SubstripIndex& s) const;  // throws ValueError

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }

private:
    std::vector<std::pair<std::size_t, std::size_t>> parts_;
};

// The p*q x p*q nilpotent block with I_q on the block superdiagonal;
// nilpotency index p.
CMatrix build_block(std::size_t p, std::size_t q);

// Direct sum of build_block(p_i, q_i) over the partition.
CMatrix build_J(const Partition& part);

// Rearrangement to lexicographic substrip order: substrips sorted by
// (substrip, strip). For matrices this is the simultaneous row/column
// permutation M -> P^{-1} M P.
struct WeyrPermutation {
    std::vector<SubstripIndex> order;     // new slot k holds order[k]
    std::vector<std::size_t> new_to_old;  // scalar index map

    // The 0/1 matrix P with to_weyr(M) == inverse(P) * M * P; O(N^2) storage,
    // intended for tests.
    CMatrix matrix() const;
};

WeyrPermutation weyr_permutation(const Partition& part);

CMatrix to_weyr(const CMatrix& m, const Partition& part);
CMatrix from_weyr(const CMatrix& m, const Partition& part);

}  // namespace consim
