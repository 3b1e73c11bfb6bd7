#pragma once

#include "consim/nilstruct.hpp"
#include "consim/realsolve.hpp"

#include <cstdint>
#include <vector>

namespace consim {

/*
 * Solutions S of  conj(S) J = J S  for a nilpotent block-Jordan J.
 *
 * Within block (i,j) of S, only "generalized diagonals" are nonzero: the
 * k-th diagonal (k = 0..min(p_i,p_j)-1) carries the free q_i x q_j parameter
 * C_ij^(k) in its first row and alternates with its conjugate row by row.
 * Diagonals are right-aligned when p_i <= p_j and start in row 1 in all
 * cases, so subblock (r, c) holds a copy of C_ij^(k) exactly when
 * k = c - r - (p_j - min(p_i, p_j)) >= 0 and r + k <= min(p_i, p_j),
 * conjugated when r is even.
 */
class CommutantParams {
public:
    explicit CommutantParams(const Partition& part);  // all parameters zero

    // Number of free parameters for block (i, j): min(p_i, p_j).
    std::size_t count(std::size_t i, std::size_t j) const;

    const CMatrix& block(std::size_t i, std::size_t j, std::size_t k) const;
    void set_block(std::size_t i, std::size_t j, std::size_t k, CMatrix value);

    const Partition& partition() const { return part_; }

    friend bool operator==(const CommutantParams& a, const CommutantParams& b) {
        return a.part_ == b.part_ && a.blocks_ == b.blocks_;
    }

private:
    std::size_t slot(std::size_t i, std::size_t j, std::size_t k) const;

    Partition part_;
    std::vector<CMatrix> blocks_;
    std::vector<std::size_t> offsets_;  // flat index of (i,j)'s first parameter
};

// Assemble S from the parameters; the result always satisfies conj(S)J = JS.
CMatrix synthesize_S(const Partition& part, const CommutantParams& params);

// Read the parameters back from any commutant member (first-row copies).
CommutantParams extract_params(const Partition& part, const CMatrix& s);

// Exact test of conj(S)J = JS.
bool check_semicommute(const CMatrix& j, const CMatrix& s);

struct CommutantDim {
    std::size_t complex_dim = 0;
    std::size_t real_dim = 0;
};

// sum over (i,j) of min(p_i,p_j) * q_i * q_j free complex parameters.
CommutantDim commutant_dim(const Partition& part);

// Nonsingularity from the structure alone: every main-diagonal parameter
// C_ii^(0) nonsingular.
bool is_nonsingular_structured(const Partition& part, const CommutantParams& params);

// For descending partitions the rearranged synthesize_S is upper block
// triangular in the lexicographic substrip layout; returns that check.
bool weyr_triangularity_check(const Partition& part, const CommutantParams& params);

// Deterministic small-entry parameter draw; with nonsingular set, diagonal
// parameters are redrawn until nonsingular.
CommutantParams sample_commutant(const Partition& part, std::uint64_t seed,
                                 bool nonsingular = false);

// The defining constraint as a realified system, for the independent oracle:
// conj(S)J - JS = 0 with S square of J's size.
SemilinearSystem commutant_system(const CMatrix& j);

}  // namespace consim
