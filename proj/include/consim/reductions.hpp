#pragma once

#include "consim/biquiver.hpp"
#include "consim/commutant.hpp"
#include "consim/nilstruct.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace consim {

/*
 * Encodings of classification problems into matrix pairs (J, M) with J a
 * nilpotent block-Jordan matrix, built so that the consimilarity
 * transformations preserving J act on the payload subblocks of M exactly as
 * the source problem's own equivalence.
 */

enum class EncodingKind { pair, tuple, biquiver };

struct Placement {
    SubstripIndex row;
    SubstripIndex col;

    friend bool operator==(const Placement& a, const Placement& b) {
        return a.row == b.row && a.col == b.col;
    }
};

struct Encoding {
    EncodingKind kind;
    Partition part;
    CMatrix J;
    CMatrix M;
    std::map<std::string, Placement> placement;  // payload slot / arrow id -> position
    std::size_t block_size = 0;                  // n (pair and tuple kinds)
    std::size_t tuple_p = 0;
    std::size_t tuple_q = 0;
};

// Structural checks: J = build_J(part), M sized like J, and per-kind layout
// (for biquiver: occupancy and parity of every placement). Throws on failure.
void validate_encoding(const Encoding& enc);

// The joint constraint {conj(S)J = JS, M S = conj(S) M'} as a realified
// system; its nonsingular solutions are exactly the consimilarities
// (J, M) -> (J, M').
SemilinearSystem joint_transport_system(const CMatrix& j, const CMatrix& m, const CMatrix& m2);

/* ---- commuting-pair encoding ---- */

struct PairInstance {
    CMatrix x;
    CMatrix y;
};

// (X, Y) -> 5n x 5n pair: J for partition (4,n),(1,n); M carries X, Y,
// conj(X) and an identity anchor. Always satisfies conj(M)J = JM, so the
// pair defines commuting semilinear operators.
Encoding encode_commuting_pair(const CMatrix& x, const CMatrix& y);

PairInstance decode_pair(const Encoding& enc);

// S = diag(C, conj C, C, conj C, C).
CMatrix witness_commuting_pair(const CMatrix& c);

// Leading n x n diagonal subblock of a commutant member; whenever
// M S = conj(S) M' also holds, the result C satisfies
// (X, Y) C = conj(C) (X', Y').
CMatrix extract_commuting_witness(const CMatrix& s, std::size_t n);

/* ---- tuple encoding ---- */

struct TupleInstance {
    std::size_t n = 0;
    std::vector<CMatrix> xs;  // linear-operator slots
    std::vector<CMatrix> ys;  // semilinear-operator slots

    void validate() const;

    friend bool operator==(const TupleInstance& a, const TupleInstance& b) {
        return a.n == b.n && a.xs == b.xs && a.ys == b.ys;
    }
};

// Block layout of M_{X,Y}: X_i on the superdiagonal of the leading
// (p+1)-block nilpotent part, then Y_j on the diagonal, padded with one zero
// block when p is even so that Y_1 lands on an odd diagonal block. For p = 0
// the leading zero block itself serves as the padding.
struct TupleLayout {
    std::size_t block_count = 0;      // m, so J = J_m(0_n)
    std::vector<std::size_t> y_pos;   // 1-based diagonal block of each Y_j
};

TupleLayout tuple_layout(std::size_t p, std::size_t q);

Encoding encode_tuple(const TupleInstance& inst);

TupleInstance decode_tuple(const Encoding& enc);

// The per-slot similarity/consimilarity equations induced by the diagonal
// C, conj C, C, ... pattern: X_i * D_{i+1} = conj(D_i) * X'_i and
// Y_j * D_b = conj(D_b) * Y'_j with D_b = C for odd b, conj(C) for even b.
bool verify_tuple_conditions(const CMatrix& c, const TupleInstance& a, const TupleInstance& b);

// Same equations, reported slot by slot ("X1", ..., "Y1", ...).
std::vector<std::pair<std::string, bool>> tuple_condition_report(const CMatrix& c,
                                                                 const TupleInstance& a,
                                                                 const TupleInstance& b);

// S = C + conj(C) + C + ... (direct sum, block_count copies).
CMatrix witness_tuple(const CMatrix& c, std::size_t block_count);

CMatrix extract_tuple_witness(const CMatrix& s, std::size_t n, std::size_t block_count);

/* ---- biquiver encoding ---- */

// Default multiplicities p_i: 2 * incidence(i) (loops twice), at least 1,
// bumped upward to make them pairwise distinct.
Partition default_biquiver_partition(const Biquiver& bq, const std::vector<std::size_t>& dims);

// Places R_alpha for the arrow i -> j at an unused row substrip of strip j
// (even substrip for a full arrow, odd for dashed) and an unused odd column
// substrip of strip i, scanning arrows by (target, dashed before full, id)
// and substrips in ascending index order.
Encoding encode_biquiver(const Biquiver& bq, const Representation& rep,
                         const std::optional<Partition>& user_part = std::nullopt);

std::pair<Biquiver, Representation> decode_biquiver(const Encoding& enc);

// Block-diagonal S with strip i carrying S_i on odd substrips and conj(S_i)
// on even ones; transports the encoding of rep to the encoding of
// base_change(rep, s_list).
CMatrix witness_biquiver(const Encoding& enc, const std::vector<CMatrix>& s_list);

// First diagonal subblock of each strip; the remaining diagonal copies are
// checked against the alternation rather than trusted.
std::vector<CMatrix> extract_biquiver_witness(const Encoding& enc, const CMatrix& s);

}  // namespace consim
