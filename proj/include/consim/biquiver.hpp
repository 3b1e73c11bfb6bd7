#pragma once

#include "consim/cmatrix.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace consim {

// Directed graph with two kinds of arrows: full arrows carry linear maps,
// dashed arrows carry semilinear maps. Loops and parallel arrows are allowed;
// arrows are keyed by their unique id.
enum class ArrowKind { full, dashed };

struct Arrow {
    std::string id;
    std::size_t source = 1;  // 1-based vertex
    std::size_t target = 1;
    ArrowKind kind = ArrowKind::full;

    friend bool operator==(const Arrow& a, const Arrow& b) {
        return a.id == b.id && a.source == b.source && a.target == b.target && a.kind == b.kind;
    }
};

struct Biquiver {
    std::size_t vertex_count = 0;
    std::vector<Arrow> arrows;

    void validate() const;  // endpoints in range, ids unique
    const Arrow& arrow(const std::string& id) const;

    // Incident arrow count at a vertex, loops counted twice.
    std::size_t incidence(std::size_t vertex) const;

    friend bool operator==(const Biquiver& a, const Biquiver& b) {
        return a.vertex_count == b.vertex_count && a.arrows == b.arrows;
    }
};

// Spaces and maps: dims[i-1] is the dimension at vertex i; the matrix of an
// arrow i -> j has shape q_j x q_i (codomain rows, domain columns).
struct Representation {
    std::vector<std::size_t> dims;
    std::map<std::string, CMatrix> mats;

    friend bool operator==(const Representation& a, const Representation& b) {
        return a.dims == b.dims && a.mats == b.mats;
    }
};

void validate_representation(const Biquiver& bq, const Representation& rep);

// Full arrows become S_j^{-1} R S_i, dashed arrows conj(S_j)^{-1} R S_i.
Representation base_change(const Biquiver& bq, const Representation& rep,
                           const std::vector<CMatrix>& s);

bool equiv_check(const Biquiver& bq, const Representation& rep, const Representation& rep2,
                 const std::vector<CMatrix>& s);

Representation random_rep(const Biquiver& bq, const std::vector<std::size_t>& dims,
                          std::uint64_t seed);

std::vector<CMatrix> random_base_change(const std::vector<std::size_t>& dims,
                                        std::uint64_t seed);

}  // namespace consim
