#include "consim/biquiver.hpp"

#include "consim/errors.hpp"
#include "consim/rng.hpp"

#include <set>

namespace consim {

void Biquiver::validate() const {
    if (vertex_count == 0) throw ValueError("biquiver needs at least one vertex");
    std::set<std::string> ids;
    for (const auto& a : arrows) {
        if (a.id.empty()) throw ValueError("arrow with empty id");
        if (!ids.insert(a.id).second) throw ValueError("duplicate arrow id '" + a.id + "'");
        if (a.source < 1 || a.source > vertex_count || a.target < 1 || a.target > vertex_count)
            throw ValueError("arrow '" + a.id + "' has an endpoint outside 1.." +
                             std::to_string(vertex_count));
    }
}

const Arrow& Biquiver::arrow(const std::string& id) const {
    for (const auto& a : arrows)
        if (a.id == id) return a;
    throw ValueError("unknown arrow id '" + id + "'");
}

std::size_t Biquiver::incidence(std::size_t vertex) const {
    std::size_t n = 0;
    for (const auto& a : arrows) {
        if (a.source == vertex) ++n;
        if (a.target == vertex) ++n;
    }
    return n;
}

void validate_representation(const Biquiver& bq, const Representation& rep) {
    bq.validate();
    if (rep.dims.size() != bq.vertex_count)
        throw ShapeError("representation has " + std::to_string(rep.dims.size()) +
                         " dimensions for " + std::to_string(bq.vertex_count) + " vertices");
    for (const auto& a : bq.arrows) {
        auto it = rep.mats.find(a.id);
        if (it == rep.mats.end()) throw ValueError("no matrix for arrow '" + a.id + "'");
        const CMatrix& m = it->second;
        if (m.rows() != rep.dims[a.target - 1] || m.cols() != rep.dims[a.source - 1])
            throw ShapeError("matrix for arrow '" + a.id + "' must be " +
                             std::to_string(rep.dims[a.target - 1]) + "x" +
                             std::to_string(rep.dims[a.source - 1]));
    }
    if (rep.mats.size() != bq.arrows.size())
        throw ValueError("representation carries matrices for unknown arrows");
}

Representation base_change(const Biquiver& bq, const Representation& rep,
                           const std::vector<CMatrix>& s) {
    validate_representation(bq, rep);
    if (s.size() != bq.vertex_count)
        throw ShapeError("need one transition matrix per vertex");
    std::vector<CMatrix> inv_plain(s.size()), inv_conj(s.size());
    for (std::size_t v = 0; v < s.size(); ++v) {
        if (s[v].rows() != rep.dims[v] || s[v].cols() != rep.dims[v])
            throw ShapeError("transition matrix at vertex " + std::to_string(v + 1) +
                             " has the wrong size");
        if (!is_nonsingular(s[v]))
            throw SingularError("transition matrix at vertex " + std::to_string(v + 1) +
                                " is singular");
        inv_plain[v] = inverse(s[v]);
        inv_conj[v] = inverse(conj(s[v]));
    }
    Representation out;
    out.dims = rep.dims;
    for (const auto& a : bq.arrows) {
        const CMatrix& r = rep.mats.at(a.id);
        const CMatrix& left = (a.kind == ArrowKind::full) ? inv_plain[a.target - 1]
                                                          : inv_conj[a.target - 1];
        out.mats.emplace(a.id, left * r * s[a.source - 1]);
    }
    return out;
}

bool equiv_check(const Biquiver& bq, const Representation& rep, const Representation& rep2,
                 const std::vector<CMatrix>& s) {
    return base_change(bq, rep, s) == rep2;
}

Representation random_rep(const Biquiver& bq, const std::vector<std::size_t>& dims,
                          std::uint64_t seed) {
    bq.validate();
    if (dims.size() != bq.vertex_count) throw ShapeError("one dimension per vertex required");
    Rng rng(seed);
    Representation rep;
    rep.dims = dims;
    for (const auto& a : bq.arrows)
        rep.mats.emplace(a.id, rng.matrix(dims[a.target - 1], dims[a.source - 1]));
    return rep;
}

std::vector<CMatrix> random_base_change(const std::vector<std::size_t>& dims,
                                        std::uint64_t seed) {
    Rng rng(seed);
    std::vector<CMatrix> s;
    s.reserve(dims.size());
    for (const std::size_t d : dims) s.push_back(rng.nonsingular_matrix(d));
    return s;
}

}  // namespace consim
