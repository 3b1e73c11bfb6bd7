#include "consim/nilstruct.hpp"

#include "consim/errors.hpp"

#include <algorithm>
#include <set>

namespace consim {

std::string SubstripIndex::str() const {
    return std::to_string(substrip) + "," + std::to_string(strip);
}

Partition::Partition(std::vector<std::pair<std::size_t, std::size_t>> parts)
    : parts_(std::move(parts)) {
    if (parts_.empty()) throw ValueError("partition needs at least one strip");
    std::set<std::size_t> seen;
    for (const auto& [p, q] : parts_) {
        if (p < 1 || q < 1) throw ValueError("partition entries must be >= 1");
        if (!seen.insert(p).second)
            throw ValueError("multiplicities p_i must be pairwise distinct");
    }
}

std::size_t Partition::total() const {
    std::size_t n = 0;
    for (const auto& [p, q] : parts_) n += p * q;
    return n;
}

std::size_t Partition::substrip_count() const {
    std::size_t n = 0;
    for (const auto& [p, q] : parts_) n += p;
    return n;
}

bool Partition::descending() const {
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i - 1].first <= parts_[i].first) return false;
    return true;
}

Partition Partition::canonical() const {
    auto sorted = parts_;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    return Partition(sorted);
}

std::size_t Partition::strip_offset(std::size_t i) const {
    std::size_t off = 0;
    for (std::size_t k = 1; k < i; ++k) off += p(k) * q(k);
    return off;
}

std::size_t Partition::substrip_offset(const SubstripIndex& s) const {
    check_substrip(s);
    return strip_offset(s.strip) + (s.substrip - 1) * q(s.strip);
}

std::vector<SubstripIndex> Partition::substrips() const {
    std::vector<SubstripIndex> out;
    out.reserve(substrip_count());
    for (std::size_t i = 1; i <= strip_count(); ++i)
        for (std::size_t a = 1; a <= p(i); ++a) out.push_back({i, a});
    return out;
}

void Partition::check_substrip(const SubstripIndex& s) const {
    if (s.strip < 1 || s.strip > strip_count() || s.substrip < 1 || s.substrip > p(s.strip))
        throw ValueError("substrip " + s.str() + " outside the partition");
}

CMatrix build_block(std::size_t p, std::size_t q) {
    if (p < 1 || q < 1) throw ValueError("block parameters must be >= 1");
    CMatrix j(p * q, p * q);
    for (std::size_t a = 0; a + 1 < p; ++a)
        j.set_block(a * q, (a + 1) * q, CMatrix::identity(q));
    return j;
}

CMatrix build_J(const Partition& part) {
    std::vector<CMatrix> blocks;
    blocks.reserve(part.strip_count());
    for (const auto& [p, q] : part.parts()) blocks.push_back(build_block(p, q));
    return direct_sum(blocks);
}

WeyrPermutation weyr_permutation(const Partition& part) {
    WeyrPermutation w;
    w.order = part.substrips();
    std::stable_sort(w.order.begin(), w.order.end(),
                     [](const SubstripIndex& a, const SubstripIndex& b) {
                         if (a.substrip != b.substrip) return a.substrip < b.substrip;
                         return a.strip < b.strip;
                     });
    w.new_to_old.reserve(part.total());
    for (const auto& s : w.order) {
        const std::size_t off = part.substrip_offset(s);
        for (std::size_t k = 0; k < part.q(s.strip); ++k) w.new_to_old.push_back(off + k);
    }
    return w;
}

CMatrix WeyrPermutation::matrix() const {
    const std::size_t n = new_to_old.size();
    CMatrix p(n, n);
    for (std::size_t k = 0; k < n; ++k) p.at(new_to_old[k], k) = GaussianRational::one();
    return p;
}

CMatrix to_weyr(const CMatrix& m, const Partition& part) {
    const std::size_t n = part.total();
    if (m.rows() != n || m.cols() != n)
        throw ShapeError("matrix does not match the partition's size");
    const auto w = weyr_permutation(part);
    CMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out.at(r, c) = m.at(w.new_to_old[r], w.new_to_old[c]);
    return out;
}

CMatrix from_weyr(const CMatrix& m, const Partition& part) {
    const std::size_t n = part.total();
    if (m.rows() != n || m.cols() != n)
        throw ShapeError("matrix does not match the partition's size");
    const auto w = weyr_permutation(part);
    std::vector<std::size_t> old_to_new(n);
    for (std::size_t k = 0; k < n; ++k) old_to_new[w.new_to_old[k]] = k;
    CMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            out.at(r, c) = m.at(old_to_new[r], old_to_new[c]);
    return out;
}

}  // namespace consim
