#include "consim/reductions.hpp"

#include "consim/errors.hpp"

#include <algorithm>
#include <set>

namespace consim {

SemilinearSystem joint_transport_system(const CMatrix& j, const CMatrix& m, const CMatrix& m2) {
    if (!j.is_square() || j.rows() != m.rows() || m.rows() != m.cols() ||
        m2.rows() != m.rows() || m2.cols() != m.cols())
        throw ShapeError("joint system needs equal square J, M, M'");
    const std::size_t n = j.rows();
    SemilinearSystem sys(n, n);
    const CMatrix id = CMatrix::identity(n);
    sys.add_homogeneous({{id, j, true}, {-j, id, false}});    // conj(S)J - JS = 0
    sys.add_homogeneous({{m, id, false}, {-id, m2, true}});   // MS - conj(S)M' = 0
    return sys;
}

/* ---- commuting-pair encoding ---- */

Encoding encode_commuting_pair(const CMatrix& x, const CMatrix& y) {
    if (!x.is_square() || !y.is_square() || x.rows() != y.rows())
        throw ShapeError("pair encoding needs two square matrices of equal size");
    const std::size_t n = x.rows();
    if (n == 0) throw ValueError("pair encoding needs size >= 1");
    Partition part({{4, n}, {1, n}});
    CMatrix m(5 * n, 5 * n);
    m.set_block(0, 2 * n, x);
    m.set_block(0, 4 * n, y);
    m.set_block(n, 3 * n, conj(x));
    m.set_block(4 * n, 3 * n, CMatrix::identity(n));
    Encoding enc{EncodingKind::pair, part, build_J(part), std::move(m), {}, n, 0, 0};
    enc.placement.emplace("X", Placement{{1, 1}, {1, 3}});
    enc.placement.emplace("Y", Placement{{1, 1}, {2, 1}});
    return enc;
}

PairInstance decode_pair(const Encoding& enc) {
    if (enc.kind != EncodingKind::pair) throw ValueError("not a pair encoding");
    const std::size_t n = enc.block_size;
    PairInstance inst{enc.M.block(0, 2 * n, n, n), enc.M.block(0, 4 * n, n, n)};
    if (encode_commuting_pair(inst.x, inst.y).M != enc.M)
        throw ContractError("M is not a commuting-pair encoding");
    return inst;
}

CMatrix witness_commuting_pair(const CMatrix& c) {
    if (!is_nonsingular(c)) throw SingularError("witness block C is singular");
    const CMatrix cbar = conj(c);
    return direct_sum({c, cbar, c, cbar, c});
}

CMatrix extract_commuting_witness(const CMatrix& s, std::size_t n) {
    if (s.rows() != 5 * n || s.cols() != 5 * n)
        throw ShapeError("witness matrix must be 5n x 5n");
    const Partition part({{4, n}, {1, n}});
    if (!check_semicommute(build_J(part), s))
        throw ContractError("matrix is not in the commutant of the pair encoding's J");
    CMatrix c = s.block(0, 0, n, n);
    if (!is_nonsingular(c)) throw SingularError("extracted block C is singular");
    return c;
}

/* ---- tuple encoding ---- */

void TupleInstance::validate() const {
    if (n == 0) throw ValueError("tuple instance needs size >= 1");
    for (const auto& m : xs)
        if (m.rows() != n || m.cols() != n) throw ShapeError("every X_i must be n x n");
    for (const auto& m : ys)
        if (m.rows() != n || m.cols() != n) throw ShapeError("every Y_j must be n x n");
}

TupleLayout tuple_layout(std::size_t p, std::size_t q) {
    TupleLayout layout;
    if (p == 0) {
        layout.block_count = 1 + q;
        for (std::size_t j = 1; j <= q; ++j) layout.y_pos.push_back(1 + j);
    } else {
        const std::size_t pad = (p % 2 == 0) ? 1 : 0;
        layout.block_count = p + 1 + pad + q;
        for (std::size_t j = 1; j <= q; ++j) layout.y_pos.push_back(p + 1 + pad + j);
    }
    return layout;
}

Encoding encode_tuple(const TupleInstance& inst) {
    inst.validate();
    const std::size_t n = inst.n, p = inst.xs.size(), q = inst.ys.size();
    const TupleLayout layout = tuple_layout(p, q);
    const std::size_t m = layout.block_count;
    Partition part({{m, n}});
    CMatrix mat(m * n, m * n);
    Encoding enc{EncodingKind::tuple, part, build_J(part), CMatrix(), {}, n, p, q};
    for (std::size_t i = 1; i <= p; ++i) {
        mat.set_block((i - 1) * n, i * n, inst.xs[i - 1]);
        enc.placement.emplace("X" + std::to_string(i), Placement{{1, i}, {1, i + 1}});
    }
    for (std::size_t j = 1; j <= q; ++j) {
        const std::size_t b = layout.y_pos[j - 1];
        mat.set_block((b - 1) * n, (b - 1) * n, inst.ys[j - 1]);
        enc.placement.emplace("Y" + std::to_string(j), Placement{{1, b}, {1, b}});
    }
    enc.M = std::move(mat);
    return enc;
}

TupleInstance decode_tuple(const Encoding& enc) {
    if (enc.kind != EncodingKind::tuple) throw ValueError("not a tuple encoding");
    const std::size_t n = enc.block_size, p = enc.tuple_p, q = enc.tuple_q;
    const TupleLayout layout = tuple_layout(p, q);
    TupleInstance inst;
    inst.n = n;
    for (std::size_t i = 1; i <= p; ++i) inst.xs.push_back(enc.M.block((i - 1) * n, i * n, n, n));
    for (std::size_t j = 1; j <= q; ++j) {
        const std::size_t b = layout.y_pos[j - 1];
        inst.ys.push_back(enc.M.block((b - 1) * n, (b - 1) * n, n, n));
    }
    if (encode_tuple(inst).M != enc.M) throw ContractError("M is not a tuple encoding");
    return inst;
}

namespace {

// Diagonal block b (1-based) of the alternating witness: C when b is odd.
CMatrix alternating_block(const CMatrix& c, std::size_t b) {
    return (b % 2 == 1) ? c : conj(c);
}

}  // namespace

std::vector<std::pair<std::string, bool>> tuple_condition_report(const CMatrix& c,
                                                                 const TupleInstance& a,
                                                                 const TupleInstance& b) {
    a.validate();
    b.validate();
    if (a.n != b.n || a.xs.size() != b.xs.size() || a.ys.size() != b.ys.size())
        throw ShapeError("tuple instances have different shapes");
    if (c.rows() != a.n || c.cols() != a.n) throw ShapeError("witness block C must be n x n");
    if (!is_nonsingular(c)) throw SingularError("witness block C is singular");
    const TupleLayout layout = tuple_layout(a.xs.size(), a.ys.size());
    std::vector<std::pair<std::string, bool>> report;
    for (std::size_t i = 1; i <= a.xs.size(); ++i) {
        const bool holds = a.xs[i - 1] * alternating_block(c, i + 1) ==
                           conj(alternating_block(c, i)) * b.xs[i - 1];
        report.emplace_back("X" + std::to_string(i), holds);
    }
    for (std::size_t j = 1; j <= a.ys.size(); ++j) {
        const std::size_t pos = layout.y_pos[j - 1];
        const bool holds = a.ys[j - 1] * alternating_block(c, pos) ==
                           conj(alternating_block(c, pos)) * b.ys[j - 1];
        report.emplace_back("Y" + std::to_string(j), holds);
    }
    return report;
}

bool verify_tuple_conditions(const CMatrix& c, const TupleInstance& a, const TupleInstance& b) {
    for (const auto& [slot, holds] : tuple_condition_report(c, a, b))
        if (!holds) return false;
    return true;
}

CMatrix witness_tuple(const CMatrix& c, std::size_t block_count) {
    if (!is_nonsingular(c)) throw SingularError("witness block C is singular");
    std::vector<CMatrix> blocks;
    blocks.reserve(block_count);
    for (std::size_t b = 1; b <= block_count; ++b) blocks.push_back(alternating_block(c, b));
    return direct_sum(blocks);
}

CMatrix extract_tuple_witness(const CMatrix& s, std::size_t n, std::size_t block_count) {
    if (s.rows() != block_count * n || s.cols() != s.rows())
        throw ShapeError("witness matrix does not match the encoding's size");
    const Partition part({{block_count, n}});
    if (!check_semicommute(build_J(part), s))
        throw ContractError("matrix is not in the commutant of the tuple encoding's J");
    CMatrix c = s.block(0, 0, n, n);
    if (!is_nonsingular(c)) throw SingularError("extracted block C is singular");
    return c;
}

/* ---- biquiver encoding ---- */

Partition default_biquiver_partition(const Biquiver& bq, const std::vector<std::size_t>& dims) {
    bq.validate();
    if (dims.size() != bq.vertex_count) throw ShapeError("one dimension per vertex required");
    const std::size_t t = bq.vertex_count;
    std::vector<std::size_t> order(t);
    for (std::size_t v = 0; v < t; ++v) order[v] = v + 1;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return bq.incidence(a) < bq.incidence(b);
    });
    std::vector<std::size_t> p(t, 0);
    std::set<std::size_t> used;
    for (const std::size_t v : order) {
        std::size_t cand = std::max<std::size_t>(1, 2 * bq.incidence(v));
        while (used.count(cand)) ++cand;
        used.insert(cand);
        p[v - 1] = cand;
    }
    std::vector<std::pair<std::size_t, std::size_t>> parts;
    for (std::size_t v = 0; v < t; ++v) parts.emplace_back(p[v], dims[v]);
    return Partition(parts);
}

namespace {

std::vector<const Arrow*> placement_order(const Biquiver& bq) {
    std::vector<const Arrow*> order;
    order.reserve(bq.arrows.size());
    for (const auto& a : bq.arrows) order.push_back(&a);
    std::stable_sort(order.begin(), order.end(), [](const Arrow* a, const Arrow* b) {
        if (a->target != b->target) return a->target < b->target;
        if (a->kind != b->kind) return a->kind == ArrowKind::dashed;
        return a->id < b->id;
    });
    return order;
}

}  // namespace

Encoding encode_biquiver(const Biquiver& bq, const Representation& rep,
                         const std::optional<Partition>& user_part) {
    validate_representation(bq, rep);
    for (std::size_t v = 0; v < rep.dims.size(); ++v)
        if (rep.dims[v] == 0)
            throw ValueError("vertex " + std::to_string(v + 1) + " has dimension 0");

    Partition part = user_part ? *user_part : default_biquiver_partition(bq, rep.dims);
    if (part.strip_count() != bq.vertex_count)
        throw ShapeError("partition has " + std::to_string(part.strip_count()) +
                         " strips for " + std::to_string(bq.vertex_count) + " vertices");
    for (std::size_t i = 1; i <= part.strip_count(); ++i)
        if (part.q(i) != rep.dims[i - 1])
            throw ShapeError("partition's q_" + std::to_string(i) +
                             " must equal the dimension at vertex " + std::to_string(i));

    // Next free substrip per parity pool; rows split by arrow kind, columns
    // always odd.
    const std::size_t t = part.strip_count();
    std::vector<std::size_t> row_odd(t + 1, 1), row_even(t + 1, 2), col_odd(t + 1, 1);
    auto take = [&](std::vector<std::size_t>& pool, std::size_t strip, const char* what) {
        const std::size_t idx = pool[strip];
        if (idx > part.p(strip))
            throw CapacityError(std::string("strip ") + std::to_string(strip) + ": no free " +
                                what + " substrip (p_" + std::to_string(strip) + " = " +
                                std::to_string(part.p(strip)) + ")");
        pool[strip] = idx + 2;
        return idx;
    };

    CMatrix m(part.total(), part.total());
    Encoding enc{EncodingKind::biquiver, part, build_J(part), CMatrix(), {}, 0, 0, 0};
    for (const Arrow* a : placement_order(bq)) {
        const bool dashed = (a->kind == ArrowKind::dashed);
        const std::size_t k = dashed ? take(row_odd, a->target, "odd row")
                                     : take(row_even, a->target, "even row");
        const std::size_t l = take(col_odd, a->source, "odd column");
        const SubstripIndex row{a->target, k};
        const SubstripIndex col{a->source, l};
        m.set_block(part.substrip_offset(row), part.substrip_offset(col), rep.mats.at(a->id));
        enc.placement.emplace(a->id, Placement{row, col});
    }
    enc.M = std::move(m);
    return enc;
}

std::pair<Biquiver, Representation> decode_biquiver(const Encoding& enc) {
    if (enc.kind != EncodingKind::biquiver) throw ValueError("not a biquiver encoding");
    validate_encoding(enc);
    Biquiver bq;
    bq.vertex_count = enc.part.strip_count();
    Representation rep;
    for (std::size_t i = 1; i <= enc.part.strip_count(); ++i) rep.dims.push_back(enc.part.q(i));
    for (const auto& [id, place] : enc.placement) {
        Arrow a;
        a.id = id;
        a.source = place.col.strip;
        a.target = place.row.strip;
        a.kind = (place.row.substrip % 2 == 0) ? ArrowKind::full : ArrowKind::dashed;
        bq.arrows.push_back(a);
        rep.mats.emplace(id, enc.M.block(enc.part.substrip_offset(place.row),
                                         enc.part.substrip_offset(place.col),
                                         enc.part.q(place.row.strip),
                                         enc.part.q(place.col.strip)));
    }
    bq.validate();
    return {std::move(bq), std::move(rep)};
}

CMatrix witness_biquiver(const Encoding& enc, const std::vector<CMatrix>& s_list) {
    if (enc.kind != EncodingKind::biquiver) throw ValueError("not a biquiver encoding");
    const Partition& part = enc.part;
    if (s_list.size() != part.strip_count())
        throw ShapeError("need one witness block per vertex");
    for (std::size_t i = 1; i <= part.strip_count(); ++i) {
        const CMatrix& si = s_list[i - 1];
        if (si.rows() != part.q(i) || si.cols() != part.q(i))
            throw ShapeError("witness block " + std::to_string(i) + " has the wrong size");
        if (!is_nonsingular(si))
            throw SingularError("witness block " + std::to_string(i) + " is singular");
    }
    CMatrix s(part.total(), part.total());
    for (std::size_t i = 1; i <= part.strip_count(); ++i) {
        const CMatrix cbar = conj(s_list[i - 1]);
        for (std::size_t a = 1; a <= part.p(i); ++a) {
            const std::size_t off = part.substrip_offset({i, a});
            s.set_block(off, off, (a % 2 == 1) ? s_list[i - 1] : cbar);
        }
    }
    return s;
}

std::vector<CMatrix> extract_biquiver_witness(const Encoding& enc, const CMatrix& s) {
    if (enc.kind != EncodingKind::biquiver) throw ValueError("not a biquiver encoding");
    const Partition& part = enc.part;
    if (s.rows() != part.total() || s.cols() != part.total())
        throw ShapeError("witness matrix does not match the encoding's size");
    if (!check_semicommute(enc.J, s))
        throw ContractError("matrix is not in the commutant of the encoding's J");
    std::vector<CMatrix> out;
    out.reserve(part.strip_count());
    for (std::size_t i = 1; i <= part.strip_count(); ++i) {
        const std::size_t q = part.q(i);
        const std::size_t first = part.substrip_offset({i, 1});
        CMatrix si = s.block(first, first, q, q);
        const CMatrix sbar = conj(si);
        for (std::size_t a = 2; a <= part.p(i); ++a) {
            const std::size_t off = part.substrip_offset({i, a});
            if (s.block(off, off, q, q) != ((a % 2 == 1) ? si : sbar))
                throw ContractError("diagonal subblocks of strip " + std::to_string(i) +
                                    " do not alternate with the conjugate");
        }
        if (!is_nonsingular(si))
            throw SingularError("extracted block " + std::to_string(i) + " is singular");
        out.push_back(std::move(si));
    }
    return out;
}

/* ---- shared validation ---- */

void validate_encoding(const Encoding& enc) {
    if (enc.J != build_J(enc.part)) throw ContractError("J does not match the partition");
    if (enc.M.rows() != enc.J.rows() || enc.M.cols() != enc.J.cols())
        throw ShapeError("M and J have different sizes");
    switch (enc.kind) {
        case EncodingKind::pair: {
            decode_pair(enc);  // re-encoding comparison lives there
            return;
        }
        case EncodingKind::tuple: {
            decode_tuple(enc);
            return;
        }
        case EncodingKind::biquiver:
            break;
    }

    // Occupancy and parity for biquiver encodings: columns odd, row parity
    // consistent, no substrip reused, nonzero subblocks only at placements.
    std::set<std::pair<std::size_t, std::size_t>> used_rows, used_cols;
    for (const auto& [id, place] : enc.placement) {
        enc.part.check_substrip(place.row);
        enc.part.check_substrip(place.col);
        if (place.col.substrip % 2 == 0)
            throw ContractError("arrow '" + id + "' placed at an even column substrip");
        if (!used_rows.insert({place.row.strip, place.row.substrip}).second)
            throw ContractError("row substrip " + place.row.str() + " used twice");
        if (!used_cols.insert({place.col.strip, place.col.substrip}).second)
            throw ContractError("column substrip " + place.col.str() + " used twice");
    }
    const auto subs = enc.part.substrips();
    for (const auto& r : subs) {
        for (const auto& c : subs) {
            const CMatrix sub = enc.M.block(enc.part.substrip_offset(r), enc.part.substrip_offset(c),
                                            enc.part.q(r.strip), enc.part.q(c.strip));
            if (sub.is_zero()) continue;
            bool placed = false;
            for (const auto& [id, place] : enc.placement)
                if (place.row == r && place.col == c) placed = true;
            if (!placed)
                throw ContractError("nonzero subblock at (" + r.str() + ")x(" + c.str() +
                                    ") outside the placement");
        }
    }
}

}  // namespace consim
