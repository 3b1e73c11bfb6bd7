#include "consim/commands.hpp"

#include "consim/errors.hpp"
#include "consim/selfcheck.hpp"

namespace consim {

namespace {

// The two encodings a witness relates must describe the same problem shape.
void require_compatible(const Encoding& a, const Encoding& b) {
    if (a.kind != b.kind) throw ValueError("encodings have different kinds");
    if (!(a.part == b.part)) throw ValueError("encodings have different partitions");
    if (a.block_size != b.block_size || a.tuple_p != b.tuple_p || a.tuple_q != b.tuple_q)
        throw ValueError("encodings have different block layouts");
    if (a.kind == EncodingKind::biquiver) {
        if (!(a.placement.size() == b.placement.size()))
            throw ValueError("encodings have different placements");
        for (const auto& [id, place] : a.placement) {
            auto it = b.placement.find(id);
            if (it == b.placement.end() || !(it->second == place))
                throw ValueError("encodings have different placements");
        }
    }
}

CMatrix parse_witness(const Json& witness, std::size_t n) {
    CMatrix s = matrix_from_json(witness);
    if (s.rows() != n || s.cols() != n)
        throw ShapeError("witness must be " + std::to_string(n) + "x" + std::to_string(n));
    return s;
}

}  // namespace

Json cmd_encode(const std::string& what, const Json& instance,
                const std::optional<Partition>& partition) {
    if (what == "pair" || what == "tuple") {
        if (partition)
            throw ParseError("--partition applies only to biquiver encodings");
        if (what == "pair") {
            const PairInstance inst = pair_instance_from_json(instance);
            return encoding_to_json(encode_commuting_pair(inst.x, inst.y));
        }
        return encoding_to_json(encode_tuple(tuple_instance_from_json(instance)));
    }
    if (what == "biquiver") {
        if (!instance.is_object() || !instance.contains("biquiver") ||
            !instance.contains("representation"))
            throw ParseError("biquiver instance needs 'biquiver' and 'representation'");
        const Biquiver bq = biquiver_from_json(instance.at("biquiver"));
        const Representation rep = representation_from_json(instance.at("representation"));
        return encoding_to_json(encode_biquiver(bq, rep, partition));
    }
    throw ParseError("unknown encoding kind '" + what + "' (pair, tuple or biquiver)");
}

Json cmd_decode(const Json& encoding) {
    const Encoding enc = encoding_from_json(encoding);
    Json out;
    out["schema_version"] = kSchemaVersion;
    switch (enc.kind) {
        case EncodingKind::pair: {
            const PairInstance inst = decode_pair(enc);
            out["kind"] = "pair";
            out["X"] = matrix_to_json(inst.x);
            out["Y"] = matrix_to_json(inst.y);
            return out;
        }
        case EncodingKind::tuple: {
            const TupleInstance inst = decode_tuple(enc);
            out["kind"] = "tuple";
            Json body = tuple_instance_to_json(inst);
            for (auto it = body.begin(); it != body.end(); ++it) out[it.key()] = it.value();
            return out;
        }
        case EncodingKind::biquiver: {
            const auto [bq, rep] = decode_biquiver(enc);
            out["kind"] = "biquiver";
            out["biquiver"] = biquiver_to_json(bq);
            out["representation"] = representation_to_json(rep);
            return out;
        }
    }
    throw ValueError("unknown encoding kind");
}

Json cmd_verify_witness(const Json& encoding1, const Json& encoding2, const Json& witness) {
    const Encoding enc = encoding_from_json(encoding1);
    const Encoding enc2 = encoding_from_json(encoding2);
    require_compatible(enc, enc2);
    const CMatrix s = parse_witness(witness, enc.J.rows());
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["commutant_ok"] = (enc.J * s == conj(s) * enc.J);
    out["transport_ok"] = (enc.M * s == conj(s) * enc2.M);
    return out;
}

Json cmd_extract_witness(const Json& encoding1, const Json& encoding2, const Json& witness) {
    const Encoding enc = encoding_from_json(encoding1);
    const Encoding enc2 = encoding_from_json(encoding2);
    require_compatible(enc, enc2);
    const CMatrix s = parse_witness(witness, enc.J.rows());

    Json out;
    out["schema_version"] = kSchemaVersion;
    Json report = Json::array();
    bool all = true;
    auto add = [&](const std::string& slot, bool holds) {
        Json item;
        item["slot"] = slot;
        item["holds"] = holds;
        report.push_back(std::move(item));
        all = all && holds;
    };

    switch (enc.kind) {
        case EncodingKind::pair: {
            const CMatrix c = extract_commuting_witness(s, enc.block_size);
            const PairInstance a = decode_pair(enc), b = decode_pair(enc2);
            const CMatrix cb = conj(c);
            add("X", a.x * c == cb * b.x);
            add("Y", a.y * c == cb * b.y);
            out["witnesses"] = Json::object({{"C", matrix_to_json(c)}});
            break;
        }
        case EncodingKind::tuple: {
            const TupleLayout layout = tuple_layout(enc.tuple_p, enc.tuple_q);
            const CMatrix c = extract_tuple_witness(s, enc.block_size, layout.block_count);
            const TupleInstance a = decode_tuple(enc), b = decode_tuple(enc2);
            for (const auto& [slot, holds] : tuple_condition_report(c, a, b)) add(slot, holds);
            out["witnesses"] = Json::object({{"C", matrix_to_json(c)}});
            break;
        }
        case EncodingKind::biquiver: {
            const auto witnesses = extract_biquiver_witness(enc, s);
            const auto [bq, rep] = decode_biquiver(enc);
            const auto rep2 = decode_biquiver(enc2).second;
            for (const auto& arrow : bq.arrows) {
                const CMatrix& r = rep.mats.at(arrow.id);
                const CMatrix& r2 = rep2.mats.at(arrow.id);
                const CMatrix& si = witnesses[arrow.source - 1];
                const CMatrix& sj = witnesses[arrow.target - 1];
                add(arrow.id,
                    r * si == (arrow.kind == ArrowKind::dashed ? conj(sj) : sj) * r2);
            }
            Json ws = Json::array();
            for (const auto& w : witnesses) ws.push_back(matrix_to_json(w));
            out["witnesses"] = std::move(ws);
            break;
        }
    }
    out["report"] = std::move(report);
    out["all_hold"] = all;
    return out;
}

Json cmd_commutant_basis(const Partition& partition, bool weyr, bool oracle) {
    const CommutantDim dim = commutant_dim(partition);
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["partition"] = partition_to_json(partition);
    out["complex_dim"] = dim.complex_dim;
    out["real_dim"] = dim.real_dim;
    if (oracle) {
        const RealSolveResult sol = solve_real_linear(commutant_system(build_J(partition)));
        out["oracle_real_dim"] = sol.real_dim();
        out["oracle_matches"] = (sol.real_dim() == dim.real_dim);
    }
    out["weyr"] = weyr;
    Json basis = Json::array();
    const std::size_t t = partition.strip_count();
    for (std::size_t i = 1; i <= t; ++i) {
        for (std::size_t j = 1; j <= t; ++j) {
            const std::size_t count = std::min(partition.p(i), partition.p(j));
            for (std::size_t k = 0; k < count; ++k) {
                for (std::size_t r = 0; r < partition.q(i); ++r) {
                    for (std::size_t c = 0; c < partition.q(j); ++c) {
                        for (const bool imaginary : {false, true}) {
                            CommutantParams params(partition);
                            CMatrix unit(partition.q(i), partition.q(j));
                            unit.at(r, c) = imaginary ? GaussianRational::i()
                                                      : GaussianRational::one();
                            params.set_block(i, j, k, std::move(unit));
                            CMatrix s = synthesize_S(partition, params);
                            if (weyr) s = to_weyr(s, partition);
                            Json item;
                            item["i"] = i;
                            item["j"] = j;
                            item["k"] = k;
                            item["row"] = r;
                            item["col"] = c;
                            item["value"] = imaginary ? "i" : "1";
                            item["S"] = matrix_to_json(s);
                            basis.push_back(std::move(item));
                        }
                    }
                }
            }
        }
    }
    out["basis"] = std::move(basis);
    return out;
}

Json cmd_invariants(const Json& pair, std::size_t depth) {
    const MatrixPair p = matrix_pair_from_json(pair);
    Json out;
    out["schema_version"] = kSchemaVersion;
    Json body = profile_to_json(consim_invariants(p, depth));
    for (auto it = body.begin(); it != body.end(); ++it) out[it.key()] = it.value();
    return out;
}

Json cmd_selfcheck(std::uint64_t seed, std::size_t trials) {
    const SelfcheckReport report = run_selfcheck(seed, trials);
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["seed"] = report.seed;
    out["trials"] = report.trials;
    out["ok"] = report.ok();
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json item;
        item["name"] = c.name;
        item["trials"] = c.trials;
        item["failures"] = c.failures;
        checks.push_back(std::move(item));
    }
    out["checks"] = std::move(checks);
    return out;
}

}  // namespace consim
