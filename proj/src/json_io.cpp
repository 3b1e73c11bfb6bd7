#include "consim/json_io.hpp"

#include "consim/errors.hpp"

namespace consim {

namespace {

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        throw ParseError(std::string("missing field '") + name + "'");
    return j.at(name);
}

std::size_t size_field(const Json& j, const char* name) {
    const Json& f = field(j, name);
    if (!f.is_number_unsigned()) throw ParseError(std::string("field '") + name +
                                                  "' must be a nonnegative integer");
    return f.get<std::size_t>();
}

std::string string_field(const Json& j, const char* name) {
    const Json& f = field(j, name);
    if (!f.is_string()) throw ParseError(std::string("field '") + name + "' must be a string");
    return f.get<std::string>();
}

}  // namespace

Json scalar_to_json(const GaussianRational& z) {
    return Json::array({rational_to_string(z.re), rational_to_string(z.im)});
}

GaussianRational scalar_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
        throw ParseError("scalar must be a two-element array of strings");
    return GaussianRational(parse_rational(j[0].get<std::string>()),
                            parse_rational(j[1].get<std::string>()));
}

Json matrix_to_json(const CMatrix& m) {
    Json entries = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m.at(r, c)));
        entries.push_back(std::move(row));
    }
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["entries"] = std::move(entries);
    return j;
}

CMatrix matrix_from_json(const Json& j) {
    const std::size_t rows = size_field(j, "rows");
    const std::size_t cols = size_field(j, "cols");
    const Json& entries = field(j, "entries");
    if (!entries.is_array() || entries.size() != rows)
        throw ParseError("entries must hold one array per row");
    CMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const Json& row = entries[r];
        if (!row.is_array() || row.size() != cols)
            throw ParseError("row " + std::to_string(r) + " has the wrong length");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = scalar_from_json(row[c]);
    }
    return m;
}

Json partition_to_json(const Partition& p) {
    Json parts = Json::array();
    for (const auto& [pp, qq] : p.parts()) parts.push_back(Json::array({pp, qq}));
    Json j;
    j["parts"] = std::move(parts);
    return j;
}

Partition partition_from_json(const Json& j) {
    const Json& parts = field(j, "parts");
    if (!parts.is_array()) throw ParseError("parts must be an array");
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const Json& e : parts) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
            !e[1].is_number_unsigned())
            throw ParseError("each part must be [p, q] with nonnegative integers");
        out.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    try {
        return Partition(out);
    } catch (const ValueError& e) {
        throw ParseError(e.what());
    }
}

Partition partition_from_flag(const std::string& text) {
    std::vector<std::pair<std::size_t, std::size_t>> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string item = text.substr(pos, comma - pos);
        const std::size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw ParseError("partition item '" + item + "' is not p:q");
        try {
            parts.emplace_back(std::stoull(item.substr(0, colon)),
                               std::stoull(item.substr(colon + 1)));
        } catch (const std::exception&) {
            throw ParseError("partition item '" + item + "' is not p:q");
        }
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    try {
        return Partition(parts);
    } catch (const ValueError& e) {
        throw ParseError(e.what());
    }
}

Json substrip_to_json(const SubstripIndex& s) {
    Json j;
    j["strip"] = s.strip;
    j["substrip"] = s.substrip;
    return j;
}

SubstripIndex substrip_from_json(const Json& j) {
    return SubstripIndex{size_field(j, "strip"), size_field(j, "substrip")};
}

Json biquiver_to_json(const Biquiver& b) {
    Json arrows = Json::array();
    for (const auto& a : b.arrows) {
        Json ja;
        ja["id"] = a.id;
        ja["source"] = a.source;
        ja["target"] = a.target;
        ja["kind"] = (a.kind == ArrowKind::full) ? "full" : "dashed";
        arrows.push_back(std::move(ja));
    }
    Json j;
    j["vertices"] = b.vertex_count;
    j["arrows"] = std::move(arrows);
    return j;
}

Biquiver biquiver_from_json(const Json& j) {
    Biquiver b;
    b.vertex_count = size_field(j, "vertices");
    const Json& arrows = field(j, "arrows");
    if (!arrows.is_array()) throw ParseError("arrows must be an array");
    for (const Json& ja : arrows) {
        Arrow a;
        a.id = string_field(ja, "id");
        a.source = size_field(ja, "source");
        a.target = size_field(ja, "target");
        const std::string kind = string_field(ja, "kind");
        if (kind == "full")
            a.kind = ArrowKind::full;
        else if (kind == "dashed")
            a.kind = ArrowKind::dashed;
        else
            throw ParseError("arrow kind must be 'full' or 'dashed'");
        b.arrows.push_back(std::move(a));
    }
    try {
        b.validate();
    } catch (const ValueError& e) {
        throw ParseError(e.what());
    }
    return b;
}

Json representation_to_json(const Representation& r) {
    Json mats = Json::object();
    for (const auto& [id, m] : r.mats) mats[id] = matrix_to_json(m);
    Json j;
    j["dims"] = r.dims;
    j["mats"] = std::move(mats);
    return j;
}

Representation representation_from_json(const Json& j) {
    Representation r;
    const Json& dims = field(j, "dims");
    if (!dims.is_array()) throw ParseError("dims must be an array");
    for (const Json& d : dims) {
        if (!d.is_number_unsigned()) throw ParseError("dims must hold nonnegative integers");
        r.dims.push_back(d.get<std::size_t>());
    }
    const Json& mats = field(j, "mats");
    if (!mats.is_object()) throw ParseError("mats must be an object");
    for (auto it = mats.begin(); it != mats.end(); ++it)
        r.mats.emplace(it.key(), matrix_from_json(it.value()));
    return r;
}

namespace {

std::string kind_name(EncodingKind k) {
    switch (k) {
        case EncodingKind::pair: return "pair";
        case EncodingKind::tuple: return "tuple";
        case EncodingKind::biquiver: return "biquiver";
    }
    throw ValueError("unknown encoding kind");
}

EncodingKind kind_from_name(const std::string& s) {
    if (s == "pair") return EncodingKind::pair;
    if (s == "tuple") return EncodingKind::tuple;
    if (s == "biquiver") return EncodingKind::biquiver;
    throw ParseError("encoding kind must be pair, tuple or biquiver");
}

}  // namespace

Json encoding_to_json(const Encoding& e) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = kind_name(e.kind);
    j["partition"] = partition_to_json(e.part);
    if (e.kind == EncodingKind::pair || e.kind == EncodingKind::tuple) j["n"] = e.block_size;
    if (e.kind == EncodingKind::tuple) {
        j["p"] = e.tuple_p;
        j["q"] = e.tuple_q;
    }
    j["J"] = matrix_to_json(e.J);
    j["M"] = matrix_to_json(e.M);
    Json placement = Json::object();
    for (const auto& [slot, place] : e.placement) {
        Json jp;
        jp["row"] = substrip_to_json(place.row);
        jp["col"] = substrip_to_json(place.col);
        placement[slot] = std::move(jp);
    }
    j["placement"] = std::move(placement);
    return j;
}

Encoding encoding_from_json(const Json& j) {
    const EncodingKind kind = kind_from_name(string_field(j, "kind"));
    Partition part = partition_from_json(field(j, "partition"));
    Encoding enc{kind, std::move(part), matrix_from_json(field(j, "J")),
                 matrix_from_json(field(j, "M")), {}, 0, 0, 0};
    if (kind == EncodingKind::pair || kind == EncodingKind::tuple)
        enc.block_size = size_field(j, "n");
    if (kind == EncodingKind::tuple) {
        enc.tuple_p = size_field(j, "p");
        enc.tuple_q = size_field(j, "q");
    }
    const Json& placement = field(j, "placement");
    if (!placement.is_object()) throw ParseError("placement must be an object");
    for (auto it = placement.begin(); it != placement.end(); ++it) {
        enc.placement.emplace(it.key(), Placement{substrip_from_json(field(it.value(), "row")),
                                                  substrip_from_json(field(it.value(), "col"))});
    }
    validate_encoding(enc);
    return enc;
}

Json pair_instance_to_json(const PairInstance& p) {
    Json j;
    j["X"] = matrix_to_json(p.x);
    j["Y"] = matrix_to_json(p.y);
    return j;
}

PairInstance pair_instance_from_json(const Json& j) {
    return PairInstance{matrix_from_json(field(j, "X")), matrix_from_json(field(j, "Y"))};
}

Json tuple_instance_to_json(const TupleInstance& t) {
    Json xs = Json::array(), ys = Json::array();
    for (const auto& m : t.xs) xs.push_back(matrix_to_json(m));
    for (const auto& m : t.ys) ys.push_back(matrix_to_json(m));
    Json j;
    j["n"] = t.n;
    j["Xs"] = std::move(xs);
    j["Ys"] = std::move(ys);
    return j;
}

TupleInstance tuple_instance_from_json(const Json& j) {
    TupleInstance t;
    const Json& xs = field(j, "Xs");
    const Json& ys = field(j, "Ys");
    if (!xs.is_array() || !ys.is_array()) throw ParseError("Xs and Ys must be arrays");
    for (const Json& m : xs) t.xs.push_back(matrix_from_json(m));
    for (const Json& m : ys) t.ys.push_back(matrix_from_json(m));
    if (j.contains("n")) {
        t.n = size_field(j, "n");
    } else if (!t.xs.empty()) {
        t.n = t.xs.front().rows();
    } else if (!t.ys.empty()) {
        t.n = t.ys.front().rows();
    } else {
        throw ParseError("empty tuple needs an explicit n");
    }
    return t;
}

Json matrix_pair_to_json(const MatrixPair& p) {
    Json j;
    j["first"] = matrix_to_json(p.first);
    j["second"] = matrix_to_json(p.second);
    return j;
}

MatrixPair matrix_pair_from_json(const Json& j) {
    return make_pair_checked(matrix_from_json(field(j, "first")),
                             matrix_from_json(field(j, "second")));
}

Json profile_to_json(const InvariantProfile& p) {
    Json words = Json::array();
    for (const auto& w : p.words) {
        Json jw;
        Json letters = Json::array();
        for (const auto& [a, b] : w.word) letters.push_back(Json::array({a, b}));
        jw["word"] = std::move(letters);
        Json poly = Json::array();
        for (const auto& c : w.char_poly) poly.push_back(scalar_to_json(c));
        jw["char_poly"] = std::move(poly);
        jw["rank_powers"] = w.rank_powers;
        words.push_back(std::move(jw));
    }
    Json j;
    j["size"] = p.size;
    j["depth"] = p.depth;
    j["rank_first"] = p.rank_first;
    j["rank_second"] = p.rank_second;
    j["words"] = std::move(words);
    return j;
}

}  // namespace consim
