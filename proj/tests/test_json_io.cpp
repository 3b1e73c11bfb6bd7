#include "consim/commands.hpp"
#include "consim/errors.hpp"
#include "consim/json_io.hpp"
#include "consim/rng.hpp"

#include <doctest.h>

#include "test_util.hpp"

using namespace consim;

TEST_CASE("scalar wire format") {
    CHECK(scalar_to_json(grq(-1, 2, 0, 1)).dump() == R"(["-1/2","0/1"])");
    CHECK(scalar_from_json(Json::parse(R"(["2/4","-6/4"])")) == grq(1, 2, -3, 2));
    CHECK_THROWS_AS(scalar_from_json(Json::parse("[\"1/1\"]")), ParseError);
    CHECK_THROWS_AS(scalar_from_json(Json::parse("\"1/1\"")), ParseError);
    CHECK_THROWS_AS(scalar_from_json(Json::parse(R"(["1/0","0/1"])")), ParseError);
}

TEST_CASE("matrices and partitions round-trip") {
    Rng rng(71);
    for (int trial = 0; trial < 20; ++trial) {
        const CMatrix m = rng.matrix(1 + rng.below(4), 1 + rng.below(4), 5, 3);
        CHECK(matrix_from_json(matrix_to_json(m)) == m);
    }
    const Partition part({{4, 2}, {2, 1}});
    CHECK(partition_from_json(partition_to_json(part)) == part);
    CHECK(partition_from_flag("4:2,2:1") == part);
    CHECK_THROWS_AS(partition_from_flag("4:2,4:1"), ParseError);  // duplicate p
    CHECK_THROWS_AS(partition_from_flag("42"), ParseError);
    CHECK_THROWS_AS(partition_from_flag("a:b"), ParseError);
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"rows":2,"cols":1,"entries":[]})")),
                    ParseError);
}

TEST_CASE("biquiver and representation round-trip") {
    Biquiver bq;
    bq.vertex_count = 2;
    bq.arrows = {{"a", 2, 1, ArrowKind::dashed}, {"b", 1, 1, ArrowKind::full}};
    CHECK(biquiver_from_json(biquiver_to_json(bq)) == bq);
    const Representation rep = random_rep(bq, {2, 1}, 5);
    CHECK(representation_from_json(representation_to_json(rep)) == rep);
    CHECK_THROWS_AS(biquiver_from_json(Json::parse(R"({"vertices":1,"arrows":
        [{"id":"a","source":1,"target":1,"kind":"wavy"}]})")),
                    ParseError);
}

TEST_CASE("encodings round-trip through JSON with validation") {
    Rng rng(72);
    const Encoding pair = encode_commuting_pair(rng.matrix(2, 2), rng.matrix(2, 2));
    const Encoding pair2 = encoding_from_json(encoding_to_json(pair));
    CHECK(pair2.M == pair.M);
    CHECK(pair2.part == pair.part);

    TupleInstance inst{2, {rng.matrix(2, 2), rng.matrix(2, 2)}, {rng.matrix(2, 2)}};
    const Encoding tup = encode_tuple(inst);
    CHECK(decode_tuple(encoding_from_json(encoding_to_json(tup))) == inst);

    Biquiver bq;
    bq.vertex_count = 2;
    bq.arrows = {{"a", 2, 1, ArrowKind::dashed}, {"b", 1, 1, ArrowKind::full}};
    const Representation rep = random_rep(bq, {2, 1}, 6);
    const Encoding benc = encode_biquiver(bq, rep);
    CHECK(decode_biquiver(encoding_from_json(encoding_to_json(benc))).second == rep);

    // tampering is caught on load
    Json bad = encoding_to_json(benc);
    bad["M"]["entries"][0][0] = Json::array({"1/1", "0/1"});
    CHECK_THROWS_AS(encoding_from_json(bad), ContractError);
}

TEST_CASE("command cores emit schema_version and re-parse") {
    Rng rng(73);
    Json inst;
    inst["X"] = matrix_to_json(rng.matrix(2, 2));
    inst["Y"] = matrix_to_json(rng.matrix(2, 2));
    const Json enc = cmd_encode("pair", inst);
    CHECK(enc.at("schema_version") == kSchemaVersion);
    const Json decoded = cmd_decode(enc);
    CHECK(matrix_from_json(decoded.at("X")) == matrix_from_json(inst.at("X")));

    CHECK_THROWS_AS(cmd_encode("ring", inst), ParseError);
    CHECK_THROWS_AS(cmd_encode("pair", inst, Partition({{4, 2}, {1, 2}})), ParseError);

    const Json basis = cmd_commutant_basis(Partition({{4, 1}, {2, 1}}), false, true);
    CHECK(basis.at("complex_dim") == 10);
    CHECK(basis.at("real_dim") == 20);
    CHECK(basis.at("oracle_real_dim") == 20);
    CHECK(basis.at("oracle_matches") == true);
    CHECK(basis.at("basis").size() == 20);
    // each emitted basis matrix re-parses to an equal value
    for (const auto& item : basis.at("basis")) {
        const CMatrix s = matrix_from_json(item.at("S"));
        CHECK(matrix_from_json(matrix_to_json(s)) == s);
    }
}

TEST_CASE("identical inputs give byte-identical command output") {
    const Json a = cmd_commutant_basis(Partition({{3, 2}, {2, 1}}), true, true);
    const Json b = cmd_commutant_basis(Partition({{3, 2}, {2, 1}}), true, true);
    CHECK(a.dump() == b.dump());
    CHECK(cmd_selfcheck(7, 2).dump() == cmd_selfcheck(7, 2).dump());
}
