#include "consim/commands.hpp"
#include "consim/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

consim::Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw consim::ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return consim::Json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw consim::ParseError(std::string("invalid JSON in '") + path + "': " + e.what());
    }
}

void emit(const consim::Json& out) { std::cout << out.dump(2) << "\n"; }

void emit_error(const std::string& code, const std::string& message) {
    consim::Json err;
    err["error"] = code;
    err["message"] = message;
    std::cerr << err.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for semilinear operators, commutants of nilpotent "
                 "block-Jordan matrices, and consimilarity encodings"};
    app.require_subcommand(1);

    std::string encode_what, instance_path, encoding_path, encoding2_path, witness_path;
    std::string partition_flag;
    std::size_t depth = 2;
    std::uint64_t seed = 0;
    std::size_t trials = 50;
    bool weyr = false, oracle = false;

    auto* encode = app.add_subcommand("encode", "encode an instance as a matrix pair (J, M)");
    encode->add_option("what", encode_what, "pair | tuple | biquiver")->required();
    encode->add_option("instance", instance_path, "instance JSON file")->required();
    encode->add_option("--partition", partition_flag, "p1:q1,p2:q2,... (biquiver only)");

    auto* decode = app.add_subcommand("decode", "recover the instance from an encoding");
    decode->add_option("encoding", encoding_path, "encoding JSON file")->required();

    auto* verify = app.add_subcommand("verify-witness",
                                      "check that S transports one encoding to the other");
    verify->add_option("encoding", encoding_path)->required();
    verify->add_option("encoding2", encoding2_path)->required();
    verify->add_option("witness", witness_path, "matrix JSON file")->required();

    auto* extract = app.add_subcommand("extract-witness",
                                       "read per-vertex witnesses out of a joint solution");
    extract->add_option("encoding", encoding_path)->required();
    extract->add_option("encoding2", encoding2_path)->required();
    extract->add_option("witness", witness_path)->required();

    auto* basis = app.add_subcommand("commutant-basis",
                                     "dimensions and a parameter-indexed basis of {S : conj(S)J = JS}");
    basis->add_option("--partition", partition_flag, "p1:q1,p2:q2,...")->required();
    basis->add_flag("--weyr", weyr, "emit basis matrices in the rearranged (lexicographic) layout");
    basis->add_flag("--oracle", oracle, "cross-check against the realified nullspace dimension");

    auto* invariants = app.add_subcommand("invariants",
                                          "consimilarity invariant profile of a matrix pair");
    invariants->add_option("pair", encoding_path, "pair JSON file {first, second}")->required();
    invariants->add_option("--depth", depth, "maximum word length (default 2)");

    auto* selfcheck = app.add_subcommand("selfcheck", "run the property suite");
    selfcheck->add_option("--seed", seed, "base seed (default 0)");
    selfcheck->add_option("--trials", trials, "trials per property (default 50)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        emit_error("usage", e.what());
        return 2;
    }

    try {
        if (*encode) {
            std::optional<consim::Partition> part;
            if (!partition_flag.empty()) part = consim::partition_from_flag(partition_flag);
            emit(consim::cmd_encode(encode_what, load_json(instance_path), part));
        } else if (*decode) {
            emit(consim::cmd_decode(load_json(encoding_path)));
        } else if (*verify) {
            emit(consim::cmd_verify_witness(load_json(encoding_path), load_json(encoding2_path),
                                            load_json(witness_path)));
        } else if (*extract) {
            emit(consim::cmd_extract_witness(load_json(encoding_path), load_json(encoding2_path),
                                             load_json(witness_path)));
        } else if (*basis) {
            emit(consim::cmd_commutant_basis(consim::partition_from_flag(partition_flag), weyr,
                                             oracle));
        } else if (*invariants) {
            if (depth < 1) throw consim::ParseError("--depth must be >= 1");
            emit(consim::cmd_invariants(load_json(encoding_path), depth));
        } else if (*selfcheck) {
            const consim::Json report = consim::cmd_selfcheck(seed, trials);
            emit(report);
            return report.at("ok").get<bool>() ? 0 : 1;
        }
        return 0;
    } catch (const consim::ParseError& e) {
        emit_error(e.code(), e.what());
        return 2;
    } catch (const consim::Error& e) {
        emit_error(e.code(), e.what());
        return 1;
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return 1;
    }
}
