#include "consim/commands.hpp"
#include "consim/errors.hpp"

#include <pybind11/pybind11.h>

#include <optional>
#include <string>

namespace py = pybind11;

namespace {

// The module speaks JSON strings so rationals stay exact end to end; python
// callers use json.loads/dumps on their side.
consim::Json parse(const std::string& text) {
    try {
        return consim::Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw consim::ParseError(std::string("invalid JSON: ") + e.what());
    }
}

std::optional<consim::Partition> parse_partition_arg(const std::string& flag) {
    if (flag.empty()) return std::nullopt;
    return consim::partition_from_flag(flag);
}

}  // namespace

PYBIND11_MODULE(consim, m) {
    m.doc() = "exact toolkit for semilinear operators, commutants of nilpotent "
              "block-Jordan matrices, and consimilarity encodings";

    static py::exception<consim::Error> exc(m, "ConsimError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const consim::Error& e) {
            py::set_error(exc, (std::string("[") + e.code() + "] " + e.what()).c_str());
        }
    });

    m.def(
        "encode",
        [](const std::string& what, const std::string& instance, const std::string& partition) {
            return consim::cmd_encode(what, parse(instance), parse_partition_arg(partition))
                .dump();
        },
        py::arg("what"), py::arg("instance"), py::arg("partition") = "",
        "encode a pair/tuple/biquiver instance (JSON string) as a matrix pair (J, M)");

    m.def(
        "decode",
        [](const std::string& encoding) { return consim::cmd_decode(parse(encoding)).dump(); },
        py::arg("encoding"), "recover the instance from an encoding (JSON string)");

    m.def(
        "verify_witness",
        [](const std::string& enc1, const std::string& enc2, const std::string& witness) {
            return consim::cmd_verify_witness(parse(enc1), parse(enc2), parse(witness)).dump();
        },
        py::arg("encoding1"), py::arg("encoding2"), py::arg("witness"),
        "check that a matrix transports one encoding to the other");

    m.def(
        "extract_witness",
        [](const std::string& enc1, const std::string& enc2, const std::string& witness) {
            return consim::cmd_extract_witness(parse(enc1), parse(enc2), parse(witness)).dump();
        },
        py::arg("encoding1"), py::arg("encoding2"), py::arg("witness"),
        "read per-vertex witnesses out of a joint solution");

    m.def(
        "commutant_basis",
        [](const std::string& partition, bool weyr, bool oracle) {
            return consim::cmd_commutant_basis(consim::partition_from_flag(partition), weyr,
                                               oracle)
                .dump();
        },
        py::arg("partition"), py::arg("weyr") = false, py::arg("oracle") = false,
        "dimensions and parameter-indexed basis of {S : conj(S) J = J S}");

    m.def(
        "invariants",
        [](const std::string& pair, std::size_t depth) {
            return consim::cmd_invariants(parse(pair), depth).dump();
        },
        py::arg("pair"), py::arg("depth") = 2,
        "consimilarity invariant profile of a matrix pair");

    m.def(
        "selfcheck",
        [](std::uint64_t seed, std::size_t trials) {
            return consim::cmd_selfcheck(seed, trials).dump();
        },
        py::arg("seed") = 0, py::arg("trials") = 10, "run the property suite");
}
