#pragma once

#include "consim/json_io.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace consim {

// Command cores shared by the CLI and the python module: parsed JSON in,
// JSON out, errors as consim exceptions. Every result carries
// "schema_version"; identical inputs produce identical output.

Json cmd_encode(const std::string& what, const Json& instance,
                const std::optional<Partition>& partition = std::nullopt);

Json cmd_decode(const Json& encoding);

Json cmd_verify_witness(const Json& encoding1, const Json& encoding2, const Json& witness);

Json cmd_extract_witness(const Json& encoding1, const Json& encoding2, const Json& witness);

Json cmd_commutant_basis(const Partition& partition, bool weyr, bool oracle);

Json cmd_invariants(const Json& pair, std::size_t depth);

Json cmd_selfcheck(std::uint64_t seed, std::size_t trials);

}  // namespace consim
