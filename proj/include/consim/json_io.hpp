#pragma once

#include "consim/biquiver.hpp"
#include "consim/reductions.hpp"
#include "consim/semilinear.hpp"

#include <json.hpp>

#include <string>

namespace consim {

// Insertion-ordered JSON keeps CLI output byte-stable for a given input.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/*
 * Wire formats. A scalar is ["p/q", "r/s"] (real, imaginary), lowest terms,
 * positive denominator. A matrix is {"rows", "cols", "entries"} with entries
 * as an array of rows. Partitions are {"parts": [[p, q], ...]}.
 */

Json scalar_to_json(const GaussianRational& z);
GaussianRational scalar_from_json(const Json& j);

Json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const Json& j);

Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);

// "p1:q1,p2:q2,..." as used by the --partition flag.
Partition partition_from_flag(const std::string& text);

Json substrip_to_json(const SubstripIndex& s);
SubstripIndex substrip_from_json(const Json& j);

Json biquiver_to_json(const Biquiver& b);
Biquiver biquiver_from_json(const Json& j);

Json representation_to_json(const Representation& r);
Representation representation_from_json(const Json& j);

Json encoding_to_json(const Encoding& e);
Encoding encoding_from_json(const Json& j);  // validates structure

Json pair_instance_to_json(const PairInstance& p);
PairInstance pair_instance_from_json(const Json& j);

Json tuple_instance_to_json(const TupleInstance& t);
TupleInstance tuple_instance_from_json(const Json& j);

Json matrix_pair_to_json(const MatrixPair& p);
MatrixPair matrix_pair_from_json(const Json& j);

Json profile_to_json(const InvariantProfile& p);

}  // namespace consim
