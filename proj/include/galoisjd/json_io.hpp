#pragma once

// JSON forms of the library types. Polynomials are arrays of element codes,
// constant term first; partitions are arrays of parts.

#include "json.hpp"

#include "galoisjd/cyclo.hpp"
#include "galoisjd/expo.hpp"
#include "galoisjd/galois.hpp"
#include "galoisjd/labels.hpp"
#include "galoisjd/oracle/bfs.hpp"
#include "galoisjd/oracle/gl2.hpp"

namespace galoisjd::json_io {

using nlohmann::json;

/// Exact integer: a JSON number when it fits 64 bits, a decimal string otherwise.
json big_to_json(const BigInt& x);

json field_to_json(const ffield::FiniteField& F);
json poly_to_json(const ffield::IrreduciblePoly& f);
/// Validates irreducibility over F_q. ParseError on malformed input.
ffield::IrreduciblePoly poly_from_json(const ffield::FiniteField& F, const json& j);

json partition_to_json(const combinat::Partition& p);
combinat::Partition partition_from_json(const json& j);

json semisimple_to_json(const labels::SemisimpleLabel& s);
json label_to_json(const labels::CharacterLabel& L);
/// Accepts {"n","q","s":[{"poly","mult"}],"nu":[...]}; "n" and "q" may be
/// supplied by the caller when absent. Validates via make_character.
labels::CharacterLabel label_from_json(const json& j, int n = 0, std::uint64_t q = 0);

json cyclo_to_json(const cyclo::CycloNumber& x);
json value_field_to_json(const galois::ValueFieldDescriptor& v);
json exponent_report(const expo::GroupSpec& g);
json duality_to_json(const expo::DualityReport& r);

json report_to_json(const oracle::Report& r);

/// {"dim","p","k","gens":[[[...]]]} with an optional "order" to assert.
oracle::MatrixGroup matrix_group_from_json(const json& j);

}  // namespace galoisjd::json_io
