#pragma once

// JSON forms of the library's values. Rationals are "p/q" strings in lowest
// terms (integers keep "/1"), big integers are decimal strings, partitions
// are decreasing integer arrays and matrices are arrays of rows.
// See docs/formats.md.

#include "pmscheme/combinat.hpp"
#include "pmscheme/ekr.hpp"
#include "pmscheme/exact.hpp"
#include "pmscheme/geometry.hpp"
#include "pmscheme/linalg.hpp"
#include "pmscheme/quotient.hpp"
#include "pmscheme/scheme.hpp"

#include <json.hpp>

namespace pmscheme::json_io {

using nlohmann::json;

/// Bumped whenever a serialized layout changes; part of every cache key.
inline constexpr int kSchemaVersion = 1;

json to_json(const Rational& q);
json to_json(const Integer& z);
json to_json(const IntegerPartition& p);
json to_json(const RationalMatrix& m);
json to_json(const CharacterTable& t);

/// Accepts "p/q", "p" or a JSON integer.
Rational rational_from_json(const json& j);
/// Accepts a decimal string or a JSON integer.
Integer integer_from_json(const json& j);
/// Accepts an array of positive integers in any order.
IntegerPartition partition_from_json(const json& j);
RationalMatrix matrix_from_json(const json& j);
/// Throws domain_error naming the offending field.
CharacterTable table_from_json(const json& j);

json to_json(const QuotientMatrix& q, const OrbitPartition& orbits);
json to_json(const PartialTableResult& r);
json to_json(const ConjectureReport& r);
json to_json(const SpanningSetReport& r);
json to_json(const DifferenceSet& ds);
json to_json(const LinesWithZeroReport& r);
json to_json(const CliqueConstruction& c);
json to_json(const WeightedSchemeMatrix& m);
json to_json(const BoundCertificate& c);
json to_json(const WeightedMatrixReport& r);
json to_json(const CliqueProjection& p);
json to_json(const TraceBoundReport& r);
json to_json(const SpanDimensionReport& r);
json to_json(const MaxCocliqueResult& r);
json to_json(const BoseMesnerReport& r);

} // namespace pmscheme::json_io
