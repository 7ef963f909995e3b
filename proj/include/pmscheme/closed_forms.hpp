#pragma once

// Published closed forms for the perfect matching scheme, as functions of k.
// These are regression fixtures for the computed quotients and tables.

#include "pmscheme/combinat.hpp"
#include "pmscheme/exact.hpp"
#include "pmscheme/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pmscheme::closed_forms {

/// Printed generic formula for the eigenvalue of A_cls on `module`, for the
/// modules [2k],[2k-2,2],[2k-4,4],[2k-4,2,2],[2k-6,6] and classes
/// [2k],[2k-2,2],[2k-4,4],[2k-4,2,2],[2k-6,6]. nullopt where the value is not
/// published (the [2k-4,2,2] column below the degree row) or the pair is
/// outside the table.
std::optional<Rational> table_entry(int k, const IntegerPartition& module, const IntegerPartition& cls);

/// The 3x3 system for (a1, a2, a3): rows are modules [2k-2,2], [2k-4,4],
/// [2k-4,2,2], columns classes [2k], [2k-2,2], [2k-4,4].
RationalMatrix weight_system(int k);

struct QuotientFixture {
    std::string name;
    IntegerPartition class_shape;
    IntegerPartition subgroup;
    RationalMatrix entries;
};

/// The fourteen printed quotient matrices evaluated at k. Valid for k >= 6.
std::vector<QuotientFixture> quotient_fixtures(int k);

} // namespace pmscheme::closed_forms
