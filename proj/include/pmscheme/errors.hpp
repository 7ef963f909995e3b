#pragma once

#include <stdexcept>
#include <string>

namespace pmscheme {

/// Precondition violated by the caller (bad partition, odd n, mismatched k, ...).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Request exceeds a documented size cap.
class capacity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A combinatorial construction failed its own exhaustive verification.
class construction_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exact identity that must hold did not (orbit keys, traces, table cells).
class verification_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Eigenvalue extraction could not assign a unique rational value.
class extraction_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace pmscheme
