#pragma once

#include <stdexcept>
#include <string>

namespace dioset {

/// Malformed user input: duplicates, unparsable numbers, bad sizes.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Non-square matrix, mismatched vector lengths.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class IndexError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// A rational map evaluated where it is undefined (e.g. the base point).
class IndeterminatePointError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The parameter lies on a degenerate locus of a parametrization.
class DegenerateParameterError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// f(x_0) = 0, so the quadratic twist is undefined.
class DegenerateTwistError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The requested brute-force box exceeds the configured ceiling.
class SearchCeilingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dioset
