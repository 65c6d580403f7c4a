#pragma once

// Exact scalar types and their Eigen integration.
//
// BigInteger and BigRational are the GMP C++ classes. Rationals are kept in
// canonical form (reduced, positive denominator) after every operation.

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace dioset {

using BigInteger = mpz_class;
using BigRational = mpq_class;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RatMatrix = Matrix<BigRational>;
using RatVector = Vector<BigRational>;
using IntVector = Vector<BigInteger>;

/// Parses a decimal integer ("-123"). Throws InputError on anything else.
BigInteger parse_integer(std::string_view text);
/// Parses "p" or "p/q" with q != 0; the result is canonicalized.
BigRational parse_rational(std::string_view text);

std::string to_string(const BigInteger& value);
/// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const BigRational& value);

inline BigRational to_rational(const BigInteger& value) { return BigRational(value); }

/// Vector conversions.
RatVector to_rational(const IntVector& v);
IntVector to_int_vector(const std::vector<BigInteger>& v);
std::vector<BigInteger> to_std_vector(const IntVector& v);

/// Scales a rational vector by the lcm of its denominators and divides by the
/// gcd of the resulting numerators. The sign is left untouched.
IntVector clear_denominators(const RatVector& v);

/// gcd of absolute values; 0 for an all-zero vector.
BigInteger content(const IntVector& v);

}  // namespace dioset

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
    typedef mpz_class Real;
    typedef mpq_class NonInteger;
    typedef mpz_class Nested;
    typedef mpz_class Literal;

    enum {
        IsInteger = 1,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 30,
        MulCost = 100
    };

    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    typedef mpq_class Real;
    typedef mpq_class NonInteger;
    typedef mpq_class Nested;
    typedef mpq_class Literal;

    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 60,
        MulCost = 200
    };

    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
