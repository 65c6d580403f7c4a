#pragma once

#include "dioset/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dioset {

/// Nonzero integer polynomial f_0 + f_1 x + ... with trimmed trailing zeros
/// and positive leading coefficient.
class Polynomial {
public:
    /// Trims and fixes the sign. Throws InputError for the zero polynomial.
    explicit Polynomial(IntVector coeffs);
    Polynomial(std::initializer_list<long> coeffs);
    static Polynomial from_strings(const std::vector<std::string>& coeffs);

    const IntVector& coeffs() const { return coeffs_; }
    Eigen::Index degree() const { return coeffs_.size() - 1; }
    const BigInteger& leading() const { return coeffs_(coeffs_.size() - 1); }

    BigInteger operator()(const BigInteger& x) const;
    BigRational operator()(const BigRational& x) const;

    BigInteger content() const;
    Polynomial primitive_part() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_.size() == b.coeffs_.size() && a.coeffs_ == b.coeffs_;
    }
    friend bool operator<(const Polynomial& a, const Polynomial& b);

    std::vector<std::string> to_strings() const;
    /// Human-readable form, e.g. "24x + 1".
    std::string pretty() const;

private:
    IntVector coeffs_;
};

/// g with g*g == p when p is the square of an integer polynomial.
std::optional<Polynomial> polynomial_sqrt(const Polynomial& p);

}  // namespace dioset
