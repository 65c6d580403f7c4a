#pragma once

#include "dioset/scalar.hpp"

#include <optional>

namespace dioset {

/// floor(sqrt(n)) for n >= 0, by Newton iteration from above.
BigInteger isqrt_floor(const BigInteger& n);

/// r >= 0 with r*r == n, or nullopt when n is negative or not a square.
std::optional<BigInteger> integer_sqrt(const BigInteger& n);

}  // namespace dioset
