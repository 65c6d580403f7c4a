#include "dioset/isqrt.hpp"

#include "dioset/errors.hpp"

namespace dioset {

BigInteger isqrt_floor(const BigInteger& n) {
    if (n < 0) throw InputError("isqrt_floor: negative argument");
    if (n < 2) return n;
    // 2^ceil(bits/2) > sqrt(n); the iteration decreases strictly until it
    // reaches floor(sqrt(n)).
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    BigInteger x = 1;
    x <<= static_cast<mp_bitcnt_t>((bits + 1) / 2);
    while (true) {
        BigInteger y = (x + n / x) >> 1;
        if (y >= x) return x;
        x = y;
    }
}

std::optional<BigInteger> integer_sqrt(const BigInteger& n) {
    if (n < 0) return std::nullopt;
    BigInteger r = isqrt_floor(n);
    if (r * r != n) return std::nullopt;
    return r;
}

}  // namespace dioset
