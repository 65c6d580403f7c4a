#include "dioset/scalar.hpp"

#include "dioset/errors.hpp"

#include <cctype>

namespace dioset {

namespace {

bool is_decimal(std::string_view text) {
    std::size_t i = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
    if (i == text.size()) return false;
    for (; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    return true;
}

}  // namespace

BigInteger parse_integer(std::string_view text) {
    if (!is_decimal(text)) throw InputError("not an integer: '" + std::string(text) + "'");
    if (text[0] == '+') text.remove_prefix(1);
    return BigInteger(std::string(text), 10);
}

BigRational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return BigRational(parse_integer(text));
    BigInteger num = parse_integer(text.substr(0, slash));
    BigInteger den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator: '" + std::string(text) + "'");
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const BigInteger& value) { return value.get_str(10); }

std::string to_string(const BigRational& value) { return value.get_str(10); }

RatVector to_rational(const IntVector& v) {
    RatVector out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = BigRational(v(i));
    return out;
}

IntVector to_int_vector(const std::vector<BigInteger>& v) {
    IntVector out(static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
    return out;
}

std::vector<BigInteger> to_std_vector(const IntVector& v) {
    return std::vector<BigInteger>(v.data(), v.data() + v.size());
}

BigInteger content(const IntVector& v) {
    BigInteger g = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v(i).get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntVector clear_denominators(const RatVector& v) {
    BigInteger l = 1;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v(i).get_den_mpz_t());
    IntVector out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = v(i).get_num() * (l / v(i).get_den());
    const BigInteger g = content(out);
    if (g > 1)
        for (Eigen::Index i = 0; i < out.size(); ++i) mpz_divexact(out(i).get_mpz_t(), out(i).get_mpz_t(), g.get_mpz_t());
    return out;
}

}  // namespace dioset
