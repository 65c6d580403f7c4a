#include "dioset/polynomial.hpp"

#include "dioset/errors.hpp"
#include "dioset/isqrt.hpp"
#include "dioset/linalg.hpp"

namespace dioset {

namespace {

IntVector normalize(IntVector c) {
    Eigen::Index size = c.size();
    while (size > 0 && c(size - 1) == 0) --size;
    if (size == 0) throw InputError("the zero polynomial is not allowed");
    IntVector out = c.head(size);
    if (out(size - 1) < 0) out = -out;
    return out;
}

}  // namespace

Polynomial::Polynomial(IntVector coeffs) : coeffs_(normalize(std::move(coeffs))) {}

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
    IntVector v(static_cast<Eigen::Index>(coeffs.size()));
    Eigen::Index i = 0;
    for (long c : coeffs) v(i++) = c;
    coeffs_ = normalize(std::move(v));
}

Polynomial Polynomial::from_strings(const std::vector<std::string>& coeffs) {
    IntVector v(static_cast<Eigen::Index>(coeffs.size()));
    for (std::size_t i = 0; i < coeffs.size(); ++i) v(static_cast<Eigen::Index>(i)) = parse_integer(coeffs[i]);
    return Polynomial(std::move(v));
}

BigInteger Polynomial::operator()(const BigInteger& x) const { return evaluate(coeffs_, x); }

BigRational Polynomial::operator()(const BigRational& x) const { return evaluate(coeffs_, x); }

BigInteger Polynomial::content() const { return dioset::content(coeffs_); }

Polynomial Polynomial::primitive_part() const {
    const BigInteger g = content();
    IntVector v = coeffs_;
    for (Eigen::Index i = 0; i < v.size(); ++i) mpz_divexact(v(i).get_mpz_t(), v(i).get_mpz_t(), g.get_mpz_t());
    return Polynomial(std::move(v));
}

bool operator<(const Polynomial& a, const Polynomial& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
    for (Eigen::Index i = a.coeffs_.size(); i-- > 0;)
        if (a.coeffs_(i) != b.coeffs_(i)) return a.coeffs_(i) < b.coeffs_(i);
    return false;
}

std::vector<std::string> Polynomial::to_strings() const {
    std::vector<std::string> out;
    for (Eigen::Index i = 0; i < coeffs_.size(); ++i) out.push_back(to_string(coeffs_(i)));
    return out;
}

std::string Polynomial::pretty() const {
    std::string out;
    for (Eigen::Index e = degree(); e >= 0; --e) {
        const BigInteger& c = coeffs_(e);
        if (c == 0) continue;
        BigInteger mag = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (mag != 1 || e == 0) out += to_string(mag);
        if (e >= 1) out += "x";
        if (e >= 2) out += "^" + std::to_string(e);
    }
    return out;
}

// Square root by matching coefficients from the top: with g_m = sqrt(p_2m),
// the coefficient of x^(2m-r) determines g_(m-r) linearly.
std::optional<Polynomial> polynomial_sqrt(const Polynomial& p) {
    if (p.degree() % 2 != 0) return std::nullopt;
    const Eigen::Index m = p.degree() / 2;
    const auto lead = integer_sqrt(p.leading());
    if (!lead) return std::nullopt;

    IntVector g = IntVector::Zero(m + 1);
    g(m) = *lead;
    const BigInteger two_lead = 2 * *lead;
    for (Eigen::Index r = 1; r <= m; ++r) {
        const Eigen::Index e = 2 * m - r;
        BigInteger rest = 0;
        for (Eigen::Index i = m - r + 1; i < m; ++i) {
            const Eigen::Index j = e - i;
            if (j > m - r && j < m) rest += g(i) * g(j);
        }
        BigInteger num = p.coeffs()(e) - rest;
        if (!mpz_divisible_p(num.get_mpz_t(), two_lead.get_mpz_t())) return std::nullopt;
        g(m - r) = num / two_lead;
    }

    IntVector square = IntVector::Zero(2 * m + 1);
    for (Eigen::Index i = 0; i <= m; ++i)
        for (Eigen::Index j = 0; j <= m; ++j) square(i + j) += g(i) * g(j);
    if (square != p.coeffs()) return std::nullopt;
    return Polynomial(g);
}

}  // namespace dioset
