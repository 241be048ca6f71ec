#include "spink/exact.hpp"

#include <algorithm>
#include <bit>

namespace spink {

Rational::Rational(const Integer& numerator, const Integer& denominator) {
    if (denominator == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(long numerator, long denominator)
    : Rational(Integer(numerator), Integer(denominator)) {}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    Integer num, den(1);
    const std::string head(text.substr(0, slash));
    if (head.empty() || num.set_str(head, 10) != 0)
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    if (slash != std::string_view::npos) {
        const std::string tail(text.substr(slash + 1));
        if (tail.empty() || tail[0] == '-' || tail[0] == '+' || den.set_str(tail, 10) != 0)
            throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

std::string Rational::str() const { return value_.get_str(); }

std::string Rational::fraction_str() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational pow(const Rational& base, unsigned exponent) {
    Rational result(1);
    for (unsigned i = 0; i < exponent; ++i) result *= base;
    return result;
}

long Valuation::value() const {
    if (infinite_) throw std::logic_error("valuation of zero is infinite");
    return value_;
}

long nu2(const Integer& n) {
    if (n == 0) throw std::domain_error("nu2 of zero");
    return static_cast<long>(mpz_scan1(n.get_mpz_t(), 0));
}

long nu2(const Rational& r) {
    if (r.is_zero()) throw std::domain_error("nu2 of zero");
    return nu2(r.numerator()) - nu2(r.denominator());
}

Valuation valuation2(const Rational& r) {
    return r.is_zero() ? Valuation::infinite() : Valuation::finite(nu2(r));
}

bool is_dyadic(const Rational& r) {
    const Integer den = r.denominator();
    return mpz_popcount(den.get_mpz_t()) == 1;
}

Integer odd_part(const Integer& n) {
    if (n == 0) throw std::domain_error("odd part of zero");
    Integer result = abs(n);
    mpz_tdiv_q_2exp(result.get_mpz_t(), result.get_mpz_t(), mpz_scan1(result.get_mpz_t(), 0));
    return result;
}

Integer factorial(unsigned n) {
    Integer result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

Integer binomial(unsigned n, unsigned k) {
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), n, k);
    return result;
}

std::vector<Rational> bernoulli_modern(unsigned max_index) {
    // Σ_{k=0}^{n} C(n+1, k) B_k = 0 for n ≥ 1.
    std::vector<Rational> b(max_index + 1);
    b[0] = Rational(1);
    for (unsigned n = 1; n <= max_index; ++n) {
        Rational acc;
        for (unsigned k = 0; k < n; ++k) acc += Rational(binomial(n + 1, k)) * b[k];
        b[n] = -acc / Rational(Integer(n + 1));
    }
    return b;
}

Rational bernoulli(long j) {
    if (j < 1) throw std::invalid_argument("bernoulli index must be >= 1");
    const auto index = static_cast<unsigned>(2 * j);
    const Rational b = bernoulli_modern(index)[index];
    return b.sign() < 0 ? -b : b;
}

unsigned alpha(std::uint64_t n) { return static_cast<unsigned>(std::popcount(n)); }

std::set<long> quadratic_residues(long modulus) {
    if (modulus < 2) throw std::invalid_argument("modulus must be >= 2");
    std::set<long> residues;
    for (long c = 0; c < modulus; ++c) residues.insert(static_cast<long>(Integer(Integer(c) * c % modulus).get_si()));
    return residues;
}

bool is_quadratic_residue(long value, long modulus) {
    const long r = ((value % modulus) + modulus) % modulus;
    return quadratic_residues(modulus).contains(r);
}

namespace {

Integer isqrt(const Integer& n) { return sqrt(n); }

// Smallest b with factor·b² ≥ n.
Integer ceil_root(const Integer& n, unsigned factor) {
    Integer b = isqrt(n / factor);
    while (factor * b * b < n) ++b;
    return b;
}

}  // namespace

FourSquares four_squares(const Integer& x) {
    if (x < 0) throw std::invalid_argument("four_squares of a negative integer");
    if (x == 0) return {Integer(0), Integer(0), Integer(0), Integer(0)};
    for (Integer a = isqrt(x); a >= 0; --a) {
        const Integer rest = x - a * a;
        if (rest > 3 * a * a) break;
        const Integer b_max = std::min(a, isqrt(rest));
        for (Integer b = ceil_root(rest, 3); b <= b_max; ++b) {
            const Integer r2 = rest - b * b;
            const Integer c_max = std::min(b, isqrt(r2));
            for (Integer c = ceil_root(r2, 2); c <= c_max; ++c) {
                const Integer r3 = r2 - c * c;
                const Integer d = isqrt(r3);
                if (d * d == r3) return {a, b, c, d};
            }
        }
    }
    throw std::logic_error("four_squares: no decomposition found");
}

}  // namespace spink
