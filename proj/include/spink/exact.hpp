#pragma once

// Exact arithmetic and the small amount of number theory the rest of the
// library needs: 2-adic valuations, dyadic membership, Bernoulli numbers,
// binary digit sums, quadratic residues and four-square decompositions.

#include <array>
#include <compare>
#include <cstdint>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace spink {

using Integer = mpz_class;

/// Arbitrary-precision fraction, always kept in lowest terms with a positive
/// denominator. Division by zero throws std::domain_error.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& numerator, const Integer& denominator);
    Rational(long numerator, long denominator);

    /// Parses "n", "-n" or "n/d".
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Canonical text: "n" for integers, "n/d" otherwise.
    std::string str() const;
    /// Always "n/d", also for integers. Used for serialization.
    std::string fraction_str() const;

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) {}
    mpq_class value_;
};

Rational pow(const Rational& base, unsigned exponent);

/// 2-adic valuation. Zero has infinite valuation, carried by a marker rather
/// than by any integer.
class Valuation {
public:
    static Valuation infinite() { return Valuation(); }
    static Valuation finite(long v) { return Valuation(v); }

    bool is_infinite() const { return infinite_; }
    /// Throws std::logic_error on the infinite marker.
    long value() const;

    friend bool operator==(const Valuation&, const Valuation&) = default;

private:
    Valuation() = default;
    explicit Valuation(long v) : infinite_(false), value_(v) {}
    bool infinite_ = true;
    long value_ = 0;
};

/// ν₂ of a non-zero rational. Throws std::domain_error for zero.
long nu2(const Rational& r);
long nu2(const Integer& n);
/// Total version: zero maps to Valuation::infinite().
Valuation valuation2(const Rational& r);

/// True iff the reduced denominator is a power of two, i.e. r ∈ ℤ[1/2].
bool is_dyadic(const Rational& r);

/// Largest odd divisor of a non-zero integer (sign dropped).
Integer odd_part(const Integer& n);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

/// Modern Bernoulli numbers B_0 = 1, B_1 = -1/2, B_2 = 1/6, ... for n ≤ max_index.
std::vector<Rational> bernoulli_modern(unsigned max_index);

/// Bernoulli numbers in the topologists' convention: B_1 = 1/6, B_2 = 1/30,
/// B_3 = 1/42, ..., i.e. |B_{2j}| in the modern convention. Throws
/// std::invalid_argument for j < 1.
Rational bernoulli(long j);

/// Number of ones in the binary expansion of n ≥ 1.
unsigned alpha(std::uint64_t n);

/// { c² mod modulus : 0 ≤ c < modulus }. Throws for modulus < 2.
std::set<long> quadratic_residues(long modulus);
bool is_quadratic_residue(long value, long modulus);

using FourSquares = std::array<Integer, 4>;

/// Deterministic Lagrange decomposition a² + b² + c² + d² = x with
/// a ≥ b ≥ c ≥ d ≥ 0: the largest admissible a, then the lexicographically
/// smallest (b, c, d). Throws for x < 0.
FourSquares four_squares(const Integer& x);

}  // namespace spink
