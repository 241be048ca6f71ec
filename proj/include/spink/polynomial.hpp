#pragma once

#include <compare>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "spink/exact.hpp"

namespace spink {

/// A formal characteristic class used as a polynomial generator. Weight is
/// measured in units of cohomological degree 4, so p_i has weight i.
struct Generator {
    char symbol = 'p';
    int index = 1;
    int weight = 1;

    std::string name() const;
    friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// Pontryagin class p_i.
Generator pontryagin(int i);
/// An auxiliary class such as the Euler class e of a 4-manifold or the
/// integral class γ of a spin^h structure: printed as the bare symbol.
Generator formal_class(char symbol, int weight);

/// Exponent vector keyed by generator; zero exponents are never stored.
using Monomial = std::vector<std::pair<Generator, int>>;

int weight(const Monomial& m);
Monomial monomial_product(const Monomial& a, const Monomial& b);
std::string monomial_str(const Monomial& m);

/// Graded polynomial with exact rational coefficients in p_1, p_2, ... and
/// any auxiliary formal classes. Zero coefficients are never stored.
class PontryaginPolynomial {
public:
    using Terms = std::map<Monomial, Rational>;

    PontryaginPolynomial() = default;
    PontryaginPolynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
    explicit PontryaginPolynomial(const Generator& g);
    PontryaginPolynomial(const Monomial& m, const Rational& coefficient);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Monomial& m) const;
    /// Highest weight present; -1 for the zero polynomial.
    int max_weight() const;
    /// Homogeneous component of the given weight.
    PontryaginPolynomial weight_part(int w) const;
    /// Drops every term of weight above max_weight.
    PontryaginPolynomial truncated(int max_weight) const;

    PontryaginPolynomial operator-() const;
    PontryaginPolynomial& operator+=(const PontryaginPolynomial& rhs);
    PontryaginPolynomial& operator-=(const PontryaginPolynomial& rhs);
    PontryaginPolynomial& operator*=(const Rational& scalar);

    friend PontryaginPolynomial operator+(PontryaginPolynomial a, const PontryaginPolynomial& b) { return a += b; }
    friend PontryaginPolynomial operator-(PontryaginPolynomial a, const PontryaginPolynomial& b) { return a -= b; }
    friend PontryaginPolynomial operator*(PontryaginPolynomial a, const Rational& s) { return a *= s; }
    friend PontryaginPolynomial operator*(const Rational& s, PontryaginPolynomial a) { return a *= s; }
    friend PontryaginPolynomial operator*(const PontryaginPolynomial& a, const PontryaginPolynomial& b);

    friend bool operator==(const PontryaginPolynomial&, const PontryaginPolynomial&) = default;

    /// e.g. "7/45*p2 - 1/45*p1^2"; "0" for the zero polynomial.
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const PontryaginPolynomial& p) { return os << p.str(); }

private:
    void add_term(const Monomial& m, const Rational& c);
    Terms terms_;
};

/// Product truncated to max_weight, skipping higher terms as they are formed.
PontryaginPolynomial multiply_truncated(const PontryaginPolynomial& a, const PontryaginPolynomial& b, int max_weight);

/// Σ_k coefficients[k]·u^k truncated to max_weight.
PontryaginPolynomial compose(const std::vector<Rational>& coefficients, const PontryaginPolynomial& u, int max_weight);

/// Replaces every generator by the value given by `value_of` and sums.
Rational evaluate(const PontryaginPolynomial& p, const std::function<Rational(const Generator&)>& value_of);

/// Pairs each monomial with a characteristic number. Monomials absent from
/// `numbers` contribute zero (rationally vanishing classes).
Rational integrate(const PontryaginPolynomial& p, const std::map<Monomial, Rational>& numbers);

/// Substitutes polynomials for generators; generators absent from the map are kept.
PontryaginPolynomial substitute(const PontryaginPolynomial& p, const std::map<Generator, PontryaginPolynomial>& images);

inline PontryaginPolynomial p_class(int i) { return PontryaginPolynomial(pontryagin(i)); }

}  // namespace spink
