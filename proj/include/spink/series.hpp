#pragma once

// Truncated power series in a single variable z with exact coefficients.
// Throughout, z stands for the square of a formal root, so every series the
// genus engine needs is an honest power series in z with no fractional powers.

#include <cstddef>
#include <vector>

#include "spink/exact.hpp"

namespace spink {

/// Coefficients c_0 .. c_n of a power series truncated after z^n.
class PowerSeries {
public:
    PowerSeries() = default;
    explicit PowerSeries(std::vector<Rational> coefficients);

    std::size_t max_degree() const { return coefficients_.empty() ? 0 : coefficients_.size() - 1; }
    const std::vector<Rational>& coefficients() const { return coefficients_; }
    const Rational& operator[](std::size_t k) const { return coefficients_.at(k); }

    /// Keeps z^0 .. z^n, padding with zeros if the series is shorter.
    PowerSeries truncated(std::size_t n) const;

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
    std::vector<Rational> coefficients_;
};

/// Product truncated at the smaller of the two degrees.
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
/// Quotient a / b; requires b(0) ≠ 0.
PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);
/// f(c·z).
PowerSeries rescale(const PowerSeries& f, const Rational& c);
/// log f for f(0) = 1; the result has zero constant term.
PowerSeries log1p_series(const PowerSeries& f);

/// Generating series Q(z) = 1 + q_1 z + q_2 z² + ... of a multiplicative
/// sequence. The constant term is exactly 1.
class CharacteristicSeries {
public:
    explicit CharacteristicSeries(PowerSeries series);

    const PowerSeries& series() const { return series_; }
    std::size_t max_degree() const { return series_.max_degree(); }
    const Rational& operator[](std::size_t k) const { return series_[k]; }

private:
    PowerSeries series_;
};

/// cosh√z = Σ z^k/(2k)!.
PowerSeries cosh_sqrt(std::size_t max_degree);
/// sinh√z/√z = Σ z^k/(2k+1)!.
PowerSeries sinh_sqrt_over_sqrt(std::size_t max_degree);

/// √z / tanh √z: the Hirzebruch L-genus.
CharacteristicSeries l_series(std::size_t max_degree);
/// (√z/2) / sinh(√z/2): the Â-genus.
CharacteristicSeries ahat_series(std::size_t max_degree);
/// cosh(√z/2) = Σ z^k / (4^k (2k)!): the Mayer factor of one formal root.
CharacteristicSeries mayer_series(std::size_t max_degree);
/// Q(z) = 1.
CharacteristicSeries trivial_series(std::size_t max_degree);

}  // namespace spink
