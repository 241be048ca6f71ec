#include "spink/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace spink {

PowerSeries::PowerSeries(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty()) coefficients_.emplace_back(0);
}

PowerSeries PowerSeries::truncated(std::size_t n) const {
    std::vector<Rational> c(n + 1);
    for (std::size_t k = 0; k <= n && k < coefficients_.size(); ++k) c[k] = coefficients_[k];
    return PowerSeries(std::move(c));
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const std::size_t n = std::min(a.max_degree(), b.max_degree());
    std::vector<Rational> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; i + j <= n; ++j) c[i + j] += a[i] * b[j];
    return PowerSeries(std::move(c));
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
    if (b[0].is_zero()) throw std::domain_error("series division by a series with zero constant term");
    const std::size_t n = std::min(a.max_degree(), b.max_degree());
    std::vector<Rational> q(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        Rational acc = a[k];
        for (std::size_t j = 1; j <= k; ++j) acc -= b[j] * q[k - j];
        q[k] = acc / b[0];
    }
    return PowerSeries(std::move(q));
}

PowerSeries rescale(const PowerSeries& f, const Rational& c) {
    std::vector<Rational> out(f.coefficients());
    Rational power(1);
    for (auto& coefficient : out) {
        coefficient *= power;
        power *= c;
    }
    return PowerSeries(std::move(out));
}

PowerSeries log1p_series(const PowerSeries& f) {
    if (f[0] != Rational(1)) throw std::domain_error("log of a series with constant term != 1");
    // f·(log f)' = f'  ⇒  k·L_k = k·f_k − Σ_{j<k} j·L_j·f_{k−j}.
    const std::size_t n = f.max_degree();
    std::vector<Rational> l(n + 1);
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc = Rational(static_cast<long>(k)) * f[k];
        for (std::size_t j = 1; j < k; ++j) acc -= Rational(static_cast<long>(j)) * l[j] * f[k - j];
        l[k] = acc / Rational(static_cast<long>(k));
    }
    return PowerSeries(std::move(l));
}

CharacteristicSeries::CharacteristicSeries(PowerSeries series) : series_(std::move(series)) {
    if (series_[0] != Rational(1)) throw std::invalid_argument("characteristic series must have constant term 1");
}

PowerSeries cosh_sqrt(std::size_t max_degree) {
    std::vector<Rational> c(max_degree + 1);
    for (std::size_t k = 0; k <= max_degree; ++k) c[k] = Rational(Integer(1), factorial(2 * k));
    return PowerSeries(std::move(c));
}

PowerSeries sinh_sqrt_over_sqrt(std::size_t max_degree) {
    std::vector<Rational> c(max_degree + 1);
    for (std::size_t k = 0; k <= max_degree; ++k) c[k] = Rational(Integer(1), factorial(2 * k + 1));
    return PowerSeries(std::move(c));
}

CharacteristicSeries l_series(std::size_t max_degree) {
    return CharacteristicSeries(cosh_sqrt(max_degree) / sinh_sqrt_over_sqrt(max_degree));
}

CharacteristicSeries ahat_series(std::size_t max_degree) {
    // (√z/2)/sinh(√z/2) = 1 / (sinh(√w)/√w) at w = z/4.
    const PowerSeries one(std::vector<Rational>{Rational(1)});
    return CharacteristicSeries(one.truncated(max_degree) / rescale(sinh_sqrt_over_sqrt(max_degree), Rational(1, 4)));
}

CharacteristicSeries mayer_series(std::size_t max_degree) {
    return CharacteristicSeries(rescale(cosh_sqrt(max_degree), Rational(1, 4)));
}

CharacteristicSeries trivial_series(std::size_t max_degree) {
    return CharacteristicSeries(PowerSeries(std::vector<Rational>{Rational(1)}).truncated(max_degree));
}

}  // namespace spink
