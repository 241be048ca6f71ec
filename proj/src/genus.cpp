#include "spink/genus.hpp"

#include <stdexcept>

namespace spink {

std::vector<PontryaginPolynomial> power_sums_in_pontryagin(int n) {
    // P_k = Σ_{i=1}^{k-1} (−1)^{i−1} p_i P_{k−i} + (−1)^{k−1} k p_k
    std::vector<PontryaginPolynomial> P(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; ++k) {
        PontryaginPolynomial acc = p_class(k) * Rational((k % 2 == 1) ? k : -k);
        for (int i = 1; i < k; ++i) {
            const Rational sign((i % 2 == 1) ? 1 : -1);
            acc += (p_class(i) * P[static_cast<std::size_t>(k - i)]) * sign;
        }
        P[static_cast<std::size_t>(k)] = std::move(acc);
    }
    return P;
}

std::vector<PontryaginPolynomial> genus_polynomials(const CharacteristicSeries& series, int n) {
    if (n < 1) throw std::invalid_argument("genus_polynomials: n must be >= 1");
    if (series.max_degree() < static_cast<std::size_t>(n))
        throw std::invalid_argument("genus_polynomials: series known to degree " + std::to_string(series.max_degree()) +
                                    ", need " + std::to_string(n));
    const PowerSeries log_q = log1p_series(series.series().truncated(static_cast<std::size_t>(n)));
    const auto P = power_sums_in_pontryagin(n);

    // log K = Σ_k S_k with S_k = [log Q]_k · P_k of weight k, and
    // j·K_j = Σ_{k=1}^{j} k·S_k·K_{j−k}.
    std::vector<PontryaginPolynomial> S(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; ++k) S[k] = P[k] * (Rational(k) * log_q[static_cast<std::size_t>(k)]);

    std::vector<PontryaginPolynomial> K(static_cast<std::size_t>(n) + 1);
    K[0] = PontryaginPolynomial(Rational(1));
    for (int j = 1; j <= n; ++j) {
        PontryaginPolynomial acc;
        for (int k = 1; k <= j; ++k) acc += S[k] * K[j - k];
        K[j] = acc * Rational(1, j);
    }
    return K;
}

PontryaginPolynomial total_genus(const CharacteristicSeries& series, int n) {
    PontryaginPolynomial total;
    for (const auto& k : genus_polynomials(series, n)) total += k;
    return total;
}

SCoefficients l_coefficients(int m) {
    if (m < 1) throw std::invalid_argument("l_coefficients: m must be >= 1");
    const auto L = genus_polynomials(l_series(static_cast<std::size_t>(2 * m)), 2 * m);
    const Generator pm = pontryagin(m);
    const Generator p2m = pontryagin(2 * m);
    return {L[m].coefficient({{pm, 1}}), L[2 * m].coefficient({{pm, 2}}), L[2 * m].coefficient({{p2m, 1}})};
}

Rational s2m_bernoulli(int m) {
    if (m < 1) throw std::invalid_argument("s2m_bernoulli: m must be >= 1");
    const auto four_m = static_cast<unsigned>(4 * m);
    Integer two_4m, two_4m_1;
    mpz_ui_pow_ui(two_4m.get_mpz_t(), 2, four_m);
    mpz_ui_pow_ui(two_4m_1.get_mpz_t(), 2, four_m - 1);
    return Rational(two_4m * (two_4m_1 - 1), factorial(four_m)) * bernoulli(2 * m);
}

std::pair<Rational, Rational> ahat_rhc_coeffs(int m) {
    if (m < 1) throw std::invalid_argument("ahat_rhc_coeffs: m must be >= 1");
    const auto A = genus_polynomials(ahat_series(static_cast<std::size_t>(2 * m)), 2 * m);
    return {A[2 * m].coefficient({{pontryagin(m), 2}}), A[2 * m].coefficient({{pontryagin(2 * m), 1}})};
}

Rational integrate_rhc(const PontryaginPolynomial& p, int m, const Integer& P2, const Integer& Q) {
    const std::map<Monomial, Rational> numbers{{{{pontryagin(m), 2}}, Rational(P2)}, {{{pontryagin(2 * m), 1}}, Rational(Q)}};
    return integrate(p.weight_part(2 * m), numbers);
}

PontryaginPolynomial twist_class_e1(int max_weight) {
    if (max_weight < 0) throw std::invalid_argument("twist_class_e1: negative weight");
    if (max_weight == 0) return {};
    // e^y + e^{−y} − 2 = 2(cosh y − 1) = Σ_{k≥1} 2 z^k/(2k)! with z = y².
    const auto P = power_sums_in_pontryagin(max_weight);
    PontryaginPolynomial e1;
    for (int k = 1; k <= max_weight; ++k) e1 += P[k] * Rational(Integer(2), factorial(static_cast<unsigned>(2 * k)));
    return e1;
}

Generator gamma_class() { return formal_class('g', 1); }
Generator euler_class() { return formal_class('e', 1); }

namespace {

// Weight-w part of 2·cosh(√u/2)·Â for a formal weight-1 class u.
PontryaginPolynomial doubled_mayer_times_ahat(const PontryaginPolynomial& u, int w) {
    const auto mayer = mayer_series(static_cast<std::size_t>(w));
    const PontryaginPolynomial m = compose(mayer.series().coefficients(), u, w);
    const PontryaginPolynomial ahat = total_genus(ahat_series(static_cast<std::size_t>(w)), w);
    return (multiply_truncated(m, ahat, w) * Rational(2)).weight_part(w);
}

}  // namespace

PontryaginPolynomial spinh_integrand_polynomial_dim8() {
    const PontryaginPolynomial u = p_class(1) + PontryaginPolynomial(gamma_class()) * Rational(2);
    return doubled_mayer_times_ahat(u, 2);
}

Rational spinh_integrand_dim8(const Integer& x, const Integer& y, const Integer& c) {
    // p_1 = x·α, γ = c·α (free part), ⟨α², μ⟩ = 1.
    const Generator p1 = pontryagin(1), p2 = pontryagin(2), g = gamma_class();
    const std::map<Monomial, Rational> numbers{
        {{{p1, 2}}, Rational(Integer(x * x))},
        {{{p2, 1}}, Rational(y)},
        {{{p1, 1}, {g, 1}}, Rational(Integer(x * c))},
        {{{g, 2}}, Rational(Integer(c * c))},
    };
    const PontryaginPolynomial integrand = spinh_integrand_polynomial_dim8();
    for (const auto& [m, coefficient] : integrand.terms())
        if (!numbers.contains(m)) throw std::logic_error("unexpected monomial in spin^h integrand: " + monomial_str(m));
    return integrate(integrand, numbers);
}

PontryaginPolynomial mayer_indicator_polynomial_4d(Orientation sign) {
    const Rational two_e(sign == Orientation::plus ? 2 : -2);
    const PontryaginPolynomial u = p_class(1) + PontryaginPolynomial(euler_class()) * two_e;
    return doubled_mayer_times_ahat(u, 1);
}

Rational mayer_indicator_4d(const Integer& p1, const Integer& euler, Orientation sign) {
    const Rational p1_value(p1), e_value(euler);
    return evaluate(mayer_indicator_polynomial_4d(sign),
                    [&](const Generator& g) { return g == euler_class() ? e_value : p1_value; });
}

Certificate mayer_integrality_check(const RHCModel& model, long k) {
    model.validate();
    const long m = model.m;
    if (k < 1) throw std::invalid_argument("mayer_integrality_check: k must be >= 1");
    if (k >= 2 * m)
        throw std::invalid_argument("mayer_integrality_check: requires k < 2m (k = " + std::to_string(k) +
                                    ", m = " + std::to_string(m) + "); the Mayer class need not be trivial");
    const long l = k / 2;
    const int w = static_cast<int>(2 * m);

    const PontryaginPolynomial ahat = total_genus(ahat_series(static_cast<std::size_t>(w)), w);
    const PontryaginPolynomial e1 = twist_class_e1(w);
    const PontryaginPolynomial e1_sq_ahat = multiply_truncated(multiply_truncated(e1, e1, w), ahat, w);

    const Rational scale = pow(Rational(2), static_cast<unsigned>(l));
    const Rational int_ahat = integrate_rhc(ahat, w / 2, model.P2, model.Q);
    const Rational int_e1_sq_ahat = integrate_rhc(e1_sq_ahat, w / 2, model.P2, model.Q);
    const Rational scaled_ahat = scale * int_ahat;
    const Rational scaled_e1 = scale * int_e1_sq_ahat;

    const SCoefficients s = l_coefficients(static_cast<int>(m));
    const Rational l_genus = s.s_mm * Rational(model.P2) + s.s_2m * Rational(model.Q);

    Certificate cert(spin_structure_name(k));
    cert.add_parameter("m", Rational(m))
        .add_parameter("dimension", Rational(model.dimension()))
        .add_parameter("k", Rational(k))
        .add_parameter("l", Rational(l))
        .add_parameter("P2", Rational(model.P2))
        .add_parameter("Q", Rational(model.Q))
        .add_parameter("sigma", Rational(model.sigma));

    cert.add_check(check_equal("signature = L-genus", Rational(model.sigma), l_genus));
    const bool integral = scaled_ahat.is_integer() && scaled_e1.is_integer();
    cert.add_check(scaled_ahat.is_integer() ? check_integral("2^l * int A-hat", scaled_ahat)
                                            : check_not_integral("2^l * int A-hat", scaled_ahat));
    cert.add_check(scaled_e1.is_integer() ? check_integral("2^l * int e1^2 A-hat", scaled_e1)
                                          : check_not_integral("2^l * int e1^2 A-hat", scaled_e1));

    cert.add_witness("int A-hat", int_ahat.fraction_str())
        .add_witness("int e1^2 A-hat", int_e1_sq_ahat.fraction_str())
        .add_witness("integrality", integral ? "pass" : "fail")
        .add_witness("assumption", "k < 2m, so the Mayer class is rationally trivial on this model");

    if (!integral && cert.all_checks_passed()) cert.set_verdict(Verdict::excluded);
    return cert;
}

}  // namespace spink
