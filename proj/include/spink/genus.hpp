#pragma once

// Multiplicative sequences over formal Pontryagin classes.
//
// A multiplicative sequence K is determined by its characteristic series
// Q(z): K(p) is the graded part of ∏ Q(z_i), rewritten in the elementary
// symmetric functions p_j = e_j(z_1, z_2, ...). Weight j means cohomological
// degree 4j throughout.

#include <cstddef>
#include <utility>
#include <vector>

#include "spink/certificate.hpp"
#include "spink/polynomial.hpp"
#include "spink/rhc_model.hpp"
#include "spink/series.hpp"

namespace spink {

/// Power sums Σ z_i^k for k = 1..n written in p_1..p_n via Newton's identities.
/// Index 0 of the result is unused (zero).
std::vector<PontryaginPolynomial> power_sums_in_pontryagin(int n);

/// K_1 .. K_n of the multiplicative sequence of `series` (index 0 holds K_0 = 1).
/// Computed as exp(Σ_k [log Q]_k · P_k) with P_k the power sums.
/// Throws std::invalid_argument when the series is known to fewer than n terms.
std::vector<PontryaginPolynomial> genus_polynomials(const CharacteristicSeries& series, int n);

/// Total class 1 + K_1 + ... + K_n.
PontryaginPolynomial total_genus(const CharacteristicSeries& series, int n);

/// Coefficients of p_m in L_m and of p_m², p_{2m} in L_{2m}.
struct SCoefficients {
    Rational s_m;
    Rational s_mm;
    Rational s_2m;

    friend bool operator==(const SCoefficients&, const SCoefficients&) = default;
};

SCoefficients l_coefficients(int m);

/// 2^{4m}(2^{4m-1} − 1) B_{2m} / (4m)! with B in the topologists' convention.
Rational s2m_bernoulli(int m);

/// ∫Â = a·P2 + b·Q on a rationally highly connected 8m-model.
std::pair<Rational, Rational> ahat_rhc_coeffs(int m);

/// Integral of a weight-2m polynomial on a rationally highly connected
/// 8m-model: only p_m² and p_{2m} survive.
Rational integrate_rhc(const PontryaginPolynomial& p, int m, const Integer& P2, const Integer& Q);

/// e_1 = Σ_j (e^{y_j} + e^{−y_j} − 2) written in p-classes up to max_weight.
PontryaginPolynomial twist_class_e1(int max_weight);

/// Formal weight-1 class γ with p_1(E) = p_1(TX) + 2γ for a spin^h structure.
Generator gamma_class();
/// Euler class of an oriented 4-manifold, weight 1.
Generator euler_class();

/// Weight-2 part of 2·cosh(√(p_1 + 2γ)/2)·Â, expanded symbolically.
PontryaginPolynomial spinh_integrand_polynomial_dim8();

/// −x²/360 − y/720 + c²/48: the spin^h integrality expression on an 8-manifold
/// with ∫p_1² = x², ∫p_2 = y and the free part of γ equal to c times a
/// generator whose square integrates to 1. Coefficients come from
/// spinh_integrand_polynomial_dim8().
Rational spinh_integrand_dim8(const Integer& x, const Integer& y, const Integer& c);

enum class Orientation { plus, minus };

/// Weight-1 part of 2·cosh(√(p_1 ± 2e)/2)·Â: equals (p_1/3 ± e)/2.
PontryaginPolynomial mayer_indicator_polynomial_4d(Orientation sign);
Rational mayer_indicator_4d(const Integer& p1, const Integer& euler, Orientation sign);

/// Integrality test for a spin^k structure on a rationally highly connected
/// model with rationally trivial Mayer class: 2^l·∫Â and 2^l·∫e_1²Â must be
/// integers, l = floor(k/2). Throws std::invalid_argument when k ≥ 2m.
Certificate mayer_integrality_check(const RHCModel& model, long k);

}  // namespace spink
