#pragma once

// Independent reference computations used only by the tests.
//
// genus oracle: expand ∏_{i≤N} Q(z_i) over N explicit formal roots and
// reduce the resulting symmetric polynomial to elementary symmetric
// functions by leading-term elimination. Shares nothing with the
// log/power-sum route in the library beyond the polynomial container.
//
// mod-2 oracle: the splitting principle over GF(2), i.e. expand
// ∏(1 + x_i + t) explicitly in roots x_i and reduce symmetric polynomials.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "spink/exact.hpp"
#include "spink/polynomial.hpp"

namespace oracle {

using spink::Rational;
using Exponents = std::vector<int>;

// ---- rational polynomials in N roots ---------------------------------------

struct RootPoly {
    std::map<Exponents, Rational> terms;

    void add(const Exponents& e, const Rational& c) {
        if (c.is_zero()) return;
        auto& slot = terms[e];
        slot += c;
        if (slot.is_zero()) terms.erase(e);
    }
};

inline int total_degree(const Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

inline RootPoly multiply(const RootPoly& a, const RootPoly& b, int max_degree) {
    RootPoly out;
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            if (total_degree(e) <= max_degree) out.add(e, ca * cb);
        }
    return out;
}

inline RootPoly elementary(int j, int n_roots) {
    RootPoly out;
    // All subsets of size j.
    std::vector<int> pick(static_cast<std::size_t>(n_roots), 0);
    std::fill(pick.end() - j, pick.end(), 1);
    do {
        out.add(Exponents(pick.begin(), pick.end()), Rational(1));
    } while (std::next_permutation(pick.begin(), pick.end()));
    return out;
}

/// ∏_{i=1}^{N} Σ_k q_k z_i^k, truncated at total degree max_degree.
inline RootPoly product_over_roots(const std::vector<Rational>& q, int n_roots, int max_degree) {
    RootPoly out;
    out.add(Exponents(static_cast<std::size_t>(n_roots), 0), Rational(1));
    for (int i = 0; i < n_roots; ++i) {
        RootPoly factor;
        for (int k = 0; k < static_cast<int>(q.size()) && k <= max_degree; ++k) {
            Exponents e(static_cast<std::size_t>(n_roots), 0);
            e[static_cast<std::size_t>(i)] = k;
            factor.add(e, q[static_cast<std::size_t>(k)]);
        }
        out = multiply(out, factor, max_degree);
    }
    return out;
}

/// Rewrites a symmetric polynomial in the roots as a polynomial in
/// p_j = e_j(z). Throws if the input is not symmetric.
inline spink::PontryaginPolynomial to_elementary(RootPoly f, int n_roots) {
    spink::PontryaginPolynomial result;
    std::vector<RootPoly> e(static_cast<std::size_t>(n_roots) + 1);
    for (int j = 1; j <= n_roots; ++j) e[static_cast<std::size_t>(j)] = elementary(j, n_roots);
    while (!f.terms.empty()) {
        const auto& [lead, c] = *f.terms.rbegin();  // lex-largest exponent vector
        for (std::size_t i = 1; i < lead.size(); ++i)
            if (lead[i] > lead[i - 1]) throw std::logic_error("to_elementary: input is not symmetric");
        const int deg = total_degree(lead);
        spink::Monomial mono;
        RootPoly product;
        product.add(Exponents(static_cast<std::size_t>(n_roots), 0), Rational(1));
        for (int j = 1; j <= n_roots; ++j) {
            const int next = j < n_roots ? lead[static_cast<std::size_t>(j)] : 0;
            const int power = lead[static_cast<std::size_t>(j - 1)] - next;
            if (power > 0) mono.emplace_back(spink::pontryagin(j), power);
            for (int r = 0; r < power; ++r) product = multiply(product, e[static_cast<std::size_t>(j)], deg);
        }
        const Rational coefficient = c;
        result += spink::PontryaginPolynomial(mono, coefficient);
        for (const auto& [ex, cx] : product.terms) f.add(ex, -coefficient * cx);
    }
    return result;
}

/// K_n by explicit formal-root expansion with n_roots ≥ n roots.
inline spink::PontryaginPolynomial genus_by_roots(const std::vector<Rational>& q, int n, int n_roots) {
    RootPoly full = product_over_roots(q, n_roots, n);
    RootPoly homogeneous;
    for (const auto& [e, c] : full.terms)
        if (total_degree(e) == n) homogeneous.add(e, c);
    return to_elementary(homogeneous, n_roots);
}

/// Taylor coefficients from the textbook closed forms, independent of the
/// library's series division.
inline std::vector<Rational> taylor_l(int n) {
    // √z/tanh√z = Σ 2^{2k} B_{2k} z^k / (2k)!  (modern B).
    const auto b = spink::bernoulli_modern(static_cast<unsigned>(2 * n));
    std::vector<Rational> q;
    for (int k = 0; k <= n; ++k)
        q.push_back(spink::pow(Rational(4), static_cast<unsigned>(k)) * b[static_cast<std::size_t>(2 * k)] /
                    Rational(spink::factorial(static_cast<unsigned>(2 * k))));
    return q;
}

inline std::vector<Rational> taylor_ahat(int n) {
    // (x/2)/sinh(x/2) = Σ (2 − 2^{2k}) B_{2k} x^{2k} / (4^k (2k)!)
    const auto b = spink::bernoulli_modern(static_cast<unsigned>(2 * n));
    std::vector<Rational> q;
    for (int k = 0; k <= n; ++k) {
        const Rational four_k = spink::pow(Rational(4), static_cast<unsigned>(k));
        q.push_back((Rational(2) - four_k) * b[static_cast<std::size_t>(2 * k)] /
                    (four_k * Rational(spink::factorial(static_cast<unsigned>(2 * k)))));
    }
    return q;
}

// ---- GF(2) polynomials in roots ---------------------------------------------

using F2RootPoly = std::set<Exponents>;

inline void f2_add(F2RootPoly& f, const Exponents& e) {
    if (!f.erase(e)) f.insert(e);
}

inline F2RootPoly f2_multiply(const F2RootPoly& a, const F2RootPoly& b, int max_degree) {
    F2RootPoly out;
    for (const auto& ea : a)
        for (const auto& eb : b) {
            Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            if (total_degree(e) <= max_degree) f2_add(out, e);
        }
    return out;
}

inline F2RootPoly f2_elementary(int j, int n_roots) {
    F2RootPoly out;
    std::vector<int> pick(static_cast<std::size_t>(n_roots), 0);
    std::fill(pick.end() - j, pick.end(), 1);
    do {
        f2_add(out, Exponents(pick.begin(), pick.end()));
    } while (std::next_permutation(pick.begin(), pick.end()));
    return out;
}

/// Symmetric GF(2) polynomial → polynomial in w_j = e_j(x), as a set of
/// exponent vectors over (w_1..w_N).
inline std::set<Exponents> f2_to_elementary(F2RootPoly f, int n_roots) {
    std::set<Exponents> result;
    std::vector<F2RootPoly> e(static_cast<std::size_t>(n_roots) + 1);
    for (int j = 1; j <= n_roots; ++j) e[static_cast<std::size_t>(j)] = f2_elementary(j, n_roots);
    while (!f.empty()) {
        const Exponents lead = *f.rbegin();
        const int deg = total_degree(lead);
        Exponents w(static_cast<std::size_t>(n_roots), 0);
        F2RootPoly product{Exponents(static_cast<std::size_t>(n_roots), 0)};
        for (int j = 1; j <= n_roots; ++j) {
            const int next = j < n_roots ? lead[static_cast<std::size_t>(j)] : 0;
            const int power = lead[static_cast<std::size_t>(j - 1)] - next;
            if (power < 0) throw std::logic_error("f2_to_elementary: input is not symmetric");
            w[static_cast<std::size_t>(j - 1)] = power;
            for (int r = 0; r < power; ++r) product = f2_multiply(product, e[static_cast<std::size_t>(j)], deg);
        }
        if (!result.erase(w)) result.insert(w);
        for (const auto& ex : product) f2_add(f, ex);
    }
    return result;
}

/// Degree-`degree` component of w(E ⊗ L) with t = w_1(L) = w_1(E),
/// via ∏(1 + x_i + t) over rank many roots.
inline std::set<Exponents> twisted_component_by_roots(int rank, int degree) {
    F2RootPoly t;
    for (int i = 0; i < rank; ++i) {
        Exponents e(static_cast<std::size_t>(rank), 0);
        e[static_cast<std::size_t>(i)] = 1;
        f2_add(t, e);
    }
    F2RootPoly total{Exponents(static_cast<std::size_t>(rank), 0)};
    for (int i = 0; i < rank; ++i) {
        F2RootPoly factor{Exponents(static_cast<std::size_t>(rank), 0)};
        Exponents xi(static_cast<std::size_t>(rank), 0);
        xi[static_cast<std::size_t>(i)] = 1;
        f2_add(factor, xi);
        for (const auto& e : t) f2_add(factor, e);
        total = f2_multiply(total, factor, degree);
    }
    F2RootPoly homogeneous;
    for (const auto& e : total)
        if (total_degree(e) == degree) homogeneous.insert(e);
    return f2_to_elementary(homogeneous, rank);
}

}  // namespace oracle
