#pragma once

// Symbolic Stiefel–Whitney calculus in GF(2)[w_1, ..., w_k], deg w_i = i.

#include <set>
#include <string>
#include <vector>

#include "spink/mod2.hpp"

namespace spink {

/// Polynomial over GF(2) in w_1..w_k. A monomial is an exponent vector whose
/// entry i−1 is the power of w_i; the polynomial is the set of monomials
/// with coefficient 1.
class F2Poly {
public:
    using Exponents = std::vector<int>;

    F2Poly() = default;
    explicit F2Poly(int generators) : generators_(generators) {}
    static F2Poly one(int generators);
    /// w_i (1 ≤ i ≤ generators).
    static F2Poly w(int generators, int i);

    int generators() const { return generators_; }
    const std::set<Exponents>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// True if every monomial has weighted degree d.
    bool is_homogeneous(int d) const;

    void toggle(const Exponents& e);
    F2Poly& operator+=(const F2Poly& rhs);
    friend F2Poly operator+(F2Poly a, const F2Poly& b) { return a += b; }
    friend F2Poly operator*(const F2Poly& a, const F2Poly& b);

    /// Drops monomials of weighted degree above max_degree.
    F2Poly truncated(int max_degree) const;
    /// Sets w_1 = 0.
    F2Poly orientable() const;

    /// "0", "1", "w2 + w1^2"; monomials ordered from the highest generator down.
    std::string str() const;

    friend bool operator==(const F2Poly&, const F2Poly&) = default;

private:
    int generators_ = 0;
    std::set<Exponents> terms_;
};

int weighted_degree(const F2Poly::Exponents& e);

using SymbolicSW = SWTotal<F2Poly>;

/// Mod-2 binomial coefficient by Lucas' theorem: C(n, r) is odd iff r & ~n == 0.
bool binomial_odd(long n, long r);

/// 1 + w_1 + ... + w_k.
SymbolicSW generic_sw(int k);
/// Product of total classes, truncated at max_degree.
SymbolicSW whitney_product(const SymbolicSW& a, const SymbolicSW& b, int max_degree);
/// w(E ⊗ L) for a rank-k bundle E and a line bundle with w_1(L) = t:
/// w_j = Σ_i C(k − i, j − i) w_i t^{j−i}.
SymbolicSW twist_by_line(const SymbolicSW& w, int rank, const F2Poly& t);
/// Sets w_1 = 0 in every component.
SymbolicSW orientable(const SymbolicSW& w);

/// w(E ⊗ det E).
SymbolicSW tensor_with_det(int k);
/// w(E ⊕ det E) = w(E)·(1 + w_1).
SymbolicSW sum_with_det(int k);
/// w((E ⊗ det E) ⊕ det E).
SymbolicSW twist_then_sum(int k);

/// Component d of a symbolic total class (zero past the stored components).
F2Poly sw_component(const SymbolicSW& w, int d);

}  // namespace spink
