#pragma once

// Finite graded-commutative algebras over GF(2), manifold models built from
// them, the Künneth product, and the w4 integral-lift / W5 test.
//
// Integral cohomology is never computed here: a model declares it as an
// IntProfile and the construction only checks it against the mod-2 Betti
// numbers via universal coefficients.

#include <cstddef>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "spink/certificate.hpp"

namespace spink {

/// Thrown when a multiplication table or model violates an axiom. The
/// message names the offending basis elements or field.
class ModelError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Element of a finite-dimensional GF(2) vector space, one bit per basis vector.
class F2Element {
public:
    F2Element() = default;
    explicit F2Element(std::size_t dimension) : bits_(dimension, false) {}
    static F2Element basis(std::size_t dimension, std::size_t index);

    std::size_t dimension() const { return bits_.size(); }
    bool operator[](std::size_t i) const { return bits_[i]; }
    void flip(std::size_t i) { bits_[i] = !bits_[i]; }
    bool is_zero() const;
    std::vector<std::size_t> support() const;

    F2Element& operator+=(const F2Element& rhs);
    friend F2Element operator+(F2Element a, const F2Element& b) { return a += b; }
    friend bool operator==(const F2Element&, const F2Element&) = default;

private:
    std::vector<bool> bits_;
};

struct BasisElement {
    std::string name;
    int degree = 0;

    friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Triple (a, b, c): the product a·b contains the basis element c.
using ProductTriple = std::tuple<std::string, std::string, std::string>;

/// Graded-commutative GF(2)-algebra with a finite basis and explicit
/// multiplication table. Over GF(2) graded commutativity is plain commutativity.
class F2Algebra {
public:
    F2Algebra() = default;

    /// Validates unit, degree additivity, commutativity and associativity on
    /// every basis pair/triple. Products with the unit are implicit; unlisted
    /// products of positive-degree elements are zero. Throws ModelError.
    static F2Algebra build(std::vector<BasisElement> basis, const std::vector<ProductTriple>& products,
                           const std::string& unit_name = "1");

    std::size_t dimension() const { return basis_.size(); }
    const std::vector<BasisElement>& basis() const { return basis_; }
    std::size_t unit_index() const { return unit_; }
    std::size_t index_of(const std::string& name) const;
    int top_degree() const;

    F2Element zero() const { return F2Element(dimension()); }
    F2Element unit() const { return F2Element::basis(dimension(), unit_); }
    F2Element element(const std::string& name) const { return F2Element::basis(dimension(), index_of(name)); }
    F2Element element(std::initializer_list<std::string> names) const;

    /// Product of two basis elements.
    const F2Element& product(std::size_t i, std::size_t j) const { return table_[i][j]; }
    F2Element multiply(const F2Element& a, const F2Element& b) const;

    /// True if every basis element in the support of e has degree d.
    bool is_homogeneous(const F2Element& e, int d) const;
    /// dim_GF(2) of the degree-d part.
    std::size_t dimension_in_degree(int d) const;
    std::vector<std::size_t> betti_numbers() const;

    /// Non-unit entries of the table as triples, in basis order.
    std::vector<ProductTriple> product_triples() const;
    /// "0", "z2" or "z2 + z3".
    std::string format(const F2Element& e) const;

    friend bool operator==(const F2Algebra&, const F2Algebra&) = default;

private:
    void validate() const;

    std::vector<BasisElement> basis_;
    std::size_t unit_ = 0;
    std::vector<std::vector<F2Element>> table_;
};

inline F2Algebra build_algebra(std::vector<BasisElement> basis, const std::vector<ProductTriple>& products) {
    return F2Algebra::build(std::move(basis), products);
}

/// Total Stiefel–Whitney class w_0 + w_1 + w_2 + ..., component d in degree d.
/// Element is F2Element for a concrete model, F2Poly for symbolic identities.
template <typename Element>
struct SWTotal {
    std::vector<Element> components;

    /// Component in degree d; `zero` when d is past the stored components.
    Element component(std::size_t d, const Element& zero) const {
        return d < components.size() ? components[d] : zero;
    }

    friend bool operator==(const SWTotal&, const SWTotal&) = default;
};

/// Integral cohomology group Z^free ⊕ ⊕ Z/t in one degree (declared data).
struct IntGroup {
    long free = 0;
    std::vector<long> torsion;

    bool is_zero() const { return free == 0 && torsion.empty(); }
    /// Number of cyclic summands of even order.
    long two_torsion_count() const;
    /// "0", "Z", "Z^2 + Z/2", ...
    std::string str() const;

    friend bool operator==(const IntGroup&, const IntGroup&) = default;
};

/// Degree → integral cohomology group; absent degrees are zero.
struct IntProfile {
    std::map<int, IntGroup> groups;

    IntGroup group(int d) const;
    /// Universal coefficients: dim H^d(X; Z/2) = free(d) + #2-torsion(d) + #2-torsion(d+1).
    long mod2_rank(int d) const;

    friend bool operator==(const IntProfile&, const IntProfile&) = default;
};

/// A closed manifold described by its mod-2 cohomology ring, tangent SW class
/// and declared integral cohomology.
class SpaceModel {
public:
    /// Checks that w_0 = 1, each w_d is homogeneous of degree d, the algebra
    /// lives in degrees ≤ dimension, torsion orders are ≥ 2 and the mod-2
    /// Betti numbers agree with the integral profile. Throws ModelError.
    static SpaceModel make(std::string name, int dimension, F2Algebra algebra, SWTotal<F2Element> tangent_sw,
                           IntProfile int_profile);

    const std::string& name() const { return name_; }
    int dimension() const { return dimension_; }
    const F2Algebra& algebra() const { return algebra_; }
    const SWTotal<F2Element>& tangent_sw() const { return sw_; }
    const IntProfile& int_profile() const { return profile_; }

    F2Element w(int d) const;

    Json to_json() const;
    /// Parses and validates; errors name the failing field.
    static SpaceModel from_json(const Json& j);

    friend bool operator==(const SpaceModel&, const SpaceModel&) = default;

private:
    SpaceModel() = default;

    std::string name_;
    int dimension_ = 0;
    F2Algebra algebra_;
    SWTotal<F2Element> sw_;
    IntProfile profile_;
};

/// SU(3)/SO(3): H* = GF(2){1, z2, z3, z5}, z2·z3 = z5, w = 1 + z2 + z3;
/// H*(W; Z) = Z, 0, 0, Z/2, 0, Z.
SpaceModel wu_manifold();
SpaceModel sphere(int n);
SpaceModel point();

/// Product model: tensor-product algebra, w(A)⊗w(B), and the integral
/// Künneth formula including the Tor terms of cyclic summands.
SpaceModel kunneth(const SpaceModel& a, const SpaceModel& b);

enum class LiftStatus { yes, no, unknown };
std::string_view to_string(LiftStatus s);

/// Sufficient criteria only: w4 = 0 lifts; w4 ≠ 0 with H^4(X; Z) = 0 does not;
/// anything else is unknown.
LiftStatus w4_integral_lift_exists(const SpaceModel& model);

/// W5 = βw4 vanishes iff w4 lifts. A non-lifting w4 excludes spin^h; a
/// vanishing W5 is no obstruction; unknown stays inconclusive.
Certificate w5_verdict(const SpaceModel& model);

}  // namespace spink
