#include "spink/sw_formulas.hpp"

#include <algorithm>
#include <stdexcept>

namespace spink {

int weighted_degree(const F2Poly::Exponents& e) {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += static_cast<int>(i + 1) * e[i];
    return d;
}

F2Poly F2Poly::one(int generators) {
    F2Poly p(generators);
    p.terms_.insert(Exponents(static_cast<std::size_t>(generators), 0));
    return p;
}

F2Poly F2Poly::w(int generators, int i) {
    if (i < 1 || i > generators) throw std::out_of_range("F2Poly::w: generator index out of range");
    F2Poly p(generators);
    Exponents e(static_cast<std::size_t>(generators), 0);
    e[static_cast<std::size_t>(i - 1)] = 1;
    p.terms_.insert(std::move(e));
    return p;
}

bool F2Poly::is_homogeneous(int d) const {
    for (const auto& e : terms_)
        if (weighted_degree(e) != d) return false;
    return true;
}

void F2Poly::toggle(const Exponents& e) {
    if (e.size() != static_cast<std::size_t>(generators_)) throw std::invalid_argument("F2Poly: generator count mismatch");
    if (!terms_.erase(e)) terms_.insert(e);
}

F2Poly& F2Poly::operator+=(const F2Poly& rhs) {
    if (rhs.generators_ != generators_) throw std::invalid_argument("F2Poly: generator count mismatch");
    for (const auto& e : rhs.terms_) toggle(e);
    return *this;
}

F2Poly operator*(const F2Poly& a, const F2Poly& b) {
    if (a.generators_ != b.generators_) throw std::invalid_argument("F2Poly: generator count mismatch");
    F2Poly out(a.generators_);
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) {
            F2Poly::Exponents e(x.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = x[i] + y[i];
            out.toggle(e);
        }
    return out;
}

F2Poly F2Poly::truncated(int max_degree) const {
    F2Poly out(generators_);
    for (const auto& e : terms_)
        if (weighted_degree(e) <= max_degree) out.terms_.insert(e);
    return out;
}

F2Poly F2Poly::orientable() const {
    F2Poly out(generators_);
    for (const auto& e : terms_)
        if (e.empty() || e[0] == 0) out.terms_.insert(e);
    return out;
}

std::string F2Poly::str() const {
    if (terms_.empty()) return "0";
    // Compare exponent vectors from the highest generator down, so w2 precedes w1^2.
    std::vector<Exponents> order(terms_.begin(), terms_.end());
    std::sort(order.begin(), order.end(), [](const Exponents& a, const Exponents& b) {
        return std::lexicographical_compare(b.rbegin(), b.rend(), a.rbegin(), a.rend());
    });
    std::string s;
    for (auto it = order.begin(); it != order.end(); ++it) {
        std::string mono;
        for (std::size_t i = it->size(); i-- > 0;) {
            const int power = (*it)[i];
            if (power == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "w" + std::to_string(i + 1);
            if (power > 1) mono += "^" + std::to_string(power);
        }
        if (!s.empty()) s += " + ";
        s += mono.empty() ? "1" : mono;
    }
    return s;
}

bool binomial_odd(long n, long r) {
    if (r < 0 || n < 0 || r > n) return false;
    return (r & ~n) == 0;
}

F2Poly sw_component(const SymbolicSW& w, int d) {
    const int gens = w.components.empty() ? 0 : w.components[0].generators();
    return w.component(static_cast<std::size_t>(d), F2Poly(gens));
}

SymbolicSW generic_sw(int k) {
    if (k < 1) throw std::invalid_argument("bundle rank must be >= 1");
    SymbolicSW w{{F2Poly::one(k)}};
    for (int i = 1; i <= k; ++i) w.components.push_back(F2Poly::w(k, i));
    return w;
}

SymbolicSW whitney_product(const SymbolicSW& a, const SymbolicSW& b, int max_degree) {
    const int gens = a.components.at(0).generators();
    SymbolicSW out;
    const int top = std::min<int>(max_degree, static_cast<int>(a.components.size() + b.components.size()) - 2);
    for (int d = 0; d <= top; ++d) {
        F2Poly c(gens);
        for (int i = 0; i <= d; ++i) c += sw_component(a, i) * sw_component(b, d - i);
        out.components.push_back(c.truncated(max_degree));
    }
    return out;
}

SymbolicSW twist_by_line(const SymbolicSW& w, int rank, const F2Poly& t) {
    const int gens = w.components.at(0).generators();
    // Powers of t, t^0 .. t^rank.
    std::vector<F2Poly> tp{F2Poly::one(gens)};
    for (int i = 1; i <= rank; ++i) tp.push_back(tp.back() * t);
    SymbolicSW out;
    for (int j = 0; j <= rank; ++j) {
        F2Poly c(gens);
        for (int i = 0; i <= j; ++i)
            if (binomial_odd(rank - i, j - i)) c += sw_component(w, i) * tp[static_cast<std::size_t>(j - i)];
        out.components.push_back(std::move(c));
    }
    return out;
}

SymbolicSW orientable(const SymbolicSW& w) {
    SymbolicSW out;
    for (const auto& c : w.components) out.components.push_back(c.orientable());
    return out;
}

namespace {

SymbolicSW det_total(int k) { return SymbolicSW{{F2Poly::one(k), F2Poly::w(k, 1)}}; }

}  // namespace

SymbolicSW tensor_with_det(int k) { return twist_by_line(generic_sw(k), k, F2Poly::w(k, 1)); }

SymbolicSW sum_with_det(int k) { return whitney_product(generic_sw(k), det_total(k), k + 2); }

SymbolicSW twist_then_sum(int k) { return whitney_product(tensor_with_det(k), det_total(k), k + 2); }

}  // namespace spink
