#include "spink/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace spink {

std::string Generator::name() const {
    return symbol == 'p' ? "p" + std::to_string(index) : std::string(1, symbol);
}

Generator pontryagin(int i) {
    if (i < 1) throw std::invalid_argument("Pontryagin index must be >= 1");
    return Generator{'p', i, i};
}

Generator formal_class(char symbol, int weight) {
    if (symbol == 'p') throw std::invalid_argument("'p' is reserved for Pontryagin classes");
    return Generator{symbol, 0, weight};
}

int weight(const Monomial& m) {
    int w = 0;
    for (const auto& [g, e] : m) w += g.weight * e;
    return w;
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->first < j->first)) {
            out.push_back(*i++);
        } else if (i == a.end() || j->first < i->first) {
            out.push_back(*j++);
        } else {
            out.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    return out;
}

std::string monomial_str(const Monomial& m) {
    if (m.empty()) return "1";
    std::string s;
    // Highest generator first: p2*p1^2 rather than p1^2*p2.
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
        if (!s.empty()) s += "*";
        s += it->first.name();
        if (it->second != 1) s += "^" + std::to_string(it->second);
    }
    return s;
}

PontryaginPolynomial::PontryaginPolynomial(const Rational& constant) { add_term({}, constant); }

PontryaginPolynomial::PontryaginPolynomial(const Generator& g) { add_term({{g, 1}}, Rational(1)); }

PontryaginPolynomial::PontryaginPolynomial(const Monomial& m, const Rational& coefficient) {
    for (const auto& [g, e] : m)
        if (e <= 0) throw std::invalid_argument("monomial exponents must be positive");
    add_term(m, coefficient);
}

void PontryaginPolynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational PontryaginPolynomial::coefficient(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int PontryaginPolynomial::max_weight() const {
    int w = -1;
    for (const auto& [m, c] : terms_) w = std::max(w, weight(m));
    return w;
}

PontryaginPolynomial PontryaginPolynomial::weight_part(int w) const {
    PontryaginPolynomial out;
    for (const auto& [m, c] : terms_)
        if (weight(m) == w) out.terms_.emplace(m, c);
    return out;
}

PontryaginPolynomial PontryaginPolynomial::truncated(int max_w) const {
    PontryaginPolynomial out;
    for (const auto& [m, c] : terms_)
        if (weight(m) <= max_w) out.terms_.emplace(m, c);
    return out;
}

PontryaginPolynomial PontryaginPolynomial::operator-() const {
    PontryaginPolynomial out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

PontryaginPolynomial& PontryaginPolynomial::operator+=(const PontryaginPolynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

PontryaginPolynomial& PontryaginPolynomial::operator-=(const PontryaginPolynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

PontryaginPolynomial& PontryaginPolynomial::operator*=(const Rational& scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
}

PontryaginPolynomial operator*(const PontryaginPolynomial& a, const PontryaginPolynomial& b) {
    PontryaginPolynomial out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(monomial_product(ma, mb), ca * cb);
    return out;
}

PontryaginPolynomial multiply_truncated(const PontryaginPolynomial& a, const PontryaginPolynomial& b, int max_weight) {
    PontryaginPolynomial out;
    for (const auto& [ma, ca] : a.terms()) {
        const int wa = weight(ma);
        if (wa > max_weight) continue;
        for (const auto& [mb, cb] : b.terms()) {
            if (wa + weight(mb) > max_weight) continue;
            out += PontryaginPolynomial(monomial_product(ma, mb), ca * cb);
        }
    }
    return out;
}

PontryaginPolynomial compose(const std::vector<Rational>& coefficients, const PontryaginPolynomial& u, int max_weight) {
    PontryaginPolynomial out;
    PontryaginPolynomial power(Rational(1));
    for (std::size_t k = 0; k < coefficients.size(); ++k) {
        if (k > 0) {
            power = multiply_truncated(power, u, max_weight);
            if (power.is_zero()) break;
        }
        out += power * coefficients[k];
    }
    return out.truncated(max_weight);
}

Rational evaluate(const PontryaginPolynomial& p, const std::function<Rational(const Generator&)>& value_of) {
    Rational total;
    for (const auto& [m, c] : p.terms()) {
        Rational term = c;
        for (const auto& [g, e] : m) term *= pow(value_of(g), static_cast<unsigned>(e));
        total += term;
    }
    return total;
}

Rational integrate(const PontryaginPolynomial& p, const std::map<Monomial, Rational>& numbers) {
    Rational total;
    for (const auto& [m, c] : p.terms()) {
        const auto it = numbers.find(m);
        if (it != numbers.end()) total += c * it->second;
    }
    return total;
}

PontryaginPolynomial substitute(const PontryaginPolynomial& p, const std::map<Generator, PontryaginPolynomial>& images) {
    PontryaginPolynomial out;
    for (const auto& [m, c] : p.terms()) {
        PontryaginPolynomial term(c);
        for (const auto& [g, e] : m) {
            const auto it = images.find(g);
            const PontryaginPolynomial factor = it == images.end() ? PontryaginPolynomial(g) : it->second;
            for (int i = 0; i < e; ++i) term = term * factor;
        }
        out += term;
    }
    return out;
}

std::string PontryaginPolynomial::str() const {
    if (terms_.empty()) return "0";
    // Ascending weight; within a weight, the monomial with the highest
    // generator first (p2 before p1^2), matching the usual textbook layout.
    std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
        const int wx = weight(x.first), wy = weight(y.first);
        if (wx != wy) return wx < wy;
        return std::lexicographical_compare(y.first.rbegin(), y.first.rend(), x.first.rbegin(), x.first.rend());
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : ordered) {
        Rational magnitude = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (m.empty()) {
            os << magnitude;
        } else {
            if (magnitude != Rational(1)) os << magnitude << "*";
            os << monomial_str(m);
        }
    }
    return os.str();
}

}  // namespace spink
