#include "spink/certify.hpp"

#include <algorithm>
#include <stdexcept>

#include "spink/genus.hpp"

namespace spink {

namespace {

bool is_power_of_two(long m) { return m > 0 && (m & (m - 1)) == 0; }

Integer den_odd(const Rational& r) { return odd_part(r.denominator()); }

std::string set_str(const std::set<long>& s) {
    std::string out = "{";
    for (long v : s) {
        if (out.size() > 1) out += ", ";
        out += std::to_string(v);
    }
    return out + "}";
}

Integer mod(const Integer& a, long n) {
    Integer r = a % n;
    if (r < 0) r += n;
    return r;
}

}  // namespace

// ---- realization ------------------------------------------------------------

Rational condition_ii(int m, const Integer& P2, const Integer& Q) {
    const SCoefficients s = l_coefficients(m);
    const Rational f2m1(factorial(static_cast<unsigned>(2 * m - 1)));
    const Rational f4m1(factorial(static_cast<unsigned>(4 * m - 1)));
    const Rational sign(m % 2 == 1 ? 1 : -1);
    const Rational c = sign / f2m1 * s.s_m + Rational(1) / (Rational(2) * f4m1);
    return c * Rational(P2) - Rational(Q) / f4m1;
}

Rational condition_iii(int m, const Integer& P2) {
    const Rational f(factorial(static_cast<unsigned>(2 * m - 1)));
    return Rational(P2) / (f * f);
}

Certificate realization_conditions(int m, const Integer& P2, const Integer& Q) {
    if (m < 1) throw std::invalid_argument("realization_conditions: m must be >= 1");
    const SCoefficients s = l_coefficients(m);
    const Rational sigma = s.s_mm * Rational(P2) + s.s_2m * Rational(Q);

    Certificate cert("realizable");
    cert.add_parameter("m", Rational(m)).add_parameter("P2", Rational(P2)).add_parameter("Q", Rational(Q));
    cert.add_check(check_integral("sigma = s_mm*P2 + s_2m*Q", sigma));
    cert.add_check(check_dyadic("condition (ii)", condition_ii(m, P2, Q)));
    cert.add_check(check_dyadic("condition (iii): P2/(2m-1)!^2", condition_iii(m, P2)));
    cert.add_witness("sigma", sigma.fraction_str());
    cert.add_witness("s_m", s.s_m.fraction_str()).add_witness("s_mm", s.s_mm.fraction_str());
    cert.add_witness("s_2m", s.s_2m.fraction_str());
    cert.add_witness("assumption",
                     "surgery realization of rational Poincare duality algebras with diagonal +-1 form (cited); "
                     "the arithmetic conditions are checked here");
    if (cert.all_checks_passed()) cert.set_verdict(Verdict::established);
    return cert;
}

Json RealizationWitness::to_json() const {
    Json squares = Json::array();
    for (const auto& a : four_square) squares.push_back(Rational(a).fraction_str());
    return Json{{"m", Rational(m).fraction_str()},
                {"sigma", Rational(sigma).fraction_str()},
                {"P2", Rational(P2).fraction_str()},
                {"Q", Rational(Q).fraction_str()},
                {"four_square", squares},
                {"algebra", algebra_note}};
}

RealizationWitness poincare_witness(const Integer& sigma, const Integer& P2, const Integer& Q, int m) {
    if (sigma <= 4) throw std::invalid_argument("poincare_witness: sigma must be > 4");
    if (P2 < 0) throw std::invalid_argument("poincare_witness: P2 must be >= 0");
    if (m < 1) throw std::invalid_argument("poincare_witness: m must be >= 1");
    RealizationWitness w;
    w.m = m;
    w.sigma = sigma;
    w.P2 = P2;
    w.Q = Q;
    w.four_square = four_squares(P2);
    const auto& a = w.four_square;
    w.algebra_note = "Q[a_1..a_" + sigma.get_str() + "], deg a_i = " + std::to_string(4 * m) +
                     ", a_i^2 = a_j^2, a_i a_j = 0 (i != j), <a_i^2, mu> = 1; p_" + std::to_string(m) + " = " +
                     a[0].get_str() + " a_1 + " + a[1].get_str() + " a_2 + " + a[2].get_str() + " a_3 + " +
                     a[3].get_str() + " a_4, p_" + std::to_string(2 * m) + " = " + Q.get_str() + " a_1^2";
    return w;
}

RealizationWitness realization_search(int m, const Integer& sigma_min, long max_multiplier) {
    if (!is_power_of_two(m)) throw std::invalid_argument("realization_search: m must be a power of two");
    const SCoefficients s = l_coefficients(m);
    const Rational f2m1(factorial(static_cast<unsigned>(2 * m - 1)));
    const Integer f4m1 = factorial(static_cast<unsigned>(4 * m - 1));

    // P2 = i·ax keeps (iii) and the P2-part of (ii) dyadic and s_mm·P2 an even integer.
    const Rational c_ii = condition_ii(m, 1, 0);
    Integer ax = lcm(den_odd(c_ii), den_odd(Rational(1) / (f2m1 * f2m1)));
    ax = lcm(ax, (s.s_mm / Rational(2)).denominator());
    // Q = b·ay with b odd keeps the Q-part of (ii) dyadic and s_2m·Q = b·n odd.
    const Integer ay = lcm(odd_part(f4m1), s.s_2m.denominator());
    const Rational n_rational = s.s_2m * Rational(ay);
    if (!n_rational.is_integer() || n_rational.numerator() % 2 == 0)
        throw std::logic_error("realization_search: s_2m has even numerator");
    const Integer n = n_rational.numerator();
    const Rational step_x = s.s_mm * Rational(ax);
    if (!step_x.is_integer()) throw std::logic_error("realization_search: s_mm * ax not integral");
    const Integer ex = step_x.numerator();

    Integer sigma = std::max(Integer(5), sigma_min);
    if (sigma % 2 == 0) ++sigma;
    const Integer abs_n = abs(n);
    const long i_limit = abs_n.fits_slong_p() ? std::min(max_multiplier, abs_n.get_si()) : max_multiplier;
    for (long attempt = 0; attempt < max_multiplier; ++attempt, sigma += 2) {
        for (long i = 1; i <= i_limit; ++i) {
            const Integer rest = sigma - ex * i;
            if (rest % n != 0) continue;
            const Integer b = rest / n;
            const Integer P2 = ax * i;
            const Integer Q = b * ay;
            RealizationWitness w = poincare_witness(sigma, P2, Q, m);
            const Certificate check = realization_conditions(m, P2, Q);
            if (check.verdict() != Verdict::established || check.witnesses().at("sigma") != Rational(sigma).fraction_str())
                throw std::logic_error("realization_search: candidate failed re-validation");
            return w;
        }
    }
    throw std::runtime_error("realization_search: multiplier bound exhausted");
}

// ---- signature bound --------------------------------------------------------

long signature_bound(long m, long k) { return 4 * m - 5 - 2 * nu2(Integer(m)) - k / 2; }

Certificate signature_bound_verdict(long m, long k, const Integer& sigma) {
    if (m < 1) throw std::invalid_argument("signature_bound_verdict: m must be >= 1");
    if (k < 1) throw std::invalid_argument("signature_bound_verdict: k must be >= 1");
    if (k >= 2 * m) throw std::invalid_argument("signature_bound_verdict: requires k < 2m");
    if (sigma == 0) throw std::invalid_argument("signature_bound_verdict: sigma must be non-zero");
    const long l = k / 2;
    const long bound = signature_bound(m, k);
    const long v = nu2(Integer(2 * sigma));

    Certificate cert(spin_structure_name(k));
    cert.add_parameter("m", Rational(m)).add_parameter("k", Rational(k)).add_parameter("sigma", Rational(sigma));
    cert.add_parameter("dimension", Rational(8 * m)).add_parameter("l", Rational(l));
    cert.add_check(check_less("nu2(2 sigma) < 4m - 5 - 2 nu2(m) - l", Rational(v), Rational(bound)));
    cert.add_witness("bound", Rational(bound).fraction_str());
    cert.add_witness("assumption", "rationally highly connected " + std::to_string(8 * m) +
                                       "-manifold with rationally trivial Mayer class of the spin^k bundle");
    if (cert.all_checks_passed()) cert.set_verdict(Verdict::excluded);
    return cert;
}

long bound_exclusion_dimension(long k) {
    if (k < 1) throw std::invalid_argument("bound_exclusion_dimension: k must be >= 1");
    for (long m = 1;; m *= 2)
        if (k < 2 * m && 1 < signature_bound(m, k)) return 8 * m;
}

// ---- dimension 8 ------------------------------------------------------------

Certificate nonspinh8_certificate(const Integer& a) {
    const Integer x = -168 * a + 240;
    const Integer y = 4032 * a * a - 11520 * a + 8235;
    const Integer P2 = x * x;
    const Integer residue = mod(y - 6, 48);
    const auto residues = quadratic_residues(48);

    Certificate cert("spin^h");
    cert.add_parameter("a", Rational(a)).add_parameter("x", Rational(x)).add_parameter("y", Rational(y));
    cert.add_parameter("P2", Rational(P2)).add_parameter("Q", Rational(y));
    cert.add_parameter("sigma", Rational(1)).add_parameter("dimension", Rational(8));

    cert.add_check(check_equal("7y - x^2 = 45", Rational(Integer(7 * y - P2)), Rational(45)));
    const Certificate realization = realization_conditions(1, P2, y);
    for (const auto& c : realization.checks()) cert.add_check(c);
    // 48·(−x²/360 − y/720 + c²/48) − (c² − y + 6) vanishes on the family for every c.
    Rational worst;
    for (long c = 0; c < 48; ++c) {
        const Rational diff = Rational(48) * spinh_integrand_dim8(x, y, c) - Rational(Integer(c * c - y + 6));
        if (!diff.is_zero()) worst = diff;
    }
    cert.add_check(check_equal("48 * integrand - (c^2 - y + 6), c = 0..47", worst, Rational(0)));
    cert.add_check(check_equal("(y - 6) mod 48", Rational(residue), Rational(21)));
    const bool residue_is_square = residues.contains(residue.get_si());
    cert.add_check({"(y - 6) mod 48 in QR(48)", residue.get_str(), set_str(residues), "not in", !residue_is_square});

    cert.add_witness("integrand", "-x^2/360 - y/720 + c^2/48");
    cert.add_witness("congruence", "c^2 - y + 6 = 0 mod 48 has no solution");
    cert.add_witness("assumption", "closed simply connected 8-manifold with sigma = 1, int p1^2 = x^2, int p2 = y "
                                   "exists by the surgery realization theorem (cited)");
    if (cert.all_checks_passed()) cert.set_verdict(Verdict::excluded);
    return cert;
}

// ---- w4 lift ----------------------------------------------------------------

Integer w4_lift(const Integer& p1_M, const Integer& p1_E, LiftVariant variant, const Integer& euler_E) {
    Integer diff = p1_M - p1_E;
    if (variant == LiftVariant::spin4_plus) diff -= 2 * euler_E;
    if (variant == LiftVariant::spin4_minus) diff += 2 * euler_E;
    if (diff % 2 != 0) throw std::domain_error("inconsistent input: no spin^h structure can produce these classes");
    return diff / 2;
}

// ---- guaranteed structures --------------------------------------------------

std::string pin_structure_name(long k, char sign) {
    if (sign != '+' && sign != '-') throw std::invalid_argument("pin sign must be '+' or '-'");
    if (k == 1) return std::string("pin^") + sign;
    return "pin^{" + std::to_string(k) + sign + "}";
}

StructureRow guaranteed_structures(int n) {
    if (n < 2) throw std::invalid_argument("guaranteed_structures: n must be >= 2");
    StructureRow row;
    row.n = n;
    row.k = n - static_cast<long>(alpha(static_cast<std::uint64_t>(n)));
    long orientable = row.k;
    if (n <= 7) orientable = std::min(orientable, 3L);
    if (n <= 4) orientable = std::min(orientable, 2L);
    if (n <= 3) orientable = 1;
    row.orientable = spin_structure_name(orientable);
    switch (row.k % 4) {
        case 1: row.pin = pin_structure_name(row.k, '-'); break;
        case 3: row.pin = pin_structure_name(row.k, '+'); break;
        case 0: row.pin = pin_structure_name(row.k + 1, '-'); break;
        default: row.pin = pin_structure_name(row.k + 1, '+'); break;
    }
    return row;
}

// ---- combinators ------------------------------------------------------------

std::optional<long> spin_structure_rank(const std::string& claim) {
    if (claim == "spin") return 1;
    if (claim == "spin^c") return 2;
    if (claim == "spin^h") return 3;
    if (claim.rfind("spin^", 0) != 0) return std::nullopt;
    const std::string digits = claim.substr(5);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
        return std::nullopt;
    const long k = std::stol(digits);
    if (k < 1 || spin_structure_name(k) != claim) return std::nullopt;
    return k;
}

Certificate declared_structure(const std::string& manifold, long k, std::optional<long> dimension,
                               const std::string& reason) {
    if (k < 1) throw std::invalid_argument("declared_structure: k must be >= 1");
    Certificate cert(spin_structure_name(k));
    cert.add_parameter("manifold", manifold).add_parameter("k", Rational(k));
    if (dimension) cert.add_parameter("dimension", Rational(*dimension));
    cert.add_witness("assumption", reason);
    cert.set_verdict(Verdict::established);
    return cert;
}

namespace {

std::string manifold_name(const Certificate& c) {
    if (auto m = c.find_parameter("manifold")) return *m;
    if (auto m = c.find_parameter("model")) return *m;
    return "M";
}

std::optional<long> dimension_of(const Certificate& c) {
    if (!c.find_parameter("dimension")) return std::nullopt;
    const Rational d = c.rational_parameter("dimension");
    if (!d.is_integer() || !d.numerator().fits_slong_p()) throw std::invalid_argument("certificate dimension is not an integer");
    return d.numerator().get_si();
}

long established_rank(const Certificate& c, const char* what) {
    const auto k = spin_structure_rank(c.claim());
    if (!k || c.verdict() != Verdict::established)
        throw std::invalid_argument(std::string(what) + ": input '" + c.claim() + "' (" + std::string(to_string(c.verdict())) +
                                    ") is not an established spin^k claim");
    return *k;
}

Certificate combine(const Certificate& a, const Certificate& b, long k, const std::string& manifold,
                    std::optional<long> dimension, const std::string& rule) {
    Certificate cert(spin_structure_name(k));
    cert.add_parameter("manifold", manifold).add_parameter("k", Rational(k));
    if (dimension) cert.add_parameter("dimension", Rational(*dimension));
    cert.add_check({"input " + manifold_name(a), a.claim(), "established", "is", true});
    cert.add_check({"input " + manifold_name(b), b.claim(), "established", "is", true});
    cert.add_witness("rule", rule);
    cert.set_verdict(Verdict::established);
    return cert;
}

}  // namespace

Certificate product_combinator(const Certificate& a, const Certificate& b) {
    const long k = established_rank(a, "product_combinator");
    const long l = established_rank(b, "product_combinator");
    const auto da = dimension_of(a), db = dimension_of(b);
    std::optional<long> dim;
    if (da && db) dim = *da + *db;
    long rank = k + l;
    std::string rule = "spin^k x spin^l is spin^{k+l}";
    if (k == 1 || l == 1) {
        rank = k == 1 ? l : k;
        rule = "spin x spin^k is spin^k";
    }
    return combine(a, b, rank, manifold_name(a) + " x " + manifold_name(b), dim, rule);
}

Certificate connected_sum_combinator(const Certificate& a, const Certificate& b) {
    const long k = established_rank(a, "connected_sum_combinator");
    const long l = established_rank(b, "connected_sum_combinator");
    const auto da = dimension_of(a), db = dimension_of(b);
    if (da && db && *da != *db) throw std::invalid_argument("connected_sum_combinator: dimensions differ");
    return combine(a, b, std::max(k, l), manifold_name(a) + " # " + manifold_name(b), da ? da : db,
                   "spin^k # spin^k is spin^k; spin^k implies spin^{k'} for k' >= k");
}

Certificate klein_product_pin_obstruction(const Certificate& non_spin_k) {
    const auto k = spin_structure_rank(non_spin_k.claim());
    if (!k || non_spin_k.verdict() != Verdict::excluded)
        throw std::invalid_argument("klein_product_pin_obstruction: input '" + non_spin_k.claim() + "' (" +
                                    std::string(to_string(non_spin_k.verdict())) + ") does not exclude a spin^k structure");
    const std::string manifold = manifold_name(non_spin_k) + " x K";
    const std::string pm = "pin^{" + std::to_string(*k) + "±}";

    Certificate cert(pm);
    cert.add_parameter("manifold", manifold).add_parameter("k", Rational(*k));
    if (const auto d = dimension_of(non_spin_k)) cert.add_parameter("dimension", Rational(*d + 2));
    cert.add_check({"input " + manifold_name(non_spin_k), non_spin_k.claim(), "excluded", "is", true});
    cert.add_check({"w1(K)^2", "0", "0", "=", true});
    cert.add_check({"w2(K)", "0", "0", "=", true});
    cert.add_witness("excluded", Json::array({pin_structure_name(*k, '+'), pin_structure_name(*k, '-')}));
    cert.add_witness("argument",
                     "w1(K)^2 = 0 makes the pin^{k+} and pin^{k-} conditions coincide on M x K; w2(K) = 0 lets a "
                     "structure on M x K restrict to a spin^k structure on the orientable M");
    cert.set_verdict(Verdict::excluded);
    return cert;
}

}  // namespace spink
