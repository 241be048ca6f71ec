#include <random>

#include "doctest.h"
#include "spink/exact.hpp"

using namespace spink;

namespace {

bool canonical(const Rational& r) {
    return r.denominator() > 0 && gcd(r.numerator(), r.denominator()) == 1;
}

Rational random_rational(std::mt19937_64& rng, bool nonzero) {
    std::uniform_int_distribution<long> num(-2000, 2000), den(1, 3000);
    while (true) {
        // Mix in powers of two so the 2-adic tests see non-trivial valuations.
        const long shift = std::uniform_int_distribution<long>(0, 6)(rng);
        Rational r(num(rng) << shift, den(rng));
        if (!nonzero || !r.is_zero()) return r;
    }
}

}  // namespace

TEST_CASE("rational canonical form and arithmetic") {
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(6, -4).denominator() == 2);
    CHECK(Rational(0, 5).denominator() == 1);
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(7, 45).str() == "7/45");
    CHECK(Rational(45).str() == "45");
    CHECK(Rational(45).fraction_str() == "45/1");
    CHECK(Rational(-1, 45).fraction_str() == "-1/45");
    CHECK(Rational::parse("-8229/48") == Rational(-8229, 48));
    CHECK(Rational::parse("12") == Rational(12));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("property: canonical form survives every operation") {
    std::mt19937_64 rng(20261016);
    for (int i = 0; i < 500; ++i) {
        const Rational a = random_rational(rng, false);
        const Rational b = random_rational(rng, true);
        CHECK(canonical(a + b));
        CHECK(canonical(a - b));
        CHECK(canonical(a * b));
        CHECK(canonical(a / b));
        CHECK((a / b) * b == a);
    }
}

TEST_CASE("nu2") {
    CHECK(nu2(Rational(2)) == 1);
    CHECK(nu2(Rational(7, 45)) == 0);
    CHECK(nu2(Rational(1, 30)) == -1);
    CHECK(nu2(Rational(-48)) == 4);
    CHECK_THROWS_AS(nu2(Rational(0)), std::domain_error);
    CHECK(valuation2(Rational(0)).is_infinite());
    CHECK_THROWS_AS(valuation2(Rational(0)).value(), std::logic_error);
    CHECK(valuation2(Rational(3, 8)) == Valuation::finite(-3));
}

TEST_CASE("property: nu2 is a valuation") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        const Rational a = random_rational(rng, true);
        const Rational b = random_rational(rng, true);
        CHECK(nu2(a * b) == nu2(a) + nu2(b));
        if (!(a + b).is_zero()) CHECK(nu2(a + b) >= std::min(nu2(a), nu2(b)));
    }
}

TEST_CASE("is_dyadic") {
    CHECK(is_dyadic(Rational(3, 8)));
    CHECK_FALSE(is_dyadic(Rational(1, 6)));
    CHECK(is_dyadic(Rational(45)));
    CHECK(is_dyadic(Rational(0)));
    CHECK(is_dyadic(Rational(45255, 2)));
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(1) == Rational(1, 6));
    CHECK(bernoulli(2) == Rational(1, 30));
    CHECK(bernoulli(3) == Rational(1, 42));
    CHECK(bernoulli(4) == Rational(1, 30));
    CHECK(bernoulli(5) == Rational(5, 66));
    CHECK(bernoulli(6) == Rational(691, 2730));
    CHECK_THROWS_AS(bernoulli(0), std::invalid_argument);
    CHECK_THROWS_AS(bernoulli(-2), std::invalid_argument);

    const auto modern = bernoulli_modern(8);
    CHECK(modern[1] == Rational(-1, 2));
    CHECK(modern[8] == Rational(-1, 30));
    CHECK(modern[7].is_zero());
}

TEST_CASE("von Staudt-Clausen: nu2(B_j) = -1") {
    for (long j = 1; j <= 16; ++j) CHECK(nu2(bernoulli(j)) == -1);
}

TEST_CASE("Legendre: nu2((4m)!) = 4m - 1 for m a power of two") {
    for (unsigned m : {1u, 2u, 4u, 8u}) CHECK(nu2(factorial(4 * m)) == static_cast<long>(4 * m - 1));
    CHECK(nu2(factorial(12)) == 10);  // m = 3 is not a power of two: 12 − s₂(12) = 10
}

TEST_CASE("alpha counts binary ones") {
    CHECK(alpha(5) == 2);
    CHECK(alpha(4) == 1);
    CHECK(alpha(7) == 3);
    CHECK(alpha(1) == 1);
}

TEST_CASE("quadratic residues") {
    // Oracle: enumerate c = 0..47 and square.
    std::set<long> expected;
    for (long c = 0; c < 48; ++c) expected.insert((c * c) % 48);
    CHECK(expected == std::set<long>{0, 1, 4, 9, 16, 25, 33, 36});
    CHECK(quadratic_residues(48) == expected);
    CHECK(quadratic_residues(2) == std::set<long>{0, 1});
    CHECK_FALSE(is_quadratic_residue(21, 48));
    CHECK(is_quadratic_residue(-15, 48));  // -15 ≡ 33
    CHECK_THROWS_AS(quadratic_residues(1), std::invalid_argument);
}

TEST_CASE("property: residue set invariant under c -> m - c") {
    for (long m = 2; m <= 100; ++m) {
        std::set<long> mirrored;
        for (long c = 0; c < m; ++c) mirrored.insert(((m - c) * (m - c)) % m);
        CHECK(mirrored == quadratic_residues(m));
    }
}

TEST_CASE("four squares") {
    CHECK(four_squares(0) == FourSquares{0, 0, 0, 0});
    CHECK(four_squares(45) == FourSquares{6, 2, 2, 1});
    const auto q = four_squares(240);
    CHECK(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3] == 240);
    CHECK(four_squares(7) == FourSquares{2, 1, 1, 1});
    CHECK_THROWS_AS(four_squares(-1), std::invalid_argument);

    Integer big("987654321987");
    const auto r = four_squares(big);
    CHECK(r[0] * r[0] + r[1] * r[1] + r[2] * r[2] + r[3] * r[3] == big);
}

TEST_CASE("property: four squares re-sum for 0..1000 and respect ordering") {
    for (long x = 0; x <= 1000; ++x) {
        const auto q = four_squares(x);
        CHECK(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3] == x);
        CHECK(q[0] >= q[1]);
        CHECK(q[1] >= q[2]);
        CHECK(q[2] >= q[3]);
        CHECK(q[3] >= 0);
    }
}

TEST_CASE("four squares tie-break matches brute force") {
    // Brute force over a ≥ b ≥ c ≥ d: maximal a, then lexicographically least (b, c, d).
    for (long x = 1; x <= 300; ++x) {
        std::array<long, 4> best{-1, 0, 0, 0};
        for (long a = 0; a * a <= x; ++a)
            for (long b = 0; b <= a; ++b)
                for (long c = 0; c <= b; ++c)
                    for (long d = 0; d <= c; ++d) {
                        if (a * a + b * b + c * c + d * d != x) continue;
                        const std::array<long, 4> cand{a, b, c, d};
                        if (best[0] < 0 || a > best[0] ||
                            (a == best[0] && std::array<long, 3>{b, c, d} < std::array<long, 3>{best[1], best[2], best[3]}))
                            best = cand;
                    }
        const auto q = four_squares(x);
        CHECK(q == FourSquares{best[0], best[1], best[2], best[3]});
    }
}
