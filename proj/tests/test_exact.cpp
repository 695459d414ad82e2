#include <doctest.h>

#include "qcong/int_poly.hpp"
#include "qcong/laurent_poly.hpp"
#include "qcong/quotient.hpp"
#include "qcong/ratfun.hpp"
#include "test_support.hpp"

using namespace qcong;
using qcong::testing::random_laurent;
using qcong::testing::random_nonzero_laurent;
using qcong::testing::random_ordinary;

namespace {

LaurentPoly poly(std::initializer_list<int> ascending, std::int64_t offset = 0) {
    std::vector<Rational> c;
    for (int v : ascending) c.emplace_back(v);
    return LaurentPoly(offset, std::move(c));
}

const LaurentPoly q = LaurentPoly::q();

/// Plain Euclid over the rationals; independent of the subresultant route.
LaurentPoly euclid_gcd(LaurentPoly a, LaurentPoly b) {
    a = a.stripped();
    b = b.stripped();
    while (!b.is_zero()) {
        LaurentPoly r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace

TEST_SUITE("exact") {
    TEST_CASE("rational canonical form") {
        const Rational x(6, -4);
        CHECK(x.numerator() == -3);
        CHECK(x.denominator() == 2);
        CHECK(Rational(0, 7).denominator() == 1);
        CHECK(Rational::parse("10/-4") == Rational(-5, 2));
        CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
        CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
        CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    }

    TEST_CASE("laurent normal form") {
        const LaurentPoly p(-2, {0, 0, 3, 0});
        CHECK(p.offset() == 0);
        CHECK(p.coeffs().size() == 1);
        const LaurentPoly zero(5, {0, 0});
        CHECK(zero.is_zero());
        CHECK(zero.offset() == 0);
        CHECK(poly({1, 1}, -1).is_ordinary() == false);
    }

    TEST_CASE("poly_arith examples") {
        CHECK((q - 1) * (q + 1) == q * q - 1);
        CHECK(gcd(q.pow(2) - 1, q.pow(3) - 1) == q - 1);
        CHECK((1 + q).substitute(2) == 1 + q.pow(2));
        CHECK((1 + q).substitute(-1) == 1 + LaurentPoly::q_pow(-1));
        CHECK(poly({2, 0, 1}, -1).evaluate(Rational(2)) == Rational(3));  // 2/q + q at q=2
    }

    TEST_CASE("exact_divide reports the remainder") {
        CHECK(exact_divide(q.pow(3) - 1, q - 1) == q * q + q + 1);
        try {
            (void)exact_divide(q.pow(2) + 1, q - 1);
            FAIL("expected NotDivisible");
        } catch (const NotDivisible& e) {
            CHECK(e.remainder() == LaurentPoly(2));
        }
        // Laurent semantics: q is a unit.
        CHECK(exact_divide(q.pow(2) + 1, q) == q + LaurentPoly::q_pow(-1));
        CHECK_THROWS_AS(exact_divide(q, LaurentPoly{}), std::domain_error);
    }

    TEST_CASE("divmod requires ordinary inputs") {
        CHECK_THROWS_AS(divmod(LaurentPoly::q_pow(-1), q), std::invalid_argument);
        const auto [quot, rem] = divmod(q.pow(3) + 2, q * q + 1);
        CHECK(quot == q);
        CHECK(rem == 2 - q);
    }

    TEST_CASE("ratfun_arith examples") {
        const RatFun one_minus_q(1 - q);
        CHECK(RatFun(1) / one_minus_q + RatFun(-q) / one_minus_q == RatFun(1));
        const RatFun x(LaurentPoly::q_pow(-2) * (1 + q));
        const RatFun inv = x.inverse();
        CHECK(inv.numerator() == q.pow(2));
        CHECK(inv.denominator() == 1 + q);
        const RatFun geometric(1 - q.pow(3), 1 - q);
        CHECK(geometric.numerator() == 1 + q + q * q);
        CHECK(geometric.denominator() == LaurentPoly(1));
        CHECK_THROWS_AS(RatFun().inverse(), std::domain_error);
    }

    TEST_CASE("ratfun canonical form") {
        const RatFun f(Rational(2) * q.pow(3), Rational(4) * q.pow(5) - Rational(4) * q.pow(4));  // q^3 / (2 q^4 (q - 1))
        CHECK(f.denominator() == q - 1);
        CHECK(f.numerator() == LaurentPoly::monomial(Rational(1, 2), -1));
    }

    TEST_CASE("quotient_project examples") {
        auto m = std::make_shared<const Modulus>(q * q + q + 1, ModulusLabel::phi_pow(3, 1));
        const QuotientElem x = quotient_project(RatFun(1, 1 + q), m);
        CHECK(x.residue() == -q);
        // Oracle: (1+q) * (-q) reduces to 1.
        CHECK(remainder((1 + q) * -q, m->poly()) == LaurentPoly(1));

        CHECK(quotient_project(RatFun(), m).is_zero());

        auto m2 = std::make_shared<const Modulus>(q + 1, ModulusLabel::phi_pow(2, 1));
        CHECK(quotient_project(RatFun(LaurentPoly::q_pow(-1)), m2).residue() == LaurentPoly(-1));
    }

    TEST_CASE("quotient_project rejects a denominator meeting the modulus") {
        auto m = std::make_shared<const Modulus>((q * q + q + 1).pow(2), ModulusLabel::phi_pow(3, 2));
        CHECK_THROWS_AS(quotient_project(RatFun(1, 1 - q.pow(3)), m), NotAUnit);
        CHECK_THROWS_AS(Modulus(LaurentPoly(3), ModulusLabel::qint(2)), std::invalid_argument);
    }

    TEST_CASE("pseudo remainder and subresultant gcd") {
        const IntPoly a(0, {BigInt(-1), BigInt(0), BigInt(0), BigInt(1)});  // q^3 - 1
        const IntPoly b(0, {BigInt(-1), BigInt(0), BigInt(1)});              // q^2 - 1
        CHECK(subresultant_gcd(a, b) == IntPoly(0, {BigInt(-1), BigInt(1)}));
        const IntPoly two_b(0, {BigInt(1), BigInt(0), BigInt(2)});
        // lc(b)^2 * (q^3 - 1) mod (2q^2 + 1) = -2q - 4
        CHECK(pseudo_remainder(a, two_b) == IntPoly(0, {BigInt(-4), BigInt(-2)}));
    }
}

TEST_SUITE("exact properties") {
    TEST_CASE("ring axioms on random Laurent polynomials") {
        for (int trial = 0; trial < 200; ++trial) {
            const LaurentPoly a = random_laurent();
            const LaurentPoly b = random_laurent();
            const LaurentPoly c = random_laurent();
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + b) - b == a);
            if (!b.is_zero()) {
                CHECK(exact_divide(a * b, b) == a);
            }
        }
    }

    TEST_CASE("gcd divides both inputs and leaves coprime cofactors") {
        for (int trial = 0; trial < 100; ++trial) {
            const LaurentPoly common = random_nonzero_laurent(4, 0, 0);
            const LaurentPoly a = random_nonzero_laurent(5, 0, 2) * common;
            const LaurentPoly b = random_nonzero_laurent(5, 0, 2) * common;
            const LaurentPoly g = gcd(a, b);
            REQUIRE_FALSE(g.is_zero());
            CHECK(g.leading().is_one());
            CHECK_FALSE(g.trailing().is_zero());
            CHECK(g.offset() == 0);
            const LaurentPoly ca = exact_divide(a, g);
            const LaurentPoly cb = exact_divide(b, g);
            CHECK(gcd(ca, cb) == LaurentPoly(1));
            CHECK(g == euclid_gcd(a, b));
        }
    }

    TEST_CASE("normalization is idempotent") {
        for (int trial = 0; trial < 100; ++trial) {
            const LaurentPoly n = random_laurent();
            const LaurentPoly d = random_nonzero_laurent();
            const RatFun once(n, d);
            const RatFun twice(once.numerator(), once.denominator());
            CHECK(once == twice);
            CHECK(once.denominator().offset() == 0);
            CHECK(once.denominator().leading().is_one());
            if (!once.is_zero()) {
                CHECK(gcd(once.numerator(), once.denominator()) == LaurentPoly(1));
            }
            // Equal functions are equal representations.
            const LaurentPoly scale = random_nonzero_laurent(3);
            CHECK(RatFun(n * scale, d * scale) == once);
        }
    }

    TEST_CASE("ratfun field laws") {
        for (int trial = 0; trial < 50; ++trial) {
            const RatFun x(random_laurent(4), random_nonzero_laurent(4));
            const RatFun y(random_laurent(4), random_nonzero_laurent(4));
            CHECK(x + y == y + x);
            CHECK((x + y) - y == x);
            if (!y.is_zero()) {
                CHECK((x * y) / y == x);
            }
        }
    }

    TEST_CASE("quotient projection is multiplicative") {
        const LaurentPoly phi5 = 1 + q + q.pow(2) + q.pow(3) + q.pow(4);
        auto m = std::make_shared<const Modulus>(phi5.pow(2), ModulusLabel::phi_pow(5, 2));
        int checked = 0;
        for (int trial = 0; trial < 100; ++trial) {
            const RatFun x(random_laurent(4), random_nonzero_laurent(4));
            const RatFun y(random_laurent(4), random_nonzero_laurent(4));
            if (!gcd(x.denominator(), m->poly()).is_constant() || !gcd(y.denominator(), m->poly()).is_constant()) {
                continue;
            }
            CHECK(quotient_project(x * y, m) == quotient_project(x, m) * quotient_project(y, m));
            CHECK(quotient_project(x + y, m) == quotient_project(x, m) + quotient_project(y, m));
            ++checked;
        }
        CHECK(checked > 50);
    }

    TEST_CASE("substitution is a ring map") {
        for (int trial = 0; trial < 50; ++trial) {
            const LaurentPoly a = random_laurent();
            const LaurentPoly b = random_laurent();
            const int m = qcong::testing::uniform(1, 4) * (qcong::testing::uniform(0, 1) ? 1 : -1);
            CHECK((a * b).substitute(m) == a.substitute(m) * b.substitute(m));
            CHECK((a + b).substitute(m) == a.substitute(m) + b.substitute(m));
        }
    }
}
