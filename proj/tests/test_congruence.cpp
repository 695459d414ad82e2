#include <doctest.h>

#include "qcong/congruence.hpp"
#include "test_support.hpp"

using namespace qcong;

namespace {

const LaurentPoly q = LaurentPoly::q();

LaurentPoly poly(std::initializer_list<int> ascending) {
    std::vector<Rational> c;
    for (int v : ascending) c.emplace_back(v);
    return LaurentPoly(0, std::move(c));
}

/// sum_{k<p} C(2k,k)^2/16^k as an exact rational, then reduced mod p^2.
bool padic_by_rationals(long p) {
    Rational total(0);
    Rational central(1);
    for (long k = 0; k < p; ++k) {
        if (k > 0) central = central * Rational((2 * k) * (2 * k - 1), k * k);
        total += central * central / Rational(16).pow(k);
    }
    const long expected = ((p - 1) / 2) % 2 == 0 ? 1 : p * p - 1;
    return residue_mod(total, p * p) == expected;
}

}  // namespace

TEST_SUITE("congruence") {
    TEST_CASE("verdict and engine names") {
        CHECK(to_string(Verdict::Pass) == "pass");
        CHECK(to_string(Verdict::NotApplicable) == "not-applicable");
        CHECK(parse_engine("both") == Engine::Both);
        CHECK_THROWS_AS(parse_engine("fast"), std::invalid_argument);
        CHECK(default_engine(ModulusLabel::phi_pow(5, 2)) == Engine::Quotient);
        CHECK(default_engine(ModulusLabel::qint_sq(5)) == Engine::Exact);
    }

    TEST_CASE("check_divisibility examples") {
        const SeriesSpec spec = family_main(3, 1);
        const CongruenceReport pass = check_divisibility(spec, 5, ModulusLabel::phi_pow(5, 2));
        CHECK(pass.verdict == Verdict::Pass);
        CHECK_FALSE(pass.witness.has_value());
        CHECK(pass.modulus_label == "phi_pow(5,2)");
        CHECK(pass.engine == Engine::Quotient);

        for (Engine e : {Engine::Exact, Engine::Both}) {
            const CongruenceReport fail = check_divisibility(spec, 4, ModulusLabel::phi_pow(4, 2), e);
            CHECK(fail.verdict == Verdict::Fail);
            REQUIRE(fail.witness.has_value());
            CHECK(*fail.witness == poly({9, 18, 9, 20}));
        }
        const CongruenceReport quotient = check_divisibility(spec, 4, ModulusLabel::phi_pow(4, 2), Engine::Quotient);
        CHECK(quotient.verdict == Verdict::Fail);
        CHECK(quotient.witness.has_value());
    }

    TEST_CASE("the half sum is divisible by [n]Phi_n") {
        const SeriesSpec half = family_main(2, -1).with_truncation(Truncation::half());
        for (int n = 3; n <= 13; n += 2) {
            CHECK(check_divisibility(half, n, ModulusLabel::qint_phi(n)).verdict == Verdict::Pass);
        }
    }

    TEST_CASE("a denominator sharing a factor with the modulus is not applicable") {
        const CongruenceReport r = check_divisibility(family_main(3, 1), 6, ModulusLabel::qint(6));
        CHECK(r.verdict == Verdict::NotApplicable);
        CHECK_FALSE(r.witness.has_value());
        CHECK_FALSE(r.note.empty());
        const CongruenceReport fallback = check_divisibility(family_main(3, 1), 6, ModulusLabel::qint(6), Engine::Quotient);
        CHECK(fallback.verdict == Verdict::NotApplicable);
        CHECK(fallback.engine == Engine::Exact);
    }

    TEST_CASE("check_divisibility argument errors") {
        CHECK_THROWS_AS(check_divisibility(family_main(3, 1), 5, ModulusLabel::phi_pow(7, 2)), std::invalid_argument);
        CHECK_THROWS_AS(check_divisibility(family_parametric(3, 1), 5, ModulusLabel::phi_pow(5, 2)),
                        std::invalid_argument);
        CHECK_THROWS_AS(check_divisibility(family_main(3, 1), 1, ModulusLabel::phi_pow(1, 2)), std::invalid_argument);
    }

    TEST_CASE("decide_exact clears negative powers of q") {
        CongruenceReport r;
        const Modulus m(cyclotomic(3), ModulusLabel::phi_pow(3, 1));
        decide_exact(RatFun(LaurentPoly::q_pow(-2) * cyclotomic(3)), m, r);
        CHECK(r.verdict == Verdict::Pass);
        CHECK(r.q_shift == 2);
        decide_exact(RatFun(LaurentPoly::q_pow(-1)), m, r);
        CHECK(r.verdict == Verdict::Fail);
        CHECK(*r.witness == LaurentPoly(1));
        decide_exact(RatFun(), m, r);
        CHECK(r.verdict == Verdict::Pass);
    }

    TEST_CASE("witness is the remainder of the cleared numerator") {
        for (int n = 2; n <= 12; ++n) {
            const SeriesSpec spec = family_main(3, -1);
            const CongruenceReport r = check_divisibility(spec, n, ModulusLabel::phi_pow(n, 2), Engine::Exact);
            const RatFun value = sum_exact(spec, n);
            const LaurentPoly cleared = value.numerator().shifted(r.q_shift);
            const LaurentPoly rem = remainder(cleared, cyclotomic(n).pow(2));
            CHECK(cleared.offset() >= 0);
            if (r.verdict == Verdict::Pass) CHECK(rem.is_zero());
            if (r.verdict == Verdict::Fail) CHECK(*r.witness == rem);
        }
    }

    TEST_CASE("both engines agree up to n = 12") {
        for (int d = 2; d <= 5; ++d) {
            for (int r = -4; r <= d - 2; ++r) {
                if (std::gcd(r, d) != 1) continue;
                for (int n = 2; n <= 12; ++n) {
                    for (int e = 1; e <= 2; ++e) {
                        CHECK_NOTHROW((void)check_divisibility(family_main(d, r), n, ModulusLabel::phi_pow(n, e),
                                                               Engine::Both));
                    }
                }
            }
        }
    }

    TEST_CASE("parametric vanishing") {
        CHECK(parametric_vanishes(family_parametric(3, 1), 5));
        CHECK(parametric_vanishes(family_parametric(2, -1), 3));
        CHECK_FALSE(parametric_vanishes(family_parametric(3, 1), 4));
        CHECK_THROWS_AS(parametric_vanishes(family_main(3, 1), 5), std::invalid_argument);
    }

    TEST_CASE("p-adic supercongruence") {
        for (long p : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L}) {
            CHECK(padic_rv_check(p));
            CHECK(padic_by_rationals(p));
        }
        CHECK_THROWS_AS(padic_rv_check(9), std::invalid_argument);
        CHECK_THROWS_AS(padic_rv_check(2), std::invalid_argument);
    }

    TEST_CASE("q-analogue modulo Phi_n^2") {
        for (int n = 3; n <= 21; n += 2) CHECK(gz_rv_check(n));
        CHECK_THROWS_AS(gz_rv_check(4), std::invalid_argument);
        CHECK_THROWS_AS(gz_rv_check(1), std::invalid_argument);
    }

    TEST_CASE("residue_mod") {
        CHECK(residue_mod(Rational(-1), 9) == 8);
        CHECK(residue_mod(Rational(1, 2), 9) == 5);
        CHECK(residue_mod(Rational(7, 3), 1) == 0);
        CHECK_THROWS_AS(residue_mod(Rational(1, 3), 9), std::invalid_argument);
        CHECK_THROWS_AS(residue_mod(Rational(1), 0), std::invalid_argument);
    }
}
