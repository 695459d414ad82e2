#include <doctest.h>

#include <array>

#include "qcong/congruence.hpp"
#include "qcong/series.hpp"
#include "test_support.hpp"

using namespace qcong;

namespace {

const LaurentPoly q = LaurentPoly::q();

RatFun one_minus(std::int64_t t) { return RatFun(1 - LaurentPoly::q_pow(t)); }

/// Term-by-term sum straight from the definition, one RatFun factor at a time.
RatFun naive_sum(const SeriesSpec& spec, int n, std::int64_t s = 0) {
    const std::int64_t top = spec.truncation().bound(n);
    RatFun total;
    for (std::int64_t k = 0; k <= top; ++k) {
        bool vanishes = false;
        RatFun term(LaurentPoly::q_pow(spec.term_q_power() * k));
        for (std::int64_t j = 0; j < k && !vanishes; ++j) {
            for (const auto& f : spec.numerator()) {
                const std::int64_t t = f.q_exp + s * f.a_exp + j * f.step;
                if (t == 0) vanishes = true;
                for (int i = 0; i < f.multiplicity; ++i) term *= one_minus(t);
            }
        }
        if (vanishes) continue;
        for (std::int64_t j = 0; j < k; ++j) {
            for (const auto& f : spec.denominator()) {
                const std::int64_t t = f.q_exp + s * f.a_exp + j * f.step;
                for (int i = 0; i < f.multiplicity; ++i) term /= one_minus(t);
            }
        }
        total += term;
    }
    return total;
}

SeriesSpec random_spec() {
    switch (testing::uniform(0, 3)) {
        case 0: {
            const int d = testing::uniform(2, 5);
            for (;;) {
                const int r = testing::uniform(-5, d - 2);
                if (std::gcd(r, d) == 1) return family_main(d, r);
            }
        }
        case 1: {
            const int sign = testing::uniform(0, 1) == 0 ? 1 : -1;
            return family_conj56(testing::uniform(1, 2), testing::uniform(-4, 4), sign);
        }
        case 2: {
            static const std::array<std::array<int, 3>, 4> exps{{{1, 1, 7}, {2, 2, 5}, {-1, -1, -7}, {1, 2, 6}}};
            return family_triple(9, exps[static_cast<std::size_t>(testing::uniform(0, 3))]);
        }
        default:
            return family_main(2, -1).with_truncation(Truncation::full_range());
    }
}

ModulusLabel random_label(int n) {
    switch (testing::uniform(0, 3)) {
        case 0: return ModulusLabel::phi_pow(n, testing::uniform(1, 3));
        case 1: return ModulusLabel::qint(n);
        case 2: return ModulusLabel::qint_phi(n);
        default: return ModulusLabel::qint_sq(n);
    }
}

}  // namespace

TEST_SUITE("series") {
    TEST_CASE("truncation bounds") {
        CHECK(Truncation::full_range().bound(7) == 6);
        CHECK(Truncation::half().bound(7) == 4);
        CHECK(Truncation::upto_expr(3, 1).bound(5) == 3);
        CHECK_THROWS_AS((void)Truncation::half().bound(6), std::domain_error);
        CHECK_THROWS_AS((void)Truncation::upto_expr(3, 1).bound(4), std::domain_error);
        CHECK_THROWS_AS((void)Truncation::full_range().bound(0), std::domain_error);
    }

    TEST_CASE("family examples") {
        const SeriesSpec m = family_main(3, 1);
        CHECK(m.step() == 3);
        CHECK(m.numerator() == std::vector<PochFactor>{{0, 1, 3, 3}});
        CHECK(m.denominator() == std::vector<PochFactor>{{0, 3, 3, 3}});
        CHECK(m.term_q_power() == 3);
        CHECK_FALSE(m.has_a_dependence());

        const SeriesSpec p = family_parametric(4, 1);
        CHECK(p.has_a_dependence());
        CHECK(p.numerator().size() == 4);
        CHECK(p.denominator() == std::vector<PochFactor>{{-2, 4, 4, 1}, {0, 4, 4, 2}, {2, 4, 4, 1}});

        const SeriesSpec g = family_gz();
        CHECK(g.term_q_power() == 0);
        CHECK(g.numerator() == std::vector<PochFactor>{{0, 1, 2, 2}});
    }

    TEST_CASE("family constructor errors") {
        CHECK_THROWS_AS(family_main(1, -1), std::invalid_argument);
        CHECK_THROWS_AS(family_main(3, 2), std::invalid_argument);
        CHECK_THROWS_AS(family_main(4, 2), std::invalid_argument);
        CHECK_THROWS_AS(family_parametric(6, 3), std::invalid_argument);
        const std::array<int, 3> e{1, 1, 4};
        CHECK_THROWS_AS(family_triple(5, e), std::invalid_argument);
        CHECK_THROWS_AS(family_conj56(0, 1, 1), std::invalid_argument);
        CHECK_THROWS_AS(family_conj56(1, 1, 0), std::invalid_argument);
        CHECK_THROWS_AS(SeriesSpec(2, {{0, 1, 3, 1}}, {{0, 2, 2, 1}}, 0, {}), std::invalid_argument);
        CHECK_THROWS_AS(SeriesSpec(2, {{0, 1, 2, 1}}, {{0, 4, 2, 1}}, 0, {}), std::invalid_argument);
        CHECK_THROWS_AS(find_family("nope"), std::invalid_argument);
    }

    TEST_CASE("factor lists are canonical") {
        const SeriesSpec a(2, {{0, 1, 2, 1}, {0, 3, 2, 1}, {0, 1, 2, 1}}, {{0, 2, 2, 1}}, 0, {});
        const SeriesSpec b(2, {{0, 3, 2, 1}, {0, 1, 2, 2}}, {{0, 2, 2, 1}}, 0, {});
        CHECK(a == b);
    }

    TEST_CASE("parametric families reduce to their base at a = 1") {
        for (int d = 2; d <= 6; ++d) {
            for (int r = -5; r <= d - 2; ++r) {
                if (std::gcd(r, d) != 1) continue;
                CHECK(family_parametric(d, r).specialized(0) == family_main(d, r));
            }
        }
        CHECK(family_conj56(1, 1, 1) == family_main(3, 1));
        CHECK(family_conj56(1, -1, -1) == family_main(3, -1));
    }

    TEST_CASE("catalog builds every family") {
        for (const auto& [id, entry] : family_catalog()) {
            CHECK(entry.id == id);
            FamilyParams p;
            if (entry.uses_d) p.d = 3;
            if (entry.uses_r) p.r = entry.r_choices.empty() ? 1 : entry.r_choices.front();
            if (entry.uses_m) p.m = 2;
            CHECK_NOTHROW((void)entry.build(p));
        }
        CHECK_THROWS_AS(find_family("main").build({}), std::invalid_argument);
    }

    TEST_CASE("sum_exact examples") {
        const RatFun s = sum_exact(family_main(3, 1), 2);
        CHECK(s == RatFun(1) + RatFun(q.pow(3), (1 + q + q * q).pow(3)));
        CHECK(s == naive_sum(family_main(3, 1), 2));
        CHECK(sum_exact(family_main(3, 1), 1) == RatFun(1));
        CHECK(sum_exact(family_parametric(2, -1), 3, 3).is_zero());
        CHECK(naive_sum(family_parametric(2, -1), 3, 3).is_zero());
        CHECK_THROWS_AS(sum_exact(family_parametric(2, -1), 3), std::invalid_argument);
    }

    TEST_CASE("sum_exact matches the naive sum") {
        for (int trial = 0; trial < 40; ++trial) {
            const SeriesSpec spec = random_spec();
            const int n = testing::uniform(1, 9);
            RatFun fast;
            try {
                fast = sum_exact(spec, n);
            } catch (const std::domain_error&) {
                continue;
            }
            CHECK(fast == naive_sum(spec, n));
        }
    }

    TEST_CASE("term_exact") {
        CHECK(term_exact(family_main(3, 1), 0) == RatFun(1));
        CHECK(term_exact(family_main(3, 1), 1) == RatFun(q.pow(3) * (1 - q).pow(3), (1 - q.pow(3)).pow(3)));
    }

    TEST_CASE("sum_quotient examples") {
        const ModulusRef m = make_modulus(ModulusLabel::phi_pow(5, 2));
        const QuotientElem v = sum_quotient(family_main(3, 1), 5, m);
        CHECK(v.is_zero());
        const ModulusRef m4 = make_modulus(ModulusLabel::phi_pow(4, 2));
        CHECK_FALSE(sum_quotient(family_main(3, 1), 4, m4).is_zero());
        CHECK(sum_quotient(family_main(3, 1), 4, m4) == quotient_project(sum_exact(family_main(3, 1), 4), m4));
        const ModulusRef q3 = make_modulus(ModulusLabel::qint(3));
        CHECK_THROWS_AS(sum_quotient(family_main(3, 1), 5, q3), NotAUnit);
        CHECK_THROWS_AS(sum_quotient(family_parametric(3, 1), 5, m), std::invalid_argument);
    }

    TEST_CASE("quotient and exact engines agree on random instances") {
        int compared = 0;
        for (int trial = 0; trial < 400 && compared < 50; ++trial) {
            const SeriesSpec spec = random_spec();
            const int n = testing::uniform(2, 12);
            const ModulusRef m = make_modulus(random_label(n));
            try {
                const QuotientElem fast = sum_quotient(spec, n, m);
                CHECK(fast == quotient_project(sum_exact(spec, n), m));
                ++compared;
            } catch (const NotAUnit&) {
            } catch (const std::domain_error&) {
            }
        }
        CHECK(compared == 50);
    }

    TEST_CASE("specializing a commutes with summing") {
        for (int d = 2; d <= 4; ++d) {
            for (int r = -3; r <= d - 2; ++r) {
                if (std::gcd(r, d) != 1) continue;
                const SeriesSpec spec = family_parametric(d, r);
                for (int n = 1; n <= 10; ++n) {
                    for (int s : {-n, -1, 0, 2, n}) {
                        RatFun direct;
                        try {
                            direct = sum_exact(spec, n, s);
                        } catch (const std::domain_error&) {
                            CHECK_THROWS_AS(sum_exact(spec.specialized(s), n), std::domain_error);
                            continue;
                        }
                        CHECK(direct == sum_exact(spec.specialized(s), n));
                    }
                }
            }
        }
    }

    TEST_CASE("full and half truncations differ by a multiple of Phi_n^2") {
        const SeriesSpec full = family_main(2, -1);
        const SeriesSpec half = full.with_truncation(Truncation::half());
        for (int n = 3; n <= 15; n += 2) {
            const RatFun diff = sum_exact(full, n) - sum_exact(half, n);
            CongruenceReport report;
            decide_exact(diff, *make_modulus(ModulusLabel::phi_pow(n, 2)), report);
            CHECK(report.verdict == Verdict::Pass);
        }
    }

    TEST_CASE("parametric terms vanish past (dn-n-r)/d at a = q^n") {
        for (int d = 2; d <= 5; ++d) {
            for (int r = -4; r <= d - 2; ++r) {
                if (std::gcd(r, d) != 1) continue;
                const SeriesSpec spec = family_parametric(d, r);
                for (int n = 1; n <= 12; ++n) {
                    if (((d - 1) * n - r) % d != 0 || (d - 1) * n - r < 0) continue;
                    const std::int64_t last = ((d - 1) * n - r) / d;
                    for (std::int64_t k = last + 1; k <= last + 3; ++k) {
                        CHECK(term_exact(spec, k, n).is_zero());
                    }
                }
            }
        }
    }
}
