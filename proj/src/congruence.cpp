#include "qcong/congruence.hpp"

#include <stdexcept>

#include "qcong/qfun.hpp"

namespace qcong {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass:
            return "pass";
        case Verdict::Fail:
            return "fail";
        case Verdict::NotApplicable:
            return "not-applicable";
    }
    return "?";
}

std::string to_string(Engine e) {
    switch (e) {
        case Engine::Exact:
            return "exact";
        case Engine::Quotient:
            return "quotient";
        case Engine::Both:
            return "both";
    }
    return "?";
}

Engine parse_engine(const std::string& text) {
    if (text == "exact") return Engine::Exact;
    if (text == "quotient") return Engine::Quotient;
    if (text == "both") return Engine::Both;
    throw std::invalid_argument("unknown engine '" + text + "'");
}

Engine default_engine(const ModulusLabel& label) {
    return label.kind == ModulusKind::PhiPow ? Engine::Quotient : Engine::Exact;
}

void decide_exact(const RatFun& x, const Modulus& m, CongruenceReport& report) {
    report.witness.reset();
    if (x.is_zero()) {
        report.verdict = Verdict::Pass;
        report.q_shift = 0;
        return;
    }
    const LaurentPoly common = gcd(x.denominator(), m.poly());
    if (!common.is_constant()) {
        report.verdict = Verdict::NotApplicable;
        report.note = "denominator meets modulus: common factor " + common.to_string();
        return;
    }
    report.q_shift = -x.numerator().offset();
    const LaurentPoly rem = remainder(x.numerator().shifted(report.q_shift), m.poly());
    if (rem.is_zero()) {
        report.verdict = Verdict::Pass;
    } else {
        report.verdict = Verdict::Fail;
        report.witness = rem;
    }
}

namespace {

void run_exact(const SeriesSpec& spec, int n, const Modulus& m, CongruenceReport& report) {
    decide_exact(sum_exact(spec, n), m, report);
    report.engine = Engine::Exact;
}

/// Returns false when a term denominator is not a unit modulo m.
bool run_quotient(const SeriesSpec& spec, int n, const ModulusRef& m, CongruenceReport& report) {
    try {
        const QuotientElem value = sum_quotient(spec, n, m);
        report.engine = Engine::Quotient;
        report.q_shift = 0;
        if (value.is_zero()) {
            report.verdict = Verdict::Pass;
            report.witness.reset();
        } else {
            report.verdict = Verdict::Fail;
            report.witness = value.residue();
        }
        return true;
    } catch (const NotAUnit&) {
        return false;
    }
}

}  // namespace

CongruenceReport check_divisibility(const SeriesSpec& spec, int n, const ModulusLabel& label,
                                    std::optional<Engine> engine) {
    const auto start = std::chrono::steady_clock::now();
    if (n < 2 || label.n != n) {
        throw std::invalid_argument("check_divisibility: need n >= 2 and a modulus for the same n");
    }
    if (spec.has_a_dependence()) {
        throw std::invalid_argument("check_divisibility: series still depends on a");
    }
    const ModulusRef modulus = make_modulus(label);

    CongruenceReport report;
    report.params.n = n;
    report.params.truncation = spec.truncation().to_string();
    report.modulus_label = label.to_string();

    const Engine chosen = engine.value_or(default_engine(label));
    if (chosen == Engine::Exact) {
        run_exact(spec, n, *modulus, report);
    } else if (chosen == Engine::Quotient) {
        if (!run_quotient(spec, n, modulus, report)) {
            run_exact(spec, n, *modulus, report);
            report.note = "term denominator not a unit modulo " + report.modulus_label + "; exact engine used";
        }
    } else {
        CongruenceReport exact = report;
        run_exact(spec, n, *modulus, exact);
        if (run_quotient(spec, n, modulus, report)) {
            if (report.verdict != exact.verdict) {
                throw std::logic_error("engines disagree on " + spec.to_string() + " at n=" + std::to_string(n));
            }
            // Keep the exact witness: it is the remainder of the cleared numerator.
            report.witness = exact.witness;
            report.q_shift = exact.q_shift;
            report.engine = Engine::Both;
        } else {
            report = exact;
            report.note = "term denominator not a unit modulo " + report.modulus_label + "; exact engine only";
        }
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

bool parametric_vanishes(const SeriesSpec& spec, int n) {
    if (!spec.has_a_dependence()) {
        throw std::invalid_argument("parametric_vanishes: series has no parameter a");
    }
    return sum_exact(spec, n, n).is_zero() && sum_exact(spec, n, -static_cast<std::int64_t>(n)).is_zero();
}

bool padic_rv_check(long p) {
    if (p < 3 || !is_prime(p)) {
        throw std::invalid_argument("padic_rv_check: p must be an odd prime, got " + std::to_string(p));
    }
    const BigInt mod = BigInt(p) * p;
    BigInt inv16;
    const BigInt sixteen = 16;
    mpz_invert(inv16.get_mpz_t(), sixteen.get_mpz_t(), mod.get_mpz_t());
    BigInt total = 0;
    BigInt inv_pow = 1;
    for (long k = 0; k < p; ++k) {
        BigInt central;
        mpz_bin_uiui(central.get_mpz_t(), static_cast<unsigned long>(2 * k), static_cast<unsigned long>(k));
        total += central * central * inv_pow;
        total %= mod;
        inv_pow = inv_pow * inv16 % mod;
    }
    BigInt expected = ((p - 1) / 2) % 2 == 0 ? BigInt(1) : BigInt(mod - 1);
    return total == expected;
}

bool gz_rv_check(int n) {
    if (n < 3 || n % 2 == 0) {
        throw std::invalid_argument("gz_rv_check: n must be odd and >= 3, got " + std::to_string(n));
    }
    const std::int64_t exponent = (1 - static_cast<std::int64_t>(n) * n) / 4;
    const Rational sign = ((n - 1) / 2) % 2 == 0 ? 1 : -1;
    const RatFun difference = sum_exact(family_gz(), n) - RatFun(LaurentPoly::monomial(sign, exponent));

    CongruenceReport report;
    decide_exact(difference, *make_modulus(ModulusLabel::phi_pow(n, 2)), report);
    if (report.verdict != Verdict::Pass) {
        return false;
    }
    if (is_prime(n)) {
        decide_exact(difference, *make_modulus(ModulusLabel::qint_sq(n)), report);
        return report.verdict == Verdict::Pass;
    }
    return true;
}

long residue_mod(const Rational& x, long n) {
    if (n < 1) {
        throw std::invalid_argument("residue_mod: n must be positive");
    }
    const BigInt modulus = n;
    BigInt inv;
    if (mpz_invert(inv.get_mpz_t(), x.denominator().get_mpz_t(), modulus.get_mpz_t()) == 0) {
        if (n == 1) return 0;
        throw std::invalid_argument("residue_mod: denominator " + x.denominator().get_str() + " shares a factor with " +
                                    std::to_string(n));
    }
    BigInt t = x.numerator() * inv;
    mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), modulus.get_mpz_t());
    return t.get_si();
}

}  // namespace qcong
