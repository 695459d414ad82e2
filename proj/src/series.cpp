#include "qcong/series.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qcong {

std::int64_t Truncation::bound(int n) const {
    if (n < 1) {
        throw std::domain_error("truncation: n must be positive");
    }
    switch (kind) {
        case TruncationKind::FullRange:
            return n - 1;
        case TruncationKind::Half:
            if (n % 2 == 0) {
                throw std::domain_error("truncation (n+1)/2 requires odd n, got n=" + std::to_string(n));
            }
            return (n + 1) / 2;
        case TruncationKind::Expr: {
            const std::int64_t top = static_cast<std::int64_t>(d) * n - n - r;
            if (d <= 0 || top < 0 || top % d != 0) {
                throw std::domain_error("truncation " + to_string() + " is not a nonnegative integer at n=" +
                                        std::to_string(n));
            }
            return top / d;
        }
    }
    return 0;
}

std::string Truncation::to_string() const {
    switch (kind) {
        case TruncationKind::FullRange:
            return "n-1";
        case TruncationKind::Half:
            return "(n+1)/2";
        case TruncationKind::Expr:
            return "(" + std::to_string(d) + "n-n-(" + std::to_string(r) + "))/" + std::to_string(d);
    }
    return "?";
}

namespace {

std::vector<PochFactor> canonical_factors(std::vector<PochFactor> factors, int step) {
    std::map<std::tuple<int, std::int64_t>, int> merged;
    for (const auto& f : factors) {
        if (f.step != step) {
            throw std::invalid_argument("series factor step " + std::to_string(f.step) +
                                        " differs from series step " + std::to_string(step));
        }
        if (f.multiplicity < 1) {
            throw std::invalid_argument("series factor multiplicity must be positive");
        }
        merged[{f.a_exp, f.q_exp}] += f.multiplicity;
    }
    std::vector<PochFactor> out;
    out.reserve(merged.size());
    for (const auto& [key, mult] : merged) {
        out.push_back({std::get<0>(key), std::get<1>(key), step, mult});
    }
    return out;
}

}  // namespace

SeriesSpec::SeriesSpec(int step, std::vector<PochFactor> numerator, std::vector<PochFactor> denominator,
                       std::int64_t term_q_power, Truncation truncation)
    : step_(step), term_q_power_(term_q_power), truncation_(truncation) {
    if (step < 1) {
        throw std::invalid_argument("series step must be positive");
    }
    numerator_ = canonical_factors(std::move(numerator), step);
    denominator_ = canonical_factors(std::move(denominator), step);
    const bool has_base = std::any_of(denominator_.begin(), denominator_.end(),
                                      [&](const PochFactor& f) { return f.a_exp == 0 && f.q_exp == step; });
    if (!has_base) {
        throw std::invalid_argument("series denominator must contain (q^d;q^d)_k");
    }
    if (truncation_.kind == TruncationKind::Expr && truncation_.d <= 0) {
        throw std::invalid_argument("truncation (dn-n-r)/d needs d >= 1");
    }
}

bool SeriesSpec::has_a_dependence() const {
    auto uses_a = [](const PochFactor& f) { return f.a_exp != 0; };
    return std::any_of(numerator_.begin(), numerator_.end(), uses_a) ||
           std::any_of(denominator_.begin(), denominator_.end(), uses_a);
}

SeriesSpec SeriesSpec::specialized(std::int64_t s) const {
    auto sub = [s](std::vector<PochFactor> fs) {
        for (auto& f : fs) {
            f.q_exp += s * f.a_exp;
            f.a_exp = 0;
        }
        return fs;
    };
    return SeriesSpec(step_, sub(numerator_), sub(denominator_), term_q_power_, truncation_);
}

SeriesSpec SeriesSpec::with_truncation(Truncation t) const {
    SeriesSpec out = *this;
    out.truncation_ = t;
    return out;
}

std::string SeriesSpec::to_string() const {
    auto list = [this](const std::vector<PochFactor>& fs) {
        std::ostringstream os;
        for (const auto& f : fs) {
            os << "(";
            if (f.a_exp != 0) os << "a^" << f.a_exp << "*";
            os << "q^" << f.q_exp << ";q^" << step_ << ")_k";
            if (f.multiplicity > 1) os << "^" << f.multiplicity;
        }
        return os.str();
    };
    std::ostringstream os;
    os << "sum_{k=0}^{" << truncation_.to_string() << "} " << list(numerator_);
    if (term_q_power_ != 0) os << " q^(" << term_q_power_ << "k)";
    os << " / " << list(denominator_);
    return os.str();
}

namespace {

void require_main_params(int d, int r) {
    if (d < 2) {
        throw std::invalid_argument("family requires d >= 2, got d=" + std::to_string(d));
    }
    if (r > d - 2) {
        throw std::invalid_argument("family requires r <= d-2, got d=" + std::to_string(d) + " r=" + std::to_string(r));
    }
    if (std::gcd(r, d) != 1) {
        throw std::invalid_argument("family requires gcd(r,d)=1, got d=" + std::to_string(d) + " r=" + std::to_string(r));
    }
}

}  // namespace

SeriesSpec family_main(int d, int r) {
    require_main_params(d, r);
    return SeriesSpec(d, {{0, r, d, d}}, {{0, d, d, d}}, d, Truncation::full_range());
}

SeriesSpec family_parametric(int d, int r) {
    require_main_params(d, r);
    std::vector<PochFactor> num;
    std::vector<PochFactor> den;
    // Numerator a-exponents d-1, d-3, ... down to 1 (even d) or 2 (odd d), and
    // their negatives; odd d adds one plain (q^r;q^d)_k.
    for (int e = d - 1; e >= 1; e -= 2) {
        num.push_back({e, r, d, 1});
        num.push_back({-e, r, d, 1});
    }
    if (d % 2 == 1) {
        num.push_back({0, r, d, 1});
    }
    // Denominator a-exponents d-2, d-4, ... down to 1 (odd d) or 0 (even d).
    // For even d the a^0 member of each half is (q^d;q^d)_k itself.
    for (int e = d - 2; e >= 1; e -= 2) {
        den.push_back({e, d, d, 1});
        den.push_back({-e, d, d, 1});
    }
    den.push_back({0, d, d, d % 2 == 0 ? 2 : 1});
    return SeriesSpec(d, std::move(num), std::move(den), d, Truncation::full_range());
}

SeriesSpec family_triple(int step, std::span<const int> exponents, const std::optional<TripleAExponents>& a_exponents) {
    if (step != 6 && step != 9) {
        throw std::invalid_argument("family_triple: step must be 6 or 9, got " + std::to_string(step));
    }
    if (exponents.size() != 3) {
        throw std::invalid_argument("family_triple: expected 3 exponents, got " + std::to_string(exponents.size()));
    }
    std::vector<PochFactor> num;
    std::vector<PochFactor> den;
    for (std::size_t i = 0; i < 3; ++i) {
        const int na = a_exponents ? a_exponents->numerator[i] : 0;
        const int da = a_exponents ? a_exponents->denominator[i] : 0;
        num.push_back({na, exponents[i], step, 1});
        den.push_back({da, step, step, 1});
    }
    return SeriesSpec(step, std::move(num), std::move(den), step, Truncation::full_range());
}

SeriesSpec family_conj56(int m, int r, int sign) {
    if (m < 1) {
        throw std::invalid_argument("family_conj56: m must be positive");
    }
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("family_conj56: sign must be +1 or -1");
    }
    const int step = 3 * m;
    std::vector<PochFactor> num;
    if (sign > 0) {
        num = {{0, m, step, 1}, {0, r, step, 1}, {0, 2 * m - r, step, 1}};
    } else {
        num = {{0, -m, step, 1}, {0, r, step, 1}, {0, -2 * m - r, step, 1}};
    }
    return SeriesSpec(step, std::move(num), {{0, step, step, 3}}, step, Truncation::full_range());
}

SeriesSpec family_gz() { return SeriesSpec(2, {{0, 1, 2, 2}}, {{0, 2, 2, 2}}, 0, Truncation::full_range()); }

namespace {

int need(const std::optional<int>& v, const char* name, const std::string& family) {
    if (!v) {
        throw std::invalid_argument("family '" + family + "' requires parameter " + name);
    }
    return *v;
}

void add(std::map<std::string, FamilyEntry>& catalog, FamilyEntry e) {
    const std::string id = e.id;
    if (!catalog.emplace(id, std::move(e)).second) {
        throw std::logic_error("duplicate family id " + id);
    }
}

FamilyEntry fixed_triple(std::string id, std::string description, int step, std::array<int, 3> exps,
                         std::optional<TripleAExponents> a = std::nullopt) {
    FamilyEntry e;
    e.id = std::move(id);
    e.description = std::move(description);
    e.build = [step, exps, a](const FamilyParams&) { return family_triple(step, exps, a); };
    return e;
}

TripleAExponents symmetric_a(int num, int den) { return {{num, -num, 0}, {den, -den, 0}}; }

std::map<std::string, FamilyEntry> build_catalog() {
    std::map<std::string, FamilyEntry> c;

    add(c, {"main", "(q^r;q^d)_k^d q^(dk)/(q^d;q^d)_k^d mod Phi_n^2", true, true, false, {},
            [](const FamilyParams& p) { return family_main(need(p.d, "d", "main"), need(p.r, "r", "main")); }});
    add(c, {"param", "a-parametric companion of main, vanishes at a = q^(+-n)", true, true, false, {},
            [](const FamilyParams& p) { return family_parametric(need(p.d, "d", "param"), need(p.r, "r", "param")); }});
    add(c, {"thm2", "(q^-1;q^2)_k^2 q^(2k)/(q^2;q^2)_k^2 over k <= n-1 mod [n]Phi_n", false, false, false, {},
            [](const FamilyParams&) { return family_main(2, -1); }});
    add(c, {"thm2-half", "(q^-1;q^2)_k^2 q^(2k)/(q^2;q^2)_k^2 over k <= (n+1)/2 mod [n]Phi_n", false, false, false, {},
            [](const FamilyParams&) { return family_main(2, -1).with_truncation(Truncation::half()); }});
    add(c, {"conj1", "thm2 sum mod [n]^2", false, false, false, {},
            [](const FamilyParams&) { return family_main(2, -1); }});
    add(c, {"conj1-half", "thm2-half sum mod [n]^2", false, false, false, {},
            [](const FamilyParams&) { return family_main(2, -1).with_truncation(Truncation::half()); }});

    add(c, fixed_triple("thm1-a", "(q,q,q^4;q^6)_k, n = 5 mod 6", 6, {1, 1, 4}));
    add(c, fixed_triple("thm1-b", "(q^-1,q^-1,q^-4;q^6)_k, n = 1 mod 6", 6, {-1, -1, -4}));
    add(c, fixed_triple("thm1-a-param", "(a^5q,q/a^5,q^4;q^6)_k/(a^4q^6,q^6/a^4,q^6;q^6)_k", 6, {1, 1, 4},
                        symmetric_a(5, 4)));
    add(c, fixed_triple("thm1-b-param", "(a^5/q,q^-1/a^5,q^-4;q^6)_k/(a^4q^6,q^6/a^4,q^6;q^6)_k", 6, {-1, -1, -4},
                        symmetric_a(5, 4)));

    add(c, fixed_triple("mod9-1", "(q,q,q^7;q^9)_k, n = 2,8 mod 9", 9, {1, 1, 7}));
    add(c, fixed_triple("mod9-2", "(q^2,q^2,q^5;q^9)_k, n = 4,7 mod 9", 9, {2, 2, 5}));
    add(c, fixed_triple("mod9-4", "(q^4,q^4,q;q^9)_k, n = 5,8 mod 9", 9, {4, 4, 1}));
    add(c, fixed_triple("mod9-neg1", "(q^-1,q^-1,q^-7;q^9)_k, n = 5 mod 9, n > 9", 9, {-1, -1, -7}));
    add(c, fixed_triple("mod9-neg2", "(q^-2,q^-2,q^-5;q^9)_k, n = 2,5 mod 9, n > 9", 9, {-2, -2, -5}));
    add(c, fixed_triple("mod9-neg4", "(q^-4,q^-4,q^-1;q^9)_k, n = 2 mod 9, n > 9", 9, {-4, -4, -1}));

    add(c, {"mod9-a5", "(a^5q^r,q^r/a^5,q^(9-2r);q^9)_k/(aq^9,q^9/a,q^9;q^9)_k, r in {1,2,4}", false, true, false,
            {1, 2, 4}, [](const FamilyParams& p) {
                const int r = need(p.r, "r", "mod9-a5");
                const std::array<int, 3> exps{r, r, 9 - 2 * r};
                return family_triple(9, exps, symmetric_a(5, 1));
            }});
    add(c, {"mod9-a8", "(a^8q^r,q^r/a^8,q^(9-2r);q^9)_k/(a^7q^9,q^9/a^7,q^9;q^9)_k, r in {1,2,4}", false, true, false,
            {1, 2, 4}, [](const FamilyParams& p) {
                const int r = need(p.r, "r", "mod9-a8");
                const std::array<int, 3> exps{r, r, 9 - 2 * r};
                return family_triple(9, exps, symmetric_a(8, 7));
            }});
    add(c, fixed_triple("mod9-neg-a7-1", "(a^7q^-1,q^-1/a^7,q^-7;q^9)_k/(a^5q^9,q^9/a^5,q^9;q^9)_k", 9, {-1, -1, -7},
                        symmetric_a(7, 5)));
    add(c, fixed_triple("mod9-neg-a8-2", "(a^8q^-2,q^-2/a^8,q^-5;q^9)_k/(a^7q^9,q^9/a^7,q^9;q^9)_k", 9, {-2, -2, -5},
                        symmetric_a(8, 7)));
    add(c, fixed_triple("mod9-neg-a5-2", "(a^5q^-2,q^-2/a^5,q^-5;q^9)_k/(aq^9,q^9/a,q^9;q^9)_k", 9, {-2, -2, -5},
                        symmetric_a(5, 1)));
    add(c, fixed_triple("mod9-neg-a7-4", "(a^7q^-4,q^-4/a^7,q^-1;q^9)_k/(a^5q^9,q^9/a^5,q^9;q^9)_k", 9, {-4, -4, -1},
                        symmetric_a(7, 5)));

    add(c, fixed_triple("conj3", "(q,q^2,q^6;q^9)_k, n = 4,7 mod 9", 9, {1, 2, 6}));
    add(c, fixed_triple("conj4", "(q^-1,q^-2,q^-6;q^9)_k, n = 5 mod 9", 9, {-1, -2, -6}));
    add(c, {"conj5", "(q^m,q^r,q^(2m-r);q^3m)_k, n = 2 mod 3", false, true, true, {},
            [](const FamilyParams& p) { return family_conj56(need(p.m, "m", "conj5"), need(p.r, "r", "conj5"), 1); }});
    add(c, {"conj6", "(q^-m,q^r,q^(-2m-r);q^3m)_k, n = 1 mod 3", false, true, true, {},
            [](const FamilyParams& p) { return family_conj56(need(p.m, "m", "conj6"), need(p.r, "r", "conj6"), -1); }});
    return c;
}

}  // namespace

const std::map<std::string, FamilyEntry>& family_catalog() {
    static const std::map<std::string, FamilyEntry> catalog = build_catalog();
    return catalog;
}

const FamilyEntry& find_family(const std::string& id) {
    const auto& catalog = family_catalog();
    auto it = catalog.find(id);
    if (it == catalog.end()) {
        throw std::invalid_argument("unknown family '" + id + "'");
    }
    return it->second;
}

namespace {

/// q-exponents t of the factors (1 - q^t) contributed at index j, one entry
/// per unit of multiplicity. The spec must be free of a.
std::vector<std::int64_t> factor_exponents(const std::vector<PochFactor>& fs, std::int64_t j) {
    std::vector<std::int64_t> out;
    for (const auto& f : fs) {
        for (int i = 0; i < f.multiplicity; ++i) out.push_back(f.q_exponent_at(j));
    }
    return out;
}

bool contains_zero(const std::vector<std::int64_t>& ts) {
    return std::find(ts.begin(), ts.end(), 0) != ts.end();
}

SeriesSpec resolve_a(const SeriesSpec& spec, std::optional<std::int64_t> a_power) {
    if (!spec.has_a_dependence()) {
        return spec;
    }
    if (!a_power) {
        throw std::invalid_argument("series depends on a; supply a = q^s to evaluate it");
    }
    return spec.specialized(*a_power);
}

/// Number of summands actually needed: stops early once a numerator factor
/// is identically zero (every later term then vanishes). Throws if a
/// denominator factor vanishes before that point.
std::int64_t effective_terms(const SeriesSpec& spec, std::int64_t last_index) {
    for (std::int64_t k = 0; k < last_index; ++k) {
        if (contains_zero(factor_exponents(spec.numerator(), k))) {
            return k + 1;
        }
        if (contains_zero(factor_exponents(spec.denominator(), k))) {
            throw std::domain_error("series denominator vanishes at index " + std::to_string(k));
        }
    }
    return last_index + 1;
}

}  // namespace

RatFun term_exact(const SeriesSpec& spec, std::int64_t k, std::optional<std::int64_t> a_power) {
    const SeriesSpec s = resolve_a(spec, a_power);
    IntPoly num = IntPoly::monomial(1, s.term_q_power() * k);
    IntPoly den = IntPoly::constant(1);
    for (std::int64_t j = 0; j < k; ++j) {
        for (auto t : factor_exponents(s.numerator(), j)) num.mul_one_minus_q_pow(t);
        for (auto t : factor_exponents(s.denominator(), j)) den.mul_one_minus_q_pow(t);
    }
    if (den.is_zero()) {
        throw std::domain_error("series denominator vanishes at index " + std::to_string(k));
    }
    return RatFun(LaurentPoly(num), LaurentPoly(den));
}

RatFun sum_exact(const SeriesSpec& spec, int n, std::optional<std::int64_t> a_power) {
    const SeriesSpec s = resolve_a(spec, a_power);
    const std::int64_t terms = effective_terms(s, s.truncation().bound(n));

    // Nested evaluation 1 + u_0/v_0 (1 + u_1/v_1 (1 + ...)) with the running
    // denominator Q = v_k ... v_{terms-2}, i.e. the common denominator of all
    // summands, and numerator P.
    IntPoly p = IntPoly::constant(1);
    IntPoly q = IntPoly::constant(1);
    std::map<int, int> phi_exponents;
    int sign = 1;
    std::int64_t shift = 0;
    for (std::int64_t k = terms - 1; k-- > 0;) {
        IntPoly up = p;
        for (auto t : factor_exponents(s.numerator(), k)) up.mul_one_minus_q_pow(t);
        up.shift(s.term_q_power());
        for (auto t : factor_exponents(s.denominator(), k)) {
            q.mul_one_minus_q_pow(t);
            // 1 - q^t = -prod_{e|t} Phi_e for t > 0, and q^t prod_{e|-t} Phi_e for t < 0.
            if (t > 0) {
                sign = -sign;
            } else {
                shift += t;
            }
            for (int e : divisors(static_cast<int>(t > 0 ? t : -t))) ++phi_exponents[e];
        }
        p = q + up;
    }

    // p / q = sign * q^-shift * p / prod Phi_e^c_e; cancel common cyclotomic factors.
    for (auto& [e, count] : phi_exponents) {
        const IntPoly phi = cyclotomic(e).to_int_poly().first;
        while (count > 0) {
            auto quotient = p.quotient_by_monic(phi);
            if (!quotient) break;
            p = std::move(*quotient);
            --count;
        }
    }
    if (sign < 0) p = -p;
    p.shift(-shift);
    IntPoly den = IntPoly::constant(1);
    for (const auto& [e, count] : phi_exponents) {
        if (count == 0) continue;
        const IntPoly phi = cyclotomic(e).to_int_poly().first;
        for (int i = 0; i < count; ++i) den = den * phi;
    }
    return RatFun::from_coprime_parts(LaurentPoly(p), LaurentPoly(den));
}

QuotientElem sum_quotient(const SeriesSpec& spec, int n, const ModulusRef& m) {
    if (spec.has_a_dependence()) {
        throw std::invalid_argument("sum_quotient: specialize the parameter a first");
    }
    const std::int64_t terms = effective_terms(spec, spec.truncation().bound(n));
    auto binomial = [&m](std::int64_t t) { return QuotientElem(m, LaurentPoly(IntPoly::one_minus_q_pow(t))); };
    const QuotientElem q_step(m, LaurentPoly::q_pow(spec.term_q_power()));

    QuotientElem term = QuotientElem::one(m);
    QuotientElem total = term;
    for (std::int64_t k = 0; k + 1 < terms; ++k) {
        QuotientElem up = q_step;
        for (auto t : factor_exponents(spec.numerator(), k)) up *= binomial(t);
        QuotientElem down = QuotientElem::one(m);
        for (auto t : factor_exponents(spec.denominator(), k)) down *= binomial(t);
        term *= up;
        term *= down.inverse();
        total += term;
    }
    return total;
}

}  // namespace qcong
