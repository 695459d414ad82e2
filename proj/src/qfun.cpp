#include "qcong/qfun.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace qcong {

std::vector<int> divisors(int n) {
    if (n < 1) {
        throw std::invalid_argument("divisors: n must be positive");
    }
    std::vector<int> small;
    std::vector<int> large;
    for (int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

int euler_phi(int n) {
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) return false;
    }
    return true;
}

namespace {

struct CyclotomicCache {
    std::shared_mutex mutex;
    // std::map nodes are stable, so references handed out stay valid.
    std::map<int, LaurentPoly> table;
};

CyclotomicCache& cyclotomic_cache() {
    static CyclotomicCache cache;
    return cache;
}

}  // namespace

const LaurentPoly& cyclotomic(int n) {
    if (n < 1) {
        throw std::invalid_argument("cyclotomic: n must be positive");
    }
    auto& cache = cyclotomic_cache();
    {
        std::shared_lock lock(cache.mutex);
        if (auto it = cache.table.find(n); it != cache.table.end()) {
            return it->second;
        }
    }
    // q^n - 1 divided by Phi_d for every proper divisor d.
    LaurentPoly value = LaurentPoly::q_pow(n) - LaurentPoly(1);
    for (int d : divisors(n)) {
        if (d < n) value = exact_divide(value, cyclotomic(d));
    }
    std::unique_lock lock(cache.mutex);
    return cache.table.try_emplace(n, std::move(value)).first->second;
}

LaurentPoly q_integer(int n) {
    if (n < 1) {
        throw std::invalid_argument("q_integer: n must be positive");
    }
    return LaurentPoly(0, std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
}

ModulusRef make_modulus(const ModulusLabel& label) {
    if (label.n < 2) {
        throw std::invalid_argument("modulus requires n >= 2");
    }
    LaurentPoly poly;
    switch (label.kind) {
        case ModulusKind::PhiPow:
            if (label.exponent < 1) throw std::invalid_argument("phi_pow exponent must be >= 1");
            poly = cyclotomic(label.n).pow(static_cast<unsigned>(label.exponent));
            break;
        case ModulusKind::QInt:
            poly = q_integer(label.n);
            break;
        case ModulusKind::QIntPhi:
            poly = q_integer(label.n) * cyclotomic(label.n);
            break;
        case ModulusKind::QIntSq:
            poly = q_integer(label.n).pow(2);
            break;
    }
    return std::make_shared<const Modulus>(std::move(poly), label);
}

AParamPoly::AParamPoly(std::int64_t a_offset, std::vector<RatFun> coeffs)
    : a_offset_(a_offset), coeffs_(std::move(coeffs)) {
    normalize();
}

void AParamPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    a_offset_ = coeffs_.empty() ? 0 : a_offset_ + static_cast<std::int64_t>(lead);
}

RatFun AParamPoly::coeff(std::int64_t a_exponent) const {
    if (is_zero() || a_exponent < a_offset_ || a_exponent > a_degree()) {
        return {};
    }
    return coeffs_[static_cast<std::size_t>(a_exponent - a_offset_)];
}

RatFun AParamPoly::specialize(std::int64_t s) const {
    RatFun acc;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const std::int64_t e = a_offset_ + static_cast<std::int64_t>(i);
        acc += coeffs_[i] * RatFun(LaurentPoly::q_pow(s * e));
    }
    return acc;
}

AParamPoly& AParamPoly::operator+=(const AParamPoly& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    const std::int64_t lo = std::min(a_offset_, rhs.a_offset_);
    const std::int64_t hi = std::max(a_degree(), rhs.a_degree());
    std::vector<RatFun> out(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t e = lo; e <= hi; ++e) {
        out[static_cast<std::size_t>(e - lo)] = coeff(e) + rhs.coeff(e);
    }
    return *this = AParamPoly(lo, std::move(out));
}

AParamPoly operator*(const AParamPoly& x, const AParamPoly& y) {
    if (x.is_zero() || y.is_zero()) return {};
    std::vector<RatFun> out(x.coeffs_.size() + y.coeffs_.size() - 1);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < y.coeffs_.size(); ++j) {
            out[i + j] += x.coeffs_[i] * y.coeffs_[j];
        }
    }
    return AParamPoly(x.a_offset_ + y.a_offset_, std::move(out));
}

LaurentPoly q_shifted_factorial(std::int64_t q_exp, int step, std::int64_t k) {
    if (k < 0) {
        throw std::invalid_argument("q_shifted_factorial: k must be nonnegative");
    }
    IntPoly acc = IntPoly::constant(1);
    for (std::int64_t j = 0; j < k; ++j) {
        acc.mul_one_minus_q_pow(q_exp + j * step);
    }
    return LaurentPoly(acc);
}

AParamPoly q_pochhammer(const PochFactor& f, std::int64_t k) {
    if (k < 0) {
        throw std::invalid_argument("q_pochhammer: k must be nonnegative");
    }
    if (f.step < 1 || f.multiplicity < 1) {
        throw std::invalid_argument("q_pochhammer: step and multiplicity must be positive");
    }
    AParamPoly single;
    if (f.a_exp == 0) {
        single = AParamPoly(RatFun(q_shifted_factorial(f.q_exp, f.step, k)));
    } else {
        single = AParamPoly(RatFun(1));
        for (std::int64_t j = 0; j < k; ++j) {
            // 1 - a^e q^t
            AParamPoly factor = f.a_exp > 0
                ? AParamPoly(0, {RatFun(1)}) + AParamPoly(f.a_exp, {RatFun(LaurentPoly::monomial(-1, f.q_exponent_at(j)))})
                : AParamPoly(f.a_exp, {RatFun(LaurentPoly::monomial(-1, f.q_exponent_at(j)))}) + AParamPoly(0, {RatFun(1)});
            single = single * factor;
        }
    }
    AParamPoly out = single;
    for (int i = 1; i < f.multiplicity; ++i) out = out * single;
    return out;
}

LaurentPoly q_binomial(std::int64_t n, std::int64_t k, int base_step) {
    if (base_step < 1) {
        throw std::invalid_argument("q_binomial: base_step must be positive");
    }
    if (n < 0 || k < 0 || k > n) {
        return {};
    }
    const LaurentPoly top = q_shifted_factorial(1, 1, n);
    const LaurentPoly bottom = q_shifted_factorial(1, 1, k) * q_shifted_factorial(1, 1, n - k);
    const LaurentPoly value = exact_divide(top, bottom);
    return base_step == 1 ? value : value.substitute(base_step);
}

bool qbino_identity_check(int n, int j) {
    if (n < 1) {
        throw std::invalid_argument("qbino_identity_check: n must be positive");
    }
    if (j < 0 || j > n - 1) {
        throw std::invalid_argument("qbino_identity_check: j must lie in [0, n-1]");
    }
    LaurentPoly total;
    for (int k = 0; k <= n; ++k) {
        const std::int64_t m = n - k;
        const std::int64_t exponent = m * (m - 1) / 2 + static_cast<std::int64_t>(j) * k;
        LaurentPoly term = q_binomial(n, k).shifted(exponent);
        if (k % 2 == 1) term = -term;
        total += term;
    }
    return total.is_zero();
}

}  // namespace qcong
