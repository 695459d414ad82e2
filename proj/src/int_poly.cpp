#include "qcong/int_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qcong {

IntPoly::IntPoly(std::int64_t offset, std::vector<BigInt> coeffs) : offset_(offset), coeffs_(std::move(coeffs)) {
    normalize();
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) {
        ++lead;
    }
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        offset_ += static_cast<std::int64_t>(lead);
    }
    if (coeffs_.empty()) {
        offset_ = 0;
    }
}

IntPoly IntPoly::one_minus_q_pow(std::int64_t t) {
    if (t == 0) {
        return {};
    }
    if (t > 0) {
        std::vector<BigInt> c(static_cast<std::size_t>(t) + 1);
        c.front() = 1;
        c.back() = -1;
        return IntPoly(0, std::move(c));
    }
    std::vector<BigInt> c(static_cast<std::size_t>(-t) + 1);
    c.front() = -1;
    c.back() = 1;
    return IntPoly(t, std::move(c));
}

BigInt IntPoly::coeff(std::int64_t exponent) const {
    if (is_zero() || exponent < offset_ || exponent > degree()) {
        return 0;
    }
    return coeffs_[static_cast<std::size_t>(exponent - offset_)];
}

void IntPoly::mul_one_minus_q_pow(std::int64_t t) {
    if (is_zero()) {
        return;
    }
    if (t == 0) {
        coeffs_.clear();
        offset_ = 0;
        return;
    }
    if (t < 0) {
        // 1 - q^t = -q^t (1 - q^-t)
        mul_one_minus_q_pow(-t);
        for (auto& c : coeffs_) {
            c = -c;
        }
        offset_ += t;
        return;
    }
    const auto shift = static_cast<std::size_t>(t);
    const std::size_t old = coeffs_.size();
    coeffs_.resize(old + shift);
    for (std::size_t i = old + shift; i-- > shift;) {
        coeffs_[i] -= coeffs_[i - shift];
    }
    normalize();
}

IntPoly IntPoly::stripped() const {
    IntPoly out = *this;
    out.offset_ = 0;
    return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (rhs.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        return *this = rhs;
    }
    const std::int64_t lo = std::min(offset_, rhs.offset_);
    const std::int64_t hi = std::max(degree(), rhs.degree());
    if (lo < offset_) {
        coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(offset_ - lo), BigInt(0));
        offset_ = lo;
    }
    coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
    const auto base = static_cast<std::size_t>(rhs.offset_ - lo);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[base + i] += rhs.coeffs_[i];
    }
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) { return *this += -rhs; }

IntPoly IntPoly::operator-() const {
    IntPoly out = *this;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

IntPoly& IntPoly::operator*=(const BigInt& c) {
    if (c == 0) {
        coeffs_.clear();
        offset_ = 0;
        return *this;
    }
    for (auto& x : coeffs_) {
        x *= c;
    }
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<BigInt> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return IntPoly(a.offset_ + b.offset_, std::move(out));
}

BigInt IntPoly::content() const {
    BigInt g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) {
        return {};
    }
    BigInt g = content();
    if (leading() < 0) {
        g = -g;
    }
    return divided_exactly(g);
}

IntPoly IntPoly::divided_exactly(const BigInt& c) const {
    IntPoly out = *this;
    for (auto& x : out.coeffs_) {
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    }
    return out;
}

std::optional<IntPoly> IntPoly::quotient_by_monic(const IntPoly& divisor) const {
    if (divisor.is_zero() || divisor.leading() != 1) {
        throw std::invalid_argument("quotient_by_monic: divisor must be monic");
    }
    if (is_zero()) {
        return IntPoly{};
    }
    const std::size_t dn = divisor.size() - 1;
    if (size() - 1 < dn) {
        return std::nullopt;
    }
    std::vector<BigInt> rem = coeffs_;
    std::vector<BigInt> quot(size() - dn);
    const auto& dv = divisor.coeffs_;
    for (std::size_t i = quot.size(); i-- > 0;) {
        const BigInt c = rem[i + dn];
        quot[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < dn; ++j) {
            if (dv[j] != 0) {
                rem[i + j] -= c * dv[j];
            }
        }
    }
    for (std::size_t j = 0; j < dn; ++j) {
        if (rem[j] != 0) {
            return std::nullopt;
        }
    }
    return IntPoly(offset_ - divisor.offset_, std::move(quot));
}

std::string IntPoly::to_string() const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        const std::int64_t e = offset_ + static_cast<std::int64_t>(i);
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << "*";
        os << "q";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) {
        throw std::domain_error("pseudo_remainder by zero");
    }
    if (a.offset() < 0 || b.offset() < 0) {
        throw std::invalid_argument("pseudo_remainder: ordinary polynomials required");
    }
    if (a.degree() < b.degree() || a.is_zero()) {
        return a;
    }
    // Dense from degree 0.
    std::vector<BigInt> r(static_cast<std::size_t>(a.degree()) + 1);
    for (std::size_t i = 0; i < a.size(); ++i) r[static_cast<std::size_t>(a.offset()) + i] = a.coeffs()[i];
    std::vector<BigInt> bd(static_cast<std::size_t>(b.degree()) + 1);
    for (std::size_t i = 0; i < b.size(); ++i) bd[static_cast<std::size_t>(b.offset()) + i] = b.coeffs()[i];
    const BigInt& lb = bd.back();
    const std::size_t db = bd.size() - 1;
    std::int64_t steps = a.degree() - b.degree() + 1;
    std::size_t top = r.size() - 1;
    while (steps > 0) {
        // r <- lb * r - r[top] * q^(top-db) * b
        const BigInt c = r[top];
        for (auto& x : r) x *= lb;
        if (c != 0) {
            const std::size_t sh = top - db;
            for (std::size_t j = 0; j <= db; ++j) {
                r[sh + j] -= c * bd[j];
            }
        }
        --steps;
        if (top == 0) break;
        --top;
        r.resize(top + 1);
    }
    r.resize(std::min(r.size(), db));
    return IntPoly(0, std::move(r));
}

IntPoly subresultant_gcd(IntPoly a, IntPoly b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    a = a.primitive_part();
    b = b.primitive_part();
    BigInt g = 1;
    BigInt h = 1;
    while (true) {
        const std::int64_t delta = a.degree() - b.degree();
        IntPoly r = pseudo_remainder(a, b);
        if (r.is_zero()) {
            return b.primitive_part();
        }
        if (r.degree() == 0) {
            return IntPoly::constant(1);
        }
        a = std::move(b);
        BigInt hpow;
        mpz_pow_ui(hpow.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
        b = r.divided_exactly(g * hpow);
        g = a.leading();
        // h <- g^delta / h^(delta-1)
        BigInt gpow;
        mpz_pow_ui(gpow.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
        if (delta == 0) {
            // h unchanged
        } else {
            BigInt hd;
            mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), gpow.get_mpz_t(), hd.get_mpz_t());
        }
    }
}

}  // namespace qcong
