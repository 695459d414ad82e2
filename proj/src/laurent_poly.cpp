#include "qcong/laurent_poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace qcong {

LaurentPoly::LaurentPoly(std::int64_t offset, std::vector<Rational> coeffs)
    : offset_(offset), coeffs_(std::move(coeffs)) {
    normalize();
}

LaurentPoly::LaurentPoly(const IntPoly& p) : offset_(p.offset()) {
    coeffs_.reserve(p.size());
    for (const auto& c : p.coeffs()) {
        coeffs_.emplace_back(c);
    }
    normalize();
}

void LaurentPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) {
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

Rational LaurentPoly::coeff(std::int64_t exponent) const {
    if (is_zero() || exponent < offset_ || exponent > degree()) {
        return 0;
    }
    return coeffs_[static_cast<std::size_t>(exponent - offset_)];
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const {
    LaurentPoly out = *this;
    if (!out.is_zero()) {
        out.offset_ += k;
    }
    return out;
}

LaurentPoly LaurentPoly::substitute(std::int64_t m) const {
    if (m == 0) {
        throw std::invalid_argument("substitute: exponent multiplier must be nonzero");
    }
    if (is_zero()) {
        return {};
    }
    const auto stride = static_cast<std::size_t>(m > 0 ? m : -m);
    std::vector<Rational> out((coeffs_.size() - 1) * stride + 1);
    if (m > 0) {
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * stride] = coeffs_[i];
        return LaurentPoly(offset_ * m, std::move(out));
    }
    // Exponent e maps to m*e; the highest source exponent becomes the lowest.
    const std::size_t last = coeffs_.size() - 1;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[(last - i) * stride] = coeffs_[i];
    return LaurentPoly(degree() * m, std::move(out));
}

Rational LaurentPoly::evaluate(const Rational& x) const {
    if (is_zero()) {
        return 0;
    }
    Rational acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc *= x;
        acc += coeffs_[i];
    }
    return acc * x.pow(offset_);
}

LaurentPoly LaurentPoly::monic() const {
    if (is_zero()) {
        return {};
    }
    return *this * leading().reciprocal();
}

std::pair<IntPoly, BigInt> LaurentPoly::to_int_poly() const {
    BigInt den = 1;
    for (const auto& c : coeffs_) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.raw().get_den_mpz_t());
    }
    std::vector<BigInt> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        BigInt v = den / c.denominator();
        v *= c.numerator();
        out.push_back(std::move(v));
    }
    return {IntPoly(offset_, std::move(out)), den};
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    if (rhs.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        return *this = rhs;
    }
    const std::int64_t lo = std::min(offset_, rhs.offset_);
    const std::int64_t hi = std::max(degree(), rhs.degree());
    if (lo < offset_) {
        coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(offset_ - lo), Rational(0));
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

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        return *this = LaurentPoly{};
    }
    for (auto& x : coeffs_) {
        x *= c;
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    // Integer kernel after clearing denominators; much cheaper than mpq products.
    auto [ia, da] = a.to_int_poly();
    auto [ib, db] = b.to_int_poly();
    const IntPoly prod = ia * ib;
    const BigInt den = da * db;
    std::vector<Rational> out;
    out.reserve(prod.size());
    for (const auto& c : prod.coeffs()) {
        out.emplace_back(c, den);
    }
    return LaurentPoly(prod.offset(), std::move(out));
}

LaurentPoly LaurentPoly::pow(unsigned exponent) const {
    LaurentPoly result(1);
    LaurentPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        const std::int64_t e = offset_ + static_cast<std::int64_t>(i);
        const Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (!mag.is_one()) os << mag << "*";
        os << "q";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

NotDivisible::NotDivisible(LaurentPoly remainder)
    : std::runtime_error("not divisible: remainder " + remainder.to_string()), remainder_(std::move(remainder)) {}

DivMod divmod(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) {
        throw std::domain_error("division by zero polynomial");
    }
    if (!a.is_ordinary() || !b.is_ordinary()) {
        throw std::invalid_argument("divmod: ordinary polynomials required");
    }
    if (a.degree() < b.degree()) {
        return {LaurentPoly{}, a};
    }
    const auto db = static_cast<std::size_t>(b.degree());
    std::vector<Rational> rem(static_cast<std::size_t>(a.degree()) + 1);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        rem[static_cast<std::size_t>(a.offset()) + i] = a.coeffs()[i];
    }
    std::vector<Rational> bd(db + 1);
    for (std::size_t i = 0; i < b.coeffs().size(); ++i) {
        bd[static_cast<std::size_t>(b.offset()) + i] = b.coeffs()[i];
    }
    const Rational inv_lead = bd.back().reciprocal();
    std::vector<Rational> quot(rem.size() - db);
    for (std::size_t i = quot.size(); i-- > 0;) {
        if (rem[i + db].is_zero()) continue;
        const Rational c = rem[i + db] * inv_lead;
        quot[i] = c;
        for (std::size_t j = 0; j <= db; ++j) {
            if (!bd[j].is_zero()) rem[i + j] -= c * bd[j];
        }
    }
    rem.resize(db);
    return {LaurentPoly(0, std::move(quot)), LaurentPoly(0, std::move(rem))};
}

LaurentPoly remainder(const LaurentPoly& a, const LaurentPoly& b) { return divmod(a, b).remainder; }

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) {
        throw std::domain_error("division by zero polynomial");
    }
    if (a.is_zero()) {
        return {};
    }
    auto [quot, rem] = divmod(a.stripped(), b.stripped());
    if (!rem.is_zero()) {
        throw NotDivisible(std::move(rem));
    }
    return quot.shifted(a.offset() - b.offset());
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) {
        return {};
    }
    if (a.is_zero()) return b.stripped().monic();
    if (b.is_zero()) return a.stripped().monic();
    const IntPoly ia = a.stripped().to_int_poly().first;
    const IntPoly ib = b.stripped().to_int_poly().first;
    return LaurentPoly(subresultant_gcd(ia, ib)).monic();
}

}  // namespace qcong
