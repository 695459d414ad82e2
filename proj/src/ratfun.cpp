#include "qcong/ratfun.hpp"

#include <ostream>
#include <stdexcept>

namespace qcong {

RatFun::RatFun(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) {
        throw std::domain_error("division by zero");
    }
    if (num.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    // Move q-power content of den into num's offset.
    LaurentPoly n = num.shifted(-den.offset());
    LaurentPoly d = den.stripped();
    const LaurentPoly g = gcd(n, d);
    if (!g.is_constant()) {
        n = exact_divide(n, g);
        d = exact_divide(d, g);
    }
    const Rational inv_lead = d.leading().reciprocal();
    num_ = n * inv_lead;
    den_ = d * inv_lead;
}

RatFun RatFun::from_coprime_parts(LaurentPoly num, LaurentPoly den) {
    if (den.is_zero() || den.offset() != 0 || !den.leading().is_one()) {
        throw std::invalid_argument("from_coprime_parts: denominator must be monic with nonzero constant term");
    }
    RatFun out;
    if (num.is_zero()) {
        return out;
    }
    out.num_ = std::move(num);
    out.den_ = std::move(den);
    return out;
}

RatFun RatFun::inverse() const {
    if (is_zero()) {
        throw std::domain_error("division by zero");
    }
    return RatFun(den_, num_);
}

RatFun RatFun::operator-() const {
    RatFun out = *this;
    out.num_ = -out.num_;
    return out;
}

RatFun& RatFun::operator+=(const RatFun& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    if (den_ == rhs.den_) {
        return *this = RatFun(num_ + rhs.num_, den_);
    }
    return *this = RatFun(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RatFun& RatFun::operator-=(const RatFun& rhs) { return *this += -rhs; }

RatFun& RatFun::operator*=(const RatFun& rhs) {
    if (is_zero() || rhs.is_zero()) {
        return *this = RatFun();
    }
    return *this = RatFun(num_ * rhs.num_, den_ * rhs.den_);
}

RatFun& RatFun::operator/=(const RatFun& rhs) { return *this *= rhs.inverse(); }

RatFun RatFun::substitute(std::int64_t m) const { return RatFun(num_.substitute(m), den_.substitute(m)); }

std::string RatFun::to_string() const {
    if (is_polynomial()) {
        return num_.to_string();
    }
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFun& f) { return os << f.to_string(); }

}  // namespace qcong
