#include "qcong/quotient.hpp"

namespace qcong {

std::string ModulusLabel::to_string() const {
    switch (kind) {
        case ModulusKind::PhiPow:
            return "phi_pow(" + std::to_string(n) + "," + std::to_string(exponent) + ")";
        case ModulusKind::QInt:
            return "qint(" + std::to_string(n) + ")";
        case ModulusKind::QIntPhi:
            return "qint_phi(" + std::to_string(n) + ")";
        case ModulusKind::QIntSq:
            return "qint_sq(" + std::to_string(n) + ")";
    }
    return "?";
}

Modulus::Modulus(LaurentPoly poly, ModulusLabel label) : poly_(std::move(poly)), label_(label) {
    if (poly_.is_zero() || !poly_.is_ordinary() || poly_.degree() < 1) {
        throw std::invalid_argument("modulus must be an ordinary polynomial of degree >= 1");
    }
    if (poly_.offset() == 0) {
        // m = c0 + q*rest  =>  q * (-rest/c0) == 1
        const Rational c0 = poly_.trailing();
        LaurentPoly rest = (poly_ - LaurentPoly(c0)).shifted(-1);
        q_inverse_ = rest * (-c0.reciprocal());
    }
}

NotAUnit::NotAUnit(LaurentPoly common_factor)
    : std::runtime_error("denominator not a unit: shares factor " + common_factor.to_string() + " with modulus"),
      common_(std::move(common_factor)) {}

LaurentPoly reduce_mod(const LaurentPoly& x, const Modulus& m) {
    if (x.is_zero()) {
        return {};
    }
    if (x.offset() >= 0) {
        return remainder(x, m.poly());
    }
    if (!m.q_inverse()) {
        throw NotAUnit(LaurentPoly::q());
    }
    LaurentPoly acc = remainder(x.stripped(), m.poly());
    for (std::int64_t i = 0; i < -x.offset(); ++i) {
        acc = remainder(acc * *m.q_inverse(), m.poly());
    }
    return acc;
}

LaurentPoly inverse_mod(const LaurentPoly& x, const LaurentPoly& poly) {
    LaurentPoly r0 = poly;
    LaurentPoly r1 = remainder(x, poly);
    LaurentPoly s0;
    LaurentPoly s1(1);
    while (!r1.is_zero()) {
        auto [quot, rem] = divmod(r0, r1);
        LaurentPoly s2 = s0 - quot * s1;
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.degree() > 0) {
        throw NotAUnit(r0.monic());
    }
    return remainder(s0 * r0.leading().reciprocal(), poly);
}

QuotientElem::QuotientElem(ModulusRef modulus, const LaurentPoly& value)
    : modulus_(std::move(modulus)), residue_(reduce_mod(value, *modulus_)) {}

void QuotientElem::check_same(const QuotientElem& rhs) const {
    if (modulus_ != rhs.modulus_ && modulus_->poly() != rhs.modulus_->poly()) {
        throw std::invalid_argument("quotient elements over different moduli");
    }
}

QuotientElem QuotientElem::inverse() const {
    return QuotientElem(modulus_, inverse_mod(residue_, modulus_->poly()), true);
}

QuotientElem& QuotientElem::operator+=(const QuotientElem& rhs) {
    check_same(rhs);
    residue_ += rhs.residue_;
    return *this;
}

QuotientElem& QuotientElem::operator-=(const QuotientElem& rhs) {
    check_same(rhs);
    residue_ -= rhs.residue_;
    return *this;
}

QuotientElem& QuotientElem::operator*=(const QuotientElem& rhs) {
    check_same(rhs);
    residue_ = remainder(residue_ * rhs.residue_, modulus_->poly());
    return *this;
}

bool operator==(const QuotientElem& a, const QuotientElem& b) {
    return a.modulus_->poly() == b.modulus_->poly() && a.residue_ == b.residue_;
}

QuotientElem quotient_project(const RatFun& x, const ModulusRef& m) {
    if (x.is_zero()) {
        return QuotientElem::zero(m);
    }
    const LaurentPoly den_inv = inverse_mod(x.denominator(), m->poly());
    QuotientElem num(m, x.numerator());
    return num * QuotientElem(m, den_inv);
}

}  // namespace qcong
