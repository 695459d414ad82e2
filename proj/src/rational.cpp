#include "qcong/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace qcong {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw std::domain_error("division by zero");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    mpq_class v;
    if (v.set_str(text, 10) != 0) {
        throw std::invalid_argument("not a rational number: '" + text + "'");
    }
    if (v.get_den() == 0) {
        throw std::domain_error("division by zero");
    }
    v.canonicalize();
    return Rational(std::move(v));
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::reciprocal() const {
    if (is_zero()) {
        throw std::domain_error("division by zero");
    }
    return Rational(mpq_class(1 / value_));
}

Rational Rational::pow(std::int64_t exponent) const {
    if (exponent < 0) {
        return reciprocal().pow(-exponent);
    }
    Rational result(1);
    Rational base = *this;
    while (exponent > 0) {
        if (exponent & 1) {
            result *= base;
        }
        base *= base;
        exponent >>= 1;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

}  // namespace qcong
