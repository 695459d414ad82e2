#pragma once

#include <iosfwd>
#include <string>

#include "qcong/laurent_poly.hpp"

namespace qcong {

/// Rational function num/den in q, kept in canonical form:
///   * den is an ordinary monic polynomial with nonzero constant term
///     (any power of q lives in the offset of num),
///   * gcd(q^-offset(num) * num, den) = 1,
///   * zero is 0/1.
/// Equal functions therefore have identical fields.
class RatFun {
public:
    RatFun() : den_(1) {}
    RatFun(LaurentPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
    RatFun(const Rational& c) : RatFun(LaurentPoly(c)) {}   // NOLINT(google-explicit-constructor)
    RatFun(int c) : RatFun(LaurentPoly(c)) {}               // NOLINT(google-explicit-constructor)
    /// Normalizes num/den; throws std::domain_error on a zero denominator.
    RatFun(const LaurentPoly& num, const LaurentPoly& den);

    /// Adopts parts that the caller guarantees are already coprime. The cheap
    /// invariants (monic, nonzero constant term, ordinary den) are still
    /// checked.
    static RatFun from_coprime_parts(LaurentPoly num, LaurentPoly den);

    const LaurentPoly& numerator() const { return num_; }
    const LaurentPoly& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RatFun inverse() const;
    RatFun operator-() const;
    RatFun& operator+=(const RatFun& rhs);
    RatFun& operator-=(const RatFun& rhs);
    RatFun& operator*=(const RatFun& rhs);
    RatFun& operator/=(const RatFun& rhs);
    friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
    friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
    friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
    friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
    friend bool operator==(const RatFun& a, const RatFun& b) = default;

    /// Substitutes q -> q^m (m != 0).
    RatFun substitute(std::int64_t m) const;

    std::string to_string() const;

private:
    LaurentPoly num_;
    LaurentPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFun& f);

}  // namespace qcong
