#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qcong/int_poly.hpp"
#include "qcong/rational.hpp"

namespace qcong {

/// Laurent polynomial in q over the rationals.
///
/// Stored densely from the lowest exponent present (`offset`) upward. The
/// first and last stored coefficients are nonzero; zero is the empty
/// sequence with offset 0. An ordinary polynomial is one with offset >= 0.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(std::int64_t offset, std::vector<Rational> coeffs);
    LaurentPoly(const Rational& c) : LaurentPoly(0, {c}) {}  // NOLINT(google-explicit-constructor)
    LaurentPoly(int c) : LaurentPoly(Rational(c)) {}          // NOLINT(google-explicit-constructor)
    explicit LaurentPoly(const IntPoly& p);

    static LaurentPoly monomial(const Rational& c, std::int64_t exponent) { return LaurentPoly(exponent, {c}); }
    static LaurentPoly q() { return monomial(1, 1); }
    static LaurentPoly q_pow(std::int64_t exponent) { return monomial(1, exponent); }
    /// Builds from ascending coefficients starting at q^0.
    static LaurentPoly from_ascending(std::vector<Rational> coeffs) { return LaurentPoly(0, std::move(coeffs)); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_ordinary() const { return offset_ >= 0; }
    bool is_constant() const { return is_zero() || (offset_ == 0 && coeffs_.size() == 1); }
    std::int64_t offset() const { return offset_; }
    /// Highest exponent present; -1 for zero by convention.
    std::int64_t degree() const {
        return is_zero() ? -1 : offset_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
    }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(std::int64_t exponent) const;
    const Rational& leading() const { return coeffs_.back(); }
    const Rational& trailing() const { return coeffs_.front(); }

    /// Multiplies by q^k.
    LaurentPoly shifted(std::int64_t k) const;
    /// q^-offset * p: an ordinary polynomial with nonzero constant term (or zero).
    LaurentPoly stripped() const { return shifted(-offset_); }
    /// Substitutes q -> q^m for a nonzero integer m.
    LaurentPoly substitute(std::int64_t m) const;
    /// Evaluates at a rational point (nonzero when negative exponents occur).
    Rational evaluate(const Rational& x) const;
    LaurentPoly monic() const;

    /// Splits into an integer polynomial and a positive denominator with
    /// p = ip / den.
    std::pair<IntPoly, BigInt> to_int_poly() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const Rational& c);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
    friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

    LaurentPoly pow(unsigned exponent) const;

    std::string to_string() const;

private:
    void normalize();

    std::int64_t offset_ = 0;
    std::vector<Rational> coeffs_;
};

/// Raised by exact_divide when the divisor leaves a nonzero remainder.
class NotDivisible : public std::runtime_error {
public:
    explicit NotDivisible(LaurentPoly remainder);
    const LaurentPoly& remainder() const { return remainder_; }

private:
    LaurentPoly remainder_;
};

struct DivMod {
    LaurentPoly quotient;
    LaurentPoly remainder;
};

/// Euclidean division of ordinary polynomials over the rationals.
DivMod divmod(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly remainder(const LaurentPoly& a, const LaurentPoly& b);

/// Exact quotient in the Laurent ring (q is a unit): the division is carried
/// out on the stripped polynomials and the offsets are subtracted. Throws
/// NotDivisible carrying the remainder of the stripped division.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

/// Monic gcd with nonzero constant term, i.e. the gcd in the Laurent ring
/// normalized to an ordinary monic polynomial. gcd(0, 0) is 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace qcong
