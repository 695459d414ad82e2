#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcong/rational.hpp"

namespace qcong {

/// Laurent polynomial in q with arbitrary-precision integer coefficients.
///
/// Working type for the integer kernels: fraction-free gcd, Horner-style
/// accumulation of series, trial division by cyclotomic factors. Same dense
/// layout as LaurentPoly (offset plus coefficients, no zero at either end).
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::int64_t offset, std::vector<BigInt> coeffs);

    static IntPoly constant(const BigInt& c) { return IntPoly(0, {c}); }
    static IntPoly monomial(const BigInt& c, std::int64_t exponent) { return IntPoly(exponent, {c}); }
    /// 1 - q^t; zero when t == 0.
    static IntPoly one_minus_q_pow(std::int64_t t);

    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t offset() const { return offset_; }
    std::int64_t degree() const { return offset_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }
    std::size_t size() const { return coeffs_.size(); }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    const BigInt& leading() const { return coeffs_.back(); }
    const BigInt& trailing() const { return coeffs_.front(); }
    BigInt coeff(std::int64_t exponent) const;

    /// In-place multiplication by (1 - q^t).
    void mul_one_minus_q_pow(std::int64_t t);
    void shift(std::int64_t k) {
        if (!is_zero()) offset_ += k;
    }
    /// The same polynomial with offset 0 (i.e. multiplied by q^-offset).
    IntPoly stripped() const;

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly operator-() const;
    IntPoly& operator*=(const BigInt& c);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

    BigInt content() const;
    IntPoly primitive_part() const;
    /// Divides every coefficient by c, which must divide each exactly.
    IntPoly divided_exactly(const BigInt& c) const;

    /// Quotient by a monic divisor with nonzero constant term, treating q as a
    /// unit; nullopt when the division leaves a remainder.
    std::optional<IntPoly> quotient_by_monic(const IntPoly& divisor) const;

    std::string to_string() const;

private:
    void normalize();

    std::int64_t offset_ = 0;
    std::vector<BigInt> coeffs_;
};

/// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b of ordinary polynomials.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Primitive gcd with positive leading coefficient via the subresultant PRS.
/// Inputs must be ordinary polynomials (offset 0 after stripping is the
/// caller's business).
IntPoly subresultant_gcd(IntPoly a, IntPoly b);

}  // namespace qcong
