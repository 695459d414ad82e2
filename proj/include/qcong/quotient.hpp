#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include "qcong/laurent_poly.hpp"
#include "qcong/ratfun.hpp"

namespace qcong {

enum class ModulusKind { PhiPow, QInt, QIntPhi, QIntSq };

/// Which of the moduli Phi_n^e, [n], [n]*Phi_n, [n]^2 a polynomial stands for.
struct ModulusLabel {
    ModulusKind kind = ModulusKind::PhiPow;
    int n = 2;
    int exponent = 1;  // only meaningful for PhiPow

    static ModulusLabel phi_pow(int n, int e) { return {ModulusKind::PhiPow, n, e}; }
    static ModulusLabel qint(int n) { return {ModulusKind::QInt, n, 1}; }
    static ModulusLabel qint_phi(int n) { return {ModulusKind::QIntPhi, n, 1}; }
    static ModulusLabel qint_sq(int n) { return {ModulusKind::QIntSq, n, 1}; }

    /// e.g. "phi_pow(5,2)", "qint_phi(7)".
    std::string to_string() const;
    friend bool operator==(const ModulusLabel&, const ModulusLabel&) = default;
};

/// A nonconstant ordinary polynomial used as the modulus of Q[q]/(poly).
class Modulus {
public:
    Modulus(LaurentPoly poly, ModulusLabel label);

    const LaurentPoly& poly() const { return poly_; }
    const ModulusLabel& label() const { return label_; }
    std::int64_t degree() const { return poly_.degree(); }
    /// Residue of q^-1, present when the constant term is nonzero.
    const std::optional<LaurentPoly>& q_inverse() const { return q_inverse_; }

private:
    LaurentPoly poly_;
    ModulusLabel label_;
    std::optional<LaurentPoly> q_inverse_;
};

using ModulusRef = std::shared_ptr<const Modulus>;

/// Raised when an element that must be inverted shares a factor with the
/// modulus. Carries that common factor.
class NotAUnit : public std::runtime_error {
public:
    explicit NotAUnit(LaurentPoly common_factor);
    const LaurentPoly& common_factor() const { return common_; }

private:
    LaurentPoly common_;
};

/// Element of Q[q]/(m): a reduced residue (degree below deg m) plus its modulus.
class QuotientElem {
public:
    QuotientElem(ModulusRef modulus, const LaurentPoly& value);
    static QuotientElem zero(ModulusRef modulus) { return {std::move(modulus), LaurentPoly{}}; }
    static QuotientElem one(ModulusRef modulus) { return {std::move(modulus), LaurentPoly(1)}; }

    const LaurentPoly& residue() const { return residue_; }
    const ModulusRef& modulus() const { return modulus_; }
    bool is_zero() const { return residue_.is_zero(); }

    QuotientElem inverse() const;
    QuotientElem& operator+=(const QuotientElem& rhs);
    QuotientElem& operator-=(const QuotientElem& rhs);
    QuotientElem& operator*=(const QuotientElem& rhs);
    friend QuotientElem operator+(QuotientElem a, const QuotientElem& b) { return a += b; }
    friend QuotientElem operator-(QuotientElem a, const QuotientElem& b) { return a -= b; }
    friend QuotientElem operator*(QuotientElem a, const QuotientElem& b) { return a *= b; }
    /// Equal residues over the same modulus polynomial.
    friend bool operator==(const QuotientElem& a, const QuotientElem& b);

private:
    QuotientElem(ModulusRef modulus, LaurentPoly residue, bool /*reduced*/)
        : modulus_(std::move(modulus)), residue_(std::move(residue)) {}
    void check_same(const QuotientElem& rhs) const;

    ModulusRef modulus_;
    LaurentPoly residue_;
};

/// Reduces a Laurent polynomial modulo m (q^-1 handled through its inverse).
LaurentPoly reduce_mod(const LaurentPoly& x, const Modulus& m);

/// Inverse of x modulo poly by the extended Euclidean algorithm; throws
/// NotAUnit when gcd(x, poly) is not constant.
LaurentPoly inverse_mod(const LaurentPoly& x, const LaurentPoly& poly);

/// num(x) * den(x)^-1 reduced modulo m.
QuotientElem quotient_project(const RatFun& x, const ModulusRef& m);

}  // namespace qcong
