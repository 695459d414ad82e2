#pragma once

#include <cstdint>
#include <vector>

#include "qcong/laurent_poly.hpp"
#include "qcong/quotient.hpp"
#include "qcong/ratfun.hpp"

namespace qcong {

// Elementary number theory used throughout.
std::vector<int> divisors(int n);
int euler_phi(int n);
bool is_prime(long n);

/// n-th cyclotomic polynomial Phi_n(q), memoized process-wide.
const LaurentPoly& cyclotomic(int n);

/// [n] = 1 + q + ... + q^(n-1).
LaurentPoly q_integer(int n);

/// Builds Phi_n^e, [n], [n]*Phi_n or [n]^2 for the label.
ModulusRef make_modulus(const ModulusLabel& label);

/// One factor (a^a_exp q^q_exp ; q^step)_k raised to `multiplicity`.
struct PochFactor {
    int a_exp = 0;
    std::int64_t q_exp = 0;
    int step = 1;
    int multiplicity = 1;

    /// The base factor 1 - a^a_exp q^(q_exp + j*step) for the j-th index.
    std::int64_t q_exponent_at(std::int64_t j) const { return q_exp + j * step; }
    friend auto operator<=>(const PochFactor&, const PochFactor&) = default;
};

/// Laurent polynomial in the parameter a whose coefficients are rational
/// functions of q: sum_i coeffs[i] * a^(a_offset + i).
class AParamPoly {
public:
    AParamPoly() = default;
    AParamPoly(std::int64_t a_offset, std::vector<RatFun> coeffs);
    AParamPoly(RatFun c) : AParamPoly(0, {std::move(c)}) {}  // NOLINT(google-explicit-constructor)

    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t a_offset() const { return a_offset_; }
    std::int64_t a_degree() const { return a_offset_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }
    const std::vector<RatFun>& coeffs() const { return coeffs_; }
    RatFun coeff(std::int64_t a_exponent) const;

    /// Value at a = q^s.
    RatFun specialize(std::int64_t s) const;

    AParamPoly& operator+=(const AParamPoly& rhs);
    friend AParamPoly operator+(AParamPoly x, const AParamPoly& y) { return x += y; }
    friend AParamPoly operator*(const AParamPoly& x, const AParamPoly& y);
    friend bool operator==(const AParamPoly&, const AParamPoly&) = default;

private:
    void normalize();

    std::int64_t a_offset_ = 0;
    std::vector<RatFun> coeffs_;
};

/// (q^q_exp ; q^step)_k as a Laurent polynomial in q.
LaurentPoly q_shifted_factorial(std::int64_t q_exp, int step, std::int64_t k);

/// prod_{j<k} (1 - a^a_exp q^(q_exp + j*step)), raised to f.multiplicity.
AParamPoly q_pochhammer(const PochFactor& f, std::int64_t k);

/// Gaussian binomial [n choose k] in q^base_step; zero when k < 0 or k > n.
LaurentPoly q_binomial(std::int64_t n, std::int64_t k, int base_step = 1);

/// Whether sum_{k=0}^{n} (-1)^k [n choose k] q^(C(n-k,2) + j*k) is identically
/// zero. Requires n >= 1 and 0 <= j <= n-1.
bool qbino_identity_check(int n, int j);

}  // namespace qcong
