#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcong/qfun.hpp"
#include "qcong/quotient.hpp"
#include "qcong/ratfun.hpp"

namespace qcong {

enum class TruncationKind {
    FullRange,  // k = 0 .. n-1
    Half,       // k = 0 .. (n+1)/2
    Expr,       // k = 0 .. (d*n - n - r)/d
};

/// Upper summation index as a function of n.
struct Truncation {
    TruncationKind kind = TruncationKind::FullRange;
    int d = 0;
    int r = 0;

    static Truncation full_range() { return {}; }
    static Truncation half() { return {TruncationKind::Half, 0, 0}; }
    static Truncation upto_expr(int d, int r) { return {TruncationKind::Expr, d, r}; }

    /// Last summation index for this n; throws std::domain_error when the rule
    /// does not give a nonnegative integer.
    std::int64_t bound(int n) const;
    std::string to_string() const;
    friend bool operator==(const Truncation&, const Truncation&) = default;
};

/// Symbolic truncated sum
///   sum_{k=0}^{T(n)} q^(c*k) prod_num (a^e q^r; q^d)_k^mult / prod_den (...)_k^mult.
/// Factors are kept sorted with equal factors merged, so two specs describing
/// the same sum compare equal.
class SeriesSpec {
public:
    SeriesSpec(int step, std::vector<PochFactor> numerator, std::vector<PochFactor> denominator,
               std::int64_t term_q_power, Truncation truncation);

    int step() const { return step_; }
    const std::vector<PochFactor>& numerator() const { return numerator_; }
    const std::vector<PochFactor>& denominator() const { return denominator_; }
    std::int64_t term_q_power() const { return term_q_power_; }
    const Truncation& truncation() const { return truncation_; }

    bool has_a_dependence() const;
    /// Substitutes a = q^s into every factor.
    SeriesSpec specialized(std::int64_t s) const;
    SeriesSpec with_truncation(Truncation t) const;

    std::string to_string() const;
    friend bool operator==(const SeriesSpec&, const SeriesSpec&) = default;

private:
    int step_;
    std::vector<PochFactor> numerator_;
    std::vector<PochFactor> denominator_;
    std::int64_t term_q_power_;
    Truncation truncation_;
};

// Family constructors. All throw std::invalid_argument on violated
// preconditions.

/// sum (q^r;q^d)_k^d q^(dk) / (q^d;q^d)_k^d, requires d >= 2, r <= d-2, gcd(r,d) = 1.
SeriesSpec family_main(int d, int r);
/// The a-decorated companion of family_main; reduces to it at a = 1.
SeriesSpec family_parametric(int d, int r);

/// a-exponents attached to the three numerator and three denominator factors.
struct TripleAExponents {
    std::array<int, 3> numerator{};
    std::array<int, 3> denominator{};
};
/// (q^e1, q^e2, q^e3; q^step)_k q^(step k) / (q^step;q^step)_k^3, step in {6, 9}.
SeriesSpec family_triple(int step, std::span<const int> exponents,
                         const std::optional<TripleAExponents>& a_exponents = std::nullopt);
/// sign +1: (q^m, q^r, q^(2m-r); q^3m)_k; sign -1: (q^-m, q^r, q^(-2m-r); q^3m)_k.
SeriesSpec family_conj56(int m, int r, int sign);
/// sum (q;q^2)_k^2 / (q^2;q^2)_k^2 over k <= n-1.
SeriesSpec family_gz();

/// Parameters a family constructor may consume.
struct FamilyParams {
    std::optional<int> d;
    std::optional<int> r;
    std::optional<int> m;
};

struct FamilyEntry {
    std::string id;
    std::string description;
    bool uses_d = false;
    bool uses_r = false;
    bool uses_m = false;
    /// Allowed r values when the family only exists for a fixed list.
    std::vector<int> r_choices;
    std::function<SeriesSpec(const FamilyParams&)> build;
};

/// Named catalog of every sum family; ids are unique.
const std::map<std::string, FamilyEntry>& family_catalog();
const FamilyEntry& find_family(const std::string& id);

/// The k-th summand (no truncation applied). a_power gives a = q^s.
RatFun term_exact(const SeriesSpec& spec, std::int64_t k, std::optional<std::int64_t> a_power = std::nullopt);

/// Exact value of the truncated sum as a canonical rational function.
RatFun sum_exact(const SeriesSpec& spec, int n, std::optional<std::int64_t> a_power = std::nullopt);

/// Value of the truncated sum in Q[q]/(m), computed term by term with modular
/// inverses. Throws NotAUnit when a denominator factor meets the modulus.
QuotientElem sum_quotient(const SeriesSpec& spec, int n, const ModulusRef& m);

}  // namespace qcong
