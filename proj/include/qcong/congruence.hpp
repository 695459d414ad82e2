#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "qcong/quotient.hpp"
#include "qcong/ratfun.hpp"
#include "qcong/series.hpp"

namespace qcong {

enum class Verdict { Pass, Fail, NotApplicable };
enum class Engine { Exact, Quotient, Both };

std::string to_string(Verdict v);
std::string to_string(Engine e);
Engine parse_engine(const std::string& text);

struct InstanceParams {
    std::optional<int> d;
    std::optional<int> r;
    std::optional<int> m;
    int n = 0;
    std::string truncation;
};

/// Outcome of one divisibility verdict.
///
/// verdict == Fail always carries a nonzero witness; verdict == Pass means the
/// reduced value is exactly zero.
struct CongruenceReport {
    std::string family;
    InstanceParams params;
    std::string modulus_label;
    Verdict verdict = Verdict::NotApplicable;
    std::optional<LaurentPoly> witness;
    std::chrono::duration<double, std::milli> elapsed{0};
    Engine engine = Engine::Exact;
    bool conjecture = false;
    /// Power M of the global q^M factor that cleared negative exponents from
    /// the numerator before the exact divisibility test.
    std::int64_t q_shift = 0;
    std::string note;
};

/// Default engine for a modulus: quotient ring for Phi_n^e, exact otherwise.
Engine default_engine(const ModulusLabel& label);

/// Decides whether the canonical rational function x vanishes modulo m.poly():
/// the q-cleared numerator must be divisible and the denominator coprime.
/// Fills verdict, witness, q_shift and note.
void decide_exact(const RatFun& x, const Modulus& m, CongruenceReport& report);

/// Builds the modulus for `label`, evaluates the sum with the requested
/// engine (default_engine when unset) and records the verdict. A quotient
/// run whose term denominators are not units falls back to the exact engine
/// and says so in the note. Engine::Both runs both and throws
/// std::logic_error if they disagree.
CongruenceReport check_divisibility(const SeriesSpec& spec, int n, const ModulusLabel& label,
                                    std::optional<Engine> engine = std::nullopt);

/// True iff the a-parametric sum vanishes at both a = q^n and a = q^-n, i.e.
/// is divisible by (1 - a q^n)(a - q^n).
bool parametric_vanishes(const SeriesSpec& spec, int n);

/// sum_{k<p} C(2k,k)^2 / 16^k == (-1)^((p-1)/2) (mod p^2) for an odd prime p.
bool padic_rv_check(long p);

/// sum_{k<n} (q;q^2)_k^2/(q^2;q^2)_k^2 == (-1)^((n-1)/2) q^((1-n^2)/4) modulo
/// Phi_n(q)^2, and modulo [n]^2 as well when n is prime. n odd, n >= 3.
bool gz_rv_check(int n);

/// Least nonnegative residue of x modulo n; the denominator must be coprime to n.
long residue_mod(const Rational& x, long n);

}  // namespace qcong
