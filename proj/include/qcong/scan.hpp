#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcong/congruence.hpp"
#include "qcong/series.hpp"

namespace qcong {

/// Bad request: unknown family, malformed range, missing parameter.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Inclusive integer interval, parsed from "7" or "2..20".
struct IntRange {
    int lo = 0;
    int hi = -1;

    static IntRange single(int v) { return {v, v}; }
    static IntRange parse(const std::string& text);
    bool empty() const { return hi < lo; }
};

/// How the driver treats one catalog family.
struct FamilyRule {
    ModulusKind modulus = ModulusKind::PhiPow;
    int modulus_exponent = 2;
    bool conjecture = false;
    /// Verified through parametric_vanishes rather than a modulus.
    bool parametric = false;
    /// Residue-class and size conditions on n under which the statement is made.
    std::function<bool(const FamilyParams&, int n)> admissible;
};

/// Driver rule for a catalog id; throws UsageError for unknown ids.
const FamilyRule& family_rule(const std::string& id);

struct ScanRequest {
    std::string family;
    std::optional<IntRange> d;
    std::optional<IntRange> r;
    std::optional<IntRange> m;
    IntRange n{2, 2};
    /// Overrides the family's default modulus when set.
    std::optional<ModulusKind> modulus;
    int modulus_exponent = 2;
    std::optional<Engine> engine;
    int parallelism = 1;
    bool force_inadmissible = false;
    bool verbose = false;
};

/// Theorem families: one report per admissible instance, sorted by (d, r, m, n).
std::vector<CongruenceReport> run_verify(const ScanRequest& request);
/// Conjecture families: as run_verify, reports flagged as conjecture.
std::vector<CongruenceReport> run_conjecture_scan(const ScanRequest& request);

/// 0 when nothing failed, 1 when some report failed.
int exit_status(const std::vector<CongruenceReport>& reports);

/// JSON object for one report. elapsed_ms is null when include_timing is false
/// so report files can be compared byte for byte.
nlohmann::json report_to_json(const CongruenceReport& report, bool include_timing = true);
std::string to_json_lines(const std::vector<CongruenceReport>& reports, bool include_timing = true);

/// Human-readable per-family summary (plus witness details for failures).
std::string summary_table(const std::vector<CongruenceReport>& reports);

struct IdentityResult {
    std::string identity;
    int n = 0;
    int j = 0;  // j for qbino, m for the substitution identity, unused otherwise
    bool holds = false;
};

/// Runs one identity suite: "qbino", "cyclotomic-product", "qint-product",
/// "phi-substitution", or "all".
std::vector<IdentityResult> run_identities(const std::string& kind, int n_max, int m_max);
nlohmann::json identity_to_json(const IdentityResult& result);

struct ClassicResult {
    std::string check;
    long value = 0;
    bool holds = false;
};

/// "padic" over the odd primes in [lo, hi] or "gz" over the odd n in [lo, hi].
std::vector<ClassicResult> run_classic(const std::string& check, IntRange range);
nlohmann::json classic_to_json(const ClassicResult& result);

}  // namespace qcong
