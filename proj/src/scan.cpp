#include "qcong/scan.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "qcong/qfun.hpp"

namespace qcong {

IntRange IntRange::parse(const std::string& text) {
    auto parse_int = [&text](const std::string& part) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(part, &used);
        } catch (const std::exception&) {
            throw UsageError("malformed integer range '" + text + "'");
        }
        if (used != part.size()) {
            throw UsageError("malformed integer range '" + text + "'");
        }
        return value;
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        return single(parse_int(text));
    }
    IntRange range{parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
    if (range.empty()) {
        throw UsageError("empty integer range '" + text + "'");
    }
    return range;
}

namespace {

int mod(int a, int b) { return ((a % b) + b) % b; }

bool in_classes(int n, int modulus, std::initializer_list<int> classes) {
    return std::find(classes.begin(), classes.end(), mod(n, modulus)) != classes.end();
}

/// 0 < <r/(3m)>_n <= bound_num/3 where bound_num = 2n-1 or 2n-5.
bool conj56_window(int m, int r, int n, int bound_num) {
    if (std::gcd(3 * m, n) != 1) return false;
    const long residue = residue_mod(Rational(r, 3L * m), n);
    return residue > 0 && 3L * residue <= bound_num;
}

FamilyRule theorem(int modulus_exp, std::function<bool(const FamilyParams&, int)> admissible) {
    return {ModulusKind::PhiPow, modulus_exp, false, false, std::move(admissible)};
}

FamilyRule parametric(std::function<bool(const FamilyParams&, int)> admissible) {
    return {ModulusKind::PhiPow, 2, false, true, std::move(admissible)};
}

FamilyRule conjecture(ModulusKind kind, std::function<bool(const FamilyParams&, int)> admissible) {
    return {kind, 2, true, false, std::move(admissible)};
}

bool main_admissible(const FamilyParams& p, int n) {
    const int d = p.d.value_or(0);
    const int r = p.r.value_or(0);
    return d >= 2 && n >= 2 && n >= d - r && mod(n + r, d) == 0;
}

bool odd_above_one(const FamilyParams&, int n) { return n >= 3 && n % 2 == 1; }

std::map<std::string, FamilyRule> build_rules() {
    std::map<std::string, FamilyRule> rules;
    rules["main"] = theorem(2, main_admissible);
    rules["param"] = parametric(main_admissible);
    rules["thm2"] = {ModulusKind::QIntPhi, 1, false, false, odd_above_one};
    rules["thm2-half"] = {ModulusKind::QIntPhi, 1, false, false, odd_above_one};
    rules["conj1"] = conjecture(ModulusKind::QIntSq, odd_above_one);
    rules["conj1-half"] = conjecture(ModulusKind::QIntSq, odd_above_one);

    rules["thm1-a"] = theorem(2, [](const FamilyParams&, int n) { return n >= 2 && mod(n, 6) == 5; });
    rules["thm1-b"] = theorem(2, [](const FamilyParams&, int n) { return n >= 2 && mod(n, 6) == 1; });
    rules["thm1-a-param"] = parametric([](const FamilyParams&, int n) { return n >= 2 && mod(n, 6) == 5; });
    rules["thm1-b-param"] = parametric([](const FamilyParams&, int n) { return n >= 2 && mod(n, 6) == 1; });

    rules["mod9-1"] = theorem(2, [](const FamilyParams&, int n) { return n >= 2 && in_classes(n, 9, {2, 8}); });
    rules["mod9-2"] = theorem(2, [](const FamilyParams&, int n) { return n >= 2 && in_classes(n, 9, {4, 7}); });
    rules["mod9-4"] = theorem(2, [](const FamilyParams&, int n) { return n >= 2 && in_classes(n, 9, {5, 8}); });
    rules["mod9-neg1"] = theorem(2, [](const FamilyParams&, int n) { return n > 9 && in_classes(n, 9, {5}); });
    rules["mod9-neg2"] = theorem(2, [](const FamilyParams&, int n) { return n > 9 && in_classes(n, 9, {2, 5}); });
    rules["mod9-neg4"] = theorem(2, [](const FamilyParams&, int n) { return n > 9 && in_classes(n, 9, {2}); });

    rules["mod9-a5"] = parametric([](const FamilyParams& p, int n) { return n >= 2 && mod(n, 9) == mod(2 * p.r.value_or(0), 9); });
    rules["mod9-a8"] = parametric([](const FamilyParams& p, int n) { return n >= 2 && mod(n, 9) == mod(-p.r.value_or(0), 9); });
    rules["mod9-neg-a7-1"] = parametric([](const FamilyParams&, int n) { return n >= 2 && mod(n, 9) == 5; });
    rules["mod9-neg-a8-2"] = parametric([](const FamilyParams&, int n) { return n > 9 && mod(n, 9) == 2; });
    rules["mod9-neg-a5-2"] = parametric([](const FamilyParams&, int n) { return n > 9 && mod(n, 9) == 5; });
    rules["mod9-neg-a7-4"] = parametric([](const FamilyParams&, int n) { return n > 9 && mod(n, 9) == 2; });

    rules["conj3"] = conjecture(ModulusKind::PhiPow, [](const FamilyParams&, int n) { return n >= 2 && in_classes(n, 9, {4, 7}); });
    rules["conj4"] = conjecture(ModulusKind::PhiPow, [](const FamilyParams&, int n) { return n >= 2 && in_classes(n, 9, {5}); });
    rules["conj5"] = conjecture(ModulusKind::PhiPow, [](const FamilyParams& p, int n) {
        const int m = p.m.value_or(0);
        return n >= 2 && mod(n, 3) == 2 && std::gcd(m, n) == 1 && conj56_window(m, p.r.value_or(0), n, 2 * n - 1);
    });
    rules["conj6"] = conjecture(ModulusKind::PhiPow, [](const FamilyParams& p, int n) {
        const int m = p.m.value_or(0);
        return n > 1 && mod(n, 3) == 1 && std::gcd(m, n) == 1 && conj56_window(m, p.r.value_or(0), n, 2 * n - 5);
    });
    return rules;
}

const std::map<std::string, FamilyRule>& rules() {
    static const std::map<std::string, FamilyRule> table = build_rules();
    return table;
}

struct Instance {
    FamilyParams params;
    int n = 0;
    bool admissible = true;
};

std::vector<std::optional<int>> values_for(bool used, const std::optional<IntRange>& range,
                                           const std::vector<int>& choices, const char* name,
                                           const std::string& family) {
    if (!used) return {std::nullopt};
    std::vector<std::optional<int>> out;
    if (!choices.empty()) {
        for (int c : choices) {
            if (!range || (c >= range->lo && c <= range->hi)) out.emplace_back(c);
        }
        return out;
    }
    if (!range) {
        throw UsageError(std::string("family '") + family + "' requires --" + name);
    }
    for (int v = range->lo; v <= range->hi; ++v) out.emplace_back(v);
    return out;
}

CongruenceReport evaluate(const ScanRequest& request, const FamilyEntry& entry, const FamilyRule& rule,
                          const Instance& inst) {
    CongruenceReport report;
    const auto start = std::chrono::steady_clock::now();
    const SeriesSpec spec = entry.build(inst.params);
    if (!inst.admissible && !request.force_inadmissible) {
        report.verdict = Verdict::NotApplicable;
        report.note = "skipped: n outside the family's residue classes";
        report.params.truncation = spec.truncation().to_string();
        report.modulus_label = rule.parametric ? "a_pair(" + std::to_string(inst.n) + ")"
                                               : ModulusLabel{request.modulus.value_or(rule.modulus), inst.n,
                                                              request.modulus ? request.modulus_exponent
                                                                              : rule.modulus_exponent}
                                                     .to_string();
    } else if (rule.parametric) {
        report.modulus_label = "a_pair(" + std::to_string(inst.n) + ")";
        report.params.truncation = spec.truncation().to_string();
        report.engine = Engine::Exact;
        try {
            const RatFun at_plus = sum_exact(spec, inst.n, inst.n);
            const RatFun at_minus = sum_exact(spec, inst.n, -static_cast<std::int64_t>(inst.n));
            if (at_plus.is_zero() && at_minus.is_zero()) {
                report.verdict = Verdict::Pass;
            } else {
                report.verdict = Verdict::Fail;
                report.witness = at_plus.is_zero() ? at_minus.numerator() : at_plus.numerator();
                report.note = at_plus.is_zero() ? "nonzero at a=q^-n" : "nonzero at a=q^n";
            }
        } catch (const std::domain_error& e) {
            report.verdict = Verdict::NotApplicable;
            report.note = e.what();
        }
    } else {
        const ModulusKind kind = request.modulus.value_or(rule.modulus);
        const int exponent = request.modulus ? request.modulus_exponent : rule.modulus_exponent;
        const ModulusLabel label{kind, inst.n, exponent};
        try {
            report = check_divisibility(spec, inst.n, label, request.engine);
        } catch (const std::domain_error& e) {
            report.verdict = Verdict::NotApplicable;
            report.modulus_label = label.to_string();
            report.params.truncation = spec.truncation().to_string();
            report.note = e.what();
        }
    }
    if (!inst.admissible && request.force_inadmissible) {
        report.note = report.note.empty() ? "forced: inadmissible n" : "forced: inadmissible n; " + report.note;
    }
    report.family = entry.id;
    report.params.d = inst.params.d;
    report.params.r = inst.params.r;
    report.params.m = inst.params.m;
    report.params.n = inst.n;
    report.conjecture = rule.conjecture;
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

std::vector<CongruenceReport> run_family(const ScanRequest& request, bool conjecture_mode) {
    if (request.parallelism < 1) {
        throw UsageError("--jobs must be at least 1");
    }
    if (request.n.empty()) {
        throw UsageError("empty n range");
    }
    auto entry_it = family_catalog().find(request.family);
    if (entry_it == family_catalog().end()) {
        throw UsageError("unknown family '" + request.family + "'");
    }
    const FamilyEntry& entry = entry_it->second;
    const FamilyRule& rule = family_rule(request.family);
    if (rule.conjecture != conjecture_mode) {
        throw UsageError("family '" + request.family + "' is a " + (rule.conjecture ? "conjecture" : "theorem") +
                         " family; use the " + (rule.conjecture ? "scan" : "verify") + " subcommand");
    }
    if (request.modulus && rule.parametric) {
        throw UsageError("parametric families are checked against (1-aq^n)(a-q^n); --modulus does not apply");
    }

    std::vector<Instance> instances;
    for (const auto& d : values_for(entry.uses_d, request.d, {}, "d", entry.id)) {
        for (const auto& r : values_for(entry.uses_r, request.r, entry.r_choices, "r", entry.id)) {
            for (const auto& m : values_for(entry.uses_m, request.m, {}, "m", entry.id)) {
                const FamilyParams params{d, r, m};
                try {
                    (void)entry.build(params);
                } catch (const std::invalid_argument&) {
                    continue;  // (d, r) outside the family's hypotheses
                }
                for (int n = std::max(request.n.lo, 2); n <= request.n.hi; ++n) {
                    const bool admissible = rule.admissible(params, n);
                    if (admissible || request.force_inadmissible || request.verbose) {
                        instances.push_back({params, n, admissible});
                    }
                }
            }
        }
    }

    std::vector<CongruenceReport> reports(instances.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < instances.size(); i = next++) {
            try {
                reports[i] = evaluate(request, entry, rule, instances[i]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        const auto threads = std::min<std::size_t>(static_cast<std::size_t>(request.parallelism), instances.size());
        for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return reports;
}

}  // namespace

const FamilyRule& family_rule(const std::string& id) {
    auto it = rules().find(id);
    if (it == rules().end()) {
        throw UsageError("unknown family '" + id + "'");
    }
    return it->second;
}

std::vector<CongruenceReport> run_verify(const ScanRequest& request) { return run_family(request, false); }

std::vector<CongruenceReport> run_conjecture_scan(const ScanRequest& request) { return run_family(request, true); }

int exit_status(const std::vector<CongruenceReport>& reports) {
    const bool failed = std::any_of(reports.begin(), reports.end(),
                                    [](const CongruenceReport& r) { return r.verdict == Verdict::Fail; });
    return failed ? 1 : 0;
}

namespace {

nlohmann::json optional_int(const std::optional<int>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); }

nlohmann::json witness_to_json(const LaurentPoly& w) {
    nlohmann::json leading = nlohmann::json::array();
    for (std::size_t i = 0; i < std::min<std::size_t>(3, w.coeffs().size()); ++i) {
        leading.push_back(w.coeffs()[w.coeffs().size() - 1 - i].to_string());
    }
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : w.coeffs()) coeffs.push_back(c.to_string());
    return {{"degree", w.degree()},
            {"lowest_exponent", w.offset()},
            {"leading_coefficients", leading},
            {"coefficients", coeffs}};
}

}  // namespace

nlohmann::json report_to_json(const CongruenceReport& report, bool include_timing) {
    nlohmann::json j;
    j["family"] = report.family;
    j["params"] = {{"d", optional_int(report.params.d)},
                   {"r", optional_int(report.params.r)},
                   {"m", optional_int(report.params.m)},
                   {"n", report.params.n},
                   {"truncation", report.params.truncation}};
    j["modulus_label"] = report.modulus_label;
    j["verdict"] = to_string(report.verdict);
    j["witness"] = report.witness ? witness_to_json(*report.witness) : nlohmann::json(nullptr);
    j["elapsed_ms"] = include_timing ? nlohmann::json(report.elapsed.count()) : nlohmann::json(nullptr);
    j["engine"] = to_string(report.engine);
    j["conjecture"] = report.conjecture;
    j["q_shift"] = report.q_shift;
    j["note"] = report.note;
    return j;
}

std::string to_json_lines(const std::vector<CongruenceReport>& reports, bool include_timing) {
    std::string out;
    for (const auto& r : reports) {
        out += report_to_json(r, include_timing).dump();
        out += '\n';
    }
    return out;
}

std::string summary_table(const std::vector<CongruenceReport>& reports) {
    struct Tally {
        int pass = 0;
        int fail = 0;
        int not_applicable = 0;
        double ms = 0;
    };
    std::map<std::string, Tally> tallies;
    std::ostringstream failures;
    for (const auto& r : reports) {
        auto& t = tallies[r.family];
        t.ms += r.elapsed.count();
        switch (r.verdict) {
            case Verdict::Pass:
                ++t.pass;
                break;
            case Verdict::Fail:
                ++t.fail;
                failures << "FAIL " << r.family << " n=" << r.params.n;
                if (r.params.d) failures << " d=" << *r.params.d;
                if (r.params.r) failures << " r=" << *r.params.r;
                if (r.params.m) failures << " m=" << *r.params.m;
                failures << " mod " << r.modulus_label;
                if (r.witness) {
                    failures << ": witness degree " << r.witness->degree() << ", leading coefficients";
                    const auto& c = r.witness->coeffs();
                    for (std::size_t i = 0; i < std::min<std::size_t>(3, c.size()); ++i) {
                        failures << " " << c[c.size() - 1 - i];
                    }
                }
                failures << "\n";
                break;
            case Verdict::NotApplicable:
                ++t.not_applicable;
                break;
        }
    }
    std::ostringstream os;
    os << "family              pass  fail   n/a    time(ms)\n";
    for (const auto& [family, t] : tallies) {
        char line[128];
        std::snprintf(line, sizeof line, "%-18s %5d %5d %5d %11.1f\n", family.c_str(), t.pass, t.fail,
                      t.not_applicable, t.ms);
        os << line;
    }
    os << failures.str();
    return os.str();
}

std::vector<IdentityResult> run_identities(const std::string& kind, int n_max, int m_max) {
    const bool all = kind == "all";
    if (!all && kind != "qbino" && kind != "cyclotomic-product" && kind != "qint-product" &&
        kind != "phi-substitution") {
        throw UsageError("unknown identity '" + kind + "'");
    }
    std::vector<IdentityResult> out;
    if (all || kind == "qbino") {
        for (int n = 1; n <= n_max; ++n) {
            for (int j = 0; j < n; ++j) out.push_back({"qbino", n, j, qbino_identity_check(n, j)});
        }
    }
    if (all || kind == "cyclotomic-product") {
        for (int n = 1; n <= n_max; ++n) {
            LaurentPoly product(1);
            for (int d : divisors(n)) product *= cyclotomic(d);
            out.push_back({"cyclotomic-product", n, 0, product == LaurentPoly::q_pow(n) - LaurentPoly(1)});
        }
    }
    if (all || kind == "qint-product") {
        for (int n = 1; n <= n_max; ++n) {
            LaurentPoly product(1);
            for (int d : divisors(n)) {
                if (d > 1) product *= cyclotomic(d);
            }
            out.push_back({"qint-product", n, 0, product == q_integer(n)});
        }
    }
    if (all || kind == "phi-substitution") {
        for (int n = 1; n <= n_max; ++n) {
            for (int m = 1; m <= m_max; ++m) {
                if (std::gcd(m, n) != 1) continue;
                const LaurentPoly& phi = cyclotomic(n);
                out.push_back({"phi-substitution", n, m, remainder(phi.substitute(m), phi).is_zero()});
            }
        }
    }
    return out;
}

nlohmann::json identity_to_json(const IdentityResult& result) {
    nlohmann::json j{{"identity", result.identity}, {"n", result.n}, {"holds", result.holds}};
    if (result.identity == "qbino") j["j"] = result.j;
    if (result.identity == "phi-substitution") j["m"] = result.j;
    return j;
}

std::vector<ClassicResult> run_classic(const std::string& check, IntRange range) {
    std::vector<ClassicResult> out;
    if (check == "padic") {
        for (int p = std::max(range.lo, 3); p <= range.hi; ++p) {
            if (p % 2 == 1 && is_prime(p)) out.push_back({"padic_rv", p, padic_rv_check(p)});
        }
    } else if (check == "gz") {
        for (int n = std::max(range.lo, 3); n <= range.hi; ++n) {
            if (n % 2 == 1) out.push_back({"gz_rv", n, gz_rv_check(n)});
        }
    } else {
        throw UsageError("unknown classic check '" + check + "' (expected padic or gz)");
    }
    return out;
}

nlohmann::json classic_to_json(const ClassicResult& result) {
    return {{"check", result.check}, {result.check == "padic_rv" ? "p" : "n", result.value}, {"holds", result.holds}};
}

}  // namespace qcong
