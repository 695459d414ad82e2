// Command-line driver: verify theorem families, scan conjecture families,
// and run the identity and classical checks. Reports go out as JSON lines.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qcong/scan.hpp"

namespace {

struct Options {
    std::string family;
    std::string d;
    std::string r;
    std::string m;
    std::string n;
    std::optional<int> n_min;
    std::optional<int> n_max;
    std::string modulus;
    std::string engine;
    int jobs = 1;
    std::string out;
    bool force_inadmissible = false;
    bool verbose = false;
    bool no_timing = false;
    std::string identity = "all";
    int m_max = 6;
    std::string check = "padic";
};

qcong::ScanRequest to_request(const Options& o) {
    qcong::ScanRequest req;
    req.family = o.family;
    if (!o.d.empty()) req.d = qcong::IntRange::parse(o.d);
    if (!o.r.empty()) req.r = qcong::IntRange::parse(o.r);
    if (!o.m.empty()) req.m = qcong::IntRange::parse(o.m);
    if (!o.n.empty()) {
        if (o.n_min || o.n_max) throw qcong::UsageError("use either --n or --n-min/--n-max");
        req.n = qcong::IntRange::parse(o.n);
    } else {
        if (!o.n_min || !o.n_max) throw qcong::UsageError("give --n or both --n-min and --n-max");
        req.n = {*o.n_min, *o.n_max};
        if (req.n.empty()) throw qcong::UsageError("empty n range");
    }
    if (!o.modulus.empty()) {
        if (o.modulus == "phi") {
            req.modulus = qcong::ModulusKind::PhiPow;
            req.modulus_exponent = 1;
        } else if (o.modulus == "phi2") {
            req.modulus = qcong::ModulusKind::PhiPow;
            req.modulus_exponent = 2;
        } else if (o.modulus == "qint") {
            req.modulus = qcong::ModulusKind::QInt;
        } else if (o.modulus == "qint-phi") {
            req.modulus = qcong::ModulusKind::QIntPhi;
        } else if (o.modulus == "qint-sq") {
            req.modulus = qcong::ModulusKind::QIntSq;
        } else {
            throw qcong::UsageError("unknown modulus '" + o.modulus + "'");
        }
    }
    if (!o.engine.empty()) {
        try {
            req.engine = qcong::parse_engine(o.engine);
        } catch (const std::invalid_argument& e) {
            throw qcong::UsageError(e.what());
        }
    }
    req.parallelism = o.jobs;
    req.force_inadmissible = o.force_inadmissible;
    req.verbose = o.verbose;
    return req;
}

/// Writes to --out when given, standard output otherwise.
void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file " + o.out);
    file << text;
}

void add_scan_options(CLI::App* cmd, Options& o) {
    cmd->add_option("--family", o.family, "family id")->required();
    cmd->add_option("--d", o.d, "d value or range a..b");
    cmd->add_option("--r", o.r, "r value or range a..b");
    cmd->add_option("--m", o.m, "m value or range a..b");
    cmd->add_option("--n", o.n, "n value or range a..b");
    cmd->add_option("--n-min", o.n_min, "smallest n");
    cmd->add_option("--n-max", o.n_max, "largest n");
    cmd->add_option("--modulus", o.modulus, "phi, phi2, qint, qint-phi or qint-sq");
    cmd->add_option("--engine", o.engine, "exact, quotient or both");
    cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--out", o.out, "output file (JSON lines)");
    cmd->add_flag("--force-inadmissible", o.force_inadmissible, "also run n outside the residue classes");
    cmd->add_flag("--verbose", o.verbose, "report skipped n as well");
    cmd->add_flag("--no-timing", o.no_timing, "write elapsed_ms as null for reproducible files");
}

int run_scan(const Options& o, bool conjecture) {
    const auto request = to_request(o);
    const auto reports = conjecture ? qcong::run_conjecture_scan(request) : qcong::run_verify(request);
    emit(o, qcong::to_json_lines(reports, !o.no_timing));
    std::cerr << qcong::summary_table(reports);
    return qcong::exit_status(reports);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of cyclotomic divisibility of truncated q-series"};
    app.require_subcommand(1);
    Options o;

    auto* verify = app.add_subcommand("verify", "check theorem families");
    add_scan_options(verify, o);
    auto* scan = app.add_subcommand("scan", "scan conjecture families (finite checks, not proofs)");
    add_scan_options(scan, o);

    auto* identity = app.add_subcommand("identity", "q-binomial and cyclotomic product identities");
    identity->add_option("--kind", o.identity, "qbino, cyclotomic-product, qint-product, phi-substitution or all");
    identity->add_option("--n-max", o.n_max, "largest n");
    identity->add_option("--m-max", o.m_max, "largest m for phi-substitution");
    identity->add_option("--out", o.out, "output file (JSON lines)");

    auto* classic = app.add_subcommand("classic", "the classical supercongruence checks");
    classic->add_option("--check", o.check, "padic or gz");
    classic->add_option("--n", o.n, "p or n value or range a..b")->required();
    classic->add_option("--out", o.out, "output file (JSON lines)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return run_scan(o, false);
        if (scan->parsed()) return run_scan(o, true);
        if (identity->parsed()) {
            const auto results = qcong::run_identities(o.identity, o.n_max.value_or(20), o.m_max);
            std::string text;
            int failures = 0;
            for (const auto& r : results) {
                text += qcong::identity_to_json(r).dump() + "\n";
                if (!r.holds) ++failures;
            }
            emit(o, text);
            std::cerr << results.size() << " identities checked, " << failures << " failed\n";
            return failures == 0 ? 0 : 1;
        }
        if (classic->parsed()) {
            const auto results = qcong::run_classic(o.check, qcong::IntRange::parse(o.n));
            std::string text;
            int failures = 0;
            for (const auto& r : results) {
                text += qcong::classic_to_json(r).dump() + "\n";
                if (!r.holds) ++failures;
            }
            emit(o, text);
            std::cerr << results.size() << " classical checks, " << failures << " failed\n";
            return failures == 0 ? 0 : 1;
        }
    } catch (const qcong::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
