#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "parcert/analysis.hpp"
#include "parcert/config.hpp"
#include "parcert/criteria.hpp"
#include "parcert/envelopes.hpp"
#include "parcert/errors.hpp"
#include "parcert/report.hpp"
#include "parcert/seq_cache.hpp"
#include "parcert/sequences.hpp"

namespace {

using namespace parcert;

struct CommonOpts {
    std::string format = "text";
    std::string out;
    bool no_timing = false;
    int threads = 1;
    unsigned long precision_cap = 4096;
    std::string config_path;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--out", o.out, "write output to a file instead of stdout");
    cmd->add_flag("--no-timing", o.no_timing, "omit timing fields (byte-stable output)");
    cmd->add_option("--threads", o.threads, "scan parallelism (default 1, deterministic)");
    cmd->add_option("--precision-cap", o.precision_cap,
                    "max working precision in bits (default 4096)");
    cmd->add_option("--config", o.config_path, "calibration/config file");
}

Config load_config(const CommonOpts& o) {
    if (o.config_path.empty()) return Config{};
    return Config::from_file(o.config_path);
}

PrecisionLadder ladder_of(const CommonOpts& o) {
    PrecisionLadder lad;
    if (o.precision_cap < 64) throw InvalidSpec("--precision-cap must be >= 64");
    lad.cap = static_cast<mpfr_prec_t>(o.precision_cap);
    return lad;
}

void write_body(const std::string& body, const CommonOpts& o) {
    if (o.out.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + o.out);
    f << body;
}

int finish_report(ReportEnvelope& env, const CommonOpts& o,
                  std::chrono::steady_clock::time_point started) {
    env.include_timing = !o.no_timing;
    env.total_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    std::string body = o.format == "json"  ? emit_json(env)
                       : o.format == "csv" ? emit_csv(env)
                                           : emit_text(env);
    write_body(body, o);
    switch (overall_status(env)) {
    case VerdictStatus::verified:
        return 0;
    case VerdictStatus::refuted:
        return 1;
    case VerdictStatus::inconclusive:
        return 4;
    }
    return 0;
}

std::pair<unsigned long, unsigned long> parse_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            unsigned long n = std::stoul(text);
            return {n, n};
        }
        unsigned long lo = std::stoul(text.substr(0, dots));
        unsigned long hi = std::stoul(text.substr(dots + 2));
        if (hi < lo) throw InvalidSpec("empty range: " + text);
        return {lo, hi};
    } catch (const InvalidSpec&) {
        throw;
    } catch (const std::exception&) {
        throw InvalidSpec("bad index or range: '" + text + "'");
    }
}

int cmd_compute(const std::string& selector, const std::string& range, const CommonOpts& o,
                const std::string& save_prefix, const std::string& load_prefix) {
    auto started = std::chrono::steady_clock::now();
    SequenceSpec spec = SequenceSpec::parse(selector);
    auto [lo, hi] = parse_range(range);

    Sequence seq(spec, o.threads);
    if (!load_prefix.empty()) seq.adopt_prefix(load_prefix_file(load_prefix, spec));
    seq.ensure(hi);
    if (!save_prefix.empty()) save_prefix_file(save_prefix, spec, seq.prefix());

    if (o.format == "json") {
        ReportEnvelope env;
        env.command = "compute";
        env.config = {{"selector", spec.selector()}, {"from", lo}, {"to", hi}};
        ordered_json values = ordered_json::array();
        for (unsigned long n = lo; n <= hi; ++n)
            values.push_back({{"n", n}, {"value", to_decimal(seq.at(n))}});
        env.add({{"op", "compute"}, {"values", std::move(values)}}, VerdictStatus::verified);
        return finish_report(env, o, started);
    }

    std::ostringstream os;
    if (o.format == "csv") {
        os << "n,value\n";
        for (unsigned long n = lo; n <= hi; ++n)
            os << n << ',' << to_decimal(seq.at(n)) << '\n';
    } else {
        for (unsigned long n = lo; n <= hi; ++n)
            os << to_decimal(seq.at(n)) << '\n';
    }
    write_body(os.str(), o);
    return 0;
}

int cmd_certify(const std::string& envelope, std::optional<unsigned long> from,
                unsigned long to, const CommonOpts& o) {
    auto started = std::chrono::steady_clock::now();
    Config cfg = load_config(o);
    PrecisionLadder lad = ladder_of(o);

    BoundEnvelope env;
    SequenceSpec spec = SequenceSpec::euler();
    if (envelope == "lehmer") {
        env = make_lehmer_envelope();
    } else if (envelope == "chen") {
        env = make_chen_envelope();
    } else if (envelope == "wright") {
        env = make_wright_envelope(WrightParams::from_config(cfg));
        spec = SequenceSpec::plane();
    } else if (envelope.rfind("mahler:", 0) == 0) {
        unsigned long m = std::stoul(envelope.substr(7));
        env = make_mahler_envelope(MahlerParams::from_config(cfg, m));
        spec = SequenceSpec::mary(m);
    } else {
        throw InvalidSpec("unknown envelope: '" + envelope +
                          "' (expected lehmer | chen | wright | mahler:M)");
    }

    unsigned long n_lo = from.value_or(env.n0);
    CertificationReport cert = certify_envelope(env, spec, n_lo, to, lad, o.threads);

    ReportEnvelope rep;
    rep.command = "certify";
    rep.config = {{"envelope", envelope},
                  {"selector", spec.selector()},
                  {"from", n_lo},
                  {"to", to},
                  {"precision_cap", o.precision_cap}};
    rep.add(to_json(cert), status_of(cert));
    return finish_report(rep, o, started);
}

int cmd_criterion(const std::string& preset_id, unsigned long horizon, unsigned long mary_base,
                  const CommonOpts& o) {
    auto started = std::chrono::steady_clock::now();
    Config cfg = load_config(o);
    PrecisionLadder lad = ladder_of(o);

    CriterionPreset preset = make_preset(preset_id, cfg, mary_base);
    ReportEnvelope rep;
    rep.command = "criterion";
    rep.config = {{"preset", preset_id},
                  {"horizon", horizon},
                  {"precision_cap", o.precision_cap}};
    if (preset_id == "bo-mary") rep.config["m"] = mary_base;

    if (auto* bo = std::get_if<BOPreset>(&preset)) {
        BOCriterionReport r = run_bo_criterion(bo->inputs, bo->seq, horizon, lad, o.threads);
        r.id = bo->id;
        rep.add(to_json(r), r.overall);
    } else {
        auto& lc = std::get<LCPreset>(preset);
        LCCriterionReport r = run_lc_criterion(lc.inputs, lc.seq, horizon, lad, o.threads);
        r.id = lc.id;
        rep.add(to_json(r), r.overall);
    }
    return finish_report(rep, o, started);
}

int cmd_scan(const std::string& kind, const std::string& selector, unsigned long min_index,
             unsigned long sum_max, unsigned long n_max, const CommonOpts& o) {
    auto started = std::chrono::steady_clock::now();
    SequenceSpec spec = SequenceSpec::parse(selector);

    ReportEnvelope rep;
    rep.command = "scan";
    ScanReport scan;
    if (kind == "bo") {
        if (sum_max == 0) throw InvalidSpec("scan bo: --sum-max is required");
        unsigned long a_min = min_index ? min_index : 1;
        scan = scan_bo(spec, a_min, sum_max, o.threads);
        rep.config = {{"kind", "bo"}, {"selector", spec.selector()}, {"min", a_min},
                      {"sum_max", sum_max}};
    } else if (kind == "lc") {
        if (n_max == 0) throw InvalidSpec("scan lc: --max is required");
        unsigned long n_min = min_index ? min_index : spec.positivity_start() + 1;
        scan = scan_logconcavity(spec, n_min, n_max, o.threads);
        rep.config = {{"kind", "lc"}, {"selector", spec.selector()}, {"min", n_min},
                      {"max", n_max}};
    } else {
        throw InvalidSpec("scan kind must be bo or lc");
    }
    rep.add(to_json(scan),
            scan.violations.empty() ? VerdictStatus::verified : VerdictStatus::refuted);
    return finish_report(rep, o, started);
}

int cmd_audit(const std::string& kind, unsigned long max_index, const CommonOpts& o) {
    auto started = std::chrono::steady_clock::now();
    PrecisionLadder lad = ladder_of(o);

    ReportEnvelope rep;
    rep.command = "audit";
    rep.config = {{"kind", kind}, {"max", max_index}};
    Verdict v;
    if (kind == "cassini") {
        v = cassini_audit(max_index, o.threads);
    } else if (kind == "golden") {
        v = golden_bounds_audit(max_index, lad, o.threads);
    } else if (kind == "bo-gap-q") {
        v = bo_gap_audit_q(max_index, lad, o.threads);
    } else {
        throw InvalidSpec("audit kind must be cassini | golden | bo-gap-q");
    }
    ordered_json j = to_json(v);
    j["op"] = "audit";
    rep.add(std::move(j), v.status);
    return finish_report(rep, o, started);
}

int cmd_report(const std::string& input, const CommonOpts& o) {
    std::ifstream in(input, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + input);
    std::stringstream ss;
    ss << in.rdbuf();
    ordered_json parsed = ordered_json::parse(ss.str());
    write_body(render_parsed(parsed, o.format), o);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact partition-type sequences, rigorous envelope certification,\n"
                 "Bessenrodt-Ono and log-concavity criteria, and desk-scale scans"};
    app.require_subcommand(1);

    CommonOpts opt_compute, opt_certify, opt_criterion, opt_scan, opt_audit, opt_report;

    std::string selector, range, save_prefix, load_prefix;
    auto* compute = app.add_subcommand("compute", "evaluate a sequence at an index or range");
    compute->add_option("selector", selector,
                        "euler | plane | fib-even | mary:M | restricted:A,B,... | shift:J:<inner>")
        ->required();
    compute->add_option("range", range, "index N or range LO..HI")->required();
    compute->add_option("--save-prefix", save_prefix, "write the computed prefix (binary cache)");
    compute->add_option("--load-prefix", load_prefix, "seed from a saved prefix (re-validated)");
    add_common(compute, opt_compute);

    std::string cert_envelope;
    unsigned long cert_to = 0;
    std::optional<unsigned long> cert_from;
    auto* certify = app.add_subcommand("certify", "certify an envelope against exact values");
    certify->add_option("envelope", cert_envelope, "lehmer | chen | wright | mahler:M")
        ->required();
    certify->add_option("--from", cert_from, "start index (default: envelope validity start)");
    certify->add_option("--to", cert_to, "end index")->required();
    add_common(certify, opt_certify);

    std::string preset_id;
    unsigned long horizon = 500, mary_base = 2;
    auto* criterion = app.add_subcommand("criterion", "run a named criterion preset");
    criterion
        ->add_option("preset", preset_id,
                     "bo-euler-example21 | bo-planepartition | bo-mary | lc-chen")
        ->required();
    criterion->add_option("--horizon", horizon, "scan horizon (default 500)");
    criterion->add_option("--m", mary_base, "base for bo-mary (default 2)");
    add_common(criterion, opt_criterion);

    std::string scan_kind, scan_selector;
    unsigned long scan_min = 0, scan_sum_max = 0, scan_max = 0;
    auto* scan = app.add_subcommand("scan", "exact violation scan (bo | lc)");
    scan->add_option("kind", scan_kind, "bo | lc")->required();
    scan->add_option("selector", scan_selector, "sequence selector")->required();
    scan->add_option("--min", scan_min, "smallest index (bo: a_min, lc: n_min)");
    scan->add_option("--sum-max", scan_sum_max, "bo: largest a+b");
    scan->add_option("--max", scan_max, "lc: largest n");
    add_common(scan, opt_scan);

    std::string audit_kind;
    unsigned long audit_max = 0;
    auto* audit = app.add_subcommand("audit", "closed-form identity audits");
    audit->add_option("kind", audit_kind, "cassini | golden | bo-gap-q")->required();
    audit->add_option("--max", audit_max, "n_max (cassini/golden) or sum_max (bo-gap-q)")
        ->required();
    add_common(audit, opt_audit);

    std::string report_in;
    auto* report = app.add_subcommand("report", "re-emit a JSON report (text/json/csv)");
    report->add_option("input", report_in, "path to a JSON report")->required();
    add_common(report, opt_report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed())
            return cmd_compute(selector, range, opt_compute, save_prefix, load_prefix);
        if (certify->parsed()) return cmd_certify(cert_envelope, cert_from, cert_to, opt_certify);
        if (criterion->parsed()) return cmd_criterion(preset_id, horizon, mary_base, opt_criterion);
        if (scan->parsed())
            return cmd_scan(scan_kind, scan_selector, scan_min, scan_sum_max, scan_max, opt_scan);
        if (audit->parsed()) return cmd_audit(audit_kind, audit_max, opt_audit);
        if (report->parsed()) return cmd_report(report_in, opt_report);
    } catch (const InvalidSpec& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 70;
    }
    return 0;
}
