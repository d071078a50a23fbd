#include "parcert/report.hpp"

#include <sstream>

namespace parcert {

namespace {

const char* outcome_str(CheckOutcome o) {
    switch (o) {
    case CheckOutcome::pass:
        return "pass";
    case CheckOutcome::fail:
        return "fail";
    default:
        return "inconclusive";
    }
}

std::string rational_str(const Rational& q) {
    return q.get_str(); // exact "p/q" (or integer)
}

} // namespace

ordered_json to_json(const Witness& w) {
    ordered_json j;
    j["a"] = w.a;
    if (w.b) j["b"] = *w.b;
    if (!w.lhs.empty()) j["lhs"] = w.lhs;
    if (!w.rhs.empty()) j["rhs"] = w.rhs;
    if (!w.note.empty()) j["note"] = w.note;
    return j;
}

ordered_json to_json(const Verdict& v) {
    ordered_json j;
    j["label"] = v.label;
    j["status"] = to_string(v.status);
    j["checked_lo"] = v.checked_lo;
    j["checked_hi"] = v.checked_hi;
    if (v.discovered_threshold) j["discovered_threshold"] = *v.discovered_threshold;
    j["witness_count"] = v.witnesses.size();
    ordered_json ws = ordered_json::array();
    for (const auto& w : v.witnesses)
        ws.push_back(to_json(w));
    j["witnesses"] = std::move(ws);
    if (!v.unresolved.empty()) {
        ordered_json us = ordered_json::array();
        for (const auto& w : v.unresolved)
            us.push_back(to_json(w));
        j["unresolved"] = std::move(us);
    }
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

ordered_json to_json(const ScanReport& s) {
    ordered_json j;
    j["op"] = "scan";
    j["selector"] = s.selector;
    j["region"] = s.region;
    j["checked"] = s.checked;
    j["violation_count"] = s.violations.size();
    ordered_json vs = ordered_json::array();
    for (const auto& v : s.violations) {
        ordered_json jv;
        jv["kind"] = v.kind == ViolationKind::bo ? "bo" : "log_concavity";
        jv["a"] = v.a;
        if (v.kind == ViolationKind::bo) jv["b"] = v.b;
        jv["lhs"] = to_decimal(v.lhs);
        jv["rhs"] = to_decimal(v.rhs);
        jv["margin"] = to_decimal(v.margin);
        vs.push_back(std::move(jv));
    }
    j["violations"] = std::move(vs);
    if (s.min_clean_threshold)
        j["min_clean_threshold"] = *s.min_clean_threshold;
    else
        j["min_clean_threshold"] = nullptr;
    return j;
}

ordered_json to_json(const CertificationReport& c) {
    ordered_json j;
    j["op"] = "certify";
    j["envelope"] = c.label;
    j["selector"] = c.selector;
    j["range"] = {c.n_lo, c.n_hi};
    j["checked"] = c.checked;
    j["all_pass"] = c.all_pass;
    if (c.first_failure) j["first_failure"] = *c.first_failure;
    ordered_json issues = ordered_json::array();
    for (const auto& i : c.issues) {
        ordered_json ji;
        ji["n"] = i.n;
        ji["lower"] = outcome_str(i.lower);
        ji["upper"] = outcome_str(i.upper);
        ji["lower_bound"] = i.lower_bound;
        ji["upper_bound"] = i.upper_bound;
        ji["value"] = i.value;
        issues.push_back(std::move(ji));
    }
    j["issues"] = std::move(issues);
    return j;
}

VerdictStatus status_of(const CertificationReport& c) {
    if (c.all_pass) return VerdictStatus::verified;
    return c.first_failure ? VerdictStatus::refuted : VerdictStatus::inconclusive;
}

ordered_json to_json(const BOCriterionReport& r) {
    ordered_json j;
    j["op"] = "criterion";
    j["kind"] = "bessenrodt-ono";
    if (!r.id.empty()) j["preset"] = r.id;
    j["status"] = to_string(r.overall);
    j["combined_threshold"] = r.combined_threshold;
    j["condition1"] = to_json(r.cond1);
    j["condition2"] = to_json(r.cond2);
    j["condition3"] = to_json(r.cond3);
    j["certification"] = to_json(r.cert);
    j["conclusion"] = to_json(r.conclusion);
    return j;
}

ordered_json to_json(const LCCriterionReport& r) {
    ordered_json j;
    j["op"] = "criterion";
    j["kind"] = "log-concavity";
    if (!r.id.empty()) j["preset"] = r.id;
    j["status"] = to_string(r.overall);
    j["combined_threshold"] = r.combined_threshold;
    j["condition1"] = to_json(r.cond1);
    j["condition2"] = to_json(r.cond2);
    if (r.closing) j["closing_inequality"] = to_json(*r.closing);
    j["certification"] = to_json(r.cert);
    j["conclusion"] = to_json(r.conclusion);
    if (r.exact_min_clean)
        j["exact_min_clean_threshold"] = *r.exact_min_clean;
    else
        j["exact_min_clean_threshold"] = nullptr;
    return j;
}

ordered_json to_json(const ProbeReport& p) {
    ordered_json j;
    j["op"] = "limsup-probe";
    const char* s = p.status == ProbeStatus::plausible           ? "plausible"
                    : p.status == ProbeStatus::violated_on_window ? "violated-on-window"
                                                                  : "inconclusive";
    j["status"] = s;
    j["n0"] = p.n0;
    j["horizon"] = p.horizon;
    j["window_size"] = p.window_size;
    j["f_n0"] = rational_str(p.f_n0);
    j["trailing_max"] = rational_str(p.trailing_max);
    if (p.previous_max) j["previous_max"] = rational_str(*p.previous_max);
    ordered_json maxima = ordered_json::array();
    for (const auto& m : p.window_maxima)
        maxima.push_back(rational_str(m));
    j["window_maxima"] = std::move(maxima);
    j["note"] = p.note;
    return j;
}

ordered_json to_json(const AnchoredImplicationReport& p) {
    ordered_json j;
    j["op"] = "anchored-implication";
    j["status"] = to_string(p.overall);
    j["hypothesis"] = to_json(p.hypothesis);
    j["conclusion"] = to_json(p.conclusion);
    return j;
}

ordered_json to_json(const SeededImplicationReport& t) {
    ordered_json j;
    j["op"] = "seeded-implication";
    j["status"] = to_string(t.overall);
    j["f0"] = to_decimal(t.f0);
    j["f0_at_least_one"] = t.f0_at_least_one;
    j["log_concavity"] = to_json(t.log_concavity);
    j["conclusion"] = to_json(t.conclusion);
    return j;
}

ordered_json assemble(const ReportEnvelope& env) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    j["command"] = env.command;
    j["config"] = env.config;
    ordered_json results = ordered_json::array();
    for (const auto& r : env.results)
        results.push_back(r);
    j["results"] = std::move(results);
    if (env.include_timing) j["timing_ms"] = {{"total", env.total_ms}};
    return j;
}

std::string emit_json(const ReportEnvelope& env) { return assemble(env).dump(2) + "\n"; }

std::string reemit_json(const std::string& text) {
    return ordered_json::parse(text).dump(2) + "\n";
}

namespace {

void render_result_text(std::ostream& os, const ordered_json& r, int indent = 0) {
    std::string pad(static_cast<std::size_t>(indent), ' ');
    if (r.contains("op")) {
        os << pad << r["op"].get<std::string>();
        if (r.contains("preset")) os << " " << r["preset"].get<std::string>();
        if (r.contains("envelope")) os << " " << r["envelope"].get<std::string>();
        if (r.contains("selector")) os << " [" << r["selector"].get<std::string>() << "]";
        if (r.contains("status")) os << ": " << r["status"].get<std::string>();
        if (r.contains("all_pass")) os << ": " << (r["all_pass"].get<bool>() ? "pass" : "FAIL");
        os << "\n";
    }
    auto field = [&](const char* key) {
        if (r.contains(key) && !r[key].is_null())
            os << pad << "  " << key << " = " << r[key].dump() << "\n";
    };
    field("region");
    field("range");
    field("checked");
    field("violation_count");
    field("min_clean_threshold");
    field("combined_threshold");
    field("exact_min_clean_threshold");
    field("discovered_threshold");
    field("f_n0");
    field("trailing_max");
    field("f0");
    field("note");
    for (const char* sub : {"condition1", "condition2", "condition3", "closing_inequality",
                            "certification", "conclusion", "hypothesis", "log_concavity"}) {
        if (!r.contains(sub)) continue;
        const auto& s = r[sub];
        os << pad << "  " << sub << ": ";
        if (s.contains("status"))
            os << s["status"].get<std::string>();
        else if (s.contains("all_pass"))
            os << (s["all_pass"].get<bool>() ? "pass" : "FAIL");
        if (s.contains("discovered_threshold") && !s["discovered_threshold"].is_null())
            os << " (threshold " << s["discovered_threshold"].dump() << ")";
        if (s.contains("witness_count") && s["witness_count"].get<std::size_t>() > 0)
            os << " (" << s["witness_count"].dump() << " witnesses)";
        os << "\n";
    }
}

std::string csv_from_results(const ordered_json& results) {
    std::ostringstream os;
    os << "kind,index_a,index_b,lhs,rhs,margin\n";
    for (const auto& r : results) {
        if (!r.contains("violations")) continue;
        for (const auto& v : r["violations"]) {
            os << v["kind"].get<std::string>() << ',' << v["a"].dump() << ',';
            if (v.contains("b")) os << v["b"].dump();
            os << ',' << v["lhs"].get<std::string>() << ',' << v["rhs"].get<std::string>() << ','
               << v["margin"].get<std::string>() << '\n';
        }
    }
    return os.str();
}

} // namespace

std::string emit_text(const ReportEnvelope& env) {
    std::ostringstream os;
    os << kToolName << " " << kToolVersion << " — " << env.command << "\n";
    for (const auto& r : env.results)
        render_result_text(os, r);
    if (env.include_timing) os << "elapsed: " << env.total_ms << " ms\n";
    return os.str();
}

std::string emit_csv(const ReportEnvelope& env) {
    ordered_json results = ordered_json::array();
    for (const auto& r : env.results)
        results.push_back(r);
    return csv_from_results(results);
}

std::string render_parsed(const ordered_json& report, const std::string& format) {
    if (format == "json") return report.dump(2) + "\n";
    if (format == "csv") return csv_from_results(report.at("results"));
    std::ostringstream os;
    os << report.at("tool").at("name").get<std::string>() << " "
       << report.at("tool").at("version").get<std::string>() << " — "
       << report.at("command").get<std::string>() << "\n";
    for (const auto& r : report.at("results"))
        render_result_text(os, r);
    return os.str();
}

VerdictStatus overall_status(const ReportEnvelope& env) {
    VerdictStatus s = VerdictStatus::verified;
    for (VerdictStatus st : env.statuses)
        s = combine(s, st);
    return s;
}

} // namespace parcert
