#ifndef PARCERT_REPORT_HPP
#define PARCERT_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "parcert/analysis.hpp"
#include "parcert/criteria.hpp"
#include "parcert/envelopes.hpp"
#include "parcert/verdict.hpp"

namespace parcert {

using ordered_json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolName = "parcert";
inline constexpr const char* kToolVersion = "0.1.0";

// Machine-readable bundle: schema version, tool id, config echo, one json
// object per executed operation, optional timing. Arbitrary-precision
// values and interval endpoints are decimal strings; emission is
// deterministic, so parse + re-emit is byte-identical.
struct ReportEnvelope {
    std::string command;
    ordered_json config = ordered_json::object();
    std::vector<ordered_json> results;
    std::vector<VerdictStatus> statuses; // one per result, for exit codes
    bool include_timing = true;
    std::int64_t total_ms = 0;

    void add(ordered_json result, VerdictStatus status) {
        results.push_back(std::move(result));
        statuses.push_back(status);
    }
};

ordered_json to_json(const Witness& w);
ordered_json to_json(const Verdict& v);
ordered_json to_json(const ScanReport& s);
ordered_json to_json(const CertificationReport& c);
ordered_json to_json(const BOCriterionReport& r);
ordered_json to_json(const LCCriterionReport& r);
ordered_json to_json(const ProbeReport& p);
ordered_json to_json(const AnchoredImplicationReport& p);
ordered_json to_json(const SeededImplicationReport& t);

ordered_json assemble(const ReportEnvelope& env);
std::string emit_json(const ReportEnvelope& env);
std::string emit_text(const ReportEnvelope& env);
std::string emit_csv(const ReportEnvelope& env);

// Parse an emitted JSON report and re-emit it (the round-trip surface).
std::string reemit_json(const std::string& text);
// Render a parsed report as text/csv (for the `report` command).
std::string render_parsed(const ordered_json& report, const std::string& format);

VerdictStatus overall_status(const ReportEnvelope& env);
VerdictStatus status_of(const CertificationReport& c);

} // namespace parcert

#endif
