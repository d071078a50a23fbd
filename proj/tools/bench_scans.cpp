// Times the serial reference kernels against the OpenMP ones and checks
// that both produce identical results while at it.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "parcert/analysis.hpp"
#include "parcert/criteria.hpp"
#include "parcert/envelopes.hpp"
#include "parcert/sequences.hpp"

using namespace parcert;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

template <typename F>
double timed(F&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return ms_since(t0);
}

void row(const char* name, double serial_ms, double parallel_ms, bool agree) {
    std::printf("%-28s %10.1f ms %10.1f ms   x%.2f   %s\n", name, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, agree ? "match" : "MISMATCH");
}

bool same_scan(const ScanReport& a, const ScanReport& b) {
    if (a.violations.size() != b.violations.size() || a.checked != b.checked) return false;
    for (std::size_t i = 0; i < a.violations.size(); ++i) {
        const auto &x = a.violations[i], &y = b.violations[i];
        if (x.a != y.a || x.b != y.b || x.lhs != y.lhs || x.rhs != y.rhs) return false;
    }
    return a.min_clean_threshold == b.min_clean_threshold;
}

} // namespace

int main(int argc, char** argv) {
    int threads = 0; // 0: all hardware threads
    unsigned long scale = 1;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--threads" && i + 1 < argc) threads = std::atoi(argv[++i]);
        if (arg == "--scale" && i + 1 < argc) scale = std::stoul(argv[++i]);
    }
#ifdef _OPENMP
    if (threads <= 0) threads = omp_get_max_threads();
#else
    threads = 1;
#endif
    std::printf("threads: %d, scale: %lu\n", threads, scale);
    std::printf("%-28s %13s %13s %8s\n", "kernel", "serial", "parallel", "speedup");

    {
        const std::size_t n = 1000 * scale;
        std::vector<BigCount> serial_out, parallel_out;
        double t_serial = timed([&] { serial_out = plane_prefix_dp(n, 1); });
        double t_par = timed([&] { parallel_out = plane_prefix_dp(n, threads); });
        row("plane prefix dp", t_serial, t_par, serial_out == parallel_out);
    }
    {
        Sequence seq(SequenceSpec::euler());
        seq.ensure(3000 * scale);
        ScanReport a, b;
        double t_serial = timed([&] { a = scan_bo_reference(seq, 1, 3000 * scale); });
        double t_par = timed([&] { b = scan_bo(seq, 1, 3000 * scale, threads); });
        row("scan bo (euler)", t_serial, t_par, same_scan(a, b));
    }
    {
        // violation-dense, allocation-bound: parallel gains are modest at best
        Sequence seq(SequenceSpec::mary(2));
        seq.ensure(200000 * scale + 1);
        ScanReport a, b;
        double t_serial = timed([&] { a = scan_logconcavity_reference(seq, 2, 200000 * scale); });
        double t_par = timed([&] { b = scan_logconcavity(seq, 2, 200000 * scale, threads); });
        row("scan lc (mary:2, dense)", t_serial, t_par, same_scan(a, b));
    }
    {
        // violation-sparse, large values: compute-bound
        Sequence seq(SequenceSpec::euler());
        seq.ensure(60000 * scale + 1);
        ScanReport a, b;
        double t_serial = timed([&] { a = scan_logconcavity_reference(seq, 2, 60000 * scale); });
        double t_par = timed([&] { b = scan_logconcavity(seq, 2, 60000 * scale, threads); });
        row("scan lc (euler, sparse)", t_serial, t_par, same_scan(a, b));
    }
    {
        Sequence seq(SequenceSpec::euler());
        seq.ensure(2000 * scale);
        BoundEnvelope env = make_chen_envelope();
        CertificationReport a, b;
        double t_serial =
            timed([&] { a = certify_envelope_reference(env, seq, 37, 2000 * scale); });
        double t_par = timed([&] { b = certify_envelope(env, seq, 37, 2000 * scale, {}, threads); });
        row("certify chen (euler)", t_serial, t_par, a.all_pass == b.all_pass);
    }
    {
        auto preset = std::get<BOPreset>(make_preset("bo-euler-example21"));
        Verdict a, b;
        double t_serial = timed([&] { a = check_bo_condition1(preset.inputs, 600 * scale, {}, 1); });
        double t_par =
            timed([&] { b = check_bo_condition1(preset.inputs, 600 * scale, {}, threads); });
        row("bo condition1 (euler)", t_serial, t_par,
            a.status == b.status && a.witnesses.size() == b.witnesses.size());
    }
    {
        Verdict a, b;
        double t_serial = timed([&] { a = golden_bounds_audit(400 * scale, {}, 1); });
        double t_par = timed([&] { b = golden_bounds_audit(400 * scale, {}, threads); });
        row("golden bounds audit", t_serial, t_par, a.status == b.status);
    }
    return 0;
}
