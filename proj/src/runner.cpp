#include "alphacalc/runner.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "alphacalc/report.hpp"
#include "alphacalc/surface_io.hpp"

namespace alphacalc {

KRange parse_k_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            Int k = parse_int(text);
            if (k < 1 || k > 1000000) throw ValidationError("k out of range");
            return {static_cast<int>(k), static_cast<int>(k)};
        }
        Int lo = parse_int(text.substr(0, dots));
        Int hi = parse_int(text.substr(dots + 2));
        if (lo < 1 || hi > 1000000 || lo > hi)
            throw ValidationError("k range must satisfy 1 <= lo <= hi");
        return {static_cast<int>(lo), static_cast<int>(hi)};
    } catch (const ValidationError&) {
        throw ValidationError("invalid k range '" + text +
                              "' (expected \"k\" or \"lo..hi\" with lo >= 1)");
    }
}

namespace {

SurfaceBundle load_bundle(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open surface file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_surface_spec(buf.str());
}

int resolve_threads(const RunConfig& config, int jobs) {
    int t = config.threads;
    if (t <= 0) {
        if (const char* env = std::getenv("ALPHACALC_THREADS")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end && *end == '\0' && v > 0) t = static_cast<int>(v);
        }
    }
    if (t <= 0) t = static_cast<int>(std::thread::hardware_concurrency());
    if (t <= 0) t = 1;
    return std::min(t, std::max(jobs, 1));
}

// Per-k computations are pure and independent; workers claim indices off an
// atomic counter and results are assembled in k order afterwards.
std::vector<AlphaResult> alpha_over_range(const SurfaceBundle& bundle,
                                          const DivisorClass& polarization,
                                          const KRange& range, int n_threads) {
    const std::vector<std::string>& curves = bundle.model.invariant_curves;
    if (curves.empty())
        throw ValidationError("the surface file declares no invariant_curves");
    const int jobs = range.hi - range.lo + 1;
    std::vector<AlphaResult> results(static_cast<size_t>(jobs));
    std::atomic<int> next{0};
    std::vector<std::exception_ptr> errors(static_cast<size_t>(jobs));

    auto worker = [&] {
        for (;;) {
            int idx = next.fetch_add(1);
            if (idx >= jobs) return;
            try {
                results[idx] = alpha_k(bundle.model, curves, polarization, range.lo + idx);
            } catch (...) {
                errors[idx] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int i = 1; i < n_threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

void emit(const RunConfig& config, std::ostream& out, const std::string& text) {
    if (config.output_path) {
        std::ofstream f(*config.output_path);
        if (!f) throw ValidationError("cannot open output file: " + *config.output_path);
        f << text;
    } else {
        out << text;
    }
}

std::string render(const RunConfig& config, const OrderedJson& json,
                   const std::string& text, const std::string& csv) {
    switch (config.output_format) {
        case OutputFormat::Json: return json.dump(2) + "\n";
        case OutputFormat::Csv: return csv;
        case OutputFormat::Text: return text;
    }
    return text;
}

int run_build(const RunConfig& config, std::ostream& out) {
    SurfaceBundle bundle = load_bundle(config.spec_path);
    emit(config, out,
         render(config, build_report_json(bundle), build_report_text(bundle),
                build_report_csv(bundle)));
    return 0;
}

int run_ample(const RunConfig& config, std::ostream& out) {
    SurfaceBundle bundle = load_bundle(config.spec_path);
    DivisorClass cls = divisor_class(bundle, config.divisor_label);
    std::vector<std::string> labels;
    for (const auto& [label, c] : bundle.model.curves) labels.push_back(label);
    AmplenessReport report = nakai_moishezon_check(bundle.model, cls, labels);
    emit(config, out,
         render(config, ample_report_json(config.divisor_label, report),
                ample_report_text(config.divisor_label, report),
                ample_report_csv(report)));
    return report.pass ? 0 : 1;
}

int run_alpha(const RunConfig& config, std::ostream& out) {
    SurfaceBundle bundle = load_bundle(config.spec_path);
    if (config.expect_closed_form && bundle != counterexample_surface())
        throw ValidationError(
            "--expect-closed-form applies only to the bundled counterexample "
            "surface; this surface file differs from it");
    DivisorClass cls = divisor_class(bundle, config.divisor_label);
    const int jobs = config.k_range.hi - config.k_range.lo + 1;
    std::vector<AlphaResult> results =
        alpha_over_range(bundle, cls, config.k_range, resolve_threads(config, jobs));

    std::vector<AlphaRow> rows;
    bool all_match = true;
    for (const auto& r : results) {
        AlphaRow row{r, config.expect_closed_form, Rat(0), false};
        if (config.expect_closed_form) {
            row.expected = closed_form(r.k);
            row.matches = (r.alpha_k == row.expected);
            all_match = all_match && row.matches;
        }
        rows.push_back(std::move(row));
    }
    emit(config, out,
         render(config, alpha_report_json(config.divisor_label, rows),
                alpha_report_text(rows), alpha_report_csv(rows)));
    return all_match ? 0 : 1;
}

int run_oracle(const RunConfig& config, std::ostream& out) {
    SurfaceBundle bundle = load_bundle(config.spec_path);
    DivisorClass cls = divisor_class(bundle, config.divisor_label);
    const std::vector<std::string>& curves = bundle.model.invariant_curves;
    if (curves.empty())
        throw ValidationError("the surface file declares no invariant_curves");

    std::vector<OracleRow> rows;
    bool all_match = true;
    for (int k = config.k_range.lo; k <= config.k_range.hi; ++k) {
        OracleRow row;
        row.direct = alpha_k(bundle.model, curves, cls, k);
        row.oracle = oracle_alpha_k(bundle.model, curves, cls, k);
        row.match = (row.direct == row.oracle);
        all_match = all_match && row.match;
        rows.push_back(std::move(row));
    }
    emit(config, out,
         render(config, oracle_report_json(rows), oracle_report_text(rows),
                oracle_report_csv(rows)));
    return all_match ? 0 : 1;
}

int run_verify(const RunConfig& config, std::ostream& out) {
    if (config.k_range.lo != config.k_range.hi)
        throw ValidationError("verify takes a single k, not a range");
    SurfaceBundle bundle = load_bundle(config.spec_path);
    DivisorClass cls = divisor_class(bundle, config.divisor_label);

    std::ifstream in(config.certificate_path);
    if (!in) throw ValidationError("cannot open certificate file: " + config.certificate_path);
    OrderedJson j;
    try {
        j = OrderedJson::parse(in);
    } catch (const OrderedJson::parse_error& e) {
        throw ValidationError(std::string("certificate is not valid JSON: ") + e.what());
    }
    EffectiveDivisor cert = witness_from_json(j);
    for (const auto& [label, c] : cert.coefficients)
        if (!bundle.model.has_curve(label)) throw UnknownLabelError(label);

    CertificateCheck check =
        verify_certificate(bundle.model, cert, config.k_range.lo, cls);
    emit(config, out,
         render(config,
                verify_report_json(config.k_range.lo, config.divisor_label, cert, check),
                verify_report_text(config.k_range.lo, check), verify_report_csv(check)));
    return check.equivalent ? 0 : 1;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& diag) {
    try {
        if (config.k_range.lo < 1 || config.k_range.lo > config.k_range.hi)
            throw ValidationError("k range must satisfy 1 <= lo <= hi");
        switch (config.command) {
            case Command::Build: return run_build(config, out);
            case Command::Ample: return run_ample(config, out);
            case Command::Alpha: return run_alpha(config, out);
            case Command::Oracle: return run_oracle(config, out);
            case Command::Verify: return run_verify(config, out);
        }
        return 2;
    } catch (const InfeasibleError& e) {
        diag << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        diag << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace alphacalc
