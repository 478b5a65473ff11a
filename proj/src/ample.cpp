#include "alphacalc/ample.hpp"

namespace alphacalc {

AmplenessReport nakai_moishezon_check(const SurfaceModel& model,
                                      const DivisorClass& candidate,
                                      const std::vector<std::string>& curve_labels) {
    AmplenessReport report;
    report.self_intersection = pairing(model.form, candidate, candidate);
    if (report.self_intersection <= 0)
        report.failures.emplace_back("self-intersection");
    for (const auto& label : curve_labels) {
        Int v = pairing(model.form, candidate, model.curve(label));
        report.per_curve.emplace_back(label, v);
        if (v <= 0) report.failures.push_back(label);
    }
    report.pass = report.failures.empty();

    std::string note = "verdict is conditional on the supplied curve list being complete";
    for (const auto& a : model.assertions) note += "; asserted: " + a;
    report.assertion_note = std::move(note);
    return report;
}

}  // namespace alphacalc
