#pragma once

#include <string>
#include <utility>
#include <vector>

#include "alphacalc/builder.hpp"

namespace alphacalc {

/// Outcome of the Nakai-Moishezon positivity check: L is ample iff L.L > 0
/// and L.C > 0 for every irreducible curve C. The check can only test the
/// curves it is given, so the verdict is conditional on the completeness of
/// that list; `assertion_note` records what the model asserts about it.
struct AmplenessReport {
    Int self_intersection;
    std::vector<std::pair<std::string, Int>> per_curve;
    bool pass = false;
    std::vector<std::string> failures;  // "self-intersection" and/or curve labels
    std::string assertion_note;
};

AmplenessReport nakai_moishezon_check(const SurfaceModel& model,
                                      const DivisorClass& candidate,
                                      const std::vector<std::string>& curve_labels);

}  // namespace alphacalc
