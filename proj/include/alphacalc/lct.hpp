#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "alphacalc/numeric.hpp"

namespace alphacalc {

/// A nonnegative rational combination of named curves. Zero coefficients may
/// be present; they are ignored by the threshold computation. Equality is
/// semantic: term order and explicit zeros do not matter.
struct EffectiveDivisor {
    std::vector<std::pair<std::string, Rat>> coefficients;

    bool has(const std::string& label) const;
    Rat coefficient(const std::string& label) const;  // 0 when absent

    /// Coefficients folded into a map, duplicates summed, zeros dropped.
    std::map<std::string, Rat> normalized() const;

    friend bool operator==(const EffectiveDivisor& a, const EffectiveDivisor& b) {
        return a.normalized() == b.normalized();
    }
};

/// A positive rational or the distinguished value infinity (the threshold of
/// the zero divisor).
struct LctValue {
    bool infinite = false;
    Rat value;  // meaningful only when finite

    static LctValue finite(Rat v) { return LctValue{false, std::move(v)}; }
    static LctValue infinity() { return LctValue{true, Rat(0)}; }

    friend bool operator==(const LctValue&, const LctValue&) = default;
};

/// Log canonical threshold of a simple-normal-crossing divisor: the
/// reciprocal of the largest coefficient. That the support is SNC is a user
/// assertion carried by the surface model, not something checked here.
LctValue lct_snc(const EffectiveDivisor& divisor);

/// Multiplies every coefficient by c > 0, so lct scales by 1/c.
EffectiveDivisor scale(const EffectiveDivisor& divisor, const Rat& c);

}  // namespace alphacalc
