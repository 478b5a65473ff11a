#include "alphacalc/lct.hpp"

namespace alphacalc {

bool EffectiveDivisor::has(const std::string& label) const {
    for (const auto& [l, c] : coefficients)
        if (l == label) return true;
    return false;
}

Rat EffectiveDivisor::coefficient(const std::string& label) const {
    for (const auto& [l, c] : coefficients)
        if (l == label) return c;
    return Rat(0);
}

std::map<std::string, Rat> EffectiveDivisor::normalized() const {
    std::map<std::string, Rat> out;
    for (const auto& [l, c] : coefficients) out[l] += c;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

LctValue lct_snc(const EffectiveDivisor& divisor) {
    Rat max(0);
    for (const auto& [label, c] : divisor.coefficients) {
        if (c < 0)
            throw ValidationError("negative coefficient " + format_rat(c) + " on " + label);
        if (c > max) max = c;
    }
    if (max == 0) return LctValue::infinity();
    return LctValue::finite(Rat(1) / max);
}

EffectiveDivisor scale(const EffectiveDivisor& divisor, const Rat& c) {
    if (c <= 0)
        throw ValidationError("scale factor must be positive, got " + format_rat(c));
    EffectiveDivisor out = divisor;
    for (auto& [label, coeff] : out.coefficients) coeff *= c;
    return out;
}

}  // namespace alphacalc
