#include "alphacalc/numeric.hpp"

#include <cctype>

namespace alphacalc {

std::string format_rat(const Rat& q) {
    Int n = rat_num(q);
    Int d = rat_den(q);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

Int parse_int(const std::string& text) {
    if (text.empty()) throw ValidationError("empty integer literal");
    size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) throw ValidationError("malformed integer: '" + text + "'");
    for (; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw ValidationError("malformed integer: '" + text + "'");
    return Int(text);
}

Rat parse_rat(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rat(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw ValidationError("zero denominator: '" + text + "'");
    return make_rat(std::move(num), std::move(den));
}

}  // namespace alphacalc
