#include "rsc/field.hpp"

#include <algorithm>
#include <cctype>

namespace rsc {

Field Field::prime(unsigned p) {
    switch (p) {
    case 2:
    case 3:
    case 5:
    case 7: return Field{p};
    default: throw InputError("unsupported prime field f" + std::to_string(p) + " (use 2, 3, 5 or 7)");
    }
}

Field Field::parse(const std::string& text) {
    std::string t = text;
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
    if (t == "q" || t == "rationals")
        return rationals();
    if (t.size() >= 2 && t[0] == 'f' && std::all_of(t.begin() + 1, t.end(), ::isdigit) && t.size() <= 4)
        return prime(static_cast<unsigned>(std::stoul(t.substr(1))));
    throw InputError("unknown field '" + text + "' (expected q, f2, f3, f5 or f7)");
}

} // namespace rsc
