#include "symsemi/mode.hpp"

#include "symsemi/errors.hpp"

#include <cstdlib>

namespace symsemi {

Mode parse_mode(std::string_view s) {
    if (s == "exact") return Mode::exact;
    if (s == "float") return Mode::floating;
    throw ParseError("mode must be 'exact' or 'float', got '" + std::string(s) + "'");
}

std::string mode_name(Mode m) { return m == Mode::exact ? "exact" : "float"; }

Mode mode_from_env() {
    const char* v = std::getenv("SYMSEMI_MODE");
    if (v == nullptr || *v == '\0') return Mode::exact;
    return parse_mode(v);
}

} // namespace symsemi
