#pragma once

#include <string>
#include <string_view>

namespace symsemi {

/// Arithmetic used by the Clifford and oscillator computations.
enum class Mode { exact, floating };

/// "exact" or "float"; throws ParseError otherwise.
Mode parse_mode(std::string_view s);
std::string mode_name(Mode m);

/// SYMSEMI_MODE, defaulting to exact when unset or empty.
Mode mode_from_env();

/// Largest exterior-algebra dimension m accepted in each mode.
constexpr int max_ext_dim(Mode m) { return m == Mode::exact ? 8 : 12; }

} // namespace symsemi
