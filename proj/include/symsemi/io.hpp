#pragma once

#include "symsemi/census.hpp"
#include "symsemi/models.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace symsemi::io {

/// "builtin:<name>" or a path to a matrix- or cdga-kind JSON model file.
SymplecticModel load_model(const std::string& spec);
SymplecticModel parse_model(const nlohmann::json& j, const std::string& name);

ZeroCensus load_census(const std::string& path);
ZeroCensus parse_census(const nlohmann::json& j);
nlohmann::json census_to_json(const ZeroCensus& c);

/// Whitespace- or comma-separated rational rows; '#' starts a comment.
SparseMat parse_matrix_text(const std::string& text);
SparseMat load_matrix_text(const std::string& path);

/// "1,4,16" -> {1, 4, 16}.
std::vector<Rational> parse_rational_list(const std::string& text);

std::string read_file(const std::string& path);

} // namespace symsemi::io
