#pragma once

#include "symsemi/mode.hpp"
#include "symsemi/report.hpp"

#include <string>
#include <vector>

namespace symsemi::acceptance {

struct Criterion {
    int id = 0;
    std::string title;
};

/// The ten acceptance criteria in order.
const std::vector<Criterion>& criteria();

/// Runs one criterion. Errors raised inside are reported as a failing row,
/// never propagated. Criteria 1-6 and 9-10 always run exactly; 7 and 8 honor `mode`.
CriterionRow run(int id, Mode mode);

/// All criteria in order.
std::vector<CriterionRow> run_all(Mode mode);

} // namespace symsemi::acceptance
