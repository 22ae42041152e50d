#pragma once

#include "symsemi/census.hpp"
#include "symsemi/mode.hpp"
#include "symsemi/models.hpp"
#include "symsemi/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace symsemi {

/// Cone Betti numbers, chi, k and flags for a model. Throws NotClosed, or
/// Degenerate unless `allow_degenerate`.
ModelSection analyze_model(const SymplecticModel& m, int p = 0, bool allow_degenerate = false);

/// Counting check plus the Euler cross-check (skipped when signs are missing).
CensusSection analyze_census(int k, const ZeroCensus& census, int manifold_dim, long chi);

struct OscillatorRun {
    OscillatorSection section;
    Verdict verdict;
    std::vector<std::string> warnings;
};

/// Kernel/parity, spectrum scaling and eta scaling for one matrix. In exact mode a
/// matrix without a rational sqrt(A^t A) falls back to float mode with a warning.
OscillatorRun run_oscillator(const SparseMat& A, const std::vector<Rational>& Ts, int degree_cap, Mode mode);

/// checks: car, star, omega, complex-structure or all; m = 4n.
/// Throws BadDimension beyond the mode's size limit and ParseError for unknown checks.
Verdict run_clifford(int n, const std::string& checks, Mode mode, std::uint64_t seed = 1, int unit_vectors = 10);

} // namespace symsemi
