#pragma once

#include "symsemi/verdict.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace symsemi {

struct ModelSection {
    std::string name;
    int manifold_dim = 0;
    std::string omega;
    std::string convention;
    bool closed = false;
    bool nondegenerate = false;
    bool degeneracy_allowed = false;
    std::string top_power;
    int p = 0;
    std::vector<std::size_t> dims;
    std::vector<long> betti;      ///< of the model complex
    std::vector<long> cone_betti; ///< b_k^omega
    std::vector<long> harmonic;
    long chi = 0;
    int k = 0;
    std::string applicability;
    bool duality_observed = false;

    friend bool operator==(const ModelSection&, const ModelSection&) = default;
};

struct CensusSection {
    std::string source;
    bool nonvanishing = false;
    std::size_t zero_count = 0;
    std::string outcome;
    std::string note;
    std::string nondegeneracy;
    std::string euler_outcome; ///< pass, fail, or skipped (missing signs)
    std::optional<long> euler_signed_sum;
    long euler_chi = 0;

    friend bool operator==(const CensusSection&, const CensusSection&) = default;
};

struct SpectrumLine {
    std::string T;
    std::vector<double> eigen_over_T;

    friend bool operator==(const SpectrumLine&, const SpectrumLine&) = default;
};

struct OscillatorSection {
    std::vector<std::vector<std::string>> matrix;
    std::string mode;
    int det_sign = 0;
    int degree_cap = 0;
    std::vector<std::string> T;
    std::size_t kernel_dim = 0;
    std::string parity;
    std::vector<SpectrumLine> spectrum;
    std::size_t zero_multiplicity = 0;
    double smallest_nonzero = 0.0;
    double C1 = 0.0;
    std::optional<std::string> C1_squared;
    bool eta_zero = false;

    friend bool operator==(const OscillatorSection&, const OscillatorSection&) = default;
};

struct CriterionRow {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    std::optional<double> seconds;

    friend bool operator==(const CriterionRow&, const CriterionRow&) = default;
};

struct Report {
    std::string command;
    std::string mode;
    std::optional<ModelSection> model;
    std::optional<CensusSection> census;
    std::optional<OscillatorSection> oscillator;
    std::vector<Check> checks;
    std::vector<CriterionRow> criteria;
    std::vector<std::string> warnings;
    bool pass = false;
    std::optional<double> timing_ms;
};

bool operator==(const Check& a, const Check& b);
bool operator==(const Report& a, const Report& b);

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

/// Human-readable table in the layout of the worked examples.
std::string to_text(const Report& r);

} // namespace symsemi
