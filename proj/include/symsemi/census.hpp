#pragma once

#include <string>
#include <vector>

namespace symsemi {

enum class DetSign { plus, minus, unknown };

struct ZeroRecord {
    std::string label;
    DetSign det_sign = DetSign::unknown;
};

/// Declared nondegenerate zeros of a vector field (or a declaration that it never vanishes).
/// Nondegeneracy is taken on trust.
class ZeroCensus {
public:
    ZeroCensus() = default;
    /// Throws ShapeMismatch when a nonvanishing census lists zeros.
    ZeroCensus(std::string source, bool nonvanishing, std::vector<ZeroRecord> zeros);

    [[nodiscard]] const std::string& source() const { return source_; }
    [[nodiscard]] bool nonvanishing() const { return nonvanishing_; }
    [[nodiscard]] const std::vector<ZeroRecord>& zeros() const { return zeros_; }
    [[nodiscard]] std::size_t count() const { return zeros_.size(); }

private:
    std::string source_;
    bool nonvanishing_ = false;
    std::vector<ZeroRecord> zeros_;
};

enum class Outcome { pass, fail, not_applicable };

std::string outcome_name(Outcome o);
std::string det_sign_name(DetSign s);
DetSign parse_det_sign(const std::string& s);

struct CountingVerdict {
    Outcome outcome = Outcome::fail;
    int k = 0;
    std::size_t zero_count = 0;
    int zero_parity = 0;
    int manifold_dim = 0;
    std::string note;
    std::string nondegeneracy = "asserted by user";
};

/// Compares k with the number of zeros mod 2. Dimensions 4n+2 give not_applicable
/// with the comparison in `note`. Throws OddDimension.
CountingVerdict counting_check(int k, const ZeroCensus& census, int manifold_dim);

struct EulerVerdict {
    Outcome outcome = Outcome::fail;
    long signed_sum = 0;
    long chi = 0;
};

/// Sum of the determinant signs against chi. Throws MissingSigns if any sign is unknown.
EulerVerdict euler_cross_check(const ZeroCensus& census, long chi);

} // namespace symsemi
