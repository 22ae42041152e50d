#include "symsemi/census.hpp"

#include "symsemi/errors.hpp"

namespace symsemi {

ZeroCensus::ZeroCensus(std::string source, bool nonvanishing, std::vector<ZeroRecord> zeros)
    : source_(std::move(source)), nonvanishing_(nonvanishing), zeros_(std::move(zeros)) {
    if (nonvanishing_ && !zeros_.empty()) throw ShapeMismatch("a nonvanishing census cannot list zeros");
}

std::string outcome_name(Outcome o) {
    switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::not_applicable: return "not_applicable";
    }
    return "fail";
}

std::string det_sign_name(DetSign s) {
    switch (s) {
    case DetSign::plus: return "+";
    case DetSign::minus: return "-";
    case DetSign::unknown: return "unknown";
    }
    return "unknown";
}

DetSign parse_det_sign(const std::string& s) {
    if (s == "+") return DetSign::plus;
    if (s == "-") return DetSign::minus;
    if (s == "unknown" || s.empty()) return DetSign::unknown;
    throw ParseError("det_sign must be '+', '-' or 'unknown', got '" + s + "'");
}

CountingVerdict counting_check(int k, const ZeroCensus& census, int manifold_dim) {
    if (manifold_dim < 0 || manifold_dim % 2 != 0)
        throw OddDimension("manifold dimension " + std::to_string(manifold_dim) + " is not even");
    CountingVerdict v;
    v.k = k % 2;
    v.zero_count = census.count();
    v.zero_parity = static_cast<int>(v.zero_count % 2);
    v.manifold_dim = manifold_dim;
    const std::string cmp =
        "k = " + std::to_string(v.k) + ", zeros mod 2 = " + std::to_string(v.zero_parity);
    if (manifold_dim % 4 == 2) {
        v.outcome = Outcome::not_applicable;
        v.note = "dimension 4n+2: counting formula does not apply (" + cmp +
                 (v.k == v.zero_parity ? ", agree" : ", mismatch") + ")";
        return v;
    }
    v.outcome = v.k == v.zero_parity ? Outcome::pass : Outcome::fail;
    v.note = cmp;
    return v;
}

EulerVerdict euler_cross_check(const ZeroCensus& census, long chi) {
    EulerVerdict v;
    v.chi = chi;
    for (const auto& z : census.zeros()) {
        if (z.det_sign == DetSign::unknown) throw MissingSigns("zero '" + z.label + "' has no determinant sign");
        v.signed_sum += z.det_sign == DetSign::plus ? 1 : -1;
    }
    v.outcome = v.signed_sum == chi ? Outcome::pass : Outcome::fail;
    return v;
}

} // namespace symsemi
