#include "symsemi/analysis.hpp"

#include "symsemi/cliffordlab.hpp"
#include "symsemi/complexes.hpp"
#include "symsemi/errors.hpp"
#include "symsemi/oscillator.hpp"

#include <random>
#include <set>

namespace symsemi {

ModelSection analyze_model(const SymplecticModel& m, int p, bool allow_degenerate) {
    const SymplecticVerdict sv = check_symplectic(m);
    if (!sv.closed) throw NotClosed("d(omega) = " + sv.d_omega);
    if (!sv.nondegenerate && !allow_degenerate)
        throw Degenerate("omega^" + std::to_string(m.manifold_dim / 2) + " = " + sv.top_power);

    ModelSection s;
    s.name = m.name;
    s.manifold_dim = m.manifold_dim;
    s.omega = m.omega_text;
    s.convention = m.convention;
    s.closed = sv.closed;
    s.nondegenerate = sv.nondegenerate;
    s.degeneracy_allowed = allow_degenerate;
    s.top_power = sv.top_power;
    s.p = p;
    s.betti = betti(m.complex).values;
    const GradedComplex c = cone(m.complex, m.omega, p);
    s.dims = c.dims();
    const BettiVector b = betti(c);
    s.cone_betti = b.values;
    s.harmonic = harmonic_dimensions(m.complex, m.omega, p);
    s.chi = euler_characteristic(b);
    s.k = semi_characteristic(b);
    s.duality_observed = is_palindromic(b);
    if (m.manifold_dim % 4 == 0)
        s.applicability = p == 0 ? "dimension 4n: counting formula applies"
                                 : "p > 0: k reported for the cone of omega^(p+1), informational";
    else
        s.applicability = "dimension " + std::to_string(m.manifold_dim) + " is not 4n: k informational, counting formula not applicable";
    return s;
}

CensusSection analyze_census(int k, const ZeroCensus& census, int manifold_dim, long chi) {
    const CountingVerdict v = counting_check(k, census, manifold_dim);
    CensusSection c;
    c.source = census.source();
    c.nonvanishing = census.nonvanishing();
    c.zero_count = census.count();
    c.outcome = outcome_name(v.outcome);
    c.note = v.note;
    c.nondegeneracy = v.nondegeneracy;
    c.euler_chi = chi;
    try {
        const EulerVerdict e = euler_cross_check(census, chi);
        c.euler_outcome = outcome_name(e.outcome);
        c.euler_signed_sum = e.signed_sum;
    } catch (const MissingSigns&) {
        c.euler_outcome = "skipped (missing signs)";
    }
    return c;
}

OscillatorRun run_oscillator(const SparseMat& A, const std::vector<Rational>& Ts, int degree_cap, Mode mode) {
    OscillatorRun run;
    if (Ts.empty()) throw ShapeMismatch("no T values given");
    Mode eff = mode;
    ModelOperator op;
    try {
        op = model_L(A, Ts.front(), mode);
    } catch (const NoRationalRoot& e) {
        if (mode != Mode::exact) throw;
        run.warnings.push_back(std::string("no rational sqrt(A^t A) (") + e.what() + "); using float mode");
        eff = Mode::floating;
        op = model_L(A, Ts.front(), eff);
    }
    auto& s = run.section;
    for (std::size_t i = 0; i < A.rows(); ++i) {
        std::vector<std::string> row;
        for (std::size_t j = 0; j < A.cols(); ++j) row.push_back(A.at(i, j).str());
        s.matrix.push_back(row);
    }
    s.mode = mode_name(eff);
    s.det_sign = op.det_A.sign();
    s.degree_cap = degree_cap;
    for (const auto& t : Ts) s.T.push_back(t.str());
    if (eff == Mode::floating)
        run.verdict.add("sqrt_residual", op.s_residual <= 1e-12, "relative |S^2 - A^t A|", op.s_residual);

    const KernelResult k = kernel_and_parity(op, degree_cap);
    s.kernel_dim = k.ker_dim;
    s.parity = k.parity == 0 ? "even" : (k.parity == 1 ? "odd" : "mixed");
    run.verdict.add("kernel_is_one_dimensional", k.ker_dim == 1, "dim ker L = " + std::to_string(k.ker_dim));
    run.verdict.add("parity_matches_det_sign", k.parity == (k.det_sign < 0 ? 1 : 0),
                    "parity " + s.parity + ", det A " + (k.det_sign < 0 ? "< 0" : "> 0"));

    const SpectrumResult sp = spectrum_scaling(A, Ts, degree_cap, eff);
    for (const auto& r : sp.rows) s.spectrum.push_back({r.T.str(), r.eigen_over_T});
    s.zero_multiplicity = sp.zero_multiplicity;
    s.smallest_nonzero = sp.smallest_nonzero;
    run.verdict.append(sp.verdict);

    const EtaResult eta = eta_scaling(A, Ts, eff, 1);
    s.C1 = eta.C1;
    if (eta.C1_squared) s.C1_squared = eta.C1_squared->str();
    s.eta_zero = eta.eta_zero;
    run.verdict.append(eta.verdict);
    return run;
}

Verdict run_clifford(int n, const std::string& checks, Mode mode, std::uint64_t seed, int unit_vectors) {
    const int m = 4 * n;
    if (n < 1) throw BadDimension("n must be positive");
    if (m > max_ext_dim(Mode::floating)) throw BadDimension("4n = " + std::to_string(m) + " exceeds 12");
    if (m > max_ext_dim(mode))
        throw BadDimension("4n = " + std::to_string(m) + " exceeds 8 in exact mode; set SYMSEMI_MODE=float");
    static const std::set<std::string> known{"car", "star", "omega", "complex-structure", "all"};
    if (!known.count(checks)) throw ParseError("unknown check set '" + checks + "'");
    const bool all = checks == "all";
    Verdict v;
    if (all || checks == "car") v.append(verify_car(m, mode));
    if (all || checks == "star") {
        v.append(verify_lemma_star(m, mode));
        v.append(verify_star_identities(m, mode));
    }
    if (all || checks == "omega") v.append(verify_lemma_omega(m, mode));
    if (all || checks == "complex-structure") {
        std::vector<Rational> e1(m);
        e1[0] = 1;
        Verdict cs = verify_complex_structure(m, e1, mode);
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
        bool ok = true;
        for (int t = 0; t < unit_vectors; ++t) {
            std::vector<Rational> u;
            for (int i = 0; i + 1 < m; ++i) u.push_back(Rational(num(rng), den(rng)));
            ok = ok && verify_complex_structure(m, stereographic_unit(u), mode).pass();
        }
        v.append(cs);
        v.add("complex_structure_random_units", ok, std::to_string(unit_vectors) + " random rational unit vectors");
    }
    return v;
}

} // namespace symsemi
