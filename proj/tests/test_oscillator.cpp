#include "doctest.h"

#include "symsemi/cliffordlab.hpp"
#include "symsemi/errors.hpp"
#include "symsemi/oscillator.hpp"
#include "symsemi/qlinalg.hpp"

#include <cmath>
#include <random>

using namespace symsemi;

namespace {

SparseMat diag(std::vector<Rational> d) {
    SparseMat m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.set(i, i, d[i]);
    return m;
}

const std::vector<Rational> kT3{1, 10, 100};

void require_pass(const Verdict& v) {
    for (const auto& c : v.checks) {
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.pass);
    }
}

} // namespace

TEST_CASE("sector layout") {
    const Sector s = make_sector(4, 2);
    CHECK(s.monomials.size() == 15);
    CHECK(s.size() == 240);
    CHECK(s.monomials.front() == std::vector<int>{0, 0, 0, 0});
    // lower caps are prefixes
    const Sector s1 = make_sector(4, 1);
    for (std::size_t i = 0; i < s1.monomials.size(); ++i) CHECK(s1.monomials[i] == s.monomials[i]);
}

TEST_CASE("model operator basics") {
    const ModelOperator id = model_L(SparseMat::identity(4), 1, Mode::exact);
    // L'' = 2 * form degree
    for (std::size_t s = 0; s < 16; ++s) {
        CHECK(id.Lpp.row(s).size() == (s == 0 ? 0u : 1u));
        CHECK(id.Lpp.at(s, s) == Rational(2 * ext::form_degree(s)));
    }
    CHECK(model_L(diag({1, 2, 3, 4}), 1, Mode::exact).trace_S == Rational(10));
    CHECK(model_L(diag({-1, 2, -3, 4}), 1, Mode::exact).trace_S == Rational(10));
    CHECK_THROWS_AS(model_L(diag({1, 0, 1, 1}), 1, Mode::exact), Singular);
    CHECK_THROWS_AS(model_L(SparseMat(4, 3), 1, Mode::exact), ShapeMismatch);
    CHECK_THROWS_AS(model_L(diag({1, 1, 1}), 1, Mode::exact), BadDimension);

    // upper triangular A: sqrt(A^t A) irrational
    SparseMat u = SparseMat::identity(4);
    u.set(0, 1, 1);
    CHECK_THROWS_AS(model_L(u, 1, Mode::exact), NoRationalRoot);
    const ModelOperator f = model_L(u, 1, Mode::floating);
    CHECK(f.s_residual < 1e-12);
}

TEST_CASE("rational square root") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 5; ++t) {
        const SparseMat a = random_rational_root_matrix(4, t % 2 ? -1 : 1, rng);
        CHECK(qlinalg::determinant(a).sign() == (t % 2 ? -1 : 1));
        const SparseMat s = rational_spd_sqrt(a.transpose() * a);
        CHECK(s * s == a.transpose() * a);
        CHECK(s == s.transpose());
    }
    CHECK_THROWS_AS(rational_spd_sqrt(diag({2, 1})), NoRationalRoot);
}

TEST_CASE("conjugated operator identities") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 3; ++t) {
        const SparseMat a = random_rational_root_matrix(4, t == 1 ? -1 : 1, rng);
        const ModelOperator op = model_L(a, Rational(3, 2), Mode::exact);
        const Sector s1 = make_sector(4, 1);
        const Sector s2 = make_sector(4, 2);
        const Sector s3 = make_sector(4, 3);
        // D^2 = L on the degree <= 1 sector
        const SparseMat d2 = conjugated_D(op, s2, s3) * conjugated_D(op, s1, s2);
        const SparseMat L = conjugated_L(op, s3);
        for (std::size_t c = 0; c < s1.size(); ++c) REQUIRE(d2.column(c) == L.column(c));
        // L self-adjoint in the Gaussian product
        const SparseMat gl = gaussian_gram(op, s2) * conjugated_L(op, s2);
        CHECK(gl == gl.transpose());
    }
    const ModelOperator id = model_L(SparseMat::identity(4), 1, Mode::exact);
    CHECK_THROWS_AS(conjugated_D(id, make_sector(4, 1), make_sector(4, 1)), TruncationTooSmall);
}

TEST_CASE("Gaussian moments") {
    // one-dimensional factor: E x^2 = 1 / (2 T s) for S = diag(s)
    const ModelOperator op = model_L(diag({1, 2, 3, 4}), 5, Mode::exact);
    const Sector s = make_sector(4, 1);
    const SparseMat g = gaussian_gram(op, s);
    for (int i = 0; i < 4; ++i) {
        std::vector<int> mono(4, 0);
        mono[i] = 1;
        const std::size_t k = s.index.at(mono);
        CHECK(g.at(s.at(k, 0), s.at(k, 0)) == Rational(1, 10 * (i + 1)));
    }
    CHECK(g.at(0, 0) == Rational(1));
}

TEST_CASE("kernel and parity") {
    auto a = kernel_and_parity(model_L(SparseMat::identity(4), 1, Mode::exact));
    CHECK(a.ker_dim == 1);
    CHECK(a.parity == 0);
    CHECK(a.pass());

    auto b = kernel_and_parity(model_L(diag({-1, 1, 1, 1}), 1, Mode::exact));
    CHECK(b.ker_dim == 1);
    CHECK(b.parity == 1);
    CHECK(b.pass());

    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> v(-3, 3), pos(1, 4);
    for (int t = 0; t < 5; ++t) {
        SparseMat u(4, 4);
        for (int i = 0; i < 4; ++i) {
            u.set(i, i, pos(rng));
            for (int j = i + 1; j < 4; ++j) u.set(i, j, v(rng));
        }
        const auto r = kernel_and_parity(model_L(u, 1, Mode::floating));
        CHECK(r.ker_dim == 1);
        CHECK(r.parity == 0);
    }
    for (int t = 0; t < 6; ++t) {
        const int sign = t % 2 ? -1 : 1;
        const auto r = kernel_and_parity(model_L(random_rational_root_matrix(4, sign, rng), 2, Mode::exact));
        CHECK(r.ker_dim == 1);
        CHECK(r.parity == (sign < 0 ? 1 : 0));
    }
}

TEST_CASE("spectrum scaling") {
    const auto r = spectrum_scaling(SparseMat::identity(4), kT3, 2, Mode::exact);
    require_pass(r.verdict);
    CHECK(r.zero_multiplicity == 1);
    // ladder: eigenvalues 2(|k| + form degree)
    for (double x : r.rows.front().eigen_over_T) CHECK(std::fabs(x / 2 - std::round(x / 2)) < 1e-9);
    CHECK(r.smallest_nonzero == doctest::Approx(2.0));

    require_pass(spectrum_scaling(diag({1, 1, 2, 2}), kT3, 2, Mode::exact).verdict);
    require_pass(spectrum_scaling(diag({1, 1, 2, 2}), kT3, 2, Mode::floating).verdict);

    CHECK_THROWS_AS(spectrum_scaling(SparseMat::identity(4), kT3, 1, Mode::exact), TruncationTooSmall);
    CHECK_THROWS_AS(spectrum_scaling(SparseMat::identity(4), {1, 1, 2}, 2, Mode::exact), ShapeMismatch);
}

TEST_CASE("spectrum scaling against characteristic polynomials") {
    std::mt19937_64 rng(11);
    const SparseMat a = random_rational_root_matrix(4, -1, rng);
    const auto r = spectrum_scaling(a, kT3, 2, Mode::exact);
    require_pass(r.verdict);

    // oracle: det(x - L_T / T) is the same polynomial for T = 1 and T = 10,
    // its zero root has multiplicity dim ker, and the remaining roots are positive
    const Sector sec = make_sector(4, 2);
    const qlinalg::Poly p1 = qlinalg::charpoly(conjugated_L(model_L(a, 1, Mode::exact), sec));
    const qlinalg::Poly p10 = qlinalg::charpoly(conjugated_L(model_L(a, 10, Mode::exact), sec) * Rational(1, 10));
    CHECK(p1 == p10);
    std::size_t z = 0;
    while (p1[z].is_zero()) ++z;
    CHECK(z == r.zero_multiplicity);
    for (std::size_t i = z; i < p1.size(); ++i) CHECK(p1[i].sign() == ((p1.size() - 1 - i) % 2 == 0 ? 1 : -1));

    const auto f = spectrum_scaling(a, kT3, 2, Mode::floating);
    require_pass(f.verdict);
    CHECK(f.smallest_nonzero == doctest::Approx(r.smallest_nonzero));
}

TEST_CASE("eta for the identity matrix") {
    // Independent oracle: eta = -1/4 contract(x) w0 and E|x|^2 = 4 * Gamma(3/2) / (Gamma(1/2) T) = 2 / T.
    const double ex2_times_T = 4 * std::tgamma(1.5) / std::tgamma(0.5);
    CHECK(ex2_times_T == doctest::Approx(2.0));
    const Rational oracle_c1sq = Rational(1, 16) * Rational(2);

    const auto r = eta_scaling(SparseMat::identity(4), {1, 4, 16}, Mode::exact);
    require_pass(r.verdict);
    REQUIRE(r.C1_squared);
    CHECK(*r.C1_squared == oracle_c1sq);
    CHECK(*r.C1_squared == Rational(1, 8));
    CHECK(r.C1 == doctest::Approx(std::sqrt(2.0) / 4));

    // compare eta with the hand-built vector (rho is the vacuum, up to scale)
    const Sector s = make_sector(4, 1);
    const Rational scale = r.rho[0];
    std::vector<Rational> want(s.size());
    auto put = [&](int var, std::size_t mask, long sign) {
        std::vector<int> mono(4, 0);
        mono[var] = 1;
        want[s.at(s.index.at(mono), mask)] = Rational(-sign, 4) * scale;
    };
    put(0, 0b0010, 1);  // x1 e^2
    put(1, 0b0001, -1); // -x2 e^1
    put(2, 0b1000, 1);  // x3 e^4
    put(3, 0b0100, -1); // -x4 e^3
    CHECK(r.eta == want);

    const auto f = eta_scaling(SparseMat::identity(4), {1, 4, 16}, Mode::floating);
    require_pass(f.verdict);
    CHECK(f.C1 == doctest::Approx(std::sqrt(2.0) / 4).epsilon(1e-9));
    CHECK_THROWS_AS(eta_scaling(SparseMat::identity(4), {1}, Mode::exact, 0), TruncationTooSmall);
}

TEST_CASE("eta for diagonal matrices") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> num(1, 5), sgn(0, 1);
    for (int t = 0; t < 4; ++t) {
        std::vector<Rational> d;
        for (int i = 0; i < 4; ++i) d.push_back(Rational(sgn(rng) ? num(rng) : -num(rng), num(rng)));
        const auto r = eta_scaling(diag(d), {1, 4, 16}, Mode::exact);
        require_pass(r.verdict);
    }
}
