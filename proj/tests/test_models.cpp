#include "doctest.h"

#include "symsemi/complexes.hpp"
#include "symsemi/errors.hpp"
#include "symsemi/models.hpp"

#include <random>

using namespace symsemi;

namespace {

Element wedge2(const CDGAModel& m, const char* a, const char* b, long c = 1) { return Rational(c) * m.word({a, b}); }

StructureConstants kt_constants(int sign) {
    StructureConstants c(4);
    c.set(3, 1, 2, Rational(sign)); // d e4 = -sign e2 e3
    return c;
}

// x (deg 2), y (deg 3) with dy = x^2: a model with an even generator.
CDGAModel sphere_like() {
    Element dy;
    dy.degree = 4;
    dy.add({2, 0}, Rational(1));
    return CDGAModel({{"x", 2}, {"y", 3}}, {Element{3, {}}, dy}, 6);
}

Monomial random_monomial(const CDGAModel& m, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> deg(0, m.top_degree());
    for (;;) {
        const auto& b = m.basis(deg(rng));
        if (b.empty()) continue;
        std::uniform_int_distribution<std::size_t> pick(0, b.size() - 1);
        return b[pick(rng)];
    }
}

Element as_element(const CDGAModel& m, const Monomial& x) {
    Element e;
    e.degree = m.degree(x);
    e.add(x, Rational(1));
    return e;
}

void check_algebra_laws(const CDGAModel& m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 500; ++t) {
        const Element x = as_element(m, random_monomial(m, rng));
        const Element y = as_element(m, random_monomial(m, rng));
        const Element lhs = m.differential(m.multiply(x, y));
        Element rhs = m.multiply(m.differential(x), y);
        rhs += Rational(x.degree % 2 == 0 ? 1 : -1) * m.multiply(x, m.differential(y));
        rhs.degree = lhs.degree;
        REQUIRE(lhs.terms == rhs.terms);

        const Element xy = m.multiply(x, y);
        const Element yx = m.multiply(y, x);
        REQUIRE(xy.terms == (Rational((x.degree * y.degree) % 2 == 0 ? 1 : -1) * yx).terms);

        const Element z = as_element(m, random_monomial(m, rng));
        REQUIRE(m.multiply(m.multiply(x, y), z).terms == m.multiply(x, m.multiply(y, z)).terms);
    }
}

} // namespace

TEST_CASE("Chevalley-Eilenberg complexes") {
    CHECK(betti(ce_complex(StructureConstants(2)).complex()).values == std::vector<long>{1, 2, 1});

    const CDGAModel kt = ce_complex(kt_constants(1));
    const BettiVector b = betti(kt.complex());
    CHECK(b.values[1] == 3);
    CHECK(b.values == std::vector<long>{1, 3, 4, 3, 1});

    StructureConstants so3(3);
    so3.set(2, 0, 1, 1);
    so3.set(0, 1, 2, 1);
    so3.set(1, 2, 0, 1);
    const BettiVector bs = betti(ce_complex(so3).complex());
    CHECK(bs.values == std::vector<long>{1, 0, 0, 1});
}

TEST_CASE("Jacobi violations are rejected") {
    StructureConstants bad = kt_constants(1);
    bad.set(2, 0, 3, -1); // d e3 = e1 e4
    CHECK_THROWS_AS(ce_complex(bad), JacobiViolation);

    // 6-dimensional filiform algebra, then with one sign flipped
    auto filiform = [](int s) {
        StructureConstants c(6);
        c.set(2, 0, 1, -1);
        c.set(3, 0, 2, -1);
        c.set(4, 0, 3, -1);
        c.set(4, 1, 2, -1);
        c.set(5, 0, 4, -1);
        c.set(5, 1, 3, Rational(-s));
        return c;
    };
    CHECK_NOTHROW(ce_complex(filiform(1)));
    CHECK_THROWS_AS(ce_complex(filiform(-1)), JacobiViolation);
}

TEST_CASE("words and signs") {
    const CDGAModel t4 = ce_complex(StructureConstants(4));
    CHECK(t4.word({"e2", "e1"}) == Rational(-1) * t4.word({"e1", "e2"}));
    CHECK(t4.word({"e1", "e1"}).is_zero());
    CHECK(t4.basis(2).size() == 6);
    CHECK(t4.to_string(t4.word({"e1", "e2"}) + t4.word({"e3", "e4"})) == "e1*e2 + e3*e4");
    CHECK_THROWS_AS((void)t4.word({"e9"}), UnknownName);
}

TEST_CASE("Leibniz, graded commutativity and associativity") {
    for (const auto& name : builtin_names()) {
        const SymplecticModel m = builtin(name);
        if (m.cdga) check_algebra_laws(*m.cdga, 7);
    }
    check_algebra_laws(sphere_like(), 8);
    std::mt19937_64 rng(9);
    check_algebra_laws(random_nilpotent_ce(6, rng), 10);
}

TEST_CASE("even generators") {
    const CDGAModel s = sphere_like();
    CHECK(s.top_degree() == 6);
    CHECK(betti(s.complex()).values == std::vector<long>{1, 0, 1, 0, 0, 0, 0});
    CHECK_THROWS_AS(CDGAModel({{"x", 2}}, {Element{2, {{{1}, Rational(1)}}}}, 4), ShapeMismatch);
}

TEST_CASE("multiplication matrix") {
    const CDGAModel t4 = ce_complex(StructureConstants(4));
    const Element w = wedge2(t4, "e1", "e2") + wedge2(t4, "e3", "e4");
    CHECK_NOTHROW((void)t4.multiplication_matrix(w));
    const Element w2 = t4.power(w, 2);
    CHECK(w2 == Rational(2) * as_element(t4, Monomial{1, 1, 1, 1}));

    const CDGAModel kt = ce_complex(kt_constants(1));
    CHECK_THROWS_AS((void)kt.multiplication_matrix(wedge2(kt, "e1", "e4")), NotClosed);

    Element zero;
    zero.degree = 2;
    const OmegaMap z = t4.multiplication_matrix(zero);
    for (const auto& m : z.maps()) CHECK(m.is_zero_matrix());
}

TEST_CASE("check_symplectic") {
    const CDGAModel t4 = ce_complex(StructureConstants(4));
    CHECK(check_symplectic(t4, wedge2(t4, "e1", "e2") + wedge2(t4, "e3", "e4")).pass());
    const auto v = check_symplectic(t4, wedge2(t4, "e1", "e2"));
    CHECK(v.closed);
    CHECK_FALSE(v.nondegenerate);
    CHECK(check_symplectic(builtin("cp2")).pass());

    const CDGAModel kt = ce_complex(kt_constants(1));
    const auto bad = check_symplectic(kt, wedge2(kt, "e1", "e4") + wedge2(kt, "e2", "e3"));
    CHECK_FALSE(bad.closed);
    CHECK(bad.d_omega == "e1*e2*e3");
}

TEST_CASE("builtins") {
    const std::map<std::string, int> expected_k{{"cp2", 1}, {"s2xs2", 0}, {"t2", 1}, {"kodaira_thurston", 0}};
    for (const auto& name : builtin_names()) {
        CAPTURE(name);
        const SymplecticModel m = builtin(name);
        CHECK(check_symplectic(m).pass());
        const BettiVector b = betti(cone(m.complex, m.omega));
        CHECK(euler_characteristic(b) == 0);
        CHECK(harmonic_dimensions(m.complex, m.omega) == b.values);
        CHECK(is_palindromic(b));
        if (expected_k.count(name)) CHECK(semi_characteristic(b) == expected_k.at(name));
    }
    CHECK(betti(cone(builtin("s2xs2").complex, builtin("s2xs2").omega)).values ==
          std::vector<long>{1, 0, 1, 1, 0, 1});
    CHECK(betti(cone(builtin("t2").complex, builtin("t2").omega)).values == std::vector<long>{1, 2, 2, 1});
    CHECK_THROWS_AS(builtin("k3"), UnknownName);
}

TEST_CASE("Kodaira-Thurston mirrored convention") {
    const SymplecticModel kt = builtin("kodaira_thurston");
    const CDGAModel mirror = ce_complex(kt_constants(-1));
    const SymplecticModel m = make_model("kt_mirror", mirror, wedge2(mirror, "e1", "e2") + wedge2(mirror, "e3", "e4"));
    CHECK(check_symplectic(m).pass());
    CHECK(betti(cone(m.complex, m.omega)) == betti(cone(kt.complex, kt.omega)));
}

TEST_CASE("tensor products") {
    const SymplecticModel t2 = builtin("t2");
    const SymplecticModel t4 = tensor_product(t2, t2);
    CHECK(betti(t4.complex).values == std::vector<long>{1, 4, 6, 4, 1});
    CHECK(check_symplectic(t4).pass());
    CHECK(betti(cone(t4.complex, t4.omega)) == betti(cone(builtin("t4").complex, builtin("t4").omega)));

    for (const auto& name : builtin_names()) {
        const SymplecticModel m = builtin(name);
        const SymplecticModel mp = tensor_product(m, point_model());
        CHECK(betti(mp.complex) == betti(m.complex));
        CHECK(betti(cone(mp.complex, mp.omega)) == betti(cone(m.complex, m.omega)));
    }

    // CDGA-level and complex-level tensor products agree
    const FormalModel f = tensor_product(t2.complex, t2.omega, t2.complex, t2.omega);
    CHECK(betti(cone(f.complex, f.omega)) == betti(cone(t4.complex, t4.omega)));
}

TEST_CASE("random nilpotent models") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 30; ++t) {
        const int n = 3 + t % 4;
        const CDGAModel m = random_nilpotent_ce(n, rng);
        const Element w = random_closed_two_form(m, rng);
        CHECK(m.differential(w).is_zero());
        const OmegaMap om = m.multiplication_matrix(w);
        const BettiVector b = betti(cone(m.complex(), om));
        CHECK(euler_characteristic(b) == 0);
        CHECK(betti(m.complex()).values[1] >= 2);
    }
}
