#include "doctest.h"

#include "symsemi/analysis.hpp"
#include "symsemi/errors.hpp"
#include "symsemi/io.hpp"
#include "symsemi/report.hpp"

using namespace symsemi;
using nlohmann::json;

namespace {

const char* kKt = R"({
  "kind": "cdga", "manifold_dim": 4,
  "generators": [{"name": "e1", "degree": 1}, {"name": "e2", "degree": 1},
                 {"name": "e3", "degree": 1}, {"name": "e4", "degree": 1}],
  "differential": {"e4": [[-1, ["e2", "e3"]]]},
  "omega": [[1, ["e1", "e2"]], [1, ["e3", "e4"]]]
})";

const char* kT2 = R"({
  "kind": "matrix", "manifold_dim": 2, "dims": [1, 2, 1],
  "d": [[[0], [0]], [[0, 0]]],
  "omega": [[["1"]]]
})";

json with(const char* base, const std::string& key, const json& value) {
    json j = json::parse(base);
    j[key] = value;
    return j;
}

} // namespace

TEST_CASE("model files") {
    const SymplecticModel kt = io::parse_model(json::parse(kKt), "kt");
    CHECK(betti(kt.complex).values == std::vector<long>{1, 3, 4, 3, 1});
    CHECK(betti(cone(kt.complex, kt.omega)) == betti(cone(builtin("kodaira_thurston").complex, builtin("kodaira_thurston").omega)));
    CHECK(kt.omega_text == "e1*e2 + e3*e4");

    const SymplecticModel t2 = io::parse_model(json::parse(kT2), "t2");
    CHECK(betti(cone(t2.complex, t2.omega)).values == std::vector<long>{1, 2, 2, 1});
    CHECK(check_symplectic(t2).pass());

    CHECK(io::load_model("builtin:cp2").name == "cp2");
    CHECK_THROWS_AS(io::load_model("builtin:rp2"), UnknownName);
    CHECK_THROWS_AS(io::load_model("/nonexistent/model.json"), ParseError);
}

TEST_CASE("model file errors") {
    json nokind = json::parse(kKt);
    nokind.erase("kind");
    CHECK_THROWS_AS(io::parse_model(nokind, "x"), ParseError);
    CHECK_THROWS_AS(io::parse_model(with(kKt, "kind", "simplicial"), "x"), ParseError);
    CHECK_THROWS_AS(io::parse_model(json::array(), "x"), ParseError);
    CHECK_THROWS_AS(io::parse_model(with(kKt, "omega", json::parse(R"([[1, ["e1", "e4"]]])")), "x"), NotClosed);
    CHECK_THROWS_AS(io::parse_model(with(kKt, "omega", json::parse(R"([[1, ["e1", "e9"]]])")), "x"), UnknownName);
    CHECK_THROWS_AS(io::parse_model(with(kKt, "omega", json::parse(R"([[1, ["e1"]]])")), "x"), ShapeMismatch);
    CHECK_THROWS_AS(io::parse_model(with(kKt, "omega", json::parse(R"([["1/x", ["e1", "e2"]]])")), "x"), ParseError);
    CHECK_THROWS_AS(io::parse_model(with(kKt, "differential",
                                         json::parse(R"({"e3": [[1, ["e1", "e4"]]], "e4": [[-1, ["e2", "e3"]]]})")),
                                    "x"),
                    JacobiViolation);
    CHECK_THROWS_AS(io::parse_model(with(kT2, "d", json::parse("[[[0]], [[0, 0]]]")), "x"), ShapeMismatch);
    CHECK_THROWS_AS(io::parse_model(with(kT2, "d", json::parse("[[[1], [0]], [[1, 0]]]")), "x"), NotAComplex);
    CHECK_THROWS_AS(io::parse_model(with(kT2, "omega", json::parse("[[[1, 2]]]")), "x"), ShapeMismatch);
    CHECK_THROWS_AS(io::parse_model(with(kT2, "dims", json::parse("[1, -2, 1]")), "x"), ParseError);
}

TEST_CASE("census files") {
    const ZeroCensus c = io::parse_census(json::parse(
        R"({"source": "Morse", "nonvanishing": false, "zeros": [{"label": "p", "det_sign": "+"}, {"label": "q", "det_sign": "-"}]})"));
    CHECK(c.count() == 2);
    CHECK(c.zeros()[1].det_sign == DetSign::minus);
    const ZeroCensus back = io::parse_census(io::census_to_json(c));
    CHECK(io::census_to_json(back) == io::census_to_json(c));

    const ZeroCensus nv = io::parse_census(json::parse(R"({"source": "flow", "nonvanishing": true})"));
    CHECK(nv.nonvanishing());
    CHECK(nv.count() == 0);

    CHECK_THROWS_AS(io::parse_census(json::parse(R"({"nonvanishing": true, "zeros": [{"label": "a"}]})")), ShapeMismatch);
    CHECK_THROWS_AS(io::parse_census(json::parse(R"({"zeros": [{"label": "a", "det_sign": "0"}]})")), ParseError);
    CHECK_THROWS_AS(io::parse_census(json::parse(R"({"zeros": 3})")), ParseError);
    CHECK_THROWS_AS(io::parse_census(json::parse("[1]")), ParseError);
}

TEST_CASE("matrix text and T lists") {
    const SparseMat a = io::parse_matrix_text("# A\n1, 1/2\n-3\t0 # tail\n\n");
    CHECK(a.rows() == 2);
    CHECK(a.at(0, 1) == Rational(1, 2));
    CHECK(a.at(1, 0) == Rational(-3));
    CHECK_THROWS_AS(io::parse_matrix_text("1 2\n3\n"), ParseError);
    CHECK_THROWS_AS(io::parse_matrix_text("# nothing\n"), ParseError);
    CHECK_THROWS_AS(io::parse_matrix_text("1 x\n"), ParseError);

    CHECK(io::parse_rational_list("1, 4,16") == std::vector<Rational>{1, 4, 16});
    CHECK(io::parse_rational_list("1/2") == std::vector<Rational>{Rational(1, 2)});
    CHECK_THROWS_AS(io::parse_rational_list("1,,2"), ParseError);
    CHECK_THROWS_AS(io::parse_rational_list("t"), ParseError);
}

TEST_CASE("analysis sections") {
    const ModelSection cp2 = analyze_model(builtin("cp2"));
    CHECK(cp2.cone_betti == std::vector<long>{1, 0, 0, 0, 0, 1});
    CHECK(cp2.k == 1);
    CHECK(cp2.chi == 0);
    CHECK(cp2.duality_observed);
    CHECK(cp2.harmonic == cp2.cone_betti);

    const SymplecticModel t4 = builtin("t4");
    const SymplecticModel degenerate = make_model("t4 degenerate", *t4.cdga, t4.cdga->word({"e1", "e2"}));
    CHECK_THROWS_AS(analyze_model(degenerate), Degenerate);
    const ModelSection allowed = analyze_model(degenerate, 0, true);
    CHECK_FALSE(allowed.nondegenerate);
    CHECK(allowed.degeneracy_allowed);

    const CensusSection skipped = analyze_census(1, ZeroCensus("s", false, {{"a", DetSign::unknown}}), 4, 3);
    CHECK(skipped.outcome == "pass");
    CHECK(skipped.euler_outcome.rfind("skipped", 0) == 0);
    CHECK_FALSE(skipped.euler_signed_sum);

    CHECK_THROWS_AS(run_clifford(3, "all", Mode::exact), BadDimension);
    CHECK_THROWS_AS(run_clifford(4, "all", Mode::floating), BadDimension);
    CHECK_THROWS_AS(run_clifford(1, "spin", Mode::exact), ParseError);
    CHECK(run_clifford(1, "car", Mode::exact).pass());
}

TEST_CASE("oscillator run falls back to float without a rational root") {
    SparseMat shear = SparseMat::identity(4);
    shear.set(0, 1, 1);
    const OscillatorRun run = run_oscillator(shear, {1, 4, 16}, 2, Mode::exact);
    CHECK(run.section.mode == "float");
    REQUIRE(run.warnings.size() == 1);
    CHECK(run.verdict.pass());
    CHECK_FALSE(run.section.C1_squared);

    const OscillatorRun id = run_oscillator(SparseMat::identity(4), {1, 4, 16}, 2, Mode::exact);
    CHECK(id.section.mode == "exact");
    CHECK(id.section.C1_squared == std::optional<std::string>("1/8"));
    CHECK(id.section.kernel_dim == 1);
    CHECK(id.section.parity == "even");

    SparseMat singular = SparseMat::identity(4);
    singular.set(3, 3, 0);
    CHECK_THROWS_AS(run_oscillator(singular, {1, 4, 16}, 2, Mode::exact), Singular);
}

TEST_CASE("report JSON round trip") {
    Report r;
    r.command = "verify";
    r.mode = "exact";
    const SymplecticModel s = builtin("s2xs2");
    r.model = analyze_model(s);
    r.census = analyze_census(r.model->k, ZeroCensus("Morse", false, {{"a", DetSign::plus}, {"b", DetSign::minus}}), 4, 4);
    r.oscillator = run_oscillator(SparseMat::identity(4), {1, 4, 16}, 2, Mode::exact).section;
    r.checks.push_back({"residual_check", true, "detail", 1.5e-13});
    r.checks.push_back({"plain", false, "", {}});
    r.criteria.push_back({3, "title", true, "detail", 0.25});
    r.criteria.push_back({4, "other", false, "", {}});
    r.warnings = {"one", "two"};
    r.pass = false;
    r.timing_ms = 12.5;

    const json j = to_json(r);
    const Report back = report_from_json(json::parse(j.dump()));
    CHECK(back == r);
    CHECK(to_json(back) == j);
    CHECK(to_json(back).dump(2) == j.dump(2));

    Report minimal;
    minimal.command = "clifford";
    minimal.mode = "float";
    CHECK(report_from_json(to_json(minimal)) == minimal);

    CHECK_THROWS_AS(report_from_json(json::parse(R"({"mode": "exact"})")), ParseError);
    CHECK_THROWS_AS(report_from_json(json::parse(R"({"command": 3, "mode": "exact"})")), ParseError);

    const std::string text = to_text(r);
    CHECK(text.find("k(M,omega)       0") != std::string::npos);
    CHECK(text.find("warning: two") != std::string::npos);
}
