#include "doctest.h"

#include "symsemi/census.hpp"
#include "symsemi/errors.hpp"

#include <algorithm>
#include <random>

using namespace symsemi;

namespace {

ZeroCensus zeros(std::vector<DetSign> signs, std::string source = "Morse function") {
    std::vector<ZeroRecord> z;
    for (std::size_t i = 0; i < signs.size(); ++i) z.push_back({"p" + std::to_string(i), signs[i]});
    return ZeroCensus(std::move(source), false, std::move(z));
}

ZeroCensus plus(std::size_t n) { return zeros(std::vector<DetSign>(n, DetSign::plus)); }

} // namespace

TEST_CASE("counting check on the worked examples") {
    CHECK(counting_check(1, plus(3), 4).outcome == Outcome::pass);
    CHECK(counting_check(0, plus(4), 4).outcome == Outcome::pass);
    const auto t2 = counting_check(1, plus(4), 2);
    CHECK(t2.outcome == Outcome::not_applicable);
    CHECK(t2.note.find("mismatch") != std::string::npos);
    CHECK(counting_check(1, plus(2), 4).outcome == Outcome::fail);
    CHECK(counting_check(1, plus(2), 4).nondegeneracy == "asserted by user");
    CHECK_THROWS_AS(counting_check(1, plus(2), 3), OddDimension);
}

TEST_CASE("nonvanishing census") {
    const ZeroCensus nv("nonvanishing field", true, {});
    for (int n : {4, 8, 12}) {
        CHECK(counting_check(0, nv, n).outcome == Outcome::pass);
        CHECK(counting_check(1, nv, n).outcome == Outcome::fail);
    }
    CHECK(euler_cross_check(nv, 0).outcome == Outcome::pass);
    CHECK_THROWS_AS(ZeroCensus("bad", true, {{"p", DetSign::plus}}), ShapeMismatch);
}

TEST_CASE("Euler cross check") {
    CHECK(euler_cross_check(plus(4), 4).outcome == Outcome::pass);
    CHECK(euler_cross_check(zeros({DetSign::plus, DetSign::minus}), 0).outcome == Outcome::pass);
    CHECK(euler_cross_check(plus(3), 4).outcome == Outcome::fail);
    CHECK_THROWS_AS(euler_cross_check(zeros({DetSign::plus, DetSign::unknown}), 0), MissingSigns);
}

TEST_CASE("verdicts ignore labels and order") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        std::vector<ZeroRecord> z;
        const std::size_t n = rng() % 7;
        for (std::size_t i = 0; i < n; ++i) z.push_back({"q" + std::to_string(rng() % 100), DetSign::plus});
        auto shuffled = z;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        for (auto& r : shuffled) r.label += "'";
        const int k = static_cast<int>(rng() % 2);
        const int dim = 2 * static_cast<int>(rng() % 6);
        CHECK(counting_check(k, ZeroCensus("a", false, z), dim).outcome ==
              counting_check(k, ZeroCensus("b", false, shuffled), dim).outcome);
    }
}

TEST_CASE("sign names") {
    CHECK(parse_det_sign("+") == DetSign::plus);
    CHECK(parse_det_sign("-") == DetSign::minus);
    CHECK(det_sign_name(DetSign::unknown) == "unknown");
    CHECK_THROWS_AS(parse_det_sign("?"), ParseError);
}
