#include <doctest.h>

#include <sstream>

#include "reglab/families.hpp"
#include "reglab/presentation_io.hpp"

using namespace reglab;

namespace {
Ring uvw(FieldSpec f = FieldSpec::rationals()) { return Ring::make(f, {"u", "v", "w"}); }
}  // namespace

TEST_CASE("polynomial parser handles coefficients, powers and signs") {
    Ring r = uvw();
    Polynomial u = Polynomial::variable(r, 0);
    Polynomial v = Polynomial::variable(r, 1);
    Polynomial w = Polynomial::variable(r, 2);

    CHECK(parse_polynomial(r, "0").is_zero());
    CHECK(parse_polynomial(r, "") .is_zero());
    CHECK(parse_polynomial(r, "u") == u);
    CHECK(parse_polynomial(r, "v^2 + 3*w*u") == v * v + (w * u).scaled(Rational(3)));
    CHECK(parse_polynomial(r, "-u + 2*v") == v.scaled(Rational(2)) - u);
    CHECK(parse_polynomial(r, "1/2*u^3") == (u * u * u).scaled(Rational(1, 2)));
    CHECK(parse_polynomial(r, " u * v - v * u ").is_zero());

    CHECK_THROWS_AS(parse_polynomial(r, "q + 1"), parse_error);
    CHECK_THROWS_AS(parse_polynomial(r, "u +"), parse_error);
    CHECK_THROWS_AS(parse_polynomial(r, "u ^"), parse_error);
}

TEST_CASE("printing and parsing round-trip") {
    Ring r = uvw();
    Polynomial p = parse_polynomial(r, "2*u^2 - 1/3*v*w + w^4");
    CHECK(parse_polynomial(r, p.str()) == p);
}

TEST_CASE("presentation files round-trip across both families") {
    example1::Params p1{2, FieldSpec::rationals()};
    std::vector<PresentedModule> modules = {
        PresentedModule::cokernel(example1::phi(p1, 3)),
        PresentedModule::kernel(example2::phi(2)),
        example2::quotient_by_coefficient_ideal(3),
    };
    for (const auto& mod : modules) {
        std::stringstream buffer;
        save_presentation(mod, buffer);
        PresentedModule loaded = load_presentation(buffer);
        CHECK(loaded.kind == mod.kind);
        CHECK(loaded.map.entries_equal(mod.map));
        CHECK(loaded.map.domain().twists() == mod.map.domain().twists());
        CHECK(loaded.map.codomain().twists() == mod.map.codomain().twists());
        CHECK(loaded.ring().same_as(mod.ring()));
    }
}

TEST_CASE("loading rejects malformed and non-homogeneous input") {
    std::stringstream bad1("this is not json");
    CHECK_THROWS_AS(load_presentation(bad1), parse_error);

    std::stringstream bad2(R"({
      "ring": {"characteristic": 0, "variables": ["u","v"]},
      "kind": "cokernel",
      "module": {"row_twists": [0], "col_twists": [2], "entries": [["u"]]}
    })");
    CHECK_THROWS_AS(load_presentation(bad2), homogeneity_error);

    std::stringstream bad3(R"({
      "ring": {"characteristic": 4, "variables": ["u"]},
      "kind": "cokernel",
      "module": {"row_twists": [0], "col_twists": [1], "entries": [["u"]]}
    })");
    CHECK_THROWS_AS(load_presentation(bad3), parameter_error);
}

TEST_CASE("report serializations carry the documented keys") {
    RegularityReport rep;
    rep.regularity = -3;
    rep.indeg = -4;
    rep.certified = true;
    rep.method = RegularityReport::Method::betti;
    std::string j = to_json(rep);
    CHECK(j.find("\"regularity\":-3") != std::string::npos);
    CHECK(j.find("\"indeg\":-4") != std::string::npos);
    CHECK(j.find("\"certified\":true") != std::string::npos);
    CHECK(j.find("\"method\":\"betti\"") != std::string::npos);

    RegularityReport zero;
    zero.certified = true;
    zero.method = RegularityReport::Method::artinian_top_degree;
    std::string jz = to_json(zero);
    CHECK(jz.find("\"regularity\":null") != std::string::npos);
    CHECK(jz.find("\"indeg\":null") != std::string::npos);

    BettiTable t;
    t.add(0, 0, 1);
    t.add(1, 2, 3);
    t.degree_cap = 10;
    t.homological_cap = 4;
    t.complete = true;
    std::string jt = to_json(t);
    CHECK(jt.find("\"j\":1") != std::string::npos);
    CHECK(jt.find("\"d\":2") != std::string::npos);
    CHECK(jt.find("\"rank\":3") != std::string::npos);

    LinearFit fit;
    fit.parity = 1;
    fit.slope = -2;
    fit.intercept = 0;
    fit.onset = 2;
    fit.verdict = LinearFit::Verdict::eventually_linear;
    std::string jf = to_json(fit);
    CHECK(jf.find("\"parity\":1") != std::string::npos);
    CHECK(jf.find("\"slope\":-2") != std::string::npos);
    CHECK(jf.find("\"verdict\":\"eventually_linear\"") != std::string::npos);
}

TEST_CASE("an exported presentation reproduces the same regularity report") {
    PresentedModule coker4 = PresentedModule::cokernel(example2::phi(4));
    std::stringstream buffer;
    save_presentation(coker4, buffer);
    PresentedModule loaded = load_presentation(buffer);
    RegularityReport direct = regularity(coker4, 15);
    RegularityReport via_file = regularity(loaded, 15);
    CHECK(direct.regularity == via_file.regularity);
    CHECK(direct.regularity == std::optional<int>(9));  // 2(2^2-1) + 4 - 1
    CHECK(direct.indeg == via_file.indeg);
    CHECK(direct.certified);
    CHECK(via_file.certified);
}
