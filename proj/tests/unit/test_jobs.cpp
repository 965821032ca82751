#include "doctest.h"

#include "support/fixtures.hpp"
#include "tannaka/errors.hpp"
#include "tannaka/jobs/jobs.hpp"

using namespace tannaka;
using namespace tannaka::jobs;
using tannaka::testing::load_fixture;

namespace {

bool has_check(const Json& result, const std::string& name, bool pass) {
    for (const auto& c : result.at("checks"))
        if (c.at("name") == name && c.at("pass") == pass) return true;
    return false;
}

} // namespace

TEST_CASE("document kind") {
    CHECK(document_kind(load_fixture("z2_regular")) == DocumentKind::Category);
    CHECK(document_kind(load_fixture("comatrix2")) == DocumentKind::Coalgebra);
}

TEST_CASE("parse errors carry line and column") {
    try {
        parse_document("{\n  \"objects\": [\"a\",\n  ]\n}", "doc.json");
        FAIL("no exception");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).rfind("doc.json:3:3: syntax error", 0) == 0);
    }
    CHECK_THROWS_AS(parse_document("", "x"), ParseError);
}

TEST_CASE("ok is the conjunction of the checks") {
    for (const auto& name : testing::category_fixture_names()) {
        auto r = cmd_validate(load_fixture(name));
        bool all = true;
        for (const auto& c : r.json.at("checks")) all = all && c.at("pass").get<bool>();
        CHECK(r.ok() == all);
        CHECK(r.ok());
    }
    auto broken = cmd_validate(load_fixture("z2_broken"));
    CHECK_FALSE(broken.ok());
    CHECK(has_check(broken.json, "functor: relation 0: [g,g] = []@x", false));
}

TEST_CASE("reconstruct") {
    auto chars = cmd_reconstruct(load_fixture("z2_characters")).json;
    CHECK(chars.at("ok") == true);
    CHECK(chars.at("dim") == 2);
    CHECK(chars.at("grouplikes").at("elements").size() == 2);
    CHECK(chars.at("characters").at("elements").size() == 2);
    CHECK(has_check(chars, "hopf: left antipode", true));
    CHECK(has_check(chars, "well-defined: antipode", true));
    CHECK(cmd_reconstruct(load_fixture("trivial")).json.at("dim") == 1);
    auto reg = cmd_reconstruct(load_fixture("z2_regular")).json;
    CHECK(reg.at("dim") == 2);
    CHECK(reg.at("ok") == true);
    CHECK_THROWS_AS(cmd_reconstruct(load_fixture("comatrix2")), InvalidInput);
    CHECK_THROWS_AS(cmd_reconstruct(load_fixture("z2_broken")), InvalidInput);
}

TEST_CASE("rho tilde") {
    auto comatrix = cmd_rho_tilde(load_fixture("comatrix2")).json;
    CHECK(comatrix.at("rank") == 4);
    CHECK(comatrix.at("injective") == true);
    CHECK(comatrix.at("surjective") == true);
    auto trivial = cmd_rho_tilde(load_fixture("trivial_coalgebra")).json;
    CHECK(trivial.at("map") == Json::parse(R"([["1"]])"));
    CHECK(cmd_rho_tilde(load_fixture("z2_functions")).json.at("surjective") == true);
}

TEST_CASE("nat over a field override") {
    auto r = cmd_nat(load_fixture("z2_regular"), exact::Field::prime(2)).json;
    CHECK(r.at("field") == "Fp:2");
    // Over F_2 the swap is unipotent: its centralizer is still 2-dimensional.
    CHECK(r.at("nat_dim") == 2);
    CHECK(r.at("ok") == true);
}

TEST_CASE("characters") {
    auto r = cmd_characters(load_fixture("z3_characters")).json;
    CHECK(r.at("characters").at("elements").size() == 3);
    CHECK(r.at("ok") == true);
    auto f2 = cmd_characters(load_fixture("z2_functions"), exact::Field::prime(2)).json;
    CHECK(f2.at("ok") == true);
    CHECK(f2.at("exhaustive_maps") > 0);
}

TEST_CASE("coherence") {
    CHECK(cmd_coherence("(swap[X,Y;0] ; swap[Y,X;0])", "id[X,Y]").ok());
    auto r = cmd_coherence("swap[X,X;0]", "id[X,X]", moncat::DimAssignment{{"X", 1}}).json;
    CHECK(r.at("ok") == false);
    CHECK(r.at("matrices_equal") == true);
    CHECK_THROWS_AS(cmd_coherence("swap[X,Y;0]", "id[X,Y]"), MalformedExpression);
}

TEST_CASE("output is deterministic") {
    for (const char* name : {"z2_characters", "z3_characters"}) {
        auto a = cmd_reconstruct(load_fixture(name)).json.dump();
        auto b = cmd_reconstruct(load_fixture(name)).json.dump();
        CHECK(a == b);
    }
    auto text = render_text(cmd_validate(load_fixture("z2_broken")).json);
    CHECK(text.find("FAIL functor: relation 0") != std::string::npos);
    CHECK(text.find("FAILED: 1/2 checks passed") != std::string::npos);
}
