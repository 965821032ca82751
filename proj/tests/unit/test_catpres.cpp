#include "doctest.h"

#include "support/fixtures.hpp"
#include "support/random.hpp"
#include "tannaka/catpres/category.hpp"
#include "tannaka/moncat/pairing.hpp"

using namespace tannaka;
using namespace tannaka::catpres;
using tannaka::testing::category_fixture;
using tannaka::testing::Rng;

namespace {

bool has_failure_named(const Report& r, const std::string& fragment) {
    for (const auto& c : r.checks())
        if (!c.passed && c.name.find(fragment) != std::string::npos) return true;
    return false;
}

} // namespace

TEST_SUITE("path_eval") {
    TEST_CASE("identity, single generator and composition order") {
        PresentedCategory c({"a", "b"}, {{"g", "a", "b"}, {"h", "b", "b"}});
        FiberFunctor f;
        f.on_objects = {{"a", 2}, {"b", 2}};
        f.on_generators["g"] = Matrix::of({{1, 2}, {0, 1}});
        f.on_generators["h"] = Matrix::of({{0, 1}, {1, 0}});
        CHECK(path_eval(c, f, Path::identity("a")).is_identity());
        CHECK(path_eval(c, f, Path::of({"g"})) == f.image("g"));
        CHECK(path_eval(c, f, Path::of({"g", "h"})) == f.image("h") * f.image("g"));
        CHECK(f.image("h") * f.image("g") != f.image("g") * f.image("h"));
    }

    TEST_CASE("errors") {
        PresentedCategory c({"a", "b"}, {{"g", "a", "b"}});
        FiberFunctor f;
        f.on_objects = {{"a", 1}, {"b", 1}};
        f.on_generators["g"] = Matrix::of({{3}});
        CHECK_THROWS_AS(path_eval(c, f, Path::of({"g", "g"})), InvalidInput);
        CHECK_THROWS_AS(path_eval(c, f, Path::of({"nope"})), InvalidInput);
        CHECK_THROWS_AS(path_eval(c, f, Path{}), InvalidInput);
        CHECK_THROWS_AS(PresentedCategory({"a"}, {{"g", "a", "z"}}), InvalidInput);
        CHECK_THROWS_AS(PresentedCategory({"a", "b"}, {{"g", "a", "b"}}, {{Path::of({"g"}), Path::identity("a")}}),
                        InvalidInput);
    }
}

TEST_SUITE("validate_functor") {
    TEST_CASE("z2 regular representation is a functor") {
        auto doc = category_fixture("z2_regular");
        CHECK(validate_functor(doc.category, doc.functor).ok());
    }

    TEST_CASE("a non-involution breaks g g = id") {
        auto doc = category_fixture("z2_broken");
        Report r = validate_functor(doc.category, doc.functor);
        CHECK_FALSE(r.ok());
        CHECK(has_failure_named(r, "relation 0: [g,g] = []@x"));
    }

    TEST_CASE("no relations is always valid") {
        Rng rng(31);
        for (int trial = 0; trial < 20; ++trial) {
            auto inst = testing::random_relation_free(rng, 3, 4, 3);
            CHECK(validate_functor(inst.category, inst.functor).ok());
        }
        auto doc = category_fixture("empty");
        CHECK(validate_functor(doc.category, doc.functor).ok());
    }

    TEST_CASE("missing or misshapen images are reported") {
        PresentedCategory c({"a"}, {{"g", "a", "a"}});
        FiberFunctor f;
        f.on_objects = {{"a", 2}};
        CHECK(has_failure_named(validate_functor(c, f), "generator g: image given"));
        f.on_generators["g"] = Matrix::of({{1}});
        CHECK(has_failure_named(validate_functor(c, f), "generator g: shape"));
    }

    TEST_CASE("relations propagate through longer words") {
        // In Z/2 = <g | g g = id>, any word equals g^(length mod 2); substituting
        // the relation anywhere must not change the evaluation.
        auto doc = category_fixture("z2_regular");
        Rng rng(32);
        for (int trial = 0; trial < 50; ++trial) {
            auto len = testing::uniform_int(rng, 0, 7);
            std::vector<std::string> word(static_cast<std::size_t>(len), "g");
            auto pos = static_cast<std::size_t>(testing::uniform_int(rng, 0, len));
            std::vector<std::string> rewritten = word;
            rewritten.insert(rewritten.begin() + static_cast<long>(pos), {"g", "g"});
            CHECK(path_eval(doc.category, doc.functor, Path{"x", word}) ==
                  path_eval(doc.category, doc.functor, Path{"x", rewritten}));
        }
    }
}

TEST_SUITE("tensor data") {
    TEST_CASE("character category of Z/2") {
        auto doc = category_fixture("z2_characters");
        REQUIRE(doc.tensor);
        Report r = validate_tensor_data(doc.category, doc.functor, *doc.tensor);
        CHECK(r.ok());
    }

    TEST_CASE("other fixtures") {
        for (const char* name : {"trivial", "z2_characters_signed", "z3_characters"}) {
            auto doc = category_fixture(name);
            REQUIRE(doc.tensor);
            CHECK_MESSAGE(validate_tensor_data(doc.category, doc.functor, *doc.tensor).ok(), name);
        }
    }

    TEST_CASE("rescaling s(s,s) gives another tensor structure") {
        // s(s,s) = 2 is the coboundary of the cochain s -> sqrt-free scaling
        // and satisfies every diagram; only the unit-adjacent maps are pinned.
        auto doc = category_fixture("z2_characters");
        doc.tensor->s[{"s", "s"}] = Matrix::of({{2}});
        CHECK(validate_tensor_data(doc.category, doc.functor, *doc.tensor).ok());
    }

    TEST_CASE("rescaling s(1,s) breaks a unit diagram") {
        auto doc = category_fixture("z2_characters");
        doc.tensor->s[{"1", "s"}] = Matrix::of({{2}});
        Report r = validate_tensor_data(doc.category, doc.functor, *doc.tensor);
        CHECK(has_failure_named(r, "left unit diagram s"));
    }

    TEST_CASE("naturality failure") {
        auto doc = category_fixture("z2_characters_signed");
        doc.tensor->on_generators[0].right = Path::identity("1");  // c (x) id_s should be d, not id
        Report r = validate_tensor_data(doc.category, doc.functor, *doc.tensor);
        CHECK(has_failure_named(r, "s natural in the left factor: c*s"));
    }

    TEST_CASE("table and rule errors") {
        auto doc = category_fixture("z2_characters");
        doc.tensor->table[{"s", "s"}] = "s";
        CHECK_FALSE(validate_tensor_data(doc.category, doc.functor, *doc.tensor).ok());

        auto signed_doc = category_fixture("z2_characters_signed");
        signed_doc.tensor->on_generators.pop_back();
        CHECK(has_failure_named(validate_tensor_data(signed_doc.category, signed_doc.functor, *signed_doc.tensor),
                                "rule d*s given"));
    }

    TEST_CASE("symmetry diagram") {
        auto doc = category_fixture("z2_characters");
        doc.tensor->s[{"s", "1"}] = Matrix::of({{1}});
        CHECK(validate_tensor_data(doc.category, doc.functor, *doc.tensor).ok());
        doc.tensor->symmetry.erase({"s", "s"});
        CHECK(has_failure_named(validate_tensor_data(doc.category, doc.functor, *doc.tensor), "symmetry diagram (s, s)"));
    }
}

TEST_SUITE("duality data") {
    TEST_CASE("fixtures validate") {
        for (const char* name : {"trivial", "z2_characters", "z2_characters_signed", "z3_characters"}) {
            auto doc = category_fixture(name);
            REQUIRE(doc.duality);
            CHECK_MESSAGE(validate_duality_data(doc.category, doc.functor, *doc.tensor, *doc.duality).ok(), name);
        }
    }

    TEST_CASE("scaling eta by 2 breaks a triangle") {
        auto doc = category_fixture("z2_characters");
        PresentedCategory c({"1", "s"}, {{"two", "1", "1"}});
        doc.functor.on_generators["two"] = Matrix::of({{2}});
        doc.duality->eta["s"] = Path::of({"two"});
        Report r = validate_duality_data(c, doc.functor, *doc.tensor, *doc.duality);
        CHECK_FALSE(r.ok());
        CHECK(has_failure_named(r, "duality s: triangle"));
        CHECK(validate_duality_data(c, doc.functor, *doc.tensor, {doc.duality->dual_of, {}, {}}).failures() == 2);
    }

    TEST_CASE("evaluated pairings pass the moncat triangle check") {
        auto doc = category_fixture("z3_characters");
        for (const auto& obj : doc.category.objects()) {
            auto ev = evaluate_duality(doc.category, doc.functor, *doc.tensor, *doc.duality, obj);
            CHECK(moncat::check_triangles({doc.functor.dim(ev.dual), ev.eps, ev.eta}));
        }
    }

    TEST_CASE("duals of generators commute with the pairing") {
        // eps_Y (g (x) id) = eps_X (id (x) g^), and through the identification
        // kappa_C: F(C^) -> F(C)^v read off eps, g^ matches the standard dual.
        auto doc = category_fixture("z2_characters_signed");
        for (const auto& g : doc.category.generators()) {
            auto dx = evaluate_duality(doc.category, doc.functor, *doc.tensor, *doc.duality, g.src);
            auto dy = evaluate_duality(doc.category, doc.functor, *doc.tensor, *doc.duality, g.dst);
            const Matrix& fg = doc.functor.image(g.name);
            Matrix gh = dual_of_map(fg, dx, dy);
            const std::size_t yh = doc.functor.dim(dy.dual), xh = doc.functor.dim(dx.dual);
            CHECK(dy.eps * exact::kron(fg, Matrix::identity(yh)) == dx.eps * exact::kron(Matrix::identity(fg.cols()), gh));
            auto kappa = [](const EvaluatedDuality& d, std::size_t n, std::size_t nh) {
                Matrix k(n, nh);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t b = 0; b < nh; ++b) k(i, b) = d.eps(0, i * nh + b);
                return k;
            };
            Matrix kx = kappa(dx, fg.cols(), xh), ky = kappa(dy, fg.rows(), yh);
            auto std_x = moncat::standard_pairing(fg.cols()), std_y = moncat::standard_pairing(fg.rows());
            CHECK(kx * gh == moncat::dual_map(fg, std_y, std_x) * ky);
        }
    }

    TEST_CASE("missing data") {
        auto doc = category_fixture("z2_characters");
        doc.duality->dual_of.erase("s");
        CHECK(has_failure_named(validate_duality_data(doc.category, doc.functor, *doc.tensor, *doc.duality), "duality s"));
    }
}

TEST_SUITE("morphism spans") {
    TEST_CASE("z2 regular representation") {
        auto doc = category_fixture("z2_regular");
        auto span = morphism_image_span(doc.category, doc.functor, "x", "x");
        CHECK(span.dim() == 2);
    }

    TEST_CASE("unreachable target gives zero") {
        PresentedCategory c({"a", "b"}, {{"g", "a", "b"}});
        FiberFunctor f;
        f.on_objects = {{"a", 1}, {"b", 2}};
        f.on_generators["g"] = Matrix::of({{1}, {1}});
        CHECK(morphism_image_span(c, f, "b", "a").dim() == 0);
        CHECK(morphism_image_span(c, f, "a", "b").dim() == 1);
    }
}

TEST_SUITE("document parsing") {
    TEST_CASE("paths") {
        CHECK(path_from_json(exact::Json::parse(R"(["g","h"])"), std::nullopt, "p").steps.size() == 2);
        Path p = path_from_json(exact::Json::parse(R"({"at":"x","path":[]})"), std::nullopt, "p");
        CHECK(*p.at == "x");
        CHECK_THROWS_AS(path_from_json(exact::Json::parse("[]"), std::nullopt, "p"), ParseError);
        CHECK(path_to_json(p) == exact::Json::parse(R"({"at":"x","path":[]})"));
    }

    TEST_CASE("field override and schema errors") {
        auto doc = category_fixture("z2_regular", exact::Field::prime(2));
        CHECK(doc.field == exact::Field::prime(2));
        CHECK(doc.functor.image("g").field() == exact::Field::prime(2));
        CHECK_THROWS_AS(category_document_from_json(exact::Json::parse(R"({"objects":["a"]})")), ParseError);
        CHECK_THROWS_AS(category_document_from_json(exact::Json::parse(
                            R"({"objects":["a"],"functor":{"on_objects":{"a":1},"on_generators":{"g":[["1"]]}}})")),
                        InvalidInput);
        CHECK_THROWS_AS(category_document_from_json(exact::Json::parse(
                            R"({"objects":["a"],"generators":[{"name":"g","src":"a","dst":"a"}],
                                "functor":{"on_objects":{"a":1},"on_generators":{"g":[["1","2"]]}}})")),
                        DimensionMismatch);
    }
}
