#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <spinstat/io.hpp>

using namespace spinstat;

TEST_CASE("parsing the Cliff(2) super theory file") {
    TheorySpec ref = catalog_entry("super-cliff2");
    std::string text = serialize_theory(ref);
    ParsedDocument doc = parse_document(text);
    REQUIRE(doc.has_kind);
    CHECK(doc.spec.kind == TheoryKind::HermitianSuper);
    CHECK(doc.spec.algebra.dim == 4);
    REQUIRE(doc.spec.trace.has_value());
    CHECK(doc.spec.trace->covector[3] == GaussianRational::i());
    CHECK_NOTHROW(build_theory(doc.spec));
}

TEST_CASE("print then parse is the identity on every catalog entry") {
    for (const auto& name : catalog_names()) {
        TheorySpec spec = catalog_entry(name);
        std::string once = serialize_theory(spec);
        ParsedDocument doc = parse_document(once);
        std::string twice = serialize_theory(build_theory(doc.spec));
        CHECK(once == twice);
    }
}

TEST_CASE("schema errors") {
    // parity length mismatch is reported on the parity field
    try {
        parse_document(R"({"dim": 2, "parity": [0, 0, 0],
            "structure": [[["1","0"],["0","0"]],[["0","0"],["0","0"]]],
            "unit": ["1","0"]})");
        FAIL("expected schema_error");
    } catch (const schema_error& e) {
        CHECK(e.field == "parity");
    }
    // unknown key (strict mode)
    try {
        parse_document(R"({"dim": 0, "parity": [], "structure": [], "unit": [], "extra": 1})");
        FAIL("expected schema_error");
    } catch (const schema_error& e) {
        CHECK(e.field == "extra");
    }
    // phi and Phi are mutually exclusive
    CHECK_THROWS_AS(parse_document(R"({"dim": 1, "parity": [0], "structure": [[["1"]]],
        "unit": ["1"], "phi": [["1"]], "Phi": [["1"]]})"),
                    schema_error);
    // bad kind
    CHECK_THROWS_AS(parse_document(R"({"dim": 1, "parity": [0], "structure": [[["1"]]],
        "unit": ["1"], "kind": "bogus"})"),
                    schema_error);
    // bad flavor
    CHECK_THROWS_AS(parse_document(R"({"dim": 1, "parity": [0], "structure": [[["1"]]],
        "unit": ["1"], "star": {"matrix": [["1"]], "flavor": "x"}})"),
                    schema_error);
    // missing required field
    CHECK_THROWS_AS(parse_document(R"({"dim": 1, "parity": [0], "unit": ["1"]})"), schema_error);
}

TEST_CASE("scalar format errors surface from the parser") {
    CHECK_THROWS_AS(parse_document(R"({"dim": 1, "parity": [0], "structure": [[["oops"]]],
        "unit": ["1"]})"),
                    scalar_format_error);
    // the canonical grammar accepts a signed imaginary numerator
    ParsedDocument doc = parse_document(R"({"dim": 1, "parity": [0],
        "structure": [[["1/2+-1/3*i"]]], "unit": ["1"]})");
    CHECK(doc.spec.algebra.sc(0, 0, 0) == GaussianRational(Rational(1, 2), Rational(-1, 3)));
}

TEST_CASE("syntax errors carry line and column") {
    try {
        parse_document("{\n  \"dim\": 1,\n  oops\n}");
        FAIL("expected syntax_error");
    } catch (const syntax_error& e) {
        CHECK(e.line == 3);
        CHECK(e.column >= 1);
    }
}

TEST_CASE("machine rendering is deterministic") {
    TheorySpec spec = catalog_entry("spin-phi-minus-one");
    CHECK(serialize_theory(spec) == serialize_theory(catalog_entry("spin-phi-minus-one")));
    RpResult r1 = is_reflection_positive(spec);
    RpResult r2 = is_reflection_positive(catalog_entry("spin-phi-minus-one"));
    CHECK(to_string(r1.circle.gram) == to_string(r2.circle.gram));
    CHECK(r1.route == r2.route);
}
