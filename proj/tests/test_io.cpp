#include <doctest.h>

#include <string>

#include "covsys/error.hpp"
#include "covsys/io.hpp"

#include "helpers.hpp"

using namespace covsys;
using covsys_test::irreducible13;
using covsys_test::mk;

TEST_CASE("text format round trip") {
    std::string text = "# a comment\n0 2\n\n1 4   # trailing comment\n3 4\n";
    Ecs parsed = parse_ecs_text(text);
    CHECK(parsed == mk({{0, 2}, {1, 4}, {3, 4}}));
    CHECK(parse_ecs_text(format_ecs_text(parsed)) == parsed);
}

TEST_CASE("text format normalizes raw residues") {
    CHECK(parse_ecs_text("7 4\n-1 2\n") == mk({{3, 4}, {1, 2}}));
}

TEST_CASE("text parse errors carry line and column") {
    try {
        parse_ecs_text("0 2\n1 x\n");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
        CHECK(std::string(e.what()).find("column 3") != std::string::npos);
    }
    try {
        parse_ecs_text("0 2 5\n");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 1") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_ecs_text("1 0\n"), Error);  // zero modulus
    CHECK_THROWS_AS(parse_ecs_text("# nothing\n"), Error);
    CHECK_THROWS_AS(parse_ecs_text("0\n"), Error);
    CHECK_THROWS_AS(parse_ecs_text("99999999999999999999 3\n"), Error);
}

TEST_CASE("json format round trip") {
    std::string text = R"({"classes": [[0, 2], [5, 4], [3, 4]]})";
    Ecs parsed = parse_ecs_json(text);
    CHECK(parsed == mk({{0, 2}, {1, 4}, {3, 4}}));
    CHECK(parse_ecs_json(format_ecs_json(parsed)) == parsed);
}

TEST_CASE("json parse errors") {
    CHECK_THROWS_AS(parse_ecs_json("{"), Error);
    CHECK_THROWS_AS(parse_ecs_json("[]"), Error);
    CHECK_THROWS_AS(parse_ecs_json(R"({"classes": [[1]]})"), Error);
    CHECK_THROWS_AS(parse_ecs_json(R"({"classes": [[1, 0]]})"), Error);
    CHECK_THROWS_AS(parse_ecs_json(R"({"classes": []})"), Error);
}

TEST_CASE("format detection") {
    CHECK(parse_ecs_auto("  {\"classes\": [[0, 1]]}") == Ecs::trivial());
    CHECK(parse_ecs_auto("0 1\n") == Ecs::trivial());
    CHECK_THROWS_AS(parse_ecs_auto("   "), Error);
}

TEST_CASE("both formats agree through normalization") {
    Ecs fixture = irreducible13();
    CHECK(parse_ecs_auto(format_ecs_text(fixture)) == fixture);
    CHECK(parse_ecs_auto(format_ecs_json(fixture)) == fixture);
}

TEST_CASE("trace json round trip and replay") {
    Ecs system = mk({{0, 2}, {1, 4}, {3, 4}});
    ReductionTrace trace = reduce_to_trivial(system);
    std::string encoded = format_trace_json(trace);
    ReductionTrace decoded = parse_trace_json(encoded);
    CHECK(decoded == trace);
    CHECK(replay(decoded) == system);
}

TEST_CASE("trace json validation") {
    CHECK(parse_trace_json(R"({"steps": []})").steps.empty());
    CHECK_THROWS_AS(parse_trace_json("[]"), Error);
    CHECK_THROWS_AS(parse_trace_json(R"({"steps": [{"residue": 0}]})"), Error);
    CHECK_THROWS_AS(
        parse_trace_json(R"({"steps": [{"residue": 0, "modulus": 1, "prime": 4}]})"), Error);
}
