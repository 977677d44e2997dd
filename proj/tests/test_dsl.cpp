#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "walled/dsl.hpp"
#include "walled/rep.hpp"
#include "walled/suites.hpp"

using namespace walled;

namespace {
const Orient D = Orient::Down, U = Orient::Up;
}

TEST_CASE("types") {
    TangleType ty = parse_type("type: vv^|^vv");
    CHECK(ty.top == BoundarySeq{D, D, U});
    CHECK(ty.bottom == BoundarySeq{U, D, D});
    CHECK(render_type(ty) == "vv^|^vv");
    CHECK(parse_type(" v^ | ").bottom.empty());
    CHECK_THROWS_AS(parse_type("vv"), DslError);
    CHECK_THROWS_AS(parse_type("v|^"), DslError);
    CHECK_THROWS_AS(parse_type("kind: v|v"), DslError);
}

TEST_CASE("single crossing with header") {
    TangleWord w = parse_tangle("type: vv|vv\nX+(1)");
    REQUIRE(w.slices.size() == 1);
    CHECK(w.slices[0] == Slice::cross(1, Hand::FirstOver));
    CHECK(parse_tangle("type: vv|vv; X-(1)").slices[0].hand == Hand::FirstUnder);
}

TEST_CASE("macros") {
    TangleWord e = parse_word("E(1)", parse_type("v^|v^"));
    CHECK(e.slices == std::vector<Slice>{Slice::min(1), Slice::max(1, MaxTag::RightToLeft)});
    TangleWord e2 = parse_word("E>(1)", parse_type("v^|^v"));
    CHECK(e2.slices[1].tag == MaxTag::LeftToRight);
    TangleWord s = parse_word("S+(1) S-(1)", parse_type("v^|v^"));
    CHECK(crossing_sign(s.slices[0], {D, U}) == 1);
    CHECK(crossing_sign(s.slices[1], {U, D}) == -1);
}

TEST_CASE("positioned errors") {
    try {
        parse_word("X+(9)", parse_type("vv|vv"));
        FAIL("expected an error");
    } catch (const DslError& e) {
        CHECK(e.token() == 1);
        CHECK(std::string(e.what()).find("out of range") != std::string::npos);
    }
    try {
        parse_word("X+(1)  Q(1)", parse_type("vv|vv"));
        FAIL("expected an error");
    } catch (const DslError& e) {
        CHECK(e.token() == 2);
        CHECK(e.column() == 7);
    }
    try {
        parse_word("X+(1) U(1)", parse_type("vv|vv"));
        FAIL("expected an error");
    } catch (const DslError& e) {
        CHECK(e.token() == 2);
    }
    CHECK_THROWS_AS(parse_word("X+(x)", parse_type("vv|vv")), DslError);
    CHECK_THROWS_AS(parse_word("X+(1", parse_type("vv|vv")), DslError);
    CHECK_THROWS_AS(parse_word("X+(1)", parse_type("vv|v^")), DslError);
}

TEST_CASE("line and column in multi-line input") {
    try {
        parse_tangle("type: vv|vv\nX+(1)\n  X+(7)");
        FAIL("expected an error");
    } catch (const DslError& e) {
        CHECK(e.token() == 2);
        CHECK(e.line() == 3);
        CHECK(e.column() == 3);
        CHECK(std::string(e.what()).find("line 3, column 3") != std::string::npos);
    }
    try {
        parse_tangle("type: vv|v^\nX+(1)");
        FAIL("expected an error");
    } catch (const DslError& e) {
        CHECK(e.line() == 1);
    }
    try {
        parse_tangle("type: vv|vv; U(1)");
        FAIL("expected an error");
    } catch (const DslError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 14);
    }
}

TEST_CASE("render and parse round-trip") {
    WordSampler gen(41);
    for (int k = 0; k < 300; ++k) {
        TangleWord w = gen.word(gen.boundary(gen.uniform(0, 3)), 3, 5);
        CHECK(parse_tangle(render_tangle(w)) == w);
        CHECK(parse_word(render_word(w), w.type) == w);
    }
}

TEST_CASE("example tangle files") {
    const std::filesystem::path dir = std::filesystem::path(WALLED_SOURCE_DIR) / "tests" / "data";
    int seen = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() != ".tangle") continue;
        std::ifstream in(entry.path());
        std::stringstream ss;
        ss << in.rdbuf();
        TangleWord w = parse_tangle(ss.str());
        CHECK(parse_tangle(render_tangle(w)) == w);
        ++seen;
    }
    CHECK(seen >= 3);
}

TEST_CASE("generator DSL") {
    auto g = parse_generators("E(1,2) F(2,1) K(1) K'(2) qh(1,0,-1)");
    REQUIRE(g.size() == 5);
    CHECK(g[0].kind == UGenerator::Kind::E);
    CHECK(g[0].l == 2);
    CHECK(g[3].kind == UGenerator::Kind::K);
    CHECK(g[3].l == -1);
    CHECK(g[4].h == std::vector<int>{1, 0, -1});
    for (const auto& x : g) CHECK(parse_generators(generator_str(x))[0].kind == x.kind);
    CHECK_THROWS_AS(parse_generators("E(1)"), DslError);
    CHECK_THROWS_AS(parse_generators("G(1,1)"), DslError);
}

TEST_CASE("element json round-trip") {
    TangleWord w = parse_word("X+(1) X+(1)", parse_type("vv|vv"));
    TangleElement e = normalize(w, 2);
    nlohmann::json j = element_to_json(e);
    CHECK(j["n"] == 2);
    CHECK(j["type"]["top"] == "vv");
    CHECK(j["terms"].size() == 2);
    CHECK(j["terms"][0]["connector"][0][0] == "T1");
    CHECK(element_from_json(j) == e);
    j["terms"][0]["connector"][0][1] = "T2";
    CHECK_THROWS(element_from_json(j));
}

TEST_CASE("matrix json and grid") {
    TangleWord w = parse_word("X+(1)", parse_type("vv|vv"));
    LMatrix M = matrix_of_word(w, 2);
    nlohmann::json j = matrix_to_json(M, w.type.top, w.type.bottom, 2);
    CHECK(j["entries"].size() == M.nnz());
    CHECK(j["rows"] == "I(2,2) over vv");
    auto first = j["entries"][0];
    CHECK(first["row"] == std::vector<int>{1, 1});
    CHECK(LaurentPoly::from_json(first["coeff"]) == LaurentPoly::q(-1));
    std::string grid = matrix_grid(M);
    CHECK(std::count(grid.begin(), grid.end(), '\n') == 4);
}
