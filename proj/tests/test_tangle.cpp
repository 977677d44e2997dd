#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "walled/suites.hpp"
#include "walled/tangle.hpp"

using namespace walled;

namespace {

const Orient D = Orient::Down, U = Orient::Up;

std::vector<TangleType> types_of_width(int m) {
    std::vector<TangleType> out;
    for (int a = 0; a < (1 << m); ++a)
        for (int b = 0; b < (1 << m); ++b) {
            TangleType ty;
            for (int k = 0; k < m; ++k) {
                ty.top.push_back((a >> k) & 1 ? U : D);
                ty.bottom.push_back((b >> k) & 1 ? U : D);
            }
            try {
                check_type(ty);
                out.push_back(ty);
            } catch (const std::invalid_argument&) {
            }
        }
    return out;
}

std::size_t fact(int m) { return m <= 1 ? 1 : (std::size_t)m * fact(m - 1); }

std::set<std::pair<Vertex, Vertex>> unordered(const Connector& c) {
    std::set<std::pair<Vertex, Vertex>> s;
    for (auto [a, b] : c.edges) s.insert(a < b ? std::pair{a, b} : std::pair{b, a});
    return s;
}

}  // namespace

TEST_CASE("slice propagation") {
    auto lv = propagate({D, U}, {Slice::min(1), Slice::max(1, MaxTag::LeftToRight)});
    CHECK(lv[1].empty());
    CHECK(lv[2] == BoundarySeq{U, D});
    CHECK(propagate({D, U}, {Slice::cross(1, Hand::FirstOver)})[1] == BoundarySeq{U, D});
    CHECK_THROWS_AS(propagate({D, D}, {Slice::min(1)}), TangleError);
    CHECK_THROWS_AS(propagate({D, D}, {Slice::cross(2, Hand::FirstOver)}), TangleError);
    CHECK_THROWS(validate({Slice::cross(1, Hand::FirstOver)}, TangleType{{D, D}, {D, U}}));
}

TEST_CASE("type invariant") {
    CHECK_NOTHROW(check_type(TangleType{{D, U}, {}}));
    CHECK_NOTHROW(check_type(TangleType{{D}, {D}}));
    CHECK_THROWS_AS(check_type(TangleType{{D}, {U}}), std::invalid_argument);
    CHECK(walled_type(2, 1).top == BoundarySeq{D, D, U});
}

TEST_CASE("crossing signs") {
    CHECK(crossing_sign(Slice::cross(1, Hand::FirstOver), {D, D}) == 1);
    CHECK(crossing_sign(Slice::cross(1, Hand::FirstUnder), {D, D}) == -1);
    CHECK(crossing_sign(Slice::cross(1, Hand::FirstOver), {U, U}) == 1);
    CHECK(crossing_sign(Slice::cross(1, Hand::FirstOver), {D, U}) == -1);
    CHECK(crossing_sign(Slice::cross(1, Hand::FirstUnder), {U, D}) == 1);
    for (const auto& lv : std::vector<BoundarySeq>{{D, D}, {D, U}, {U, D}, {U, U}})
        for (int s : {1, -1}) CHECK(crossing_sign(signed_crossing(lv, 1, s).slices[0], lv) == s);
}

TEST_CASE("connector of the three-strand example") {
    TangleWord w = validate({Slice::cross(2, Hand::FirstUnder), Slice::cross(1, Hand::FirstOver)},
                            TangleType{{D, D, U}, {U, D, D}});
    auto [c, loops] = connector(w);
    CHECK(loops == 0);
    std::set<std::pair<Vertex, Vertex>> want{{{0, 1}, {1, 2}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 1}}};
    CHECK(unordered(c) == want);
    auto g = strand_graph(w);
    REQUIRE(g.crossings.size() == 2);
    CHECK(g.crossings[0].sign == 1);
    CHECK(g.crossings[1].sign == -1);
}

TEST_CASE("m! connectors per type and canonical words realize them") {
    for (int m = 0; m <= 4; ++m)
        for (const auto& ty : types_of_width(m)) {
            auto cons = enumerate_connectors(ty);
            CHECK(cons.size() == fact(m));
            std::set<Connector> uniq(cons.begin(), cons.end());
            CHECK(uniq.size() == cons.size());
            if (m > 3) continue;
            for (const auto& c : cons) {
                CHECK_NOTHROW(check_connector(ty, c));
                TangleWord w = canonical_basis_word(ty, c);
                CHECK(w.type == ty);
                auto [c2, loops] = connector(w);
                CHECK(c2 == c);
                CHECK(loops == 0);
            }
        }
}

TEST_CASE("crossing count of canonical words is the interleaving count") {
    for (int m = 1; m <= 3; ++m)
        for (const auto& ty : types_of_width(m))
            for (const auto& c : enumerate_connectors(ty)) {
                TangleWord w = canonical_basis_word(ty, c);
                int crossings = 0;
                for (const auto& s : w.slices) crossings += s.kind == Slice::Kind::Cross;
                CHECK(crossings >= interleaving_pairs(ty, c));
            }
}

TEST_CASE("closed loops and their orientation") {
    TangleWord cw = validate({Slice::max(1, MaxTag::LeftToRight), Slice::min(1)}, TangleType{{}, {}});
    TangleWord ccw = validate({Slice::max(1, MaxTag::RightToLeft), Slice::min(1)}, TangleType{{}, {}});
    CHECK(connector(cw).second == 1);
    CHECK(closed_loop_orientations(cw) == std::vector<LoopOrient>{LoopOrient::Clockwise});
    CHECK(closed_loop_orientations(ccw) == std::vector<LoopOrient>{LoopOrient::Counterclockwise});
}

TEST_CASE("concatenation, embedding, switching and smoothing") {
    TangleWord x = signed_crossing({D, D}, 1, 1);
    TangleWord xx = concat(x, x);
    CHECK(xx.slices.size() == 2);
    CHECK_THROWS(concat(x, identity_word({D, U})));
    TangleWord e = embed_right_of({U}, x);
    CHECK(e.type.top == BoundarySeq{U, D, D});
    CHECK(e.slices[0].pos == 2);
    CHECK(switch_crossing(x, 0).slices[0].hand == Hand::FirstUnder);
    TangleWord sm = smooth_crossing(x, 0);
    CHECK(connector(sm).first == connector(identity_word({D, D})).first);
    TangleWord sm2 = smooth_crossing(signed_crossing({D, U}, 1, 1), 0);
    CHECK(sm2.type == TangleType{{D, U}, {U, D}});
    CHECK(connector(sm2).first.edges.size() == 2);
}

TEST_CASE("basic E tangles") {
    TangleWord e = basic_E({D, U}, 1, true);
    CHECK(e.type == TangleType{{D, U}, {U, D}});
    TangleWord f = basic_E({U, D}, 1, false);
    CHECK(f.type == TangleType{{U, D}, {D, U}});
}

TEST_CASE("random words validate and have consistent connectors") {
    WordSampler gen(3);
    for (int k = 0; k < 200; ++k) {
        TangleWord w = gen.word(gen.boundary(gen.uniform(0, 3)), 3, 5);
        CHECK_NOTHROW(check_type(w.type));
        auto [c, loops] = connector(w);
        CHECK_NOTHROW(check_connector(w.type, c));
        CHECK(loops >= 0);
    }
}

TEST_CASE("vertex names") {
    CHECK(vertex_name({0, 3}) == "T3");
    CHECK(parse_vertex("B12") == Vertex{1, 12});
    CHECK_THROWS(parse_vertex("X1"));
    CHECK(orient_str({D, D, U}) == "vv^");
    CHECK(parse_orients("^v") == BoundarySeq{U, D});
}
