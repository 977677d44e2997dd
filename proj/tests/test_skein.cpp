#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "walled/rep.hpp"
#include "walled/skein.hpp"
#include "walled/suites.hpp"

using namespace walled;

namespace {
const Orient D = Orient::Down, U = Orient::Up;
const LaurentPoly qi = LaurentPoly::q(-1), q1 = LaurentPoly::q(1);
}  // namespace

TEST_CASE("canonical basis words normalize to themselves") {
    for (int n : {1, 2, 3})
        for (const TangleType& ty : {walled_type(2, 0), walled_type(1, 1), walled_type(2, 1), walled_type(1, 2),
                                     TangleType{{D, U, U}, {U, U, D}}, TangleType{{D, U}, {}}})
            for (const auto& c : enumerate_connectors(ty))
                CHECK(normalize(canonical_basis_word(ty, c), n) == TangleElement::basis(ty, n, c));
}

TEST_CASE("X+(1) X+(1) on two down strands") {
    TangleWord w = validate({Slice::cross(1, Hand::FirstOver), Slice::cross(1, Hand::FirstOver)}, walled_type(2, 0));
    TangleElement e = normalize(w, 2);
    REQUIRE(e.terms.size() == 2);
    TangleElement x = normalize(validate({Slice::cross(1, Hand::FirstOver)}, walled_type(2, 0)), 2);
    CHECK(e == TangleElement::identity({D, D}, 2) + x.scaled(qi - q1));
}

TEST_CASE("skein suite") {
    for (int n : {1, 2, 3}) {
        SuiteReport r = suite_skein(n);
        for (const auto& c : r.checks) {
            INFO(c.name << " " << c.detail);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("multiplication is associative with the identity as unit") {
    std::mt19937_64 rng(17);
    for (int n : {2, 3}) {
        TangleType ty = walled_type(2, 1);
        auto cons = enumerate_connectors(ty);
        std::uniform_int_distribution<int> pick(0, (int)cons.size() - 1);
        TangleElement one = TangleElement::identity(ty.top, n);
        for (int t = 0; t < 15; ++t) {
            TangleElement a = TangleElement::basis(ty, n, cons[pick(rng)]);
            TangleElement b = TangleElement::basis(ty, n, cons[pick(rng)]).scaled(q1);
            TangleElement c = TangleElement::basis(ty, n, cons[pick(rng)]) + a;
            CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
            CHECK(multiply(one, a) == a);
            CHECK(multiply(a, one) == a);
        }
    }
}

TEST_CASE("structure constants") {
    TangleType ty = walled_type(1, 1);
    StructureTable t = structure_constants(ty, 2);
    CHECK(t.size() == 4);
    // E * E = [n] E
    Connector id = connector(identity_word(ty.top)).first;
    for (const auto& [k, v] : t) {
        if (k.first == id) CHECK(v == TangleElement::basis(ty, 2, k.second));
        if (k.first != id && k.second != id) CHECK(v == TangleElement::basis(ty, 2, k.first).scaled(quantum_int(2)));
    }
}

TEST_CASE("Hecke quadratic and braid relations on normal forms") {
    for (int n : {1, 2, 3}) {
        TangleElement one = TangleElement::identity(BoundarySeq(3, D), n);
        CHECK(hecke_element({1, 1}, 3, n) == one + hecke_element({1}, 3, n).scaled(qi - q1));
        CHECK(hecke_element({1, 2, 1}, 3, n) == hecke_element({2, 1, 2}, 3, n));
    }
}

TEST_CASE("presentation relations") {
    for (auto [r, s] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1}})
        for (int n : {2, 3}) {
            PresentationReport rep = presentation_check(r, s, n, presentation_a());
            CHECK(!rep.relations.empty());
            for (const auto& rel : rep.relations) {
                INFO("r=" << r << " s=" << s << " n=" << n << " " << rel.name);
                CHECK(rel.pass);
            }
            CHECK(rep.lambda == LaurentPoly::q(n));
            CHECK(rep.delta == quantum_int(n));
        }
    // with a = q^-1 - q the quadratic relation of the positive crossings fails
    CHECK_FALSE(presentation_check(2, 2, 2, qi - q1).all_pass());
}

TEST_CASE("generator elements") {
    const int r = 2, s = 1, n = 2;
    TangleElement g = gen_g(r, s, n, 1), gi = gen_g(r, s, n, 1, true);
    CHECK(multiply(g, gi) == TangleElement::identity(walled_type(r, s).top, n));
    TangleElement Dd = gen_D(r, s, n);
    CHECK(multiply(Dd, Dd) == Dd.scaled(quantum_int(n)));
}

TEST_CASE("cache bookkeeping") {
    clear_normalize_cache();
    CHECK(normalize_cache_size() == 0);
    normalize(hecke_word({1, 2, 1}, 3), 2);
    CHECK(normalize_cache_size() > 0);
}

TEST_CASE("normal forms evaluate to slice matrices") {
    WordSampler gen(23);
    for (int k = 0; k < 60; ++k) {
        TangleWord w = gen.word(gen.boundary(gen.uniform(0, 3)), 3, 5);
        for (int n : {1, 2, 3}) CHECK(matrix_of_element(normalize(w, n)) == matrix_of_word(w, n));
    }
}
