#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "walled/duality.hpp"
#include "walled/rep.hpp"
#include "walled/suites.hpp"

using namespace walled;

namespace {

const Orient D = Orient::Down, U = Orient::Up;
const Rational q0(5, 3);

Connector perm_connector(const std::vector<int>& img) {  // T_p -> B_img[p-1]
    Connector c;
    for (std::size_t p = 0; p < img.size(); ++p) c.edges.push_back({Vertex{0, (int)p + 1}, Vertex{1, img[p]}});
    return c;
}

std::set<std::set<std::string>> edge_set(const Connector& c) {
    std::set<std::set<std::string>> s;
    for (auto [a, b] : c.edges) s.insert({vertex_name(a), vertex_name(b)});
    return s;
}

}  // namespace

TEST_CASE("bend of a single strand") {
    TangleWord t = identity_word({D});
    TangleWord b = bend_first(t);
    CHECK(b.type == TangleType{{U}, {U}});
    for (int n : {1, 2, 3}) CHECK(matrix_of_word(b, n) == LMatrix::identity(n).scaled(LaurentPoly::q(-n)));
    CHECK_THROWS(bend_first(identity_word({U})));
}

TEST_CASE("bend identity on small words") {
    for (int n : {1, 2, 3}) {
        CHECK(flip_identity_holds(identity_word({D, D}), n));
        CHECK(flip_identity_holds(signed_crossing({D, D}, 1, 1), n));
        CHECK(flip_identity_holds(basic_E({D, U}, 1, false), n));
    }
    SuiteReport r = suite_flip(20, 5, 3, 3);
    CHECK(r.pass());
}

TEST_CASE("hecke_to_walled") {
    for (int n : {2, 3}) {
        TangleElement x = hecke_element({1}, 2, n);
        CHECK(hecke_to_walled(x, 2, 0) == x);
        CHECK(hecke_to_walled(TangleElement::identity({D, D, D}, n), 2, 1) == TangleElement::identity({D, D, U}, n));
        CHECK(hecke_to_walled(TangleElement::identity({D, D, D}, n), 1, 2) == TangleElement::identity({D, U, U}, n));
        // multiplicative: image of g1 g2 is the product of the images
        TangleElement g1 = hecke_element({1}, 3, n), g2 = hecke_element({2}, 3, n);
        CHECK(hecke_to_walled(multiply(g1, g2), 2, 1) == multiply(hecke_to_walled(g1, 2, 1), hecke_to_walled(g2, 2, 1)));
    }
    CHECK_THROWS(hecke_to_walled(TangleElement::identity({D, U}, 2), 1, 1));
}

TEST_CASE("classical flip") {
    Connector id = perm_connector({1, 2}), tr = perm_connector({2, 1});
    CHECK(edge_set(classical_flip(id, 1, 1)) == edge_set(perm_connector({1, 2})));
    CHECK(edge_set(classical_flip(tr, 1, 1)) == std::set<std::set<std::string>>{{"T1", "T2"}, {"B1", "B2"}});
    CHECK(classical_flip(tr, 2, 0) == tr);
    CHECK_THROWS(classical_flip(perm_connector({1}), 1, 1));
}

TEST_CASE("Brauer composition counts loops") {
    TangleType ty = walled_type(1, 1);
    Connector e;
    for (const auto& c : enumerate_connectors(ty))
        if (c != connector(identity_word(ty.top)).first) e = c;
    auto [d, loops] = brauer_compose(ty, e, ty, e);
    CHECK(d == e);
    CHECK(loops == 1);
    auto [d2, l2] = brauer_compose(ty, connector(identity_word(ty.top)).first, ty, e);
    CHECK(d2 == e);
    CHECK(l2 == 0);
}

TEST_CASE("commutant, image rank and annihilators") {
    CHECK(commutant_dim(2, 1, 0, q0) == 1);
    CHECK(commutant_dim(2, 1, 1, q0) == 2);
    CHECK(commutant_dim(2, 3, 0, q0) == 5);
    CHECK(image_rank(2, 1, 1, q0) == 2);
    CHECK(image_rank(2, 2, 1, q0) == 5);
    CHECK(image_rank(3, 1, 1, q0) == 2);
    CHECK(annihilator_dims(2, 1, 1, q0) == std::pair<std::size_t, std::size_t>{0, 0});
    CHECK(annihilator_dims(2, 2, 1, q0) == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(annihilator_dims(3, 2, 1, q0) == std::pair<std::size_t, std::size_t>{0, 0});
    CHECK_THROWS_AS(commutant_dim(3, 2, 1, q0, 100), ResourceLimit);
}

TEST_CASE("rank is preserved between the Hecke and walled sides") {
    for (auto t : std::vector<std::array<int, 3>>{{2, 1, 1}, {2, 2, 1}, {3, 2, 1}, {2, 1, 2}})
        CHECK(image_rank(t[0], t[1] + t[2], 0, q0) == image_rank(t[0], t[1], t[2], q0));
}

TEST_CASE("duality reports") {
    DualityReport r = verify_schur_weyl(2, 2, 1, q0);
    CHECK(r.pass());
    CHECK(r.image_rank == 5);
    CHECK(r.annihilator_dim == 1);
    CHECK_FALSE(r.faithful);
    auto j = r.to_json();
    CHECK(j["imageRank"] == 5);
    CHECK(j["q0"] == "5/3");
    CHECK(j.contains("timings"));
    DualityReport r0 = verify_schur_weyl(2, 1, 0, q0);
    CHECK(r0.pass());
    CHECK(r0.image_rank == 1);
}

TEST_CASE("generic point retries") {
    // q0 = 1 is not generic for (2,2,1): the suite falls back to 7/4
    DualityReport r = verify_schur_weyl(2, 2, 1, Rational(1));
    CHECK(r.pass());
    CHECK(r.tried_q0.size() >= 1);
}

TEST_CASE("q = 1 suite") {
    SuiteReport r = suite_classical({{1, 1}, {2, 1}, {1, 2}}, {2});
    for (const auto& c : r.checks) {
        INFO(c.name << " " << c.detail);
        CHECK(c.pass);
    }
}
