#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "walled/rep.hpp"
#include "walled/suites.hpp"

using namespace walled;

namespace {

const Orient D = Orient::Down, U = Orient::Up;
const LaurentPoly a_pos = LaurentPoly::q(1) - LaurentPoly::q(-1);  // q - q^-1

using Entry = std::function<LaurentPoly(int, int, int, int, int)>;  // (i1, i2, j1, j2, n)

// dense comparison of a two-point word against an entry formula
void check_entries(const TangleWord& w, const Entry& f) {
    for (int n : {1, 2, 3}) {
        LMatrix M = matrix_of_word(w, n);
        for (int i1 = 1; i1 <= n; ++i1)
            for (int i2 = 1; i2 <= n; ++i2)
                for (int j1 = 1; j1 <= n; ++j1)
                    for (int j2 = 1; j2 <= n; ++j2) {
                        INFO("n=" << n << " i=(" << i1 << "," << i2 << ") j=(" << j1 << "," << j2 << ")");
                        CHECK(M.at(index_of({i1, i2}, n), index_of({j1, j2}, n)) == f(i1, i2, j1, j2, n));
                    }
    }
}

LaurentPoly delta2(bool a, bool b, const LaurentPoly& v) { return a && b ? v : LaurentPoly(); }

}  // namespace

TEST_CASE("multi-indices") {
    CHECK(ipow(3, 4) == 81);
    CHECK(index_of({1, 1, 1}, 2) == 0);
    CHECK(index_of({2, 1, 2}, 2) == 5);
    CHECK(multi_index(5, 3, 2) == MultiIndex{2, 1, 2});
    CHECK(ipow(5, 0) == 1);
}

TEST_CASE("horizontal edges") {
    check_entries(basic_E({D, U}, 1, true), [](int i1, int i2, int j1, int j2, int) {
        return delta2(i1 == i2, j1 == j2, LaurentPoly::q(2 * (i1 - j1)));
    });
    check_entries(basic_E({U, D}, 1, true), [](int i1, int i2, int j1, int j2, int n) {
        return delta2(i1 == i2, j1 == j2, LaurentPoly::q(-2 * j1 + n + 1));
    });
    check_entries(basic_E({U, D}, 1, false),
                  [](int i1, int i2, int j1, int j2, int) { return delta2(i1 == i2, j1 == j2, LaurentPoly(1)); });
    check_entries(basic_E({D, U}, 1, false), [](int i1, int i2, int j1, int j2, int n) {
        return delta2(i1 == i2, j1 == j2, LaurentPoly::q(2 * i1 - n - 1));
    });
}

TEST_CASE("mixed crossings") {
    // up-right / down-right strands, negative crossing
    check_entries(signed_crossing({D, U}, 1, -1), [](int i1, int i2, int k1, int k2, int) {
        if (i1 == i2 && k1 == k2 && i1 == k1) return LaurentPoly::q(1);
        if (i1 == k2 && i2 == k1 && i1 != i2) return LaurentPoly(1);
        if (i1 == i2 && k1 == k2 && i1 > k1) return a_pos * LaurentPoly::q(2 * i1 - 2 * k1);
        return LaurentPoly();
    });
    check_entries(signed_crossing({U, D}, 1, -1), [](int k1, int k2, int j1, int j2, int) {
        if (k1 == k2 && j1 == j2 && k1 == j1) return LaurentPoly::q(1);
        if (k1 == j2 && k2 == j1 && k1 != k2) return LaurentPoly(1);
        if (k1 == k2 && j1 == j2 && k1 < j1) return a_pos;
        return LaurentPoly();
    });
}

TEST_CASE("Hecke generator action") {
    // T v_i v_k = v_k v_i (i<k); q^-1 v_i v_i; v_k v_i + (q^-1 - q) v_i v_k (i>k)
    for (int n : {1, 2, 3}) {
        LMatrix M = matrix_of_word(hecke_word({1}, 2), n);
        for (int i = 1; i <= n; ++i)
            for (int k = 1; k <= n; ++k) {
                std::size_t row = index_of({i, k}, n);
                if (i < k) {
                    CHECK(M.row(row).size() == 1);
                    CHECK(M.at(row, index_of({k, i}, n)) == LaurentPoly(1));
                } else if (i == k) {
                    CHECK(M.row(row).size() == 1);
                    CHECK(M.at(row, row) == LaurentPoly::q(-1));
                } else {
                    CHECK(M.at(row, index_of({k, i}, n)) == LaurentPoly(1));
                    CHECK(M.at(row, row) == -a_pos);
                }
            }
        for (int m = 2; m <= 4; ++m)
            for (int k = 1; k < m; ++k) CHECK(hecke_action_matrix(k, m, n) == matrix_of_word(hecke_word({k}, m), n));
    }
}

TEST_CASE("worked example on three points") {
    TangleWord w = validate({Slice::cross(2, Hand::FirstUnder), Slice::cross(1, Hand::FirstOver)},
                            TangleType{{D, D, U}, {U, D, D}});
    for (int n : {2, 3, 4}) {
        LMatrix M = matrix_of_word(w, n);
        CHECK(M.at(index_of({2, 1, 1}, n), index_of({1, 2, 1}, n)) == LaurentPoly::q(-1));
        CHECK(M.at(index_of({2, 1, 2}, n), index_of({1, 1, 1}, n)) == LaurentPoly::q(3) - LaurentPoly::q(1));
        CHECK(matrix_of_element(normalize(w, n)) == M);
    }
}

TEST_CASE("psi is the positive crossing of an up and a down strand") {
    for (int n : {1, 2, 3}) {
        CHECK(psi_matrix(n) == matrix_of_word(signed_crossing({U, D}, 1, 1), n));
        // psi' rescales by q^{n+1-2i} on the dual factor
        LMatrix P = psi_prime_matrix(n), Q = psi_matrix(n);
        for (int i = 1; i <= n; ++i)
            for (int k = 1; k <= n; ++k) {
                std::size_t row = index_of({i, k}, n);
                for (const auto& [c, v] : Q.row(row)) CHECK(P.at(row, c) == v * LaurentPoly::q(n + 1 - 2 * i));
            }
    }
}

TEST_CASE("procedure values") {
    TangleWord x = hecke_word({1}, 2);
    CHECK(procedure_value(x, {1, 2}, {2, 1}, 2) == LaurentPoly(1));
    CHECK_THROWS_AS(procedure_value(x, {2, 1}, {1, 2}, 2), NotDescending);
    CHECK(procedure_value(x, {1, 1}, {1, 1}, 2) == LaurentPoly::q(-1));
    CHECK(procedure_value(x, {1, 2}, {1, 1}, 2).is_zero());
    TangleWord xx = validate({Slice::cross(1, Hand::FirstUnder), Slice::cross(1, Hand::FirstUnder)}, walled_type(2, 0));
    CHECK_THROWS_AS(procedure_value(xx, {1, 2}, {1, 2}, 2), NotDescending);
}

TEST_CASE("basis matrices and the classical limit") {
    for (int n : {1, 2, 3})
        for (const TangleType& ty : {walled_type(1, 1), walled_type(2, 1), TangleType{{D, U}, {}}})
            for (const auto& c : enumerate_connectors(ty)) {
                LMatrix B = basis_matrix(ty, c, n);
                CHECK(B == matrix_of_word(canonical_basis_word(ty, c), n));
                CHECK(eval_matrix(B, Rational(1)) == eval_matrix(classical_matrix(ty, c, n), Rational(1)));
            }
}

TEST_CASE("functoriality on random pairs") {
    SuiteReport r = suite_linking(40, 77, 3);
    for (const auto& c : r.checks) {
        INFO(c.name << " " << c.detail);
        CHECK(c.pass);
    }
}

TEST_CASE("embedding") {
    LMatrix x = psi_matrix(2);
    LMatrix e = embed_matrix(x, 1, 1, 2);
    CHECK(e.rows() == 16);
    CHECK(e == kron(kron(LMatrix::identity(2), x), LMatrix::identity(2)));
}
