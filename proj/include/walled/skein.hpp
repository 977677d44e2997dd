#ifndef WALLED_SKEIN_HPP
#define WALLED_SKEIN_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "walled/laurent.hpp"
#include "walled/tangle.hpp"

namespace walled {

using Expansion = std::map<Connector, LaurentPoly>;

struct TangleElement {
    TangleType type;
    int n = 1;
    Expansion terms;  // coefficients of canonical basis words

    static TangleElement zero(const TangleType& ty, int n) { return {ty, n, {}}; }
    static TangleElement basis(const TangleType& ty, int n, const Connector& c);
    static TangleElement identity(const BoundarySeq& seq, int n);

    TangleElement& operator+=(const TangleElement& o);
    TangleElement& operator-=(const TangleElement& o);
    TangleElement scaled(const LaurentPoly& c) const;
    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const TangleElement& a, const TangleElement& b) {
        return a.type == b.type && a.n == b.n && a.terms == b.terms;
    }
    std::string str() const;
};

TangleElement operator+(TangleElement a, const TangleElement& b);
TangleElement operator-(TangleElement a, const TangleElement& b);

// Skein constants for the specialization at n.
struct SkeinParams {
    int n;
    LaurentPoly loop_value() const { return quantum_int(n); }
    LaurentPoly pos_kink() const { return LaurentPoly::q(-n); }
    LaurentPoly neg_kink() const { return LaurentPoly::q(n); }
    // L+ - L- = skein_coeff * L0
    static LaurentPoly skein_coeff() { return LaurentPoly::q(-1) - LaurentPoly::q(1); }
};

// Expansion in the basis of words descending for `order`.
Expansion normalize_in_order(const TangleWord& w, int n, const StartOrder& order);
TangleElement normalize(const TangleWord& w, int n);

// Drop memoized expansions (tests use this to check transparency).
void clear_normalize_cache();
std::size_t normalize_cache_size();

TangleElement multiply(const TangleElement& a, const TangleElement& b);

using StructureTable = std::map<std::pair<Connector, Connector>, TangleElement>;
StructureTable structure_constants(const TangleType& ty, int n);

// Product of crossings S_k (k in 1..m-1) on m down strands, normalized.
TangleElement hecke_element(const std::vector<int>& word, int m, int n);
TangleWord hecke_word(const std::vector<int>& word, int m);

struct RelationResult {
    std::string name;
    bool pass;
    TangleElement lhs, rhs;
};

struct PresentationReport {
    int r, s, n;
    LaurentPoly a, lambda, delta;
    std::vector<RelationResult> relations;
    bool all_pass() const;
};

// Generators: g_i -> positive crossing at r-i, g_j* -> positive crossing at
// r+j, D -> Min/Max pair at r. `a` is the quadratic-relation parameter.
PresentationReport presentation_check(int r, int s, int n, const LaurentPoly& a);
// The parameter under which the positive crossings satisfy the Hecke relation.
LaurentPoly presentation_a();

// Presentation generators as elements.
TangleElement gen_g(int r, int s, int n, int i, bool inverse = false);
TangleElement gen_gstar(int r, int s, int n, int j, bool inverse = false);
TangleElement gen_D(int r, int s, int n);

std::string encode_word(const TangleWord& w);

}  // namespace walled

#endif
