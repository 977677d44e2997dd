#ifndef WALLED_REP_HPP
#define WALLED_REP_HPP

#include <cstddef>
#include <vector>

#include "walled/skein.hpp"
#include "walled/sparse.hpp"
#include "walled/tangle.hpp"

namespace walled {

// Labels are 1..n; the first entry is the most significant base-n digit.
using MultiIndex = std::vector<int>;

std::size_t index_of(const MultiIndex& i, int n);
MultiIndex multi_index(std::size_t idx, int m, int n);
std::size_t ipow(int n, int m);

// Matrices act from the right: rows index the upper boundary, columns the
// lower one, and the matrix of S/T is matrix(S) * matrix(T).
LMatrix slice_matrix(const Slice& s, const BoundarySeq& upper, int n);
LMatrix matrix_of_word(const TangleWord& w, int n);

class NotDescending : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Value of a descending word at the double index (i, j). Throws NotDescending
// when no label-compatible order makes the word descending.
LaurentPoly procedure_value(const TangleWord& w, const MultiIndex& i, const MultiIndex& j, int n);

// Matrix of a basis element, computed by re-expanding the canonical word
// for every label-compatible order and applying procedure_value.
LMatrix basis_matrix(const TangleType& ty, const Connector& c, int n);
LMatrix matrix_of_element(const TangleElement& a);

LMatrix hecke_action_matrix(int k, int m, int n);

// psi: V* (x) V -> V (x) V*, psi': V' (x) V -> V (x) V*
LMatrix psi_matrix(int n);
LMatrix psi_prime_matrix(int n);

// id^{before} (x) x (x) id^{after}
LMatrix embed_matrix(const LMatrix& x, int before, int after, int n);

// q = 1 action of a diagram: entry 1 iff every edge joins equal labels.
LMatrix classical_matrix(const TangleType& ty, const Connector& c, int n);

}  // namespace walled

#endif
