#ifndef WALLED_QGROUP_HPP
#define WALLED_QGROUP_HPP

#include <string>
#include <vector>

#include "walled/sparse.hpp"
#include "walled/tangle.hpp"

namespace walled {

// Generators of the integral form. K(i, p) stands for K_i^p.
struct UGenerator {
    enum class Kind { E, F, K, QH };
    Kind kind = Kind::E;
    int i = 1;
    int l = 1;  // divided power for E/F, exponent for K
    std::vector<int> h;  // QH weight

    static UGenerator E(int i, int l) { return {Kind::E, i, l, {}}; }
    static UGenerator F(int i, int l) { return {Kind::F, i, l, {}}; }
    static UGenerator K(int i, int p = 1) { return {Kind::K, i, p, {}}; }
    static UGenerator QH(std::vector<int> h) { return {Kind::QH, 0, 0, std::move(h)}; }
};

std::string generator_str(const UGenerator& g);

// Action matrices use the same convention as tangle matrices: row = input
// basis vector, so the matrix of x*y is matrix(y) * matrix(x).
LMatrix gen_on_V(const UGenerator& g, int n);
LMatrix gen_on_Vdual(const UGenerator& g, int n);
// Down factors are V, Up factors V*. `split` chooses where the first
// comultiplication cuts the tensor product (default 1).
LMatrix gen_on_mixed(const UGenerator& g, const BoundarySeq& I, int n, int split = 1);

// Matrix of S(g) acting on V_I.
LMatrix antipode_on_mixed(const UGenerator& g, const BoundarySeq& I, int n);

struct DivPowerReport {
    int i, l, n;
    BoundarySeq I, J;
    bool f_identity, e_identity;
    bool pass() const { return f_identity && e_identity; }
};

DivPowerReport check_divpowers(int i, int l, const BoundarySeq& I, const BoundarySeq& J, int n);

// The e-identity exactly as printed, with (e^{(k)} (x) K^k) in the sum.
bool e_identity_as_printed(int i, int l, const BoundarySeq& I, const BoundarySeq& J, int n);

// Generators used for commutant sweeps: K_i^{+-1}, e_i^{(l)}, f_i^{(l)}, l <= max_l.
std::vector<UGenerator> generator_sweep(int n, int max_l);

}  // namespace walled

#endif
