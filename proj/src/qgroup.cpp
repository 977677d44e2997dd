#include "walled/qgroup.hpp"

#include <stdexcept>

#include "walled/rep.hpp"

namespace walled {

std::string generator_str(const UGenerator& g) {
    switch (g.kind) {
        case UGenerator::Kind::E: return "E(" + std::to_string(g.i) + "," + std::to_string(g.l) + ")";
        case UGenerator::Kind::F: return "F(" + std::to_string(g.i) + "," + std::to_string(g.l) + ")";
        case UGenerator::Kind::K:
            if (g.l == 1) return "K(" + std::to_string(g.i) + ")";
            if (g.l == -1) return "K'(" + std::to_string(g.i) + ")";
            return "K(" + std::to_string(g.i) + ")^" + std::to_string(g.l);
        case UGenerator::Kind::QH: {
            std::string s = "qh(";
            for (std::size_t k = 0; k < g.h.size(); ++k) s += (k ? "," : "") + std::to_string(g.h[k]);
            return s + ")";
        }
    }
    return "?";
}

namespace {

void check_gen(const UGenerator& g, int n) {
    if (g.kind == UGenerator::Kind::QH) {
        if ((int)g.h.size() != n) throw std::invalid_argument("qh weight must have n entries");
        return;
    }
    if (g.i < 1 || g.i > n - 1) throw std::invalid_argument("generator index out of range for n=" + std::to_string(n));
    if ((g.kind == UGenerator::Kind::E || g.kind == UGenerator::Kind::F) && g.l < 0)
        throw std::invalid_argument("divided power must be nonnegative");
}

// weight of v_j under q^h on V
std::vector<int> weight_of(const UGenerator& g, int n) {
    std::vector<int> w(n, 0);
    if (g.kind == UGenerator::Kind::QH) return g.h;
    w[g.i - 1] = g.l;
    w[g.i] = -g.l;
    return w;
}

bool group_like(const UGenerator& g) { return g.kind == UGenerator::Kind::K || g.kind == UGenerator::Kind::QH; }

LMatrix diag_weight(const BoundarySeq& I, const std::vector<int>& h, int n) {
    const int m = (int)I.size();
    LMatrix M(ipow(n, m), ipow(n, m));
    for (std::size_t u = 0; u < M.rows(); ++u) {
        MultiIndex i = multi_index(u, m, n);
        int e = 0;
        for (int t = 0; t < m; ++t) e += (I[t] == Orient::Down ? 1 : -1) * h[i[t] - 1];
        M.add(u, u, LaurentPoly::q(e));
    }
    return M;
}

}  // namespace

LMatrix gen_on_V(const UGenerator& g, int n) {
    check_gen(g, n);
    if (group_like(g)) return diag_weight({Orient::Down}, weight_of(g, n), n);
    LMatrix M(n, n);
    if (g.l == 0) return LMatrix::identity(n);
    if (g.l >= 2) return M;
    if (g.kind == UGenerator::Kind::E)
        M.add(g.i, g.i - 1, 1);  // v_{i+1} -> v_i
    else
        M.add(g.i - 1, g.i, 1);  // v_i -> v_{i+1}
    return M;
}

namespace {

// matrix of S(g) on V
LMatrix antipode_on_V(const UGenerator& g, int n) {
    if (group_like(g)) {
        auto w = weight_of(g, n);
        for (int& x : w) x = -x;
        return diag_weight({Orient::Down}, w, n);
    }
    const int l = g.l;
    LMatrix X = gen_on_V(g, n);
    LaurentPoly sgn = (l % 2 == 0) ? LaurentPoly(1) : LaurentPoly(-1);
    if (g.kind == UGenerator::Kind::E) {
        // (-1)^l q^{l(l-1)} e^{(l)} K^l : K^l acts first
        LMatrix Kl = gen_on_V(UGenerator::K(g.i, l), n);
        return (Kl * X).scaled(sgn * LaurentPoly::q(l * (l - 1)));
    }
    // (-1)^l q^{-l(l-1)} K^{-l} f^{(l)} : f acts first
    LMatrix Kl = gen_on_V(UGenerator::K(g.i, -l), n);
    return (X * Kl).scaled(sgn * LaurentPoly::q(-l * (l - 1)));
}

}  // namespace

LMatrix gen_on_Vdual(const UGenerator& g, int n) {
    check_gen(g, n);
    return antipode_on_V(g, n).transpose();
}

LMatrix gen_on_mixed(const UGenerator& g, const BoundarySeq& I, int n, int split) {
    check_gen(g, n);
    const int m = (int)I.size();
    if (group_like(g)) return diag_weight(I, weight_of(g, n), n);
    if (m == 0) {
        LMatrix M(1, 1);
        if (g.l == 0) M.add(0, 0, 1);  // counit
        return M;
    }
    if (m == 1) return I[0] == Orient::Down ? gen_on_V(g, n) : gen_on_Vdual(g, n);
    if (split < 1 || split >= m) split = 1;
    BoundarySeq A(I.begin(), I.begin() + split), B(I.begin() + split, I.end());
    const int l = g.l;
    LMatrix M(ipow(n, m), ipow(n, m));
    for (int k = 0; k <= l; ++k) {
        LMatrix left, right;
        LaurentPoly c;
        if (g.kind == UGenerator::Kind::E) {
            // q^{k(l-k)} e^{(l-k)} (x) K^{k-l} e^{(k)}
            c = LaurentPoly::q(k * (l - k));
            left = gen_on_mixed(UGenerator::E(g.i, l - k), A, n);
            right = gen_on_mixed(UGenerator::E(g.i, k), B, n) * gen_on_mixed(UGenerator::K(g.i, k - l), B, n);
        } else {
            // q^{-k(l-k)} f^{(l-k)} K^k (x) f^{(k)}
            c = LaurentPoly::q(-k * (l - k));
            left = gen_on_mixed(UGenerator::K(g.i, k), A, n) * gen_on_mixed(UGenerator::F(g.i, l - k), A, n);
            right = gen_on_mixed(UGenerator::F(g.i, k), B, n);
        }
        M += kron(left, right).scaled(c);
    }
    return M;
}

LMatrix antipode_on_mixed(const UGenerator& g, const BoundarySeq& I, int n) {
    check_gen(g, n);
    if (group_like(g)) {
        UGenerator h = g;
        if (h.kind == UGenerator::Kind::K)
            h.l = -h.l;
        else
            for (int& x : h.h) x = -x;
        return gen_on_mixed(h, I, n);
    }
    const int l = g.l;
    LaurentPoly sgn = (l % 2 == 0) ? LaurentPoly(1) : LaurentPoly(-1);
    LMatrix X = gen_on_mixed(g, I, n);
    if (g.kind == UGenerator::Kind::E)
        return (gen_on_mixed(UGenerator::K(g.i, l), I, n) * X).scaled(sgn * LaurentPoly::q(l * (l - 1)));
    return (X * gen_on_mixed(UGenerator::K(g.i, -l), I, n)).scaled(sgn * LaurentPoly::q(-l * (l - 1)));
}

namespace {

BoundarySeq joined(const BoundarySeq& I, const BoundarySeq& J) {
    BoundarySeq r = I;
    r.insert(r.end(), J.begin(), J.end());
    return r;
}

LaurentPoly signed_qpow(int k, int e) {  // (-1)^k q^e
    return LaurentPoly::monomial(e, k % 2 == 0 ? 1 : -1);
}

bool f_identity(int i, int l, const BoundarySeq& I, const BoundarySeq& J, int n) {
    const BoundarySeq IJ = joined(I, J);
    const int split = (int)I.size();
    LMatrix idI = LMatrix::identity(ipow(n, (int)I.size())), idJ = LMatrix::identity(ipow(n, (int)J.size()));
    LMatrix lhs(ipow(n, (int)IJ.size()), ipow(n, (int)IJ.size()));
    for (int k = 0; k <= l - 1; ++k) {
        // (f^{(k)} (x) 1) . Delta(f^{(l-k)}): the coproduct acts first
        LMatrix d = gen_on_mixed(UGenerator::F(i, l - k), IJ, n, split);
        LMatrix fk = kron(gen_on_mixed(UGenerator::F(i, k), I, n), idJ);
        lhs += (d * fk).scaled(signed_qpow(k, -k * (l - 1)));
    }
    LMatrix inner = kron(idI, gen_on_mixed(UGenerator::F(i, l), J, n)) -
                    kron(antipode_on_mixed(UGenerator::F(i, l), I, n), idJ);
    LMatrix rhs = inner * kron(gen_on_mixed(UGenerator::K(i, l), I, n), idJ);
    return lhs == rhs;
}

bool e_identity_impl(int i, int l, const BoundarySeq& I, const BoundarySeq& J, int n, int kexp_sign) {
    const BoundarySeq IJ = joined(I, J);
    const int split = (int)I.size();
    LMatrix idI = LMatrix::identity(ipow(n, (int)I.size())), idJ = LMatrix::identity(ipow(n, (int)J.size()));
    LMatrix lhs(ipow(n, (int)IJ.size()), ipow(n, (int)IJ.size()));
    for (int k = 0; k <= l - 1; ++k) {
        LMatrix d = gen_on_mixed(UGenerator::E(i, l - k), IJ, n, split);
        LMatrix ek = kron(gen_on_mixed(UGenerator::E(i, k), I, n), gen_on_mixed(UGenerator::K(i, kexp_sign * k), J, n));
        lhs += (d * ek).scaled(signed_qpow(k, k * (l - 1)));
    }
    LMatrix kk = gen_on_mixed(UGenerator::K(i, -l), IJ, n);  // K^{-l} (x) K^{-l}
    LMatrix rhs = kron(idI, gen_on_mixed(UGenerator::E(i, l), J, n)) -
                  kk * kron(antipode_on_mixed(UGenerator::E(i, l), I, n), idJ);
    return lhs == rhs;
}

}  // namespace

DivPowerReport check_divpowers(int i, int l, const BoundarySeq& I, const BoundarySeq& J, int n) {
    if (l < 1) throw std::invalid_argument("check_divpowers needs l >= 1");
    DivPowerReport r{i, l, n, I, J, false, false};
    r.f_identity = f_identity(i, l, I, J, n);
    r.e_identity = e_identity_impl(i, l, I, J, n, -1);
    return r;
}

bool e_identity_as_printed(int i, int l, const BoundarySeq& I, const BoundarySeq& J, int n) {
    return e_identity_impl(i, l, I, J, n, +1);
}

std::vector<UGenerator> generator_sweep(int n, int max_l) {
    std::vector<UGenerator> out;
    for (int i = 1; i < n; ++i) {
        out.push_back(UGenerator::K(i, 1));
        out.push_back(UGenerator::K(i, -1));
        for (int l = 1; l <= max_l; ++l) {
            out.push_back(UGenerator::E(i, l));
            out.push_back(UGenerator::F(i, l));
        }
    }
    return out;
}

}  // namespace walled
