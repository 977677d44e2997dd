#include "walled/sparse.hpp"

namespace walled {

QMatrix eval_matrix(const LMatrix& m, const Rational& q0) {
    QMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (const auto& [j, v] : m.row(i)) r.set(i, j, lp_eval(v, q0));
    return r;
}

namespace {

void make_primitive(EchelonBasis::IntRow& row) {
    mpz_class g = 0;
    for (const auto& kv : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), kv.second.get_mpz_t());
        if (g == 1) return;
    }
    if (g > 1)
        for (auto& kv : row) mpz_divexact(kv.second.get_mpz_t(), kv.second.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

bool EchelonBasis::insert(const std::map<std::size_t, Rational>& row) {
    mpz_class l = 1;
    for (const auto& kv : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), kv.second.get_den_mpz_t());
    IntRow ir;
    for (const auto& [c, v] : row) {
        if (v == 0) continue;
        mpz_class x = v.get_num() * (l / v.get_den());
        ir.emplace(c, x);
    }
    return insert_int(std::move(ir));
}

bool EchelonBasis::insert_int(IntRow row) {
    make_primitive(row);
    while (!row.empty()) {
        auto lead = row.begin();
        auto pit = pivots_.find(lead->first);
        if (pit == pivots_.end()) {
            std::size_t c = lead->first;
            pivots_.emplace(c, std::move(row));
            return true;
        }
        const IntRow& prow = pit->second;
        mpz_class a = prow.begin()->second;  // pivot value
        mpz_class b = lead->second;
        mpz_class g = gcd(a, b);
        mpz_class fa = a / g, fb = b / g;
        // row := fa*row - fb*prow
        IntRow out;
        auto it1 = row.begin();
        auto it2 = prow.begin();
        while (it1 != row.end() || it2 != prow.end()) {
            if (it2 == prow.end() || (it1 != row.end() && it1->first < it2->first)) {
                out.emplace_hint(out.end(), it1->first, fa * it1->second);
                ++it1;
            } else if (it1 == row.end() || it2->first < it1->first) {
                out.emplace_hint(out.end(), it2->first, -fb * it2->second);
                ++it2;
            } else {
                mpz_class v = fa * it1->second - fb * it2->second;
                if (v != 0) out.emplace_hint(out.end(), it1->first, v);
                ++it1;
                ++it2;
            }
        }
        row = std::move(out);
        make_primitive(row);
    }
    return false;
}

std::size_t rank_of_vectors(const std::vector<std::map<std::size_t, Rational>>& vecs) {
    EchelonBasis eb;
    for (const auto& v : vecs) eb.insert(v);
    return eb.rank();
}

std::vector<std::vector<Rational>> kernel_of_vectors(const std::vector<std::map<std::size_t, Rational>>& vecs) {
    const std::size_t k = vecs.size();
    // coordinate -> the k coefficients it imposes
    std::map<std::size_t, std::vector<Rational>> eqs;
    for (std::size_t i = 0; i < k; ++i)
        for (const auto& [c, v] : vecs[i]) {
            auto& e = eqs[c];
            if (e.empty()) e.assign(k, Rational(0));
            e[i] = v;
        }
    // reduced row echelon form over k columns
    std::vector<std::vector<Rational>> rref;
    std::vector<std::size_t> pivcol;
    for (auto& [c, e] : eqs) {
        for (std::size_t r = 0; r < rref.size(); ++r)
            if (e[pivcol[r]] != 0) {
                Rational f = e[pivcol[r]];
                for (std::size_t t = 0; t < k; ++t) e[t] -= f * rref[r][t];
            }
        std::size_t p = 0;
        while (p < k && e[p] == 0) ++p;
        if (p == k) continue;
        Rational f = e[p];
        for (auto& x : e) x /= f;
        for (std::size_t r = 0; r < rref.size(); ++r)
            if (rref[r][p] != 0) {
                Rational g = rref[r][p];
                for (std::size_t t = 0; t < k; ++t) rref[r][t] -= g * e[t];
            }
        rref.push_back(e);
        pivcol.push_back(p);
        if (rref.size() == k) break;
    }
    std::vector<bool> is_piv(k, false);
    for (std::size_t p : pivcol) is_piv[p] = true;
    std::vector<std::vector<Rational>> out;
    for (std::size_t f = 0; f < k; ++f) {
        if (is_piv[f]) continue;
        std::vector<Rational> v(k, Rational(0));
        v[f] = 1;
        for (std::size_t r = 0; r < rref.size(); ++r) v[pivcol[r]] = -rref[r][f];
        out.push_back(v);
    }
    return out;
}

}  // namespace walled
