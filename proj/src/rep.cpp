#include "walled/rep.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>

namespace walled {

std::size_t ipow(int n, int m) {
    std::size_t r = 1;
    for (int k = 0; k < m; ++k) r *= (std::size_t)n;
    return r;
}

std::size_t index_of(const MultiIndex& i, int n) {
    std::size_t idx = 0;
    for (int v : i) {
        if (v < 1 || v > n) throw std::out_of_range("multi-index entry out of range");
        idx = idx * n + (v - 1);
    }
    return idx;
}

MultiIndex multi_index(std::size_t idx, int m, int n) {
    MultiIndex r(m);
    for (int k = m - 1; k >= 0; --k) {
        r[k] = (int)(idx % n) + 1;
        idx /= n;
    }
    return r;
}

namespace {

LaurentPoly horiz_top(int label, int n) { return LaurentPoly::q(2 * label - n - 1); }
LaurentPoly horiz_bottom(int label, int n) { return LaurentPoly::q(-2 * label + n + 1); }

// Value of a single crossing with upper labels (a,b) and lower labels (c,d).
LaurentPoly crossing_value(const Slice& s, Orient o1, Orient o2, int a, int b, int c, int d, int n) {
    const BoundarySeq up{o1, o2};
    int sign = crossing_sign(Slice::cross(1, s.hand), up);
    int lx = o1 == Orient::Down ? a : d;  // start label of the strand entering at pos from above
    int ly = o2 == Orient::Down ? b : c;
    int lover = s.hand == Hand::FirstOver ? lx : ly;
    int lunder = s.hand == Hand::FirstOver ? ly : lx;
    bool through = a == d && b == c;
    if (lover <= lunder) {
        if (!through) return 0;
        if (a == b) return LaurentPoly::q(sign > 0 ? -1 : 1);
        return 1;
    }
    // switch to the descending crossing, plus the smoothing term
    LaurentPoly v = through ? LaurentPoly(1) : LaurentPoly(0);
    LaurentPoly coeff = SkeinParams::skein_coeff();
    if (sign < 0) coeff = -coeff;
    LaurentPoly sm;
    if (o1 == o2) {
        if (a == c && b == d) sm = 1;
    } else if (a == b && c == d) {
        sm = 1;
        if (o1 == Orient::Down) sm *= horiz_top(a, n);
        // the lower orientation at pos is the upper one at pos+1
        if (o2 == Orient::Up) sm *= horiz_bottom(c, n);
    }
    v += coeff * sm;
    return v;
}

}  // namespace

LMatrix slice_matrix(const Slice& s, const BoundarySeq& upper, int n) {
    auto lv = propagate(upper, {s});
    const BoundarySeq& lower = lv.back();
    const int w = (int)upper.size();
    const int p = s.pos - 1;
    LMatrix M(ipow(n, w), ipow(n, (int)lower.size()));
    for (std::size_t u = 0; u < M.rows(); ++u) {
        MultiIndex ui = multi_index(u, w, n);
        switch (s.kind) {
            case Slice::Kind::Cross: {
                for (int c = 1; c <= n; ++c)
                    for (int d = 1; d <= n; ++d) {
                        LaurentPoly v = crossing_value(s, upper[p], upper[p + 1], ui[p], ui[p + 1], c, d, n);
                        if (v.is_zero()) continue;
                        MultiIndex li = ui;
                        li[p] = c, li[p + 1] = d;
                        M.add(u, index_of(li, n), v);
                    }
                break;
            }
            case Slice::Kind::Min: {
                if (ui[p] != ui[p + 1]) break;
                LaurentPoly v = upper[p] == Orient::Down ? horiz_top(ui[p], n) : LaurentPoly(1);
                MultiIndex li = ui;
                li.erase(li.begin() + p, li.begin() + p + 2);
                M.add(u, index_of(li, n), v);
                break;
            }
            case Slice::Kind::Max: {
                for (int l = 1; l <= n; ++l) {
                    LaurentPoly v = s.tag == MaxTag::LeftToRight ? horiz_bottom(l, n) : LaurentPoly(1);
                    MultiIndex li = ui;
                    li.insert(li.begin() + p, {l, l});
                    M.add(u, index_of(li, n), v);
                }
                break;
            }
        }
    }
    return M;
}

LMatrix matrix_of_word(const TangleWord& w, int n) {
    auto levels = propagate(w.type.top, w.slices);
    LMatrix M = LMatrix::identity(ipow(n, (int)w.type.top.size()));
    for (std::size_t k = 0; k < w.slices.size(); ++k) M = M * slice_matrix(w.slices[k], levels[k], n);
    return M;
}

namespace {

// Strand data needed to evaluate a descending word.
struct ProcData {
    std::vector<Vertex> start, end;
    struct X {
        int a, b, sign, over;
    };
    std::vector<X> crossings;
};

ProcData proc_data(const TangleWord& w) {
    StrandGraph g = strand_graph(w);
    if ((int)g.comps.size() != g.open_count) throw NotDescending("word has closed components");
    ProcData pd;
    for (int k = 0; k < g.open_count; ++k) {
        pd.start.push_back(g.comps[k].start);
        pd.end.push_back(g.comps[k].end);
    }
    std::set<std::pair<int, int>> pairs;
    for (const CrossingInfo& c : g.crossings) {
        if (c.comp_x == c.comp_y) throw NotDescending("strand crosses itself");
        auto key = std::minmax(c.comp_x, c.comp_y);
        if (!pairs.insert(key).second) throw NotDescending("two strands cross more than once");
        pd.crossings.push_back({c.comp_x, c.comp_y, c.sign, c.over});
    }
    return pd;
}

int label_at(const Vertex& v, const MultiIndex& i, const MultiIndex& j) {
    return v.side == 0 ? i.at(v.pos - 1) : j.at(v.pos - 1);
}

// Assumes every strand carries one label and the word is descending for a
// label-compatible order.
LaurentPoly proc_eval(const ProcData& pd, const std::vector<int>& label, int n) {
    int e = 0;
    for (const auto& x : pd.crossings)
        if (label[x.a] == label[x.b]) e += x.sign > 0 ? -1 : 1;
    for (std::size_t k = 0; k < pd.start.size(); ++k) {
        const Vertex &s = pd.start[k], &t = pd.end[k];
        if (s.side == t.side && s.pos < t.pos) e += s.side == 0 ? 2 * label[k] - n - 1 : -2 * label[k] + n + 1;
    }
    return LaurentPoly::q(e);
}

}  // namespace

LaurentPoly procedure_value(const TangleWord& w, const MultiIndex& i, const MultiIndex& j, int n) {
    if (i.size() != w.type.top.size() || j.size() != w.type.bottom.size())
        throw std::invalid_argument("multi-index length does not match the type");
    ProcData pd = proc_data(w);
    const int ns = (int)pd.start.size();
    std::vector<int> lab(ns);
    for (int k = 0; k < ns; ++k) lab[k] = label_at(pd.start[k], i, j);
    // Need a total order: smaller labels first, over before under.
    std::vector<std::vector<int>> succ(ns);
    std::vector<int> indeg(ns, 0);
    for (const auto& x : pd.crossings) {
        int over = x.over, under = x.over == x.a ? x.b : x.a;
        if (lab[over] > lab[under]) throw NotDescending("no label-compatible order makes the word descending");
        if (lab[over] == lab[under]) {
            succ[over].push_back(under);
            ++indeg[under];
        }
    }
    std::vector<int> stack;
    for (int k = 0; k < ns; ++k)
        if (indeg[k] == 0) stack.push_back(k);
    int seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++seen;
        for (int u : succ[v])
            if (--indeg[u] == 0) stack.push_back(u);
    }
    if (seen != ns) throw NotDescending("crossings among equally labeled strands form a cycle");
    for (int k = 0; k < ns; ++k)
        if (label_at(pd.end[k], i, j) != lab[k]) return 0;
    return proc_eval(pd, lab, n);
}

namespace {

struct BasisCache {
    std::mutex mu;
    std::map<std::string, LMatrix> table;
};

BasisCache& basis_cache() {
    static BasisCache c;
    return c;
}

}  // namespace

LMatrix basis_matrix(const TangleType& ty, const Connector& c, int n) {
    std::string key = std::to_string(n) + "#" + orient_str(ty.top) + "|" + orient_str(ty.bottom) + "#" + connector_str(c);
    {
        std::lock_guard lk(basis_cache().mu);
        auto it = basis_cache().table.find(key);
        if (it != basis_cache().table.end()) return it->second;
    }
    check_connector(ty, c);
    const int a = (int)ty.top.size(), b = (int)ty.bottom.size();
    LMatrix M(ipow(n, a), ipow(n, b));
    const StartOrder starts = start_vertices(ty);
    const int k = (int)starts.size();
    TangleWord base = canonical_basis_word(ty, c);

    std::map<std::vector<int>, Expansion> exp_cache;                    // order permutation -> expansion
    std::map<std::pair<std::vector<int>, Connector>, ProcData> pd_cache;  // (order, connector) -> data

    std::vector<int> lab(k, 1);
    while (true) {
        std::vector<int> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        std::stable_sort(perm.begin(), perm.end(), [&](int x, int y) { return lab[x] < lab[y]; });
        auto eit = exp_cache.find(perm);
        if (eit == exp_cache.end()) {
            StartOrder order;
            for (int x : perm) order.push_back(starts[x]);
            eit = exp_cache.emplace(perm, normalize_in_order(base, n, order)).first;
        }
        for (const auto& [d, coef] : eit->second) {
            auto key2 = std::make_pair(perm, d);
            auto pit = pd_cache.find(key2);
            if (pit == pd_cache.end()) {
                StartOrder order;
                for (int x : perm) order.push_back(starts[x]);
                pit = pd_cache.emplace(key2, proc_data(canonical_basis_word(ty, d, order))).first;
            }
            const ProcData& pd = pit->second;
            MultiIndex i(a), j(b);
            for (int s = 0; s < k; ++s) {
                const Vertex& sv = d.edges[s].first;
                const Vertex& ev = d.edges[s].second;
                (sv.side == 0 ? i : j)[sv.pos - 1] = lab[s];
                (ev.side == 0 ? i : j)[ev.pos - 1] = lab[s];
            }
            // pd strands are in canonical start order, same as d.edges and lab
            M.add(index_of(i, n), index_of(j, n), coef * proc_eval(pd, lab, n));
        }
        int pos = k - 1;
        while (pos >= 0 && lab[pos] == n) lab[pos--] = 1;
        if (pos < 0) break;
        ++lab[pos];
    }
    std::lock_guard lk(basis_cache().mu);
    basis_cache().table.emplace(key, M);
    return M;
}

LMatrix matrix_of_element(const TangleElement& a) {
    LMatrix M(ipow(a.n, (int)a.type.top.size()), ipow(a.n, (int)a.type.bottom.size()));
    for (const auto& [c, v] : a.terms) M += basis_matrix(a.type, c, a.n).scaled(v);
    return M;
}

LMatrix hecke_action_matrix(int k, int m, int n) {
    if (k < 1 || k > m - 1) throw std::invalid_argument("Hecke generator index out of range");
    LMatrix M(ipow(n, m), ipow(n, m));
    for (std::size_t u = 0; u < M.rows(); ++u) {
        MultiIndex i = multi_index(u, m, n);
        MultiIndex sw = i;
        std::swap(sw[k - 1], sw[k]);
        if (i[k - 1] < i[k]) {
            M.add(u, index_of(sw, n), 1);
        } else if (i[k - 1] == i[k]) {
            M.add(u, u, LaurentPoly::q(-1));
        } else {
            M.add(u, index_of(sw, n), 1);
            M.add(u, u, SkeinParams::skein_coeff());
        }
    }
    return M;
}

LMatrix psi_matrix(int n) {
    LMatrix M(ipow(n, 2), ipow(n, 2));
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k) {
            std::size_t row = index_of({i, k}, n);
            if (k != i) {
                M.add(row, index_of({k, i}, n), 1);
            } else {
                M.add(row, index_of({i, i}, n), LaurentPoly::q(-1));
                for (int l = 1; l < i; ++l) M.add(row, index_of({l, l}, n), SkeinParams::skein_coeff());
            }
        }
    return M;
}

LMatrix psi_prime_matrix(int n) {
    LMatrix P = psi_matrix(n);
    LMatrix D(ipow(n, 2), ipow(n, 2));
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k) D.add(index_of({i, k}, n), index_of({i, k}, n), LaurentPoly::q(n + 1 - 2 * i));
    return D * P;
}

LMatrix embed_matrix(const LMatrix& x, int before, int after, int n) {
    LMatrix r = kron(LMatrix::identity(ipow(n, before)), x);
    return kron(r, LMatrix::identity(ipow(n, after)));
}

LMatrix classical_matrix(const TangleType& ty, const Connector& c, int n) {
    const int a = (int)ty.top.size(), b = (int)ty.bottom.size();
    LMatrix M(ipow(n, a), ipow(n, b));
    const int k = (int)c.edges.size();
    std::vector<int> lab(k, 1);
    while (true) {
        MultiIndex i(a), j(b);
        for (int s = 0; s < k; ++s) {
            const auto& [sv, ev] = c.edges[s];
            (sv.side == 0 ? i : j)[sv.pos - 1] = lab[s];
            (ev.side == 0 ? i : j)[ev.pos - 1] = lab[s];
        }
        M.add(index_of(i, n), index_of(j, n), 1);
        int pos = k - 1;
        while (pos >= 0 && lab[pos] == n) lab[pos--] = 1;
        if (pos < 0) break;
        ++lab[pos];
    }
    return M;
}

}  // namespace walled
