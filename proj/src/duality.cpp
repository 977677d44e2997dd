#include "walled/duality.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>

#include "walled/qgroup.hpp"
#include "walled/rep.hpp"
#include "walled/sparse.hpp"

namespace walled {

TangleWord bend_first(const TangleWord& t) {
    if (t.type.top.empty() || t.type.bottom.empty() || t.type.top[0] != Orient::Down || t.type.bottom[0] != Orient::Down)
        throw std::invalid_argument("bend_first needs top and bottom types starting with a down point");
    TangleWord inner = embed_right_of({Orient::Up, Orient::Up}, t);
    std::vector<Slice> sl{Slice::max(2, MaxTag::LeftToRight), Slice::cross(1, Hand::FirstOver)};
    sl.insert(sl.end(), inner.slices.begin(), inner.slices.end());
    sl.push_back(Slice::min(2));
    TangleType ty{t.type.top, t.type.bottom};
    ty.top[0] = Orient::Up;
    ty.bottom[0] = Orient::Up;
    return validate(sl, ty);
}

TangleWord hecke_step(const TangleWord& t, int rr) {
    TangleWord b = bend_first(t);
    std::vector<Slice> sl;
    // inverse conjugators above: move the up point from rr to 1
    for (int k = rr - 1; k >= 1; --k) sl.push_back(Slice::cross(k, Hand::FirstOver));  // (down,up) -> negative
    sl.insert(sl.end(), b.slices.begin(), b.slices.end());
    // below: single positive crossings on (up,down), moving it back to rr
    for (int k = 1; k <= rr - 1; ++k) sl.push_back(Slice::cross(k, Hand::FirstUnder));
    TangleType ty{t.type.top, t.type.bottom};
    auto fix = [rr](BoundarySeq s) {
        std::rotate(s.begin(), s.begin() + 1, s.begin() + rr);
        s[rr - 1] = Orient::Up;
        return s;
    };
    ty.top = fix(ty.top);
    ty.bottom = fix(ty.bottom);
    return validate(sl, ty);
}

namespace {

// Positive braid word taking top position p to bottom position tau[p-1].
std::vector<int> braid_for(const std::vector<int>& tau) {
    std::vector<int> cur(tau.size());  // strand at each position, labeled by its target
    for (std::size_t p = 0; p < tau.size(); ++p) cur[p] = tau[p];
    std::vector<int> word;
    for (std::size_t i = 0; i < cur.size(); ++i)
        for (std::size_t j = 0; j + 1 < cur.size() - i; ++j)
            if (cur[j] > cur[j + 1]) {
                std::swap(cur[j], cur[j + 1]);
                word.push_back((int)j + 1);
            }
    return word;
}

}  // namespace

TangleElement hecke_to_walled(const TangleElement& a, int r, int s) {
    const int m = r + s;
    if (r < 0 || s < 0) throw std::invalid_argument("r, s must be nonnegative");
    if (!(a.type == walled_type(m, 0))) throw std::invalid_argument("hecke_to_walled needs an element of type (v^m, v^m)");
    if (s == 0) return a;
    // after s steps original position p sits at sigma(p); conjugate so the
    // flipped points are the last s in their original order
    std::vector<int> sigma(m), tau(m);
    for (int p = 1; p <= m; ++p) sigma[p - 1] = p <= s ? m + 1 - p : p - s;
    for (int p = 1; p <= m; ++p) tau[sigma[p - 1] - 1] = p;
    std::vector<int> bw = braid_for(tau);
    BoundarySeq down(m, Orient::Down);
    TangleElement out = TangleElement::zero(walled_type(r, s), a.n);
    for (const auto& [c, coef] : a.terms) {
        TangleWord w = identity_word(down);
        for (auto it = bw.rbegin(); it != bw.rend(); ++it) w.slices.push_back(Slice::cross(*it, Hand::FirstUnder));
        TangleWord base = canonical_basis_word(a.type, c);
        w.slices.insert(w.slices.end(), base.slices.begin(), base.slices.end());
        for (int k : bw) w.slices.push_back(Slice::cross(k, Hand::FirstOver));
        for (int step = 0; step < s; ++step) w = hecke_step(w, m - step);
        out += normalize(w, a.n).scaled(coef * LaurentPoly::q(a.n * s));
    }
    return out;
}

namespace {

std::vector<QMatrix> basis_matrices_at(int n, int r, int s, const Rational& q0) {
    TangleType ty = walled_type(r, s);
    std::vector<QMatrix> out;
    for (const Connector& c : enumerate_connectors(ty)) out.push_back(eval_matrix(basis_matrix(ty, c, n), q0));
    return out;
}

}  // namespace

std::size_t image_rank(int n, int r, int s, const Rational& q0) {
    std::vector<std::map<std::size_t, Rational>> vecs;
    for (const QMatrix& M : basis_matrices_at(n, r, s, q0)) {
        std::map<std::size_t, Rational> v;
        for (std::size_t i = 0; i < M.rows(); ++i)
            for (const auto& [j, x] : M.row(i)) v.emplace(i * M.cols() + j, x);
        vecs.push_back(std::move(v));
    }
    return rank_of_vectors(vecs);
}

std::size_t commutant_dim(int n, int r, int s, const Rational& q0, std::size_t budget) {
    BoundarySeq I = walled_type(r, s).top;
    const std::size_t N = ipow(n, r + s);
    if (N * N > budget) throw ResourceLimit("commutant system has " + std::to_string(N * N) + " unknowns, budget " + std::to_string(budget));
    EchelonBasis eb;
    for (const UGenerator& g : generator_sweep(n, r + s)) {
        QMatrix G = eval_matrix(gen_on_mixed(g, I, n), q0);
        QMatrix Gt = G.transpose();
        // (XG - GX)_{ab} = sum_c X_{ac} G_{cb} - sum_c G_{ac} X_{cb}
        for (std::size_t a = 0; a < N; ++a)
            for (std::size_t b = 0; b < N; ++b) {
                std::map<std::size_t, Rational> eq;
                for (const auto& [c, v] : Gt.row(b)) eq[a * N + c] += v;
                for (const auto& [c, v] : G.row(a)) eq[c * N + b] -= v;
                for (auto it = eq.begin(); it != eq.end();) it = it->second == 0 ? eq.erase(it) : std::next(it);
                if (!eq.empty()) eb.insert(eq);
            }
    }
    return N * N - eb.rank();
}

std::pair<std::size_t, std::size_t> annihilator_dims(int n, int r, int s, const Rational& q0) {
    std::size_t total = 1;
    for (int k = 2; k <= r + s; ++k) total *= k;
    return {total - image_rank(n, r, s, q0), total - image_rank(n, r + s, 0, q0)};
}

nlohmann::json DualityReport::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["r"] = r;
    j["s"] = s;
    j["q0"] = rational_str(q0);
    j["imageRank"] = image_rank;
    j["commutantDim"] = commutant_dim;
    j["annihilatorDim"] = annihilator_dim;
    j["heckeAnnihilatorDim"] = hecke_annihilator_dim;
    j["faithful"] = faithful;
    j["verdicts"] = {{"commutesSymbolically", commutes_symbolically},
                     {"rankEqualsCommutant", rank_equals_commutant},
                     {"annihilatorsMatch", annihilators_match},
                     {"faithfulIffNAtLeastRPlusS", faithful_iff_n_large}};
    j["triedQ0"] = tried_q0;
    j["timings"] = {{"commutationSeconds", seconds_commutation},
                    {"rankSeconds", seconds_rank},
                    {"commutantSeconds", seconds_commutant}};
    j["pass"] = pass();
    return j;
}

DualityReport verify_schur_weyl(int n, int r, int s, const Rational& q0) {
    using clock = std::chrono::steady_clock;
    auto secs = [](clock::time_point a) { return std::chrono::duration<double>(clock::now() - a).count(); };
    DualityReport rep;
    rep.n = n;
    rep.r = r;
    rep.s = s;
    rep.q0 = q0;
    const TangleType ty = walled_type(r, s);

    auto t0 = clock::now();
    rep.commutes_symbolically = true;
    std::vector<LMatrix> gens;
    for (const UGenerator& g : generator_sweep(n, r + s)) gens.push_back(gen_on_mixed(g, ty.top, n));
    for (const Connector& c : enumerate_connectors(ty)) {
        LMatrix B = basis_matrix(ty, c, n);
        for (const LMatrix& G : gens)
            if (B * G != G * B) rep.commutes_symbolically = false;
    }
    rep.seconds_commutation = secs(t0);

    std::vector<Rational> candidates{q0, parse_rational("7/4"), parse_rational("9/2"), parse_rational("13/6")};
    for (const Rational& x : candidates) {
        rep.q0 = x;
        rep.tried_q0.push_back(rational_str(x));
        auto t1 = clock::now();
        rep.image_rank = image_rank(n, r, s, x);
        auto [ann, hann] = annihilator_dims(n, r, s, x);
        rep.annihilator_dim = ann;
        rep.hecke_annihilator_dim = hann;
        rep.seconds_rank += secs(t1);
        auto t2 = clock::now();
        rep.commutant_dim = commutant_dim(n, r, s, x);
        rep.seconds_commutant += secs(t2);
        rep.rank_equals_commutant = rep.image_rank == rep.commutant_dim;
        rep.annihilators_match = rep.annihilator_dim == rep.hecke_annihilator_dim;
        rep.faithful = rep.annihilator_dim == 0;
        rep.faithful_iff_n_large = rep.faithful == (n >= r + s);
        if (rep.rank_equals_commutant && rep.annihilators_match && rep.faithful_iff_n_large) break;
    }
    return rep;
}

Connector classical_flip(const Connector& d, int r, int s) {
    const int m = r + s;
    TangleType hty = walled_type(m, 0);
    check_connector(hty, d);
    Connector out;
    for (const auto& [a, b] : d.edges) {
        if (a.side != 0 || b.side != 1) throw std::invalid_argument("classical_flip needs a totally propagating diagram");
        Vertex v1 = a.pos > r ? Vertex{1, a.pos} : a;
        Vertex v2 = b.pos > r ? Vertex{0, b.pos} : b;
        out.edges.push_back({v1, v2});
    }
    std::sort(out.edges.begin(), out.edges.end());
    check_connector(walled_type(r, s), out);
    return out;
}

std::pair<Connector, int> brauer_compose(const TangleType& top_type, const Connector& a, const TangleType& bottom_type,
                                         const Connector& b) {
    if (top_type.bottom != bottom_type.top) throw std::invalid_argument("brauer_compose: type mismatch");
    const int wt = (int)top_type.top.size(), wm = (int)top_type.bottom.size(), wb = (int)bottom_type.bottom.size();
    // vertices: top row [0,wt), middle [wt, wt+wm), bottom [wt+wm, ...)
    auto id_a = [&](const Vertex& v) { return v.side == 0 ? v.pos - 1 : wt + v.pos - 1; };
    auto id_b = [&](const Vertex& v) { return v.side == 0 ? wt + v.pos - 1 : wt + wm + v.pos - 1; };
    const int total = wt + wm + wb;
    std::vector<std::vector<int>> adj(total);
    for (const auto& [x, y] : a.edges) {
        adj[id_a(x)].push_back(id_a(y));
        adj[id_a(y)].push_back(id_a(x));
    }
    for (const auto& [x, y] : b.edges) {
        adj[id_b(x)].push_back(id_b(y));
        adj[id_b(y)].push_back(id_b(x));
    }
    auto vertex_of = [&](int id) { return id < wt ? Vertex{0, id + 1} : Vertex{1, id - wt - wm + 1}; };
    auto is_outer = [&](int id) { return id < wt || id >= wt + wm; };
    std::vector<bool> seen(total, false);
    TangleType ty{top_type.top, bottom_type.bottom};
    Connector c;
    int loops = 0;
    for (int v = 0; v < total; ++v) {
        if (seen[v]) continue;
        std::vector<int> comp, stack{v};
        seen[v] = true;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            comp.push_back(x);
            for (int y : adj[x])
                if (!seen[y]) seen[y] = true, stack.push_back(y);
        }
        std::vector<int> outer;
        for (int x : comp)
            if (is_outer(x)) outer.push_back(x);
        if (outer.empty()) {
            ++loops;
            continue;
        }
        if (outer.size() != 2) throw std::logic_error("brauer_compose: malformed component");
        Vertex p = vertex_of(outer[0]), q = vertex_of(outer[1]);
        if (!is_start(ty, p)) std::swap(p, q);
        c.edges.push_back({p, q});
    }
    std::sort(c.edges.begin(), c.edges.end());
    check_connector(ty, c);
    return {c, loops};
}

}  // namespace walled
