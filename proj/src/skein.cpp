#include "walled/skein.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

namespace walled {

TangleElement TangleElement::basis(const TangleType& ty, int n, const Connector& c) {
    check_connector(ty, c);
    TangleElement e{ty, n, {}};
    e.terms[c] = 1;
    return e;
}

TangleElement TangleElement::identity(const BoundarySeq& seq, int n) {
    auto [c, loops] = connector(identity_word(seq));
    return basis({seq, seq}, n, c);
}

namespace {

void add_into(Expansion& dst, const Connector& c, const LaurentPoly& v) {
    if (v.is_zero()) return;
    auto [it, ins] = dst.try_emplace(c, v);
    if (!ins) {
        it->second += v;
        if (it->second.is_zero()) dst.erase(it);
    }
}

void check_compatible(const TangleElement& a, const TangleElement& b) {
    if (!(a.type == b.type)) throw std::invalid_argument("element types differ");
    if (a.n != b.n) throw std::invalid_argument("element parameters n differ");
}

}  // namespace

TangleElement& TangleElement::operator+=(const TangleElement& o) {
    check_compatible(*this, o);
    for (const auto& [c, v] : o.terms) add_into(terms, c, v);
    return *this;
}

TangleElement& TangleElement::operator-=(const TangleElement& o) {
    check_compatible(*this, o);
    for (const auto& [c, v] : o.terms) add_into(terms, c, -v);
    return *this;
}

TangleElement TangleElement::scaled(const LaurentPoly& c) const {
    TangleElement r{type, n, {}};
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms) add_into(r.terms, k, v * c);
    return r;
}

std::string TangleElement::str() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [c, v] : terms) {
        if (!out.empty()) out += "\n";
        out += "(" + v.str() + ") " + connector_str(c);
    }
    return out;
}

TangleElement operator+(TangleElement a, const TangleElement& b) { return a += b; }
TangleElement operator-(TangleElement a, const TangleElement& b) { return a -= b; }

std::string encode_word(const TangleWord& w) {
    std::string s = orient_str(w.type.top) + "|" + orient_str(w.type.bottom) + ":";
    for (const Slice& sl : w.slices) {
        switch (sl.kind) {
            case Slice::Kind::Cross: s += sl.hand == Hand::FirstOver ? 'X' : 'x'; break;
            case Slice::Kind::Min: s += 'U'; break;
            case Slice::Kind::Max: s += sl.tag == MaxTag::LeftToRight ? 'N' : 'n'; break;
        }
        s += std::to_string(sl.pos);
        s += ',';
    }
    return s;
}

namespace {

struct Memo {
    std::shared_mutex mu;
    std::unordered_map<std::string, Expansion> table;
};

Memo& memo() {
    static Memo m;
    return m;
}

std::string order_key(const StartOrder& order) {
    std::string s;
    for (const Vertex& v : order) s += vertex_name(v) + ".";
    return s;
}

Expansion descend(const TangleWord& w, int n, const StartOrder& order, const std::string& okey) {
    std::string key = std::to_string(n) + "#" + okey + "#" + encode_word(w);
    {
        std::shared_lock lk(memo().mu);
        auto it = memo().table.find(key);
        if (it != memo().table.end()) return it->second;
    }

    StrandGraph g = strand_graph(w);
    std::map<Vertex, int> rank;
    for (int k = 0; k < (int)order.size(); ++k) rank[order[k]] = k;
    std::vector<int> comp_order(g.comps.size());
    {
        std::vector<std::pair<int, int>> keyed;
        for (int i = 0; i < (int)g.comps.size(); ++i)
            keyed.push_back({i < g.open_count ? rank.at(g.comps[i].start) : (int)order.size() + i, i});
        std::sort(keyed.begin(), keyed.end());
        for (std::size_t k = 0; k < keyed.size(); ++k) comp_order[k] = keyed[k].second;
    }

    int violation = -1;
    std::vector<bool> visited(w.slices.size(), false);
    for (int ci : comp_order) {
        for (const Visit& v : g.comps[ci].visits) {
            if (visited[v.slice]) continue;
            visited[v.slice] = true;
            if (!v.over) {
                violation = v.slice;
                break;
            }
        }
        if (violation >= 0) break;
    }

    Expansion result;
    if (violation >= 0) {
        int sign = g.crossings[g.crossing_of_slice[violation]].sign;
        Expansion sw = descend(switch_crossing(w, violation), n, order, okey);
        Expansion sm = descend(smooth_crossing(w, violation), n, order, okey);
        LaurentPoly coeff = SkeinParams::skein_coeff();
        if (sign < 0) coeff = -coeff;
        result = std::move(sw);
        for (const auto& [c, v] : sm) add_into(result, c, v * coeff);
    } else {
        int writhe = 0;
        for (const Component& c : g.comps) writhe += c.self_writhe;
        LaurentPoly value = LaurentPoly::q(-n * writhe);
        LaurentPoly loop = quantum_int(n);
        for (std::size_t i = g.open_count; i < g.comps.size(); ++i) value *= loop;
        Connector c;
        for (int i = 0; i < g.open_count; ++i) c.edges.push_back({g.comps[i].start, g.comps[i].end});
        add_into(result, c, value);
    }

    {
        std::unique_lock lk(memo().mu);
        memo().table.emplace(key, result);
    }
    return result;
}

}  // namespace

Expansion normalize_in_order(const TangleWord& w, int n, const StartOrder& order) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    validate(w.slices, w.type);
    return descend(w, n, order, order_key(order));
}

TangleElement normalize(const TangleWord& w, int n) {
    return TangleElement{w.type, n, normalize_in_order(w, n, canonical_order(w.type))};
}

void clear_normalize_cache() {
    std::unique_lock lk(memo().mu);
    memo().table.clear();
}

std::size_t normalize_cache_size() {
    std::shared_lock lk(memo().mu);
    return memo().table.size();
}

TangleElement multiply(const TangleElement& a, const TangleElement& b) {
    if (a.type.bottom != b.type.top) throw std::invalid_argument("multiply: type mismatch");
    if (a.n != b.n) throw std::invalid_argument("multiply: n mismatch");
    TangleElement r{{a.type.top, b.type.bottom}, a.n, {}};
    for (const auto& [ca, va] : a.terms) {
        TangleWord wa = canonical_basis_word(a.type, ca);
        for (const auto& [cb, vb] : b.terms) {
            TangleWord wb = canonical_basis_word(b.type, cb);
            TangleElement p = normalize(concat(wa, wb), a.n);
            r += p.scaled(va * vb);
        }
    }
    return r;
}

StructureTable structure_constants(const TangleType& ty, int n) {
    if (ty.top != ty.bottom) throw std::invalid_argument("structure constants need equal top and bottom");
    StructureTable t;
    auto cs = enumerate_connectors(ty);
    for (const auto& c1 : cs)
        for (const auto& c2 : cs)
            t.emplace(std::make_pair(c1, c2), multiply(TangleElement::basis(ty, n, c1), TangleElement::basis(ty, n, c2)));
    return t;
}

TangleWord hecke_word(const std::vector<int>& word, int m) {
    BoundarySeq seq(m, Orient::Down);
    TangleWord w = identity_word(seq);
    for (int k : word) {
        if (k < 1 || k > m - 1) throw std::invalid_argument("Hecke generator index " + std::to_string(k) + " out of range");
        w.slices.push_back(Slice::cross(k, Hand::FirstOver));
    }
    return w;
}

TangleElement hecke_element(const std::vector<int>& word, int m, int n) { return normalize(hecke_word(word, m), n); }

LaurentPoly presentation_a() { return LaurentPoly::q(1) - LaurentPoly::q(-1); }

TangleElement gen_g(int r, int s, int n, int i, bool inverse) {
    TangleType ty = walled_type(r, s);
    if (i < 1 || i > r - 1) throw std::invalid_argument("g_i index out of range");
    return normalize(signed_crossing(ty.top, r - i, inverse ? -1 : 1), n);
}

TangleElement gen_gstar(int r, int s, int n, int j, bool inverse) {
    TangleType ty = walled_type(r, s);
    if (j < 1 || j > s - 1) throw std::invalid_argument("g*_j index out of range");
    return normalize(signed_crossing(ty.top, r + j, inverse ? -1 : 1), n);
}

TangleElement gen_D(int r, int s, int n) {
    TangleType ty = walled_type(r, s);
    if (r < 1 || s < 1) throw std::invalid_argument("D needs r, s >= 1");
    return normalize(basic_E(ty.top, r, false), n);
}

bool PresentationReport::all_pass() const {
    for (const auto& rr : relations)
        if (!rr.pass) return false;
    return true;
}

PresentationReport presentation_check(int r, int s, int n, const LaurentPoly& a) {
    if (r + s < 1) throw std::invalid_argument("presentation check needs r+s >= 1");
    PresentationReport rep{r, s, n, a, LaurentPoly::q(n), quantum_int(n), {}};
    TangleType ty = walled_type(r, s);
    TangleElement one = TangleElement::identity(ty.top, n);
    auto mul = [](std::initializer_list<TangleElement> xs) {
        auto it = xs.begin();
        TangleElement acc = *it++;
        for (; it != xs.end(); ++it) acc = multiply(acc, *it);
        return acc;
    };
    auto record = [&](const std::string& name, const TangleElement& l, const TangleElement& rr) {
        rep.relations.push_back({name, l == rr, l, rr});
    };
    std::vector<TangleElement> g(r), gs(s);
    for (int i = 1; i < r; ++i) g[i] = gen_g(r, s, n, i);
    for (int j = 1; j < s; ++j) gs[j] = gen_gstar(r, s, n, j);
    TangleElement zero = TangleElement::zero(ty, n);

    for (int i = 1; i < r; ++i)
        for (int j = i + 2; j < r; ++j)
            record("(i) g" + std::to_string(i) + " g" + std::to_string(j), mul({g[i], g[j]}), mul({g[j], g[i]}));
    for (int i = 1; i < s; ++i)
        for (int j = i + 2; j < s; ++j)
            record("(i*) g*" + std::to_string(i) + " g*" + std::to_string(j), mul({gs[i], gs[j]}), mul({gs[j], gs[i]}));
    for (int i = 1; i + 1 < r; ++i)
        record("(ii) i=" + std::to_string(i), mul({g[i], g[i + 1], g[i]}), mul({g[i + 1], g[i], g[i + 1]}));
    for (int j = 1; j + 1 < s; ++j)
        record("(ii*) j=" + std::to_string(j), mul({gs[j], gs[j + 1], gs[j]}), mul({gs[j + 1], gs[j], gs[j + 1]}));
    for (int i = 1; i < r; ++i)
        record("(iii) i=" + std::to_string(i), mul({g[i], g[i]}) + g[i].scaled(a) - one, zero);
    for (int j = 1; j < s; ++j)
        record("(iii*) j=" + std::to_string(j), mul({gs[j], gs[j]}) + gs[j].scaled(a) - one, zero);
    for (int i = 1; i < r; ++i)
        for (int j = 1; j < s; ++j)
            record("(iv) i=" + std::to_string(i) + " j=" + std::to_string(j), mul({g[i], gs[j]}), mul({gs[j], g[i]}));
    if (r >= 1 && s >= 1) {
        TangleElement D = gen_D(r, s, n);
        for (int i = 2; i < r; ++i) record("(v) i=" + std::to_string(i), mul({D, g[i]}), mul({g[i], D}));
        for (int j = 2; j < s; ++j) record("(v*) j=" + std::to_string(j), mul({D, gs[j]}), mul({gs[j], D}));
        LaurentPoly lambda_inv = LaurentPoly::q(-n);
        if (r >= 2) record("(vi)", mul({D, g[1], D}), D.scaled(lambda_inv));
        if (s >= 2) record("(vi*)", mul({D, gs[1], D}), D.scaled(lambda_inv));
        record("(vii)", mul({D, D}), D.scaled(rep.delta));
        if (r >= 2 && s >= 2) {
            TangleElement ginv = gen_g(r, s, n, 1, true);
            record("(viii)", mul({D, ginv, gs[1], D, g[1]}), mul({D, ginv, gs[1], D, gs[1]}));
            record("(viii*)", mul({g[1], D, ginv, gs[1], D}), mul({gs[1], D, ginv, gs[1], D}));
        }
    }
    return rep;
}

}  // namespace walled
