#include "walled/tangle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace walled {

TangleType walled_type(int r, int s) {
    BoundarySeq seq(r, Orient::Down);
    seq.insert(seq.end(), s, Orient::Up);
    return {seq, seq};
}

void check_type(const TangleType& ty) {
    auto cnt = [](const BoundarySeq& s, Orient o) { return (int)std::count(s.begin(), s.end(), o); };
    int starts = cnt(ty.top, Orient::Down) + cnt(ty.bottom, Orient::Up);
    int ends = cnt(ty.top, Orient::Up) + cnt(ty.bottom, Orient::Down);
    if (starts != ends) throw std::invalid_argument("type " + orient_str(ty.top) + "|" + orient_str(ty.bottom) + " has unequal start and end counts");
}

std::string vertex_name(const Vertex& v) { return (v.side == 0 ? "T" : "B") + std::to_string(v.pos); }

Vertex parse_vertex(const std::string& s) {
    if (s.size() < 2 || (s[0] != 'T' && s[0] != 'B')) throw std::invalid_argument("bad vertex name: " + s);
    return {s[0] == 'T' ? 0 : 1, std::stoi(s.substr(1))};
}

bool is_start(const TangleType& ty, const Vertex& v) {
    return v.side == 0 ? ty.top.at(v.pos - 1) == Orient::Down : ty.bottom.at(v.pos - 1) == Orient::Up;
}

std::string connector_str(const Connector& c) {
    std::string out = "{";
    for (std::size_t k = 0; k < c.edges.size(); ++k) {
        if (k) out += ", ";
        out += vertex_name(c.edges[k].first) + "-" + vertex_name(c.edges[k].second);
    }
    return out + "}";
}

std::string orient_str(const BoundarySeq& s) {
    std::string r;
    for (Orient o : s) r += (o == Orient::Down ? 'v' : '^');
    return r;
}

BoundarySeq parse_orients(const std::string& s) {
    BoundarySeq r;
    for (char ch : s) {
        if (ch == 'v')
            r.push_back(Orient::Down);
        else if (ch == '^')
            r.push_back(Orient::Up);
        else if (ch != ' ')
            throw std::invalid_argument(std::string("bad orientation symbol '") + ch + "'");
    }
    return r;
}

std::vector<BoundarySeq> propagate(const BoundarySeq& top, const std::vector<Slice>& slices) {
    std::vector<BoundarySeq> levels{top};
    for (std::size_t k = 0; k < slices.size(); ++k) {
        const Slice& s = slices[k];
        BoundarySeq cur = levels.back();
        int w = (int)cur.size();
        int p = s.pos;
        switch (s.kind) {
            case Slice::Kind::Cross:
                if (p < 1 || p + 1 > w) throw TangleError("crossing position out of range", (int)k);
                std::swap(cur[p - 1], cur[p]);
                break;
            case Slice::Kind::Min:
                if (p < 1 || p + 1 > w) throw TangleError("minimum position out of range", (int)k);
                if (cur[p - 1] == cur[p]) throw TangleError("minimum joins points of equal orientation", (int)k);
                cur.erase(cur.begin() + (p - 1), cur.begin() + (p + 1));
                break;
            case Slice::Kind::Max: {
                if (p < 1 || p > w + 1) throw TangleError("maximum position out of range", (int)k);
                Orient a = s.tag == MaxTag::LeftToRight ? Orient::Up : Orient::Down;
                cur.insert(cur.begin() + (p - 1), {a, flip(a)});
                break;
            }
        }
        levels.push_back(std::move(cur));
    }
    return levels;
}

TangleWord validate(const std::vector<Slice>& slices, const TangleType& declared) {
    check_type(declared);
    auto levels = propagate(declared.top, slices);
    if (levels.back().size() != declared.bottom.size())
        throw TangleError("bottom width " + std::to_string(levels.back().size()) + " differs from declared " +
                              std::to_string(declared.bottom.size()),
                          slices.empty() ? -1 : (int)slices.size() - 1);
    if (levels.back() != declared.bottom)
        throw TangleError("derived bottom type " + orient_str(levels.back()) + " differs from declared " +
                              orient_str(declared.bottom),
                          slices.empty() ? -1 : (int)slices.size() - 1);
    return TangleWord{declared, slices};
}

TangleWord concat(const TangleWord& upper, const TangleWord& lower) {
    if (upper.type.bottom != lower.type.top)
        throw std::invalid_argument("concat: bottom type " + orient_str(upper.type.bottom) + " does not match top type " +
                                    orient_str(lower.type.top));
    TangleWord w{{upper.type.top, lower.type.bottom}, upper.slices};
    w.slices.insert(w.slices.end(), lower.slices.begin(), lower.slices.end());
    return w;
}

TangleWord identity_word(const BoundarySeq& seq) { return TangleWord{{seq, seq}, {}}; }

TangleWord embed_right_of(const BoundarySeq& left, const TangleWord& w) {
    TangleWord r;
    r.type.top = left;
    r.type.top.insert(r.type.top.end(), w.type.top.begin(), w.type.top.end());
    r.type.bottom = left;
    r.type.bottom.insert(r.type.bottom.end(), w.type.bottom.begin(), w.type.bottom.end());
    for (Slice s : w.slices) {
        s.pos += (int)left.size();
        r.slices.push_back(s);
    }
    return r;
}

int crossing_sign(const Slice& s, const BoundarySeq& upper) {
    int h = s.hand == Hand::FirstOver ? 1 : -1;
    int d = upper[s.pos - 1] == upper[s.pos] ? 1 : -1;
    return h * d;
}

namespace {

struct Walk {
    const std::vector<Slice>& slices;
    int L;
    // state
    int k, p;
    bool down;

    // Advance one slice. Returns false when a boundary is reached.
    // `crossed` receives the crossing slice index and whether this is strand X.
    bool step(int& crossed_slice, bool& is_x, int& turned_max) {
        crossed_slice = -1;
        turned_max = -1;
        if (down) {
            if (k == L) return false;
            const Slice& s = slices[k];
            int r = s.pos;
            switch (s.kind) {
                case Slice::Kind::Cross:
                    if (p == r) {
                        crossed_slice = k, is_x = true, p = r + 1;
                    } else if (p == r + 1) {
                        crossed_slice = k, is_x = false, p = r;
                    }
                    ++k;
                    break;
                case Slice::Kind::Min:
                    if (p == r) {
                        p = r + 1, down = false;
                    } else if (p == r + 1) {
                        p = r, down = false;
                    } else {
                        if (p > r + 1) p -= 2;
                        ++k;
                    }
                    break;
                case Slice::Kind::Max:
                    if (p >= r) p += 2;
                    ++k;
                    break;
            }
        } else {
            if (k == 0) return false;
            const Slice& s = slices[k - 1];
            int r = s.pos;
            switch (s.kind) {
                case Slice::Kind::Cross:
                    if (p == r + 1) {
                        crossed_slice = k - 1, is_x = true, p = r;
                    } else if (p == r) {
                        crossed_slice = k - 1, is_x = false, p = r + 1;
                    }
                    --k;
                    break;
                case Slice::Kind::Min:
                    if (p >= r) p += 2;
                    --k;
                    break;
                case Slice::Kind::Max:
                    if (p == r) {
                        p = r + 1, down = true, turned_max = k - 1;
                    } else if (p == r + 1) {
                        p = r, down = true, turned_max = k - 1;
                    } else {
                        if (p > r + 1) p -= 2;
                        --k;
                    }
                    break;
            }
        }
        return true;
    }
};

}  // namespace

StrandGraph strand_graph(const TangleWord& w) {
    StrandGraph g;
    g.levels = propagate(w.type.top, w.slices);
    const int L = (int)w.slices.size();
    g.crossing_of_slice.assign(L, -1);
    std::vector<std::vector<std::pair<int, bool>>> seen(L);  // per crossing: (component, is_x)
    std::vector<bool> max_done(L, false);

    auto run = [&](Component& comp, int ci, Walk walk, int stop_k, int stop_p, bool stop_down, bool closed) {
        int cs, tm;
        bool isx = false;
        while (true) {
            bool moved = walk.step(cs, isx, tm);
            if (!moved) {
                comp.end = walk.down ? Vertex{1, walk.p} : Vertex{0, walk.p};
                return;
            }
            if (tm >= 0) max_done[tm] = true;
            if (cs >= 0) {
                bool over = isx == (w.slices[cs].hand == Hand::FirstOver);
                comp.visits.push_back({cs, over});
                seen[cs].push_back({ci, isx});
            }
            if (closed && walk.k == stop_k && walk.p == stop_p && walk.down == stop_down) return;
        }
    };

    for (const Vertex& v : start_vertices(w.type)) {
        Component comp;
        comp.start = v;
        int ci = (int)g.comps.size();
        Walk walk{w.slices, L, v.side == 0 ? 0 : L, v.pos, v.side == 0};
        run(comp, ci, walk, -1, -1, false, false);
        g.comps.push_back(std::move(comp));
    }
    g.open_count = (int)g.comps.size();
    for (int k = 0; k < L; ++k) {
        const Slice& s = w.slices[k];
        if (s.kind != Slice::Kind::Max || max_done[k]) continue;
        max_done[k] = true;
        Component comp;
        comp.closed = true;
        comp.base_slice = k;
        int sp = s.tag == MaxTag::LeftToRight ? s.pos + 1 : s.pos;
        int ci = (int)g.comps.size();
        Walk walk{w.slices, L, k + 1, sp, true};
        run(comp, ci, walk, k + 1, sp, true, true);
        g.comps.push_back(std::move(comp));
    }
    for (int k = 0; k < L; ++k) {
        if (w.slices[k].kind != Slice::Kind::Cross) continue;
        const auto& sv = seen[k];
        if (sv.size() != 2) throw TangleError("internal: crossing visited " + std::to_string(sv.size()) + " times", k);
        CrossingInfo ci;
        ci.slice = k;
        ci.sign = crossing_sign(w.slices[k], g.levels[k]);
        ci.comp_x = sv[0].second ? sv[0].first : sv[1].first;
        ci.comp_y = sv[0].second ? sv[1].first : sv[0].first;
        ci.over = w.slices[k].hand == Hand::FirstOver ? ci.comp_x : ci.comp_y;
        if (ci.comp_x == ci.comp_y) g.comps[ci.comp_x].self_writhe += ci.sign;
        g.crossing_of_slice[k] = (int)g.crossings.size();
        g.crossings.push_back(ci);
    }
    return g;
}

std::pair<Connector, int> connector(const TangleWord& w) {
    StrandGraph g = strand_graph(w);
    Connector c;
    for (int i = 0; i < g.open_count; ++i) c.edges.push_back({g.comps[i].start, g.comps[i].end});
    return {c, (int)g.comps.size() - g.open_count};
}

std::vector<LoopOrient> closed_loop_orientations(const TangleWord& w) {
    StrandGraph g = strand_graph(w);
    std::vector<LoopOrient> out;
    for (int i = g.open_count; i < (int)g.comps.size(); ++i)
        out.push_back(w.slices[g.comps[i].base_slice].tag == MaxTag::LeftToRight ? LoopOrient::Clockwise
                                                                                  : LoopOrient::Counterclockwise);
    return out;
}

std::vector<Vertex> start_vertices(const TangleType& ty) {
    std::vector<Vertex> v;
    for (int p = 1; p <= (int)ty.top.size(); ++p)
        if (ty.top[p - 1] == Orient::Down) v.push_back({0, p});
    for (int p = 1; p <= (int)ty.bottom.size(); ++p)
        if (ty.bottom[p - 1] == Orient::Up) v.push_back({1, p});
    return v;
}

std::vector<Vertex> end_vertices(const TangleType& ty) {
    std::vector<Vertex> v;
    for (int p = 1; p <= (int)ty.top.size(); ++p)
        if (ty.top[p - 1] == Orient::Up) v.push_back({0, p});
    for (int p = 1; p <= (int)ty.bottom.size(); ++p)
        if (ty.bottom[p - 1] == Orient::Down) v.push_back({1, p});
    return v;
}

std::vector<Connector> enumerate_connectors(const TangleType& ty) {
    check_type(ty);
    auto st = start_vertices(ty);
    auto en = end_vertices(ty);
    std::vector<Connector> out;
    do {
        Connector c;
        for (std::size_t k = 0; k < st.size(); ++k) c.edges.push_back({st[k], en[k]});
        out.push_back(std::move(c));
    } while (std::next_permutation(en.begin(), en.end()));
    return out;
}

void check_connector(const TangleType& ty, const Connector& c) {
    auto st = start_vertices(ty);
    auto en = end_vertices(ty);
    if (c.edges.size() != st.size()) throw std::invalid_argument("connector has wrong number of edges");
    std::set<Vertex> used;
    for (std::size_t k = 0; k < c.edges.size(); ++k) {
        const auto& [a, b] = c.edges[k];
        if (a != st[k]) throw std::invalid_argument("connector edges must be sorted by start vertex: " + vertex_name(a));
        if (std::find(en.begin(), en.end(), b) == en.end())
            throw std::invalid_argument("connector edge ends at a non-end vertex " + vertex_name(b));
        if (!used.insert(b).second) throw std::invalid_argument("connector uses vertex twice: " + vertex_name(b));
    }
}

StartOrder canonical_order(const TangleType& ty) { return start_vertices(ty); }

TangleWord canonical_basis_word(const TangleType& ty, const Connector& c) {
    return canonical_basis_word(ty, c, canonical_order(ty));
}

namespace {

struct Phase {
    std::vector<int> tokens;  // edge id per position
    BoundarySeq orient;
    std::vector<Slice> slices;
};

// Remove same-side chords by moving right legs left, innermost first.
// `as_max` records the closing slice as a Max (bottom phase read upward).
void clear_chords(Phase& ph, const std::vector<bool>& is_chord, bool as_max) {
    while (true) {
        int best = -1, best_a = 0, best_b = 0;
        std::map<int, int> first;
        for (int p = 0; p < (int)ph.tokens.size(); ++p) {
            int e = ph.tokens[p];
            if (!is_chord[e]) continue;
            auto it = first.find(e);
            if (it == first.end()) {
                first[e] = p;
            } else if (best < 0 || p - it->second < best_b - best_a) {
                best = e, best_a = it->second, best_b = p;
            }
        }
        if (best < 0) return;
        for (int p = best_b - 1; p > best_a; --p) {  // 0-based swap of p and p+1
            ph.slices.push_back(Slice::cross(p + 1, Hand::FirstOver));
            std::swap(ph.tokens[p], ph.tokens[p + 1]);
            std::swap(ph.orient[p], ph.orient[p + 1]);
        }
        if (as_max) {
            MaxTag t = ph.orient[best_a] == Orient::Up ? MaxTag::LeftToRight : MaxTag::RightToLeft;
            ph.slices.push_back(Slice::max(best_a + 1, t));
        } else {
            ph.slices.push_back(Slice::min(best_a + 1));
        }
        ph.tokens.erase(ph.tokens.begin() + best_a, ph.tokens.begin() + best_a + 2);
        ph.orient.erase(ph.orient.begin() + best_a, ph.orient.begin() + best_a + 2);
    }
}

}  // namespace

TangleWord canonical_basis_word(const TangleType& ty, const Connector& c, const StartOrder& order) {
    check_connector(ty, c);
    const int ne = (int)c.edges.size();
    std::map<Vertex, int> edge_of;
    for (int e = 0; e < ne; ++e) {
        edge_of[c.edges[e].first] = e;
        edge_of[c.edges[e].second] = e;
    }
    std::vector<bool> cap(ne), cup(ne);
    for (int e = 0; e < ne; ++e) {
        cap[e] = c.edges[e].first.side == 0 && c.edges[e].second.side == 0;
        cup[e] = c.edges[e].first.side == 1 && c.edges[e].second.side == 1;
    }
    Phase top{{}, ty.top, {}};
    for (int p = 1; p <= (int)ty.top.size(); ++p) top.tokens.push_back(edge_of.at({0, p}));
    clear_chords(top, cap, false);
    Phase bot{{}, ty.bottom, {}};
    for (int p = 1; p <= (int)ty.bottom.size(); ++p) bot.tokens.push_back(edge_of.at({1, p}));
    clear_chords(bot, cup, true);

    std::vector<Slice> slices = top.slices;
    // bubble the vertical strands from top order into bottom order
    std::map<int, int> target;
    for (int p = 0; p < (int)bot.tokens.size(); ++p) target[bot.tokens[p]] = p;
    std::vector<int> cur = top.tokens;
    for (std::size_t i = 0; i < cur.size(); ++i)
        for (std::size_t j = 0; j + 1 < cur.size() - i; ++j)
            if (target.at(cur[j]) > target.at(cur[j + 1])) {
                std::swap(cur[j], cur[j + 1]);
                slices.push_back(Slice::cross((int)j + 1, Hand::FirstOver));
            }
    slices.insert(slices.end(), bot.slices.rbegin(), bot.slices.rend());

    TangleWord w = validate(slices, ty);
    std::map<Vertex, int> rank;
    for (int k = 0; k < (int)order.size(); ++k) rank[order[k]] = k;
    StrandGraph g = strand_graph(w);
    for (const CrossingInfo& ci : g.crossings) {
        int rx = rank.at(g.comps[ci.comp_x].start), ry = rank.at(g.comps[ci.comp_y].start);
        w.slices[ci.slice].hand = rx < ry ? Hand::FirstOver : Hand::FirstUnder;
    }
    return w;
}

int interleaving_pairs(const TangleType& ty, const Connector& c) {
    const int a = (int)ty.top.size(), b = (int)ty.bottom.size();
    auto circ = [&](const Vertex& v) { return v.side == 0 ? v.pos - 1 : a + (b - v.pos); };
    int count = 0;
    for (std::size_t e = 0; e < c.edges.size(); ++e)
        for (std::size_t f = e + 1; f < c.edges.size(); ++f) {
            int x1 = circ(c.edges[e].first), y1 = circ(c.edges[e].second);
            if (x1 > y1) std::swap(x1, y1);
            int x2 = circ(c.edges[f].first), y2 = circ(c.edges[f].second);
            bool in2 = x2 > x1 && x2 < y1, in3 = y2 > x1 && y2 < y1;
            if (in2 != in3) ++count;
        }
    return count;
}

TangleWord basic_E(const BoundarySeq& level, int rho, bool bottom_left_to_right) {
    std::vector<Slice> sl{Slice::min(rho), Slice::max(rho, bottom_left_to_right ? MaxTag::LeftToRight : MaxTag::RightToLeft)};
    auto lv = propagate(level, sl);
    return TangleWord{{level, lv.back()}, sl};
}

TangleWord basic_S(const BoundarySeq& level, int rho, Hand hand) {
    std::vector<Slice> sl{Slice::cross(rho, hand)};
    auto lv = propagate(level, sl);
    return TangleWord{{level, lv.back()}, sl};
}

TangleWord signed_crossing(const BoundarySeq& level, int rho, int sign) {
    if (rho < 1 || rho + 1 > (int)level.size()) throw TangleError("crossing position out of range", 0);
    bool same = level[rho - 1] == level[rho];
    bool first_over = (sign > 0) == same;
    return basic_S(level, rho, first_over ? Hand::FirstOver : Hand::FirstUnder);
}

TangleWord switch_crossing(const TangleWord& w, int slice) {
    TangleWord r = w;
    Slice& s = r.slices.at(slice);
    if (s.kind != Slice::Kind::Cross) throw TangleError("not a crossing", slice);
    s.hand = s.hand == Hand::FirstOver ? Hand::FirstUnder : Hand::FirstOver;
    return r;
}

TangleWord smooth_crossing(const TangleWord& w, int slice) {
    const Slice& s = w.slices.at(slice);
    if (s.kind != Slice::Kind::Cross) throw TangleError("not a crossing", slice);
    auto levels = propagate(w.type.top, std::vector<Slice>(w.slices.begin(), w.slices.begin() + slice));
    const BoundarySeq& up = levels.back();
    TangleWord r{w.type, {}};
    r.slices.assign(w.slices.begin(), w.slices.begin() + slice);
    if (up[s.pos - 1] != up[s.pos]) {
        // lower orientation at pos is the upper orientation at pos+1
        MaxTag t = up[s.pos] == Orient::Up ? MaxTag::LeftToRight : MaxTag::RightToLeft;
        r.slices.push_back(Slice::min(s.pos));
        r.slices.push_back(Slice::max(s.pos, t));
    }
    r.slices.insert(r.slices.end(), w.slices.begin() + slice + 1, w.slices.end());
    return r;
}

}  // namespace walled
