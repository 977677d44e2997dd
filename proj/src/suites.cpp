#include "walled/suites.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "walled/duality.hpp"
#include "walled/qgroup.hpp"
#include "walled/rep.hpp"
#include "walled/skein.hpp"

namespace walled {

bool SuiteReport::pass() const {
    if (checks.empty()) return false;
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

nlohmann::json SuiteReport::to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["params"] = params;
    j["checks"] = nlohmann::json::array();
    for (const Check& c : checks) j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["pass"] = pass();
    return j;
}

std::string SuiteReport::human() const {
    std::string out = "suite " + suite + " " + params.dump() + "\n";
    for (const Check& c : checks) {
        out += std::string("  ") + (c.pass ? "PASS " : "FAIL ") + c.name;
        if (!c.detail.empty()) out += "  " + c.detail;
        out += "\n";
    }
    out += std::string("  => ") + (pass() ? "pass" : "FAIL") + "\n";
    return out;
}

int worker_threads() {
    if (const char* env = std::getenv("WALLED_TANGLE_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : (int)hw;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    const std::size_t nt = std::min<std::size_t>(count, (std::size_t)worker_threads());
    if (nt <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex mu;
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < nt; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lk(mu);
                    if (!err) err = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

int WordSampler::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

BoundarySeq WordSampler::boundary(int width) {
    BoundarySeq s(width);
    for (auto& o : s) o = uniform(0, 1) ? Orient::Up : Orient::Down;
    return s;
}

TangleWord WordSampler::word(const BoundarySeq& top, int max_bottom, int max_cross, int max_inner, int max_steps) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        BoundarySeq level = top;
        std::vector<Slice> slices;
        int crossings = 0;
        const int steps = uniform(0, max_steps);
        for (int st = 0; st < steps; ++st) {
            const int w = (int)level.size();
            // pick a slice kind first (crossings twice as likely), then a slice of that kind
            std::vector<std::vector<Slice>> kinds(3);
            if (crossings < max_cross)
                for (int p = 1; p < w; ++p) {
                    kinds[0].push_back(Slice::cross(p, Hand::FirstOver));
                    kinds[0].push_back(Slice::cross(p, Hand::FirstUnder));
                }
            for (int p = 1; p < w; ++p)
                if (level[p - 1] != level[p]) kinds[1].push_back(Slice::min(p));
            if (w + 2 <= max_inner)
                for (int p = 1; p <= w + 1; ++p) {
                    kinds[2].push_back(Slice::max(p, MaxTag::LeftToRight));
                    kinds[2].push_back(Slice::max(p, MaxTag::RightToLeft));
                }
            std::vector<int> pick;
            for (int k = 0; k < 3; ++k)
                for (int rep = 0; rep < (k == 0 ? 2 : 1); ++rep)
                    if (!kinds[k].empty()) pick.push_back(k);
            if (pick.empty()) break;
            const auto& cand = kinds[pick[uniform(0, (int)pick.size() - 1)]];
            Slice s = cand[uniform(0, (int)cand.size() - 1)];
            if (s.kind == Slice::Kind::Cross) ++crossings;
            level = propagate(level, {s}).back();
            slices.push_back(s);
        }
        while ((int)level.size() > max_bottom) {
            std::vector<int> mins;
            for (int p = 1; p < (int)level.size(); ++p)
                if (level[p - 1] != level[p]) mins.push_back(p);
            if (mins.empty()) break;
            Slice s = Slice::min(mins[uniform(0, (int)mins.size() - 1)]);
            level = propagate(level, {s}).back();
            slices.push_back(s);
        }
        if ((int)level.size() > max_bottom) continue;
        return validate(slices, TangleType{top, level});
    }
    throw std::runtime_error("WordSampler: no word found");
}

TangleWord WordSampler::word_down_first(int width, int max_cross) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        BoundarySeq top = boundary(width);
        top[0] = Orient::Down;
        TangleWord w = word(top, width, max_cross);
        if ((int)w.type.bottom.size() == width && w.type.bottom[0] == Orient::Down) return w;
    }
    throw std::runtime_error("WordSampler: no word with down-first boundary");
}

bool flip_identity_holds(const TangleWord& t, int n) {
    const int m = (int)t.type.top.size();
    if ((int)t.type.bottom.size() != m) throw std::invalid_argument("flip identity needs equal boundary widths");
    LMatrix MT = matrix_of_word(t, n);
    LMatrix MS = matrix_of_word(bend_first(t), n);
    const std::size_t N = ipow(n, m);
    const LaurentPoly a = SkeinParams::skein_coeff();
    for (std::size_t u = 0; u < N; ++u) {
        MultiIndex i = multi_index(u, m, n);
        for (std::size_t v = 0; v < N; ++v) {
            MultiIndex j = multi_index(v, m, n);
            LaurentPoly want;
            if (i[0] != j[0]) {
                MultiIndex i2 = i, j2 = j;
                i2[0] = j[0];
                j2[0] = i[0];
                want = MT.at(index_of(i2, n), index_of(j2, n)) * LaurentPoly::q(n + 1 - 2 * j[0]);
            } else {
                want = MT.at(u, v) * LaurentPoly::q(n - 2 * i[0]);
                for (int k = i[0] + 1; k <= n; ++k) {
                    MultiIndex i2 = i, j2 = j;
                    i2[0] = k;
                    j2[0] = k;
                    want += a * LaurentPoly::q(n + 1 - 2 * k) * MT.at(index_of(i2, n), index_of(j2, n));
                }
            }
            if (MS.at(u, v) != want) return false;
        }
    }
    return true;
}

namespace {

std::size_t factorial(int m) {
    std::size_t f = 1;
    for (int k = 2; k <= m; ++k) f *= (std::size_t)k;
    return f;
}

std::map<std::size_t, Rational> flatten(const QMatrix& M) {
    std::map<std::size_t, Rational> v;
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (const auto& [j, x] : M.row(i)) v.emplace(i * M.cols() + j, x);
    return v;
}

std::vector<Rational> retry_points(const Rational& q0) {
    return {q0, parse_rational("7/4"), parse_rational("9/2"), parse_rational("13/6")};
}

std::vector<BoundarySeq> all_seqs(int m) {
    std::vector<BoundarySeq> out;
    for (int mask = 0; mask < (1 << m); ++mask) {
        BoundarySeq s(m);
        for (int k = 0; k < m; ++k) s[k] = (mask >> (m - 1 - k)) & 1 ? Orient::Up : Orient::Down;
        out.push_back(s);
    }
    return out;
}

std::string type_str(const TangleType& ty) { return orient_str(ty.top) + "|" + orient_str(ty.bottom); }

std::map<Connector, Rational> at_one(const TangleElement& e) {
    std::map<Connector, Rational> out;
    for (const auto& [c, v] : e.terms) {
        Rational x = v.eval(Rational(1));
        if (x != 0) out[c] = x;
    }
    return out;
}

}  // namespace

SuiteReport suite_basis(int max_m, const Rational& q0, bool all_types) {
    SuiteReport rep;
    rep.suite = "basis";
    rep.params = {{"max_m", max_m}, {"q0", rational_str(q0)}, {"all_types", all_types}};
    std::vector<TangleType> types;
    for (int m = 1; m <= max_m; ++m) {
        if (all_types) {
            for (const auto& I : all_seqs(m))
                for (const auto& J : all_seqs(m)) {
                    TangleType ty{I, J};
                    try {
                        check_type(ty);
                    } catch (const std::invalid_argument&) {
                        continue;
                    }
                    types.push_back(ty);
                }
        } else {
            for (int r = m; r >= 0; --r) types.push_back(walled_type(r, m - r));
        }
    }
    std::vector<Check> checks(types.size());
    parallel_for(types.size(), [&](std::size_t k) {
        const TangleType& ty = types[k];
        const int m = (int)ty.top.size();
        const int n = m;
        auto cons = enumerate_connectors(ty);
        std::vector<LMatrix> mats;
        for (const auto& c : cons) mats.push_back(basis_matrix(ty, c, n));
        std::size_t rank = 0;
        std::string used;
        for (const Rational& x : retry_points(q0)) {
            std::vector<std::map<std::size_t, Rational>> vecs;
            for (const auto& M : mats) vecs.push_back(flatten(eval_matrix(M, x)));
            rank = rank_of_vectors(vecs);
            used = rational_str(x);
            if (rank == factorial(m)) break;
        }
        checks[k] = {"rank " + type_str(ty) + " n=" + std::to_string(n),
                     cons.size() == factorial(m) && rank == factorial(m),
                     std::to_string(cons.size()) + " connectors, rank " + std::to_string(rank) + " at q0=" + used};
    });
    rep.checks = std::move(checks);
    return rep;
}

SuiteReport suite_worked_example(const std::vector<int>& ns) {
    SuiteReport rep;
    rep.suite = "worked-example";
    rep.params = {{"type", "vv^|^vv"}, {"word", "X-(2) X+(1)"}, {"n", ns}};
    TangleWord w = validate({Slice::cross(2, Hand::FirstUnder), Slice::cross(1, Hand::FirstOver)},
                            TangleType{parse_orients("vv^"), parse_orients("^vv")});
    const LaurentPoly e1 = LaurentPoly::q(-1);
    const LaurentPoly e2 = LaurentPoly::q(3) - LaurentPoly::q(1);
    for (int n : ns) {
        if (n < 2) continue;
        LMatrix M = matrix_of_word(w, n);
        LaurentPoly a = M.at(index_of({2, 1, 1}, n), index_of({1, 2, 1}, n));
        LaurentPoly b = M.at(index_of({2, 1, 2}, n), index_of({1, 1, 1}, n));
        rep.checks.push_back({"entry ((2,1,1),(1,2,1)) n=" + std::to_string(n), a == e1, a.str()});
        rep.checks.push_back({"entry ((2,1,2),(1,1,1)) n=" + std::to_string(n), b == e2, b.str()});
        bool same = matrix_of_element(normalize(w, n)) == M;
        rep.checks.push_back({"normal form matrix n=" + std::to_string(n), same, ""});
    }
    return rep;
}

SuiteReport suite_linking(int samples, std::uint64_t seed, int max_n) {
    SuiteReport rep;
    rep.suite = "linking";
    rep.params = {{"samples", samples}, {"seed", seed}, {"max_n", max_n}, {"max_m", 3}, {"max_crossings", 5}};
    struct Sample {
        TangleWord t, s;
        int n;
    };
    WordSampler gen(seed);
    std::vector<Sample> all;
    for (int k = 0; k < samples; ++k) {
        int n = gen.uniform(std::min(2, max_n), max_n);
        TangleWord t = gen.word(gen.boundary(gen.uniform(0, 3)), 3, 5);
        TangleWord s = gen.word(t.type.bottom, 3, 5);
        all.push_back({t, s, n});
    }
    std::vector<char> func(all.size()), oracle(all.size()), alg(all.size());
    std::vector<std::string> first_bad(all.size());
    parallel_for(all.size(), [&](std::size_t k) {
        const Sample& x = all[k];
        TangleWord ts = concat(x.t, x.s);
        LMatrix Mt = matrix_of_word(x.t, x.n), Ms = matrix_of_word(x.s, x.n), Mts = matrix_of_word(ts, x.n);
        func[k] = Mts == Mt * Ms;
        TangleElement Et = normalize(x.t, x.n), Es = normalize(x.s, x.n), Ets = normalize(ts, x.n);
        oracle[k] = matrix_of_element(Et) == Mt && matrix_of_element(Es) == Ms && matrix_of_element(Ets) == Mts;
        alg[k] = multiply(Et, Es) == Ets;
    });
    auto tally = [&](const std::vector<char>& v, const std::string& name) {
        int ok = (int)std::count(v.begin(), v.end(), 1);
        std::string detail = std::to_string(ok) + "/" + std::to_string(v.size());
        for (std::size_t k = 0; k < v.size(); ++k)
            if (!v[k]) {
                detail += "; first failure: n=" + std::to_string(all[k].n) + " T=[" + type_str(all[k].t.type) + ": " +
                          encode_word(all[k].t) + "] S=[" + type_str(all[k].s.type) + ": " + encode_word(all[k].s) + "]";
                break;
            }
        rep.checks.push_back({name, ok == (int)v.size(), detail});
    };
    tally(func, "matrix of T/S equals product of matrices");
    tally(oracle, "normal form evaluates to slice matrix");
    tally(alg, "product of normal forms equals normal form of T/S");
    return rep;
}

SuiteReport suite_products(const std::vector<int>& ns) {
    SuiteReport rep;
    rep.suite = "basic-products";
    rep.params = {{"n", ns}};
    const BoundarySeq DU{Orient::Down, Orient::Up}, UD{Orient::Up, Orient::Down}, DD{Orient::Down, Orient::Down},
        UU{Orient::Up, Orient::Up};
    struct Basic {
        std::string name;
        TangleWord w;
        bool is_e;
    };
    // arrows: top ">" when the top is (down, up); bottom ">" when the bottom is (up, down)
    std::vector<Basic> basics{
        {"E>>", basic_E(DU, 1, true), true},
        {"E><", basic_E(DU, 1, false), true},
        {"E<>", basic_E(UD, 1, true), true},
        {"E<<", basic_E(UD, 1, false), true},
        {"S(vv)", signed_crossing(DD, 1, +1), false},
        {"S(^^)", signed_crossing(UU, 1, +1), false},
        {"S(v^)", signed_crossing(DU, 1, -1), false},
        {"S(^v)", signed_crossing(UD, 1, -1), false},
    };
    auto outer = [&](const TangleWord& t, const TangleWord& s) { return basic_E(t.type.top, 1, s.type.bottom == UD); };
    for (int n : ns) {
        const LaurentPoly qn = LaurentPoly::q(n), a = SkeinParams::skein_coeff();
        int ee = 0, es = 0, ss = 0;
        for (const auto& T : basics)
            for (const auto& S : basics) {
                if (T.w.type.bottom != S.w.type.top) continue;
                TangleElement expect;
                if (T.is_e && S.is_e) {
                    ++ee;
                    expect = normalize(outer(T.w, S.w), n).scaled(quantum_int(n));
                } else if (T.is_e != S.is_e) {
                    ++es;
                    expect = normalize(outer(T.w, S.w), n).scaled(qn);
                } else {
                    ++ss;
                    TangleElement one = TangleElement::identity(T.w.type.top, n);
                    if (T.w.type.top == T.w.type.bottom)
                        expect = one + normalize(T.w, n).scaled(a);
                    else
                        expect = one - normalize(outer(T.w, S.w), n).scaled(qn * a);
                }
                TangleWord ts = concat(T.w, S.w);
                TangleElement got = normalize(ts, n);
                bool ok = got == expect;
                bool mat = matrix_of_word(ts, n) == matrix_of_word(T.w, n) * matrix_of_word(S.w, n);
                bool prod = multiply(normalize(T.w, n), normalize(S.w, n)) == expect;
                rep.checks.push_back({T.name + "/" + S.name + " n=" + std::to_string(n), ok && mat && prod,
                                      ok ? "" : "got " + got.str()});
            }
        rep.checks.push_back({"case counts n=" + std::to_string(n), ee == 8 && es == 8 && ss == 4,
                              std::to_string(ee) + " e/e, " + std::to_string(es) + " e/s, " + std::to_string(ss) + " s/s"});
    }
    return rep;
}

SuiteReport suite_presentation(const std::vector<std::pair<int, int>>& rs, const std::vector<int>& ns) {
    SuiteReport rep;
    rep.suite = "presentation";
    rep.params = {{"rs", rs}, {"n", ns}, {"a", presentation_a().str()}};
    struct Job {
        int r, s, n;
    };
    std::vector<Job> jobs;
    for (auto [r, s] : rs)
        for (int n : ns) jobs.push_back({r, s, n});
    std::vector<Check> out(jobs.size());
    parallel_for(jobs.size(), [&](std::size_t k) {
        const Job& j = jobs[k];
        PresentationReport pr = presentation_check(j.r, j.s, j.n, presentation_a());
        std::string detail;
        for (const auto& rel : pr.relations) detail += (detail.empty() ? "" : " ") + rel.name + (rel.pass ? ":ok" : ":FAIL");
        PresentationReport lit = presentation_check(j.r, j.s, j.n, SkeinParams::skein_coeff());
        std::string bad;
        for (const auto& rel : lit.relations)
            if (!rel.pass) bad += (bad.empty() ? "" : ",") + rel.name;
        detail += "; with a=" + SkeinParams::skein_coeff().str() + (bad.empty() ? " all hold" : " failing: " + bad);
        out[k] = {"relations r=" + std::to_string(j.r) + " s=" + std::to_string(j.s) + " n=" + std::to_string(j.n),
                  pr.all_pass() && !pr.relations.empty(), detail};
    });
    rep.checks = std::move(out);
    return rep;
}

SuiteReport suite_hecke(int max_m, int max_n) {
    SuiteReport rep;
    rep.suite = "hecke";
    rep.params = {{"max_m", max_m}, {"max_n", max_n}};
    const LaurentPoly a = SkeinParams::skein_coeff();
    for (int m = 2; m <= max_m; ++m)
        for (int n = 1; n <= max_n; ++n) {
            const std::string tag = " m=" + std::to_string(m) + " n=" + std::to_string(n);
            bool coincide = true;
            for (int k = 1; k < m; ++k) {
                LMatrix H = hecke_action_matrix(k, m, n);
                coincide = coincide && H == matrix_of_word(hecke_word({k}, m), n) &&
                           H == matrix_of_element(hecke_element({k}, m, n));
            }
            rep.checks.push_back({"crossing acts as Hecke generator" + tag, coincide, ""});

            const std::size_t N = ipow(n, m);
            LMatrix I = LMatrix::identity(N);
            bool mat_rel = true, elem_rel = true;
            TangleElement one = TangleElement::identity(BoundarySeq(m, Orient::Down), n);
            for (int k = 1; k < m; ++k) {
                LMatrix T = hecke_action_matrix(k, m, n);
                // (T + q)(T - q^-1) = 0
                LMatrix quad = (T + I.scaled(LaurentPoly::q(1))) * (T - I.scaled(LaurentPoly::q(-1)));
                mat_rel = mat_rel && quad.is_zero();
                elem_rel = elem_rel && hecke_element({k, k}, m, n) == one + hecke_element({k}, m, n).scaled(a);
                for (int l = k + 1; l < m; ++l) {
                    LMatrix U = hecke_action_matrix(l, m, n);
                    if (l == k + 1) {
                        mat_rel = mat_rel && T * U * T == U * T * U;
                        elem_rel = elem_rel && hecke_element({k, l, k}, m, n) == hecke_element({l, k, l}, m, n);
                    } else {
                        mat_rel = mat_rel && T * U == U * T;
                        elem_rel = elem_rel && hecke_element({k, l}, m, n) == hecke_element({l, k}, m, n);
                    }
                }
            }
            rep.checks.push_back({"defining relations on tensor space" + tag, mat_rel, ""});
            rep.checks.push_back({"defining relations on normal forms" + tag, elem_rel, ""});
        }
    return rep;
}

namespace {

// Kernel of the Hecke basis-to-matrix map and its image under hecke_to_walled.
Check vanishing_check(int n, int r, int s, const Rational& q0) {
    const int m = r + s;
    TangleType hty = walled_type(m, 0);
    auto cons = enumerate_connectors(hty);
    std::vector<std::map<std::size_t, Rational>> hv, wv;
    for (const auto& c : cons) {
        hv.push_back(flatten(eval_matrix(basis_matrix(hty, c, n), q0)));
        TangleElement img = hecke_to_walled(TangleElement::basis(hty, n, c), r, s);
        wv.push_back(flatten(eval_matrix(matrix_of_element(img), q0)));
    }
    auto kh = kernel_of_vectors(hv);
    auto kw = kernel_of_vectors(wv);
    bool ok = kh.size() == kw.size();
    for (const auto& c : kh) {
        std::map<std::size_t, Rational> sum;
        for (std::size_t i = 0; i < c.size(); ++i)
            for (const auto& [idx, x] : wv[i]) sum[idx] += c[i] * x;
        for (const auto& [idx, x] : sum)
            if (x != 0) ok = false;
    }
    return {"vanishing correspondence n=" + std::to_string(n) + " r=" + std::to_string(r) + " s=" + std::to_string(s), ok,
            "kernel dims " + std::to_string(kh.size()) + " / " + std::to_string(kw.size())};
}

}  // namespace

SuiteReport suite_duality(const std::vector<std::array<int, 3>>& triples, const Rational& q0) {
    SuiteReport rep;
    rep.suite = "duality";
    rep.params = {{"triples", triples}, {"q0", rational_str(q0)}};
    // known ranks and tangle-side annihilator dims
    const std::map<std::array<int, 3>, std::pair<int, int>> known{
        {{2, 1, 1}, {2, 0}}, {{2, 2, 1}, {5, 1}}, {{2, 1, 2}, {5, 1}}, {{3, 1, 1}, {2, 0}}, {{2, 3, 0}, {5, 1}}, {{2, 1, 0}, {1, 0}}};
    std::vector<DualityReport> reports(triples.size());
    std::vector<Check> extra(triples.size());
    parallel_for(triples.size(), [&](std::size_t k) {
        auto [n, r, s] = triples[k];
        reports[k] = verify_schur_weyl(n, r, s, q0);
        extra[k] = vanishing_check(n, r, s, reports[k].q0);
    });
    for (std::size_t k = 0; k < triples.size(); ++k) {
        const auto& d = reports[k];
        auto [n, r, s] = triples[k];
        std::string tag = " n=" + std::to_string(n) + " r=" + std::to_string(r) + " s=" + std::to_string(s);
        std::string detail = "rank " + std::to_string(d.image_rank) + ", commutant " + std::to_string(d.commutant_dim) +
                             ", ann " + std::to_string(d.annihilator_dim) + "/" + std::to_string(d.hecke_annihilator_dim) +
                             ", q0 " + rational_str(d.q0);
        rep.checks.push_back({"generators commute with basis matrices" + tag, d.commutes_symbolically, ""});
        rep.checks.push_back({"image rank equals commutant" + tag, d.rank_equals_commutant, detail});
        rep.checks.push_back({"annihilators match" + tag, d.annihilators_match, ""});
        rep.checks.push_back({"faithful iff n >= r+s" + tag, d.faithful_iff_n_large, d.faithful ? "faithful" : "not faithful"});
        auto it = known.find(triples[k]);
        if (it != known.end())
            rep.checks.push_back({"expected rank/annihilator" + tag,
                                  (int)d.image_rank == it->second.first && (int)d.annihilator_dim == it->second.second,
                                  detail});
        rep.checks.push_back(extra[k]);
        TangleElement id = TangleElement::identity(BoundarySeq(r + s, Orient::Down), n);
        rep.checks.push_back({"identity maps to identity" + tag,
                              hecke_to_walled(id, r, s) == TangleElement::identity(walled_type(r, s).top, n), ""});
    }
    return rep;
}

SuiteReport suite_flip(int samples, std::uint64_t seed, int max_m, int max_n) {
    SuiteReport rep;
    rep.suite = "flip";
    rep.params = {{"samples", samples}, {"seed", seed}, {"max_m", max_m}, {"max_n", max_n}};
    // fixed small cases first
    const BoundarySeq D1{Orient::Down}, D2{Orient::Down, Orient::Down};
    std::vector<std::pair<std::string, TangleWord>> fixed{
        {"identity m=1", identity_word(D1)},
        {"identity m=2", identity_word(D2)},
        {"positive crossing m=2", signed_crossing(D2, 1, 1)},
        {"negative crossing m=2", signed_crossing(D2, 1, -1)},
    };
    for (int n = 1; n <= max_n; ++n)
        for (const auto& [name, w] : fixed)
            rep.checks.push_back({name + " n=" + std::to_string(n), flip_identity_holds(w, n), ""});
    WordSampler gen(seed);
    std::vector<std::pair<TangleWord, int>> all;
    for (int k = 0; k < samples; ++k) {
        int m = gen.uniform(1, max_m);
        int n = gen.uniform(1, max_n);
        all.push_back({gen.word_down_first(m, 5), n});
    }
    std::vector<char> ok(all.size());
    parallel_for(all.size(), [&](std::size_t k) { ok[k] = flip_identity_holds(all[k].first, all[k].second); });
    int good = (int)std::count(ok.begin(), ok.end(), 1);
    std::string detail = std::to_string(good) + "/" + std::to_string(all.size());
    for (std::size_t k = 0; k < ok.size(); ++k)
        if (!ok[k]) {
            detail += "; first failure n=" + std::to_string(all[k].second) + " " + type_str(all[k].first.type) + ": " +
                      encode_word(all[k].first);
            break;
        }
    rep.checks.push_back({"random words", good == (int)all.size(), detail});
    return rep;
}

SuiteReport suite_classical(const std::vector<std::pair<int, int>>& rs, const std::vector<int>& ns) {
    SuiteReport rep;
    rep.suite = "classical";
    rep.params = {{"rs", rs}, {"n", ns}};
    for (auto [r, s] : rs)
        for (int n : ns) {
            const int m = r + s;
            const std::string tag = " r=" + std::to_string(r) + " s=" + std::to_string(s) + " n=" + std::to_string(n);
            TangleType hty = walled_type(m, 0), wty = walled_type(r, s);
            bool flips = true;
            for (const Connector& d : enumerate_connectors(hty)) {
                auto img = at_one(hecke_to_walled(TangleElement::basis(hty, n, d), r, s));
                std::map<Connector, Rational> want{{classical_flip(d, r, s), Rational(1)}};
                flips = flips && img == want;
            }
            rep.checks.push_back({"hecke_to_walled at q=1 is the flip" + tag, flips, ""});

            bool mult = true;
            std::string bad;
            StructureTable table = structure_constants(wty, n);
            for (const auto& [key, prod] : table) {
                auto [d3, loops] = brauer_compose(wty, key.first, wty, key.second);
                Rational f = 1;
                for (int k = 0; k < loops; ++k) f *= n;
                std::map<Connector, Rational> want{{d3, f}};
                if (at_one(prod) != want) {
                    mult = false;
                    if (bad.empty()) bad = connector_str(key.first) + " * " + connector_str(key.second);
                }
            }
            rep.checks.push_back({"structure constants at q=1 give Brauer products" + tag, mult, bad});

            bool mats = true;
            for (const Connector& c : enumerate_connectors(wty))
                mats = mats && eval_matrix(basis_matrix(wty, c, n), Rational(1)) == eval_matrix(classical_matrix(wty, c, n), Rational(1));
            rep.checks.push_back({"basis matrices at q=1 are the classical action" + tag, mats, ""});
        }
    return rep;
}

SuiteReport suite_divpowers(int max_l, const std::vector<int>& ns) {
    SuiteReport rep;
    rep.suite = "divided-powers";
    rep.params = {{"max_l", max_l}, {"n", ns}};
    const BoundarySeq V{Orient::Down}, Vd{Orient::Up};
    for (int n : ns)
        for (const auto& [name, J] : std::vector<std::pair<std::string, BoundarySeq>>{{"V(x)V", V}, {"V(x)V*", Vd}}) {
            bool f = true, e = true;
            int printed_fail = 0, total = 0;
            for (int i = 1; i < n; ++i)
                for (int l = 1; l <= max_l; ++l) {
                    DivPowerReport d = check_divpowers(i, l, V, J, n);
                    f = f && d.f_identity;
                    e = e && d.e_identity;
                    ++total;
                    if (!e_identity_as_printed(i, l, V, J, n)) ++printed_fail;
                }
            const std::string tag = " on " + name + " n=" + std::to_string(n);
            rep.checks.push_back({"f identity" + tag, f, ""});
            rep.checks.push_back({"e identity" + tag, e,
                                  "with K^k in place of K^-k: " + std::to_string(printed_fail) + "/" + std::to_string(total) +
                                      " cases fail"});
        }
    return rep;
}

SuiteReport suite_skein(int n) {
    SuiteReport rep;
    rep.suite = "skein";
    rep.params = {{"n", n}};
    const BoundarySeq E0{}, D1{Orient::Down}, D2{Orient::Down, Orient::Down};
    // closed loops, both orientations
    for (MaxTag t : {MaxTag::LeftToRight, MaxTag::RightToLeft}) {
        TangleWord loop = validate({Slice::max(1, t), Slice::min(1)}, TangleType{E0, E0});
        TangleElement e = normalize(loop, n);
        TangleElement want = TangleElement::identity(E0, n).scaled(quantum_int(n));
        bool ok = e == want && matrix_of_word(loop, n).at(0, 0) == quantum_int(n);
        rep.checks.push_back({std::string("loop value ") + (t == MaxTag::LeftToRight ? "clockwise" : "counterclockwise"), ok,
                              e.str()});
    }
    // kinks on a down strand
    for (Hand h : {Hand::FirstOver, Hand::FirstUnder}) {
        TangleWord k = validate({Slice::max(2, MaxTag::LeftToRight), Slice::cross(1, h), Slice::min(1)}, TangleType{D1, D1});
        int sign = crossing_sign(k.slices[1], propagate(D1, {k.slices[0]}).back());
        TangleElement want = TangleElement::identity(D1, n).scaled(sign > 0 ? SkeinParams(n).pos_kink() : SkeinParams(n).neg_kink());
        TangleElement got = normalize(k, n);
        bool ok = got == want && matrix_of_element(got) == matrix_of_word(k, n);
        rep.checks.push_back({std::string(sign > 0 ? "positive" : "negative") + " kink", ok, got.str()});
    }
    // quadratic relation
    {
        TangleWord w = validate({Slice::cross(1, Hand::FirstOver), Slice::cross(1, Hand::FirstOver)}, TangleType{D2, D2});
        TangleElement want = TangleElement::identity(D2, n) +
                             normalize(validate({Slice::cross(1, Hand::FirstOver)}, TangleType{D2, D2}), n)
                                 .scaled(SkeinParams::skein_coeff());
        rep.checks.push_back({"X+(1) X+(1) = 1 + (q^-1 - q) X+(1)", normalize(w, n) == want, ""});
    }
    // skein relation on random crossings
    {
        WordSampler gen(7 + (std::uint64_t)n);
        int tested = 0, good = 0;
        while (tested < 60) {
            TangleWord w = gen.word(gen.boundary(gen.uniform(0, 3)), 3, 4);
            std::vector<int> cross;
            for (std::size_t i = 0; i < w.slices.size(); ++i)
                if (w.slices[i].kind == Slice::Kind::Cross) cross.push_back((int)i);
            if (cross.empty()) continue;
            int at = cross[gen.uniform(0, (int)cross.size() - 1)];
            int sign = crossing_sign(w.slices[at], strand_graph(w).levels[at]);
            TangleElement here = normalize(w, n), other = normalize(switch_crossing(w, at), n),
                          smooth = normalize(smooth_crossing(w, at), n);
            TangleElement plus = sign > 0 ? here : other, minus = sign > 0 ? other : here;
            ++tested;
            if (plus - minus == smooth.scaled(SkeinParams::skein_coeff())) ++good;
        }
        rep.checks.push_back({"L+ - L- = (q^-1 - q) L0 on random crossings", good == tested,
                              std::to_string(good) + "/" + std::to_string(tested)});
    }
    // memoization is transparent
    {
        WordSampler gen(99);
        std::vector<TangleWord> ws;
        for (int k = 0; k < 20; ++k) ws.push_back(gen.word(gen.boundary(gen.uniform(1, 3)), 3, 5));
        std::vector<TangleElement> cached;
        for (const auto& w : ws) cached.push_back(normalize(w, n));
        clear_normalize_cache();
        bool ok = true;
        for (std::size_t k = 0; k < ws.size(); ++k) ok = ok && normalize(ws[k], n) == cached[k];
        rep.checks.push_back({"normalization cache is transparent", ok, ""});
    }
    return rep;
}

}  // namespace walled
