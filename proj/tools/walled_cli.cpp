#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "walled/dsl.hpp"
#include "walled/duality.hpp"
#include "walled/rep.hpp"
#include "walled/skein.hpp"
#include "walled/suites.hpp"

using namespace walled;

namespace {

struct Options {
    std::string format = "json";
    int n = 2, r = 1, s = 1, m = 3;
    std::string q0 = "5/3";
    std::uint64_t seed = 1;
    int samples = 200;
    std::string type, word, file;
    std::string type2, word2, file2;
    std::string via = "slices";
    std::string connector;
    std::string hecke;
    bool timings = false;
};

// usage errors that are not CLI11 parse errors
struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Usage("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

TangleWord load_word(const std::string& type, const std::string& word, const std::string& file) {
    if (!file.empty()) return parse_tangle(read_file(file));
    if (type.empty()) throw Usage("need --type and --word, or --file");
    return parse_word(word, parse_type(type));
}

bool human(const Options& o) { return o.format == "human"; }

void emit_element(const Options& o, const TangleElement& e) {
    if (human(o))
        std::cout << "type " << render_type(e.type) << ", n=" << e.n << "\n" << e.str() << "\n";
    else
        std::cout << element_to_json(e).dump(2) << "\n";
}

Connector parse_connector(const std::string& text) {
    Connector c;
    std::stringstream ss(text);
    std::string edge;
    while (std::getline(ss, edge, ',')) {
        edge.erase(std::remove_if(edge.begin(), edge.end(), ::isspace), edge.end());
        if (edge.empty()) continue;
        auto dash = edge.find('-');
        if (dash == std::string::npos) throw Usage("connector edge '" + edge + "' needs the form T1-B2");
        c.edges.push_back({parse_vertex(edge.substr(0, dash)), parse_vertex(edge.substr(dash + 1))});
    }
    return c;
}

nlohmann::json connector_json(const Connector& c) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [a, b] : c.edges) j.push_back({vertex_name(a), vertex_name(b)});
    return j;
}

int emit_suites(const Options& o, const std::string& target, const std::vector<SuiteReport>& suites,
                const nlohmann::json& extra = nullptr) {
    bool ok = std::all_of(suites.begin(), suites.end(), [](const SuiteReport& r) { return r.pass(); });
    if (human(o)) {
        std::cout << "verify " << target << " (seed " << o.seed << ")\n";
        for (const auto& r : suites) std::cout << r.human();
        if (!extra.is_null()) std::cout << extra.dump(2) << "\n";
        std::cout << (ok ? "ALL PASS" : "FAILURES") << "\n";
    } else {
        nlohmann::json j;
        j["command"] = "verify";
        j["target"] = target;
        j["seed"] = o.seed;
        j["suites"] = nlohmann::json::array();
        for (const auto& r : suites) j["suites"].push_back(r.to_json());
        if (!extra.is_null()) j["report"] = extra;
        j["pass"] = ok;
        std::cout << j.dump(2) << "\n";
    }
    return ok ? 0 : 1;
}

int run_verify(const Options& o, const std::string& target) {
    Rational q0 = parse_rational(o.q0);
    std::vector<SuiteReport> out;
    if (target == "skein") {
        out.push_back(suite_skein(o.n));
        out.push_back(suite_products({o.n}));
    } else if (target == "hecke") {
        out.push_back(suite_hecke(o.m, o.n));
    } else if (target == "presentation") {
        out.push_back(suite_presentation({{o.r, o.s}}, {o.n}));
    } else if (target == "linking") {
        out.push_back(suite_worked_example({2, 3}));
        out.push_back(suite_linking(o.samples, o.seed, o.n));
        out.push_back(suite_flip(50, o.seed, 3, o.n));
    } else if (target == "duality") {
        out.push_back(suite_duality({{o.n, o.r, o.s}}, q0));
        nlohmann::json rep = verify_schur_weyl(o.n, o.r, o.s, q0).to_json();
        if (!o.timings) rep.erase("timings");
        return emit_suites(o, target, out, rep);
    } else if (target == "all") {
        out.push_back(suite_basis(3, q0, true));
        out.push_back(suite_worked_example({2, 3}));
        out.push_back(suite_linking(200, o.seed, 3));
        out.push_back(suite_products({2, 3}));
        out.push_back(suite_presentation({{1, 1}, {2, 1}, {1, 2}, {2, 2}}, {2, 3}));
        out.push_back(suite_hecke(4, 3));
        out.push_back(suite_duality({{{2, 1, 1}}, {{2, 2, 1}}, {{2, 1, 2}}, {{3, 1, 1}}, {{2, 3, 0}}}, q0));
        out.push_back(suite_flip(50, o.seed, 3, 3));
        out.push_back(suite_classical({{1, 1}, {2, 1}}, {2, 3}));
        out.push_back(suite_divpowers(3, {2, 3}));
        out.push_back(suite_skein(2));
    } else {
        throw Usage("unknown verify target '" + target + "'");
    }
    return emit_suites(o, target, out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"walled-tangle: exact computations in quantized walled Brauer algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "human or json")->check(CLI::IsMember({"human", "json"}));

    auto add_n = [&](CLI::App* c) { c->add_option("--n", o.n, "dimension of V")->check(CLI::PositiveNumber); };
    auto add_word = [&](CLI::App* c) {
        c->add_option("--type", o.type, "boundary type, e.g. \"vv^|^vv\"");
        c->add_option("--word", o.word, "slice word, e.g. \"X+(1) U(2)\"");
        c->add_option("--file", o.file, "file with a 'type:' header line followed by slice tokens");
    };

    auto* normalize_cmd = app.add_subcommand("normalize", "normal form of a tangle word");
    add_n(normalize_cmd);
    add_word(normalize_cmd);

    auto* multiply_cmd = app.add_subcommand("multiply", "product of two tangles (first on top)");
    add_n(multiply_cmd);
    add_word(multiply_cmd);
    multiply_cmd->add_option("--type2", o.type2, "type of the lower tangle");
    multiply_cmd->add_option("--word2", o.word2, "word of the lower tangle");
    multiply_cmd->add_option("--file2", o.file2, "file for the lower tangle");

    auto* matrix_cmd = app.add_subcommand("matrix", "matrix of a tangle word on tensor space");
    add_n(matrix_cmd);
    add_word(matrix_cmd);
    matrix_cmd->add_option("--via", o.via, "slices or normal-form")->check(CLI::IsMember({"slices", "normal-form"}));

    auto* sc_cmd = app.add_subcommand("structure-constants", "products of all basis connectors");
    add_n(sc_cmd);
    sc_cmd->add_option("--r", o.r);
    sc_cmd->add_option("--s", o.s);
    sc_cmd->add_option("--type", o.type, "type instead of (r, s)");

    auto* h2w_cmd = app.add_subcommand("hecke-to-walled", "image of a Hecke word in the walled algebra");
    add_n(h2w_cmd);
    h2w_cmd->add_option("--r", o.r);
    h2w_cmd->add_option("--s", o.s);
    h2w_cmd->add_option("--word", o.hecke, "generator indices, e.g. \"1 2 1\"");

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string target = "all";
    verify_cmd->add_option("target", target, "skein|hecke|presentation|linking|duality|all")
        ->check(CLI::IsMember({"skein", "hecke", "presentation", "linking", "duality", "all"}));
    add_n(verify_cmd);
    verify_cmd->add_option("--r", o.r);
    verify_cmd->add_option("--s", o.s);
    verify_cmd->add_option("--m", o.m);
    verify_cmd->add_option("--q0", o.q0, "rational specialization point");
    verify_cmd->add_option("--seed", o.seed, "seed for random words");
    verify_cmd->add_option("--samples", o.samples, "random word pairs for linking");
    verify_cmd->add_flag("--timings", o.timings, "include wall-clock timings in the duality report");

    auto* flip_cmd = app.add_subcommand("flip", "classical flip of a permutation diagram");
    flip_cmd->add_option("--r", o.r);
    flip_cmd->add_option("--s", o.s);
    flip_cmd->add_option("--connector", o.connector, "edges like \"T1-B2,T2-B1\"")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*normalize_cmd) {
            emit_element(o, normalize(load_word(o.type, o.word, o.file), o.n));
        } else if (*multiply_cmd) {
            TangleElement a = normalize(load_word(o.type, o.word, o.file), o.n);
            TangleElement b = normalize(load_word(o.type2, o.word2, o.file2), o.n);
            if (a.type.bottom != b.type.top) throw Usage("bottom of the first tangle does not match top of the second");
            emit_element(o, multiply(a, b));
        } else if (*matrix_cmd) {
            TangleWord w = load_word(o.type, o.word, o.file);
            LMatrix M = o.via == "slices" ? matrix_of_word(w, o.n) : matrix_of_element(normalize(w, o.n));
            if (human(o) && M.rows() <= 16 && M.cols() <= 16)
                std::cout << matrix_grid(M);
            else if (human(o))
                for (std::size_t r = 0; r < M.rows(); ++r)
                    for (const auto& [c, v] : M.row(r)) {
                        auto i = multi_index(r, (int)w.type.top.size(), o.n), j = multi_index(c, (int)w.type.bottom.size(), o.n);
                        std::cout << nlohmann::json(i).dump() << " " << nlohmann::json(j).dump() << " " << v.str() << "\n";
                    }
            else
                std::cout << matrix_to_json(M, w.type.top, w.type.bottom, o.n).dump(2) << "\n";
        } else if (*sc_cmd) {
            if (o.r < 0 || o.s < 0) throw Usage("r and s must be nonnegative");
            TangleType ty = o.type.empty() ? walled_type(o.r, o.s) : parse_type(o.type);
            if (ty.top != ty.bottom) throw Usage("structure constants need a type (I, I)");
            StructureTable t = structure_constants(ty, o.n);
            if (human(o)) {
                for (const auto& [k, v] : t)
                    std::cout << connector_str(k.first) << " * " << connector_str(k.second) << " =\n" << v.str() << "\n";
            } else {
                nlohmann::json j;
                j["type"] = {{"top", orient_str(ty.top)}, {"bottom", orient_str(ty.bottom)}};
                j["n"] = o.n;
                j["products"] = nlohmann::json::array();
                for (const auto& [k, v] : t)
                    j["products"].push_back(
                        {{"left", connector_json(k.first)}, {"right", connector_json(k.second)}, {"product", element_to_json(v)}});
                std::cout << j.dump(2) << "\n";
            }
        } else if (*h2w_cmd) {
            if (o.r < 0 || o.s < 0) throw Usage("r and s must be nonnegative");
            std::vector<int> gens;
            std::stringstream ss(o.hecke);
            for (int k; ss >> k;) gens.push_back(k);
            if (!ss.eof()) throw Usage("Hecke word must be a list of generator indices");
            const int m = o.r + o.s;
            for (int k : gens)
                if (k < 1 || k >= m) throw Usage("Hecke generator index " + std::to_string(k) + " out of range");
            emit_element(o, hecke_to_walled(hecke_element(gens, m, o.n), o.r, o.s));
        } else if (*verify_cmd) {
            if (o.r < 0 || o.s < 0 || o.m < 1) throw Usage("r, s must be nonnegative and m positive");
            return run_verify(o, target);
        } else if (*flip_cmd) {
            Connector d = parse_connector(o.connector);
            std::sort(d.edges.begin(), d.edges.end());
            Connector f = classical_flip(d, o.r, o.s);
            if (human(o))
                std::cout << connector_str(f) << "\n";
            else
                std::cout << nlohmann::json{{"r", o.r}, {"s", o.s}, {"connector", connector_json(f)}}.dump(2) << "\n";
        }
    } catch (const DslError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const Usage& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const TangleError& e) {
        std::cerr << "invalid tangle: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
