#include "walled/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "walled/rep.hpp"

namespace walled {

TangleType parse_type(const std::string& text) {
    std::string t = text;
    auto colon = t.find(':');
    if (colon != std::string::npos) {
        std::string head = t.substr(0, colon);
        head.erase(std::remove_if(head.begin(), head.end(), ::isspace), head.end());
        if (head != "type") throw DslError("expected 'type:' header", 0, 0);
        t = t.substr(colon + 1);
    }
    auto bar = t.find('|');
    if (bar == std::string::npos) throw DslError("type needs '|' between top and bottom", 0, (int)t.size());
    TangleType ty;
    try {
        ty.top = parse_orients(t.substr(0, bar));
        ty.bottom = parse_orients(t.substr(bar + 1));
        check_type(ty);
    } catch (const std::invalid_argument& e) {
        throw DslError(e.what(), 0, (int)bar);
    }
    return ty;
}

std::string render_type(const TangleType& ty) { return orient_str(ty.top) + "|" + orient_str(ty.bottom); }

namespace {

struct Token {
    std::string text;
    int column;
};

std::vector<Token> tokenize(const std::string& text, int base_col) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace((unsigned char)text[i]) || text[i] == ';' || text[i] == ',') {
            ++i;
            continue;
        }
        std::size_t j = i;
        int depth = 0;
        while (j < text.size()) {
            char c = text[j];
            if (c == '(') ++depth;
            if (c == ')') {
                --depth;
                if (depth <= 0) {
                    ++j;
                    break;
                }
            }
            if (depth == 0 && (std::isspace((unsigned char)c) || c == ';')) break;
            ++j;
        }
        out.push_back({text.substr(i, j - i), base_col + (int)i});
        i = j;
    }
    return out;
}

}  // namespace

TangleWord parse_word(const std::string& text, const TangleType& type) {
    std::vector<Slice> slices;
    BoundarySeq level = type.top;
    auto toks = tokenize(text, 0);
    for (std::size_t k = 0; k < toks.size(); ++k) {
        const Token& tk = toks[k];
        const int tn = (int)k + 1;
        auto open = tk.text.find('(');
        if (open == std::string::npos || tk.text.back() != ')') throw DslError("malformed token '" + tk.text + "'", tn, tk.column);
        std::string name = tk.text.substr(0, open);
        std::string arg = tk.text.substr(open + 1, tk.text.size() - open - 2);
        int p;
        try {
            std::size_t used = 0;
            p = std::stoi(arg, &used);
            if (used != arg.size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw DslError("bad position '" + arg + "'", tn, tk.column + (int)open + 1);
        }
        const int w = (int)level.size();
        bool two = name != "N>" && name != "N<";
        if (p < 1 || (two && p + 1 > w) || (!two && p > w + 1))
            throw DslError("position " + std::to_string(p) + " out of range for width " + std::to_string(w), tn, tk.column);
        std::vector<Slice> add;
        if (name == "X+") {
            add.push_back(Slice::cross(p, Hand::FirstOver));
        } else if (name == "X-") {
            add.push_back(Slice::cross(p, Hand::FirstUnder));
        } else if (name == "U") {
            add.push_back(Slice::min(p));
        } else if (name == "N>") {
            add.push_back(Slice::max(p, MaxTag::LeftToRight));
        } else if (name == "N<") {
            add.push_back(Slice::max(p, MaxTag::RightToLeft));
        } else if (name == "E") {
            MaxTag t = level[p - 1] == Orient::Up ? MaxTag::LeftToRight : MaxTag::RightToLeft;
            add = {Slice::min(p), Slice::max(p, t)};
        } else if (name == "E>") {
            add = {Slice::min(p), Slice::max(p, MaxTag::LeftToRight)};
        } else if (name == "E<") {
            add = {Slice::min(p), Slice::max(p, MaxTag::RightToLeft)};
        } else if (name == "S+" || name == "S-") {
            add = signed_crossing(level, p, name == "S+" ? 1 : -1).slices;
        } else {
            throw DslError("unknown slice '" + name + "'", tn, tk.column);
        }
        try {
            auto lv = propagate(level, add);
            level = lv.back();
        } catch (const TangleError& e) {
            throw DslError(e.what(), tn, tk.column);
        }
        slices.insert(slices.end(), add.begin(), add.end());
    }
    try {
        return validate(slices, type);
    } catch (const TangleError& e) {
        throw DslError(e.what(), (int)toks.size(), text.empty() ? 0 : (int)text.size() - 1);
    }
}

TangleWord parse_tangle(const std::string& text) {
    std::size_t cut = text.find_first_of("\n;");
    std::string head = text.substr(0, cut);
    std::string body = cut == std::string::npos ? "" : text.substr(cut + 1);
    const std::size_t offset = cut == std::string::npos ? text.size() : cut + 1;
    try {
        return parse_word(body, parse_type(head));
    } catch (const DslError& e) {
        std::size_t at = std::min(text.size(), (e.token() == 0 ? 0 : offset) + (std::size_t)e.column());
        std::size_t line_start = text.rfind('\n', at == 0 ? 0 : at - 1);
        line_start = (line_start == std::string::npos || line_start >= at) ? 0 : line_start + 1;
        int line = 1 + (int)std::count(text.begin(), text.begin() + (std::ptrdiff_t)line_start, '\n');
        throw DslError(e.message(), e.token(), line, (int)(at - line_start) + 1);
    }
}

std::string render_word(const TangleWord& w) {
    std::string out;
    for (const Slice& s : w.slices) {
        if (!out.empty()) out += ' ';
        switch (s.kind) {
            case Slice::Kind::Cross: out += s.hand == Hand::FirstOver ? "X+" : "X-"; break;
            case Slice::Kind::Min: out += "U"; break;
            case Slice::Kind::Max: out += s.tag == MaxTag::LeftToRight ? "N>" : "N<"; break;
        }
        out += "(" + std::to_string(s.pos) + ")";
    }
    return out;
}

std::string render_tangle(const TangleWord& w) { return "type: " + render_type(w.type) + "\n" + render_word(w); }

std::vector<UGenerator> parse_generators(const std::string& text) {
    std::vector<UGenerator> out;
    auto toks = tokenize(text, 0);
    for (std::size_t k = 0; k < toks.size(); ++k) {
        const Token& tk = toks[k];
        const int tn = (int)k + 1;
        auto open = tk.text.find('(');
        if (open == std::string::npos || tk.text.back() != ')') throw DslError("malformed generator '" + tk.text + "'", tn, tk.column);
        std::string name = tk.text.substr(0, open);
        std::vector<int> args;
        std::stringstream ss(tk.text.substr(open + 1, tk.text.size() - open - 2));
        std::string item;
        try {
            while (std::getline(ss, item, ',')) args.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw DslError("bad generator argument", tn, tk.column);
        }
        if ((name == "E" || name == "F") && args.size() == 2)
            out.push_back(name == "E" ? UGenerator::E(args[0], args[1]) : UGenerator::F(args[0], args[1]));
        else if (name == "K" && args.size() == 1)
            out.push_back(UGenerator::K(args[0], 1));
        else if (name == "K'" && args.size() == 1)
            out.push_back(UGenerator::K(args[0], -1));
        else if (name == "qh" && !args.empty())
            out.push_back(UGenerator::QH(args));
        else
            throw DslError("unknown generator '" + tk.text + "'", tn, tk.column);
    }
    return out;
}

nlohmann::json element_to_json(const TangleElement& e) {
    nlohmann::json j;
    j["type"] = {{"top", orient_str(e.type.top)}, {"bottom", orient_str(e.type.bottom)}};
    j["n"] = e.n;
    j["terms"] = nlohmann::json::array();
    for (const auto& [c, v] : e.terms) {
        nlohmann::json con = nlohmann::json::array();
        for (const auto& [a, b] : c.edges) con.push_back({vertex_name(a), vertex_name(b)});
        j["terms"].push_back({{"connector", con}, {"coeff", v.to_json()}});
    }
    return j;
}

TangleElement element_from_json(const nlohmann::json& j) {
    TangleElement e;
    e.type.top = parse_orients(j.at("type").at("top").get<std::string>());
    e.type.bottom = parse_orients(j.at("type").at("bottom").get<std::string>());
    e.n = j.at("n").get<int>();
    for (const auto& t : j.at("terms")) {
        Connector c;
        for (const auto& edge : t.at("connector"))
            c.edges.push_back({parse_vertex(edge.at(0).get<std::string>()), parse_vertex(edge.at(1).get<std::string>())});
        std::sort(c.edges.begin(), c.edges.end());
        check_connector(e.type, c);
        LaurentPoly v = LaurentPoly::from_json(t.at("coeff"));
        if (!v.is_zero()) e.terms[c] += v;
    }
    return e;
}

nlohmann::json matrix_to_json(const LMatrix& m, const BoundarySeq& dom, const BoundarySeq& cod, int n) {
    nlohmann::json j;
    j["n"] = n;
    j["rows"] = "I(" + std::to_string(n) + "," + std::to_string(dom.size()) + ") over " + orient_str(dom);
    j["cols"] = "I(" + std::to_string(n) + "," + std::to_string(cod.size()) + ") over " + orient_str(cod);
    j["entries"] = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (const auto& [c, v] : m.row(r))
            j["entries"].push_back({{"row", multi_index(r, (int)dom.size(), n)},
                                    {"col", multi_index(c, (int)cod.size(), n)},
                                    {"coeff", v.to_json()}});
    return j;
}

std::string matrix_grid(const LMatrix& m) {
    std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
    std::size_t width = 1;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            cells[r][c] = m.at(r, c).str();
            width = std::max(width, cells[r][c].size());
        }
    std::string out;
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out += std::string(width - row[c].size() + (c ? 2 : 0), ' ');
            out += row[c];
        }
        out += "\n";
    }
    return out;
}

}  // namespace walled
