#ifndef WALLED_DSL_HPP
#define WALLED_DSL_HPP

#include <json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "walled/qgroup.hpp"
#include "walled/skein.hpp"
#include "walled/sparse.hpp"
#include "walled/tangle.hpp"

namespace walled {

// Parse error; token is 1-based (0 for the header), column is a 0-based byte offset.
class DslError : public std::runtime_error {
public:
    // token is 1-based (0 = type header); column is a 0-based byte offset into the parsed string
    DslError(const std::string& msg, int token, int column)
        : std::runtime_error(msg + " (token " + std::to_string(token) + ", column " + std::to_string(column) + ")"),
          msg_(msg),
          token_(token),
          column_(column) {}
    // multi-line input: 1-based line and column in the full text
    DslError(const std::string& msg, int token, int line, int column)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(column) +
                             ", token " + std::to_string(token) + ")"),
          msg_(msg),
          token_(token),
          line_(line),
          column_(column) {}
    const std::string& message() const { return msg_; }
    int token() const { return token_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    std::string msg_;
    int token_, line_ = 0, column_;
};

// "vv^|^vv", optionally prefixed by "type:"
TangleType parse_type(const std::string& text);
std::string render_type(const TangleType& ty);

// Slice tokens separated by whitespace:
//   X+(p) X-(p)   crossing, first strand over / under
//   U(p)          minimum
//   N>(p) N<(p)   maximum, created strand left-to-right / right-to-left
//   E(p)          U(p) then the maximum restoring the same orientations
//   E>(p) E<(p)   U(p) then N>(p) / N<(p)
//   S+(p) S-(p)   positive / negative crossing
TangleWord parse_word(const std::string& text, const TangleType& type);
// A header line "type: ..." followed by slice tokens (newline or ';' separated).
TangleWord parse_tangle(const std::string& text);
std::string render_word(const TangleWord& w);    // slice tokens only
std::string render_tangle(const TangleWord& w);  // header + tokens

// E(i,l) F(i,l) K(i) K'(i) qh(a1,...,an), separated by whitespace
std::vector<UGenerator> parse_generators(const std::string& text);

nlohmann::json element_to_json(const TangleElement& e);
TangleElement element_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const LMatrix& m, const BoundarySeq& dom, const BoundarySeq& cod, int n);
std::string matrix_grid(const LMatrix& m);  // dense text, small matrices only

}  // namespace walled

#endif
