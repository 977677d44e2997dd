#ifndef WALLED_TANGLE_HPP
#define WALLED_TANGLE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace walled {

// Down: the strand passes the point top to bottom; Up: bottom to top.
enum class Orient : std::uint8_t { Down, Up };
using BoundarySeq = std::vector<Orient>;

inline Orient flip(Orient o) { return o == Orient::Down ? Orient::Up : Orient::Down; }

struct TangleType {
    BoundarySeq top, bottom;
    friend bool operator==(const TangleType&, const TangleType&) = default;
};

// (down^r up^s, down^r up^s)
TangleType walled_type(int r, int s);
// start/end counts must agree; throws std::invalid_argument otherwise
void check_type(const TangleType& ty);

enum class Hand : std::uint8_t { FirstOver, FirstUnder };
enum class MaxTag : std::uint8_t { LeftToRight, RightToLeft };

struct Slice {
    enum class Kind : std::uint8_t { Cross, Min, Max };
    Kind kind = Kind::Cross;
    int pos = 1;  // 1-based
    Hand hand = Hand::FirstOver;
    MaxTag tag = MaxTag::LeftToRight;

    static Slice cross(int p, Hand h) { return {Kind::Cross, p, h, MaxTag::LeftToRight}; }
    static Slice min(int p) { return {Kind::Min, p, Hand::FirstOver, MaxTag::LeftToRight}; }
    static Slice max(int p, MaxTag t) { return {Kind::Max, p, Hand::FirstOver, t}; }
    friend bool operator==(const Slice&, const Slice&) = default;
};

class TangleError : public std::runtime_error {
public:
    TangleError(const std::string& msg, int slice) : std::runtime_error(msg), slice_(slice) {}
    int slice() const { return slice_; }  // -1 if not tied to a slice
private:
    int slice_;
};

// A boundary vertex: side 0 is the top row, side 1 the bottom row; pos is 1-based.
struct Vertex {
    int side = 0;
    int pos = 1;
    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

std::string vertex_name(const Vertex& v);  // "T3", "B1"
Vertex parse_vertex(const std::string& s);

bool is_start(const TangleType& ty, const Vertex& v);

// Perfect matching of the boundary; edges are (start, end), sorted by start.
struct Connector {
    std::vector<std::pair<Vertex, Vertex>> edges;
    friend auto operator<=>(const Connector&, const Connector&) = default;
};

std::string connector_str(const Connector& c);

struct TangleWord {
    TangleType type;
    std::vector<Slice> slices;
    friend bool operator==(const TangleWord&, const TangleWord&) = default;
};

// Orientation sequence of every level, levels[0] = top, levels.back() = bottom.
// Throws TangleError on width or orientation inconsistencies.
std::vector<BoundarySeq> propagate(const BoundarySeq& top, const std::vector<Slice>& slices);

TangleWord validate(const std::vector<Slice>& slices, const TangleType& declared);
TangleWord concat(const TangleWord& upper, const TangleWord& lower);
TangleWord identity_word(const BoundarySeq& seq);
// Shift all slices right by k positions and pad the boundary with `left` on the left.
TangleWord embed_right_of(const BoundarySeq& left, const TangleWord& w);

// Sign of a crossing slice at level orientations `upper`.
int crossing_sign(const Slice& s, const BoundarySeq& upper);

struct Visit {
    int slice;
    bool over;
};

struct Component {
    bool closed = false;
    Vertex start, end;  // open strands only
    int base_slice = -1;  // closed loops: index of the topmost Max
    std::vector<Visit> visits;
    int self_writhe = 0;
};

struct CrossingInfo {
    int slice;
    int sign;
    int comp_x, comp_y;  // component of the strand entering at pos / pos+1 from above
    int over;            // component passing over
};

struct StrandGraph {
    std::vector<BoundarySeq> levels;
    std::vector<Component> comps;  // open strands by canonical start order, then loops by base slice
    int open_count = 0;
    std::vector<CrossingInfo> crossings;  // in slice order
    std::vector<int> crossing_of_slice;   // slice index -> index into crossings, or -1
};

StrandGraph strand_graph(const TangleWord& w);

std::pair<Connector, int> connector(const TangleWord& w);

// Clockwise iff the loop's topmost Max runs left to right.
enum class LoopOrient : std::uint8_t { Clockwise, Counterclockwise };
std::vector<LoopOrient> closed_loop_orientations(const TangleWord& w);

std::vector<Vertex> start_vertices(const TangleType& ty);  // canonical order
std::vector<Vertex> end_vertices(const TangleType& ty);

std::vector<Connector> enumerate_connectors(const TangleType& ty);
void check_connector(const TangleType& ty, const Connector& c);

// A ranking of start vertices; earlier strands pass over later ones.
using StartOrder = std::vector<Vertex>;
StartOrder canonical_order(const TangleType& ty);

TangleWord canonical_basis_word(const TangleType& ty, const Connector& c);
TangleWord canonical_basis_word(const TangleType& ty, const Connector& c, const StartOrder& order);

// number of pairs of edges whose chords interleave on the boundary circle
int interleaving_pairs(const TangleType& ty, const Connector& c);

// Basic tangles inside a level. E: Min then Max at rho; the bottom pair is
// (up,down) when bottom_left_to_right. S: a single crossing.
TangleWord basic_E(const BoundarySeq& level, int rho, bool bottom_left_to_right);
TangleWord basic_S(const BoundarySeq& level, int rho, Hand hand);
// Crossing of the requested sign at rho (hand chosen from orientations).
TangleWord signed_crossing(const BoundarySeq& level, int rho, int sign);

// Flip one crossing hand.
TangleWord switch_crossing(const TangleWord& w, int slice);
// Oriented smoothing of a crossing slice.
TangleWord smooth_crossing(const TangleWord& w, int slice);

std::string orient_str(const BoundarySeq& s);  // "vv^"
BoundarySeq parse_orients(const std::string& s);

}  // namespace walled

#endif
