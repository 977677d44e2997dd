#ifndef WALLED_DUALITY_HPP
#define WALLED_DUALITY_HPP

#include <json.hpp>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "walled/laurent.hpp"
#include "walled/skein.hpp"
#include "walled/tangle.hpp"

namespace walled {

class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Route the first strand of T (I_1 = J_1 = down) around the left side:
// type ((up, I_2..), (up, J_2..)).
TangleWord bend_first(const TangleWord& t);

// One step on a word of type (down^rr up^ss): bend the first strand and
// move it to position rr with crossings above and below.
TangleWord hecke_step(const TangleWord& t, int rr);

// Image of a Hecke algebra element in the walled Brauer algebra of (r, s).
TangleElement hecke_to_walled(const TangleElement& a, int r, int s);

std::size_t commutant_dim(int n, int r, int s, const Rational& q0, std::size_t budget = 10000);
std::size_t image_rank(int n, int r, int s, const Rational& q0);
std::pair<std::size_t, std::size_t> annihilator_dims(int n, int r, int s, const Rational& q0);

struct DualityReport {
    int n, r, s;
    Rational q0;
    std::size_t image_rank = 0, commutant_dim = 0, annihilator_dim = 0, hecke_annihilator_dim = 0;
    bool faithful = false;
    bool commutes_symbolically = false;
    bool rank_equals_commutant = false;
    bool annihilators_match = false;
    bool faithful_iff_n_large = false;
    std::vector<std::string> tried_q0;
    double seconds_commutation = 0, seconds_rank = 0, seconds_commutant = 0;
    bool pass() const { return commutes_symbolically && rank_equals_commutant && annihilators_match && faithful_iff_n_large; }
    nlohmann::json to_json() const;
};

DualityReport verify_schur_weyl(int n, int r, int s, const Rational& q0);

// q = 1 side
Connector classical_flip(const Connector& d, int r, int s);
// Classical composite of two diagrams (first on top) and the number of closed loops.
std::pair<Connector, int> brauer_compose(const TangleType& top_type, const Connector& a, const TangleType& bottom_type,
                                         const Connector& b);

}  // namespace walled

#endif
