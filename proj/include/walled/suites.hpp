#ifndef WALLED_SUITES_HPP
#define WALLED_SUITES_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <json.hpp>
#include <random>
#include <string>
#include <vector>

#include "walled/laurent.hpp"
#include "walled/tangle.hpp"

namespace walled {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    nlohmann::json params = nlohmann::json::object();
    std::vector<Check> checks;
    bool pass() const;
    nlohmann::json to_json() const;
    std::string human() const;
};

// Worker count: WALLED_TANGLE_THREADS if set, else hardware concurrency.
int worker_threads();
// Runs fn(0..count-1) on up to worker_threads() threads.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

// Random oriented tangle words built slice by slice.
class WordSampler {
public:
    explicit WordSampler(std::uint64_t seed) : rng_(seed) {}
    int uniform(int lo, int hi);
    BoundarySeq boundary(int width);
    // A word starting at `top` with at most max_cross crossings, interior
    // width <= max_inner and bottom width <= max_bottom.
    TangleWord word(const BoundarySeq& top, int max_bottom, int max_cross, int max_inner = 5, int max_steps = 10);
    // A word of a type whose top and bottom both have `width` points and start with a down point.
    TangleWord word_down_first(int width, int max_cross);

private:
    std::mt19937_64 rng_;
};

// Matrix identity relating bend_first(t) to t, checked entrywise.
bool flip_identity_holds(const TangleWord& t, int n);

SuiteReport suite_basis(int max_m, const Rational& q0, bool all_types);
SuiteReport suite_worked_example(const std::vector<int>& ns);
SuiteReport suite_linking(int samples, std::uint64_t seed, int max_n);
SuiteReport suite_products(const std::vector<int>& ns);
SuiteReport suite_presentation(const std::vector<std::pair<int, int>>& rs, const std::vector<int>& ns);
SuiteReport suite_hecke(int max_m, int max_n);
SuiteReport suite_duality(const std::vector<std::array<int, 3>>& triples, const Rational& q0);
SuiteReport suite_flip(int samples, std::uint64_t seed, int max_m, int max_n);
SuiteReport suite_classical(const std::vector<std::pair<int, int>>& rs, const std::vector<int>& ns);
SuiteReport suite_divpowers(int max_l, const std::vector<int>& ns);
SuiteReport suite_skein(int n);

}  // namespace walled

#endif
