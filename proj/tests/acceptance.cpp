// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdlib>
#include <iostream>

#include "walled/laurent.hpp"
#include "walled/suites.hpp"

using namespace walled;

namespace {

constexpr std::uint64_t kSeed = 20240611;

int failures = 0;

std::string summary(const SuiteReport& r, std::size_t first = 0, std::size_t count = (std::size_t)-1) {
    std::size_t ok = 0, total = 0;
    std::string bad;
    for (std::size_t k = first; k < r.checks.size() && k - first < count; ++k) {
        ++total;
        if (r.checks[k].pass)
            ++ok;
        else if (bad.empty())
            bad = r.checks[k].name + (r.checks[k].detail.empty() ? "" : " (" + r.checks[k].detail + ")");
    }
    std::string s = std::to_string(ok) + "/" + std::to_string(total) + " checks";
    if (!bad.empty()) s += "; first failure: " + bad;
    return s;
}

bool all_pass(const SuiteReport& r, std::size_t first = 0, std::size_t count = (std::size_t)-1) {
    bool any = false;
    for (std::size_t k = first; k < r.checks.size() && k - first < count; ++k) {
        any = true;
        if (!r.checks[k].pass) return false;
    }
    return any;
}

void line(int id, const std::string& name, bool pass, const std::string& detail, double secs) {
    if (!pass) ++failures;
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << id << "  " << name << "  [" << detail << "]  ("
              << secs << " s)" << std::endl;
}

template <class F>
double timed(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
    const Rational q0 = parse_rational("5/3");
    SuiteReport r;
    double t;

    t = timed([&] { r = suite_basis(4, q0, true); });
    line(1, "basis matrices of every type with m <= 4 have rank m! at n = m", r.pass(), summary(r), t);

    t = timed([&] { r = suite_worked_example({2, 3}); });
    line(2, "worked example entries q^-1 and q^3 - q, n = 2, 3", r.pass(), summary(r), t);

    t = timed([&] { r = suite_linking(200, kSeed, 3); });
    line(3, "matrix of T/S is the product of the matrices, 200 random pairs", all_pass(r, 0, 1), r.checks[0].detail, t);
    line(4, "normal form evaluates to the slice matrix, same samples", all_pass(r, 1, 2), summary(r, 1, 2), 0.0);

    t = timed([&] { r = suite_products({2, 3}); });
    line(5, "basic tangle products (8 e/e, 8 e/s, 4 s/s), n = 2, 3", r.pass(), summary(r), t);

    t = timed([&] { r = suite_presentation({{1, 1}, {2, 1}, {1, 2}, {2, 2}}, {2, 3}); });
    line(6, "presentation relations for (r,s) in {(1,1),(2,1),(1,2),(2,2)}, n = 2, 3", r.pass(), summary(r), t);

    t = timed([&] { r = suite_hecke(4, 3); });
    line(7, "Hecke action of crossings and defining relations, m <= 4, n <= 3", r.pass(), summary(r), t);

    t = timed([&] { r = suite_duality({{{2, 1, 1}}, {{2, 2, 1}}, {{2, 1, 2}}, {{3, 1, 1}}, {{2, 3, 0}}}, q0); });
    line(8, "Schur-Weyl duality checks at q0 = 5/3", r.pass(), summary(r), t);

    t = timed([&] { r = suite_flip(50, kSeed, 3, 3); });
    line(9, "bend identity for 50 random words, m <= 3, n <= 3", r.pass(), summary(r), t);

    t = timed([&] { r = suite_classical({{1, 1}, {2, 1}}, {2, 3}); });
    line(10, "q = 1: flip and Brauer multiplication with loop factor n", r.pass(), summary(r), t);

    t = timed([&] { r = suite_divpowers(3, {2, 3}); });
    line(11, "divided-power identities on V(x)V and V(x)V*, l <= 3, n = 2, 3", r.pass(), summary(r), t);

    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
    return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
