#ifndef WALLED_LAURENT_HPP
#define WALLED_LAURENT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <json.hpp>
#include <string>

namespace walled {

using Rational = mpq_class;

// Laurent polynomial in q with big-integer coefficients.
// Zero coefficients are never stored, so == is structural.
class LaurentPoly {
public:
    using Terms = std::map<int, mpz_class>;

    LaurentPoly() = default;
    LaurentPoly(long c);  // NOLINT: constant polynomial
    LaurentPoly(const mpz_class& c);

    static LaurentPoly monomial(int exp, const mpz_class& c = 1);
    static LaurentPoly q(int exp = 1) { return monomial(exp); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    mpz_class coeff(int exp) const;
    int min_exp() const;
    int max_exp() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly operator-() const;

    // multiply by q^k
    LaurentPoly shifted(int k) const;

    Rational eval(const Rational& q0) const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    std::string str() const;  // e.g. "-1*q^-1 + 1*q^3", "0" for zero
    nlohmann::json to_json() const;
    static LaurentPoly from_json(const nlohmann::json& j);

private:
    void add_term(int exp, const mpz_class& c);
    Terms terms_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

// [l]_q = sum_{i=0}^{l-1} q^{2i-l+1}
LaurentPoly quantum_int(int l);
// Gaussian binomial via q-Pascal recursion; throws std::invalid_argument if k > l.
LaurentPoly quantum_binom(int l, int k);

// q0 must be nonzero.
Rational lp_eval(const LaurentPoly& p, const Rational& q0);

Rational parse_rational(const std::string& s);
std::string rational_str(const Rational& r);

}  // namespace walled

#endif
