#include "walled/laurent.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace walled {

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) terms_[0] = c;
}

LaurentPoly::LaurentPoly(const mpz_class& c) {
    if (c != 0) terms_[0] = c;
}

LaurentPoly LaurentPoly::monomial(int exp, const mpz_class& c) {
    LaurentPoly p;
    if (c != 0) p.terms_[exp] = c;
    return p;
}

mpz_class LaurentPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

int LaurentPoly::min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentPoly::max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

void LaurentPoly::add_term(int exp, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& kv : r.terms_) kv.second = -kv.second;
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
    return r;
}

Rational LaurentPoly::eval(const Rational& q0) const { return lp_eval(*this, q0); }

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            os << c.get_str();
        } else {
            os << (c < 0 ? " - " : " + ") << mpz_class(abs(c)).get_str();
        }
        os << "*q^" << e;
        first = false;
    }
    return os.str();
}

nlohmann::json LaurentPoly::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [e, c] : terms_) j[std::to_string(e)] = c.get_str();
    return j;
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("laurent json must be an object");
    LaurentPoly p;
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::string cs = it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
        p.add_term(std::stoi(it.key()), mpz_class(cs));
    }
    return p;
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    std::map<int, mpz_class> acc;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) acc[ea + eb] += ca * cb;
    for (const auto& [e, c] : acc)
        if (c != 0) r += LaurentPoly::monomial(e, c);
    return r;
}

LaurentPoly quantum_int(int l) {
    if (l < 0) throw std::invalid_argument("quantum_int: negative argument");
    LaurentPoly r;
    for (int i = 0; i < l; ++i) r += LaurentPoly::q(2 * i - l + 1);
    return r;
}

LaurentPoly quantum_binom(int l, int k) {
    if (l < 0 || k < 0 || k > l) throw std::invalid_argument("quantum_binom: need 0 <= k <= l");
    // row[k] = [l choose k]; [l,k] = q^k [l-1,k] + q^{k-l} [l-1,k-1]
    std::vector<LaurentPoly> row{LaurentPoly(1)};
    for (int ll = 1; ll <= l; ++ll) {
        std::vector<LaurentPoly> next(ll + 1);
        for (int kk = 0; kk <= ll; ++kk) {
            LaurentPoly v;
            if (kk <= ll - 1) v += row[kk].shifted(kk);
            if (kk >= 1) v += row[kk - 1].shifted(kk - ll);
            next[kk] = v;
        }
        row = std::move(next);
    }
    return row[k];
}

Rational lp_eval(const LaurentPoly& p, const Rational& q0) {
    if (q0 == 0) throw std::invalid_argument("lp_eval: q0 must be nonzero");
    Rational acc = 0;
    if (p.is_zero()) return acc;
    // Horner from the top exponent down, then scale by q0^min
    int lo = p.min_exp(), hi = p.max_exp();
    for (int e = hi; e >= lo; --e) {
        acc *= q0;
        acc += Rational(p.coeff(e));
    }
    Rational scale = 1;
    Rational base = lo < 0 ? Rational(1) / q0 : q0;
    for (int i = 0; i < (lo < 0 ? -lo : lo); ++i) scale *= base;
    acc *= scale;
    acc.canonicalize();
    return acc;
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    Rational r;
    try {
        if (slash == std::string::npos) {
            r = Rational(mpz_class(s), 1);
        } else {
            mpz_class num(s.substr(0, slash)), den(s.substr(slash + 1));
            if (den == 0) throw std::invalid_argument("zero denominator");
            r = Rational(num, den);
        }
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational: " + s);
    }
    r.canonicalize();
    return r;
}

std::string rational_str(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return c.get_str();
}

}  // namespace walled
