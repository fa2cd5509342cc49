#include "diracint/bipoly.hpp"

namespace diracint {

BiPoly BiPoly::monomial(int mpow, int apow, const Rational& c) {
    if (mpow < 0 || apow < 0) throw std::invalid_argument("BiPoly::monomial: negative exponent");
    BiPoly p;
    if (!c.is_zero()) p.terms_[{mpow, apow}] = c;
    return p;
}

int BiPoly::degree_m() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
}

int BiPoly::degree_alpha() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
}

const Rational& BiPoly::coeff(int mpow, int apow) const {
    static const Rational zero;
    auto it = terms_.find({mpow, apow});
    return it == terms_.end() ? zero : it->second;
}

void BiPoly::add_term(const Key& k, const Rational& c) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

BiPoly BiPoly::operator-() const {
    BiPoly r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k, c);
    return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return r;
}

BiPoly operator*(const Rational& s, const BiPoly& p) {
    BiPoly r;
    if (s.is_zero()) return r;
    for (const auto& [k, c] : p.terms_) r.terms_.emplace(k, s * c);
    return r;
}

Rational BiPoly::eval(const Rational& m_val, const Rational& alpha_val) const {
    Rational acc;
    for (const auto& [k, c] : terms_)
        acc += c * m_val.pow(k.first) * alpha_val.pow(k.second);
    return acc;
}

UniPoly BiPoly::eval_m(const Rational& m_val) const {
    UniPoly out(Var::alpha);
    for (const auto& [k, c] : terms_) {
        Rational v = c * m_val.pow(k.first);
        out.set_coeff(k.second, out.coeff(k.second) + v);
    }
    return out;
}

UniPoly BiPoly::eval_alpha(const Rational& a_val) const {
    UniPoly out(Var::m);
    for (const auto& [k, c] : terms_) {
        Rational v = c * a_val.pow(k.second);
        out.set_coeff(k.first, out.coeff(k.first) + v);
    }
    return out;
}

UniPoly BiPoly::coeff_of_m(int k) const {
    UniPoly out(Var::alpha);
    for (const auto& [key, c] : terms_)
        if (key.first == k) out.set_coeff(key.second, c);
    return out;
}

bool BiPoly::m_parity_is(int parity) const {
    for (const auto& [k, c] : terms_)
        if ((k.first & 1) != (parity & 1)) return false;
    return true;
}

Rational BiPoly::content() const {
    if (is_zero()) throw std::domain_error("BiPoly::content: zero polynomial");
    BigInt g = 0, l = 1;
    for (const auto& [k, c] : terms_) {
        g = boost::multiprecision::gcd(g, c.num());
        l = l / boost::multiprecision::gcd(l, c.den()) * c.den();
    }
    return Rational(g, l);
}

BiPoly BiPoly::primitive() const {
    if (is_zero()) return *this;
    return Rational(1) / content() * *this;
}

std::optional<BiPoly> BiPoly::try_div_alpha_linear(const Rational& root) const {
    // Synthetic division in alpha per m-power; exact iff every remainder is 0.
    std::map<int, std::map<int, Rational>> by_m;
    for (const auto& [k, c] : terms_) by_m[k.first][k.second] = c;
    BiPoly q;
    for (const auto& [mpow, col] : by_m) {
        int da = col.rbegin()->first;
        std::vector<Rational> a(static_cast<size_t>(da) + 1);
        for (const auto& [apow, c] : col) a[static_cast<size_t>(apow)] = c;
        Rational carry;
        for (int i = da; i >= 1; --i) {
            carry = a[static_cast<size_t>(i)] + carry * root;
            if (!carry.is_zero()) q.terms_[{mpow, i - 1}] = carry;
        }
        Rational rem = a[0] + carry * root;
        if (!rem.is_zero()) return std::nullopt;
    }
    return q;
}

std::string BiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::string t = c.str();
        if (k.first > 0) {
            t += "*m";
            if (k.first > 1) t += "^" + std::to_string(k.first);
        }
        if (k.second > 0) {
            t += "*alpha";
            if (k.second > 1) t += "^" + std::to_string(k.second);
        }
        out += t;
    }
    return out;
}

}  // namespace diracint
