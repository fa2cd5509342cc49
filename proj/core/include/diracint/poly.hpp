#pragma once

#include "diracint/rational.hpp"

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace diracint {

// Formal variable tag. Polynomials over different variables never mix
// silently; every binary op checks the tag.
enum class Var { z, m, alpha, u, w };

inline const char* var_name(Var v) {
    switch (v) {
        case Var::z: return "z";
        case Var::m: return "m";
        case Var::alpha: return "alpha";
        case Var::u: return "u";
        case Var::w: return "w";
    }
    return "?";
}

namespace detail {
template <typename C>
bool coeff_is_zero(const C& c) {
    if constexpr (requires { c.is_zero(); }) return c.is_zero();
    else return c == C{};
}
template <typename C>
std::string coeff_str(const C& c) {
    if constexpr (requires { c.str(); }) return c.str();
    else return "?";
}
}  // namespace detail

// Dense univariate polynomial. The zero polynomial has no stored
// coefficients and degree() == nullopt; there is no degree -1 arithmetic.
template <typename C>
class Poly {
public:
    explicit Poly(Var v = Var::z) : var_(v) {}
    Poly(Var v, const C& constant) : var_(v) {
        if (!detail::coeff_is_zero(constant)) coeffs_.push_back(constant);
    }

    static Poly from_coeffs(Var v, std::vector<C> ascending) {
        Poly p(v);
        p.coeffs_ = std::move(ascending);
        p.normalize();
        return p;
    }
    static Poly monomial(Var v, int deg, const C& c) {
        if (deg < 0) throw std::invalid_argument("Poly::monomial: negative degree");
        Poly p(v);
        if (!detail::coeff_is_zero(c)) {
            p.coeffs_.assign(static_cast<size_t>(deg) + 1, C{});
            p.coeffs_.back() = c;
        }
        return p;
    }

    Var var() const { return var_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::optional<int> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return static_cast<int>(coeffs_.size()) - 1;
    }
    // Degree with the zero polynomial mapped to -1, for size arithmetic only.
    int degree_or(int zero_value) const { return degree().value_or(zero_value); }

    const C& coeff(int k) const {
        static const C zero{};
        if (k < 0 || static_cast<size_t>(k) >= coeffs_.size()) return zero;
        return coeffs_[static_cast<size_t>(k)];
    }
    const C& leading() const {
        if (coeffs_.empty()) throw std::domain_error("Poly::leading: zero polynomial");
        return coeffs_.back();
    }
    void set_coeff(int k, const C& c) {
        if (k < 0) throw std::invalid_argument("Poly::set_coeff: negative index");
        if (static_cast<size_t>(k) >= coeffs_.size()) {
            if (detail::coeff_is_zero(c)) return;
            coeffs_.resize(static_cast<size_t>(k) + 1, C{});
        }
        coeffs_[static_cast<size_t>(k)] = c;
        normalize();
    }

    Poly operator-() const {
        Poly r(var_);
        r.coeffs_.reserve(coeffs_.size());
        for (const auto& c : coeffs_) r.coeffs_.push_back(C{} - c);
        return r;  // negation cannot create trailing zeros
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        a.check_var(b);
        Poly r(a.var_);
        r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), C{});
        for (size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] = a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] = r.coeffs_[i] + b.coeffs_[i];
        r.normalize();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_var(b);
        if (a.is_zero() || b.is_zero()) return Poly(a.var_);
        Poly r(a.var_);
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, C{});
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (detail::coeff_is_zero(a.coeffs_[i])) continue;
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
        r.normalize();
        return r;
    }
    friend Poly operator*(const C& s, const Poly& p) {
        Poly r(p.var_);
        if (detail::coeff_is_zero(s)) return r;
        r.coeffs_.reserve(p.coeffs_.size());
        for (const auto& c : p.coeffs_) r.coeffs_.push_back(s * c);
        r.normalize();
        return r;
    }
    friend Poly operator*(const Poly& p, const C& s) { return s * p; }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(int e) const {
        if (e < 0) throw std::invalid_argument("Poly::pow: negative exponent");
        Poly acc(var_, C(1));
        Poly base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    Poly derivative() const {
        Poly r(var_);
        if (coeffs_.size() <= 1) return r;
        r.coeffs_.reserve(coeffs_.size() - 1);
        for (size_t i = 1; i < coeffs_.size(); ++i)
            r.coeffs_.push_back(C(static_cast<long long>(i)) * coeffs_[i]);
        r.normalize();
        return r;
    }

    C eval(const C& x) const {
        C acc{};
        for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    // p(s*x): same variable, argument scaled.
    Poly scaled_arg(const C& s) const {
        Poly r(var_);
        r.coeffs_.reserve(coeffs_.size());
        C sk(1);
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            r.coeffs_.push_back(coeffs_[i] * sk);
            sk = sk * s;
        }
        r.normalize();
        return r;
    }

    // Multiply by x^k.
    Poly shifted_up(int k) const {
        if (k < 0) throw std::invalid_argument("Poly::shifted_up: negative shift");
        if (is_zero()) return *this;
        Poly r(var_);
        r.coeffs_.assign(static_cast<size_t>(k), C{});
        r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
        return r;
    }

    const std::vector<C>& coeffs() const { return coeffs_; }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (size_t i = coeffs_.size(); i-- > 0;) {
            if (detail::coeff_is_zero(coeffs_[i])) continue;
            if (!out.empty()) out += " + ";
            std::string cs = detail::coeff_str(coeffs_[i]);
            if (i == 0) {
                out += cs;
            } else {
                std::string xs = var_name(var_);
                if (i > 1) xs += "^" + std::to_string(i);
                if (cs == "1") out += xs;
                else if (cs == "-1") out += "-" + xs;
                else out += "(" + cs + ")*" + xs;
            }
        }
        return out;
    }

    void check_var(const Poly& o) const {
        if (var_ != o.var_)
            throw std::invalid_argument(std::string("Poly: variable mismatch ") +
                                        var_name(var_) + " vs " + var_name(o.var_));
    }

private:
    void normalize() {
        while (!coeffs_.empty() && detail::coeff_is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    Var var_;
    std::vector<C> coeffs_;  // ascending, no trailing zeros
};

using UniPoly = Poly<Rational>;

// ---- field-coefficient algorithms (Rational only) ----

struct DivMod {
    UniPoly quot;
    UniPoly rem;
};

inline DivMod divmod(const UniPoly& a, const UniPoly& b) {
    a.check_var(b);
    if (b.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
    UniPoly q(a.var()), r = a;
    int db = *b.degree();
    Rational lb = b.leading();
    while (!r.is_zero() && *r.degree() >= db) {
        int k = *r.degree() - db;
        Rational c = r.leading() / lb;
        UniPoly t = UniPoly::monomial(a.var(), k, c);
        q = q + t;
        r = r - t * b;
    }
    return {q, r};
}

inline UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("exact_div: nonzero remainder");
    return q;
}

// Monic gcd; gcd(0,0) = 0.
inline UniPoly poly_gcd(UniPoly a, UniPoly b) {
    a.check_var(b);
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).rem;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * (Rational(1) / a.leading());
}

// Positive rational c with p/c having coprime integer coefficients.
inline Rational poly_content(const UniPoly& p) {
    if (p.is_zero()) throw std::domain_error("poly_content: zero polynomial");
    BigInt g = 0, l = 1;
    for (const auto& c : p.coeffs()) {
        if (c.is_zero()) continue;
        g = boost::multiprecision::gcd(g, c.num());
        l = l / boost::multiprecision::gcd(l, c.den()) * c.den();
    }
    return Rational(g, l);
}

// Integer-coefficient, coprime-content scalar multiple of p, leading sign kept.
inline UniPoly primitive_part(const UniPoly& p) {
    if (p.is_zero()) return p;
    return p * (Rational(1) / poly_content(p));
}

inline UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree_part: zero polynomial");
    if (*p.degree() == 0) return UniPoly(p.var(), Rational(1));
    UniPoly g = poly_gcd(p, p.derivative());
    UniPoly q = exact_div(p, g);
    return q * (Rational(1) / q.leading());
}

// Yun squarefree decomposition: p = lc * prod f_i^{m_i}, f_i monic squarefree,
// m_i strictly increasing. Degree-0 f_i entries are dropped.
inline std::vector<std::pair<UniPoly, int>> squarefree_decompose(const UniPoly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree_decompose: zero polynomial");
    std::vector<std::pair<UniPoly, int>> out;
    if (*p.degree() == 0) return out;
    UniPoly a = p * (Rational(1) / p.leading());
    UniPoly g = poly_gcd(a, a.derivative());
    if (g.is_zero() || *g.degree() == 0) {
        out.emplace_back(a, 1);
        return out;
    }
    UniPoly w = exact_div(a, g);
    UniPoly y = exact_div(a.derivative(), g);
    UniPoly z = y - w.derivative();
    int m = 1;
    while (!w.is_zero() && *w.degree() > 0) {
        UniPoly f = poly_gcd(w, z);
        if (!f.is_zero() && *f.degree() > 0) out.emplace_back(f, m);
        w = exact_div(w, f);
        y = exact_div(z, f);
        z = y - w.derivative();
        ++m;
    }
    return out;
}

}  // namespace diracint
