#pragma once

#include "diracint/bipoly.hpp"
#include "diracint/poly.hpp"

#include <stdexcept>
#include <string>
#include <type_traits>

namespace diracint {

// Quotient of two polynomials over C. Over Rational the form is canonical
// (gcd reduced, monic denominator); over other coefficient rings it is kept
// lazy and equality is decided by cross-multiplication, which is valid
// because the coefficient rings used here are integral domains.
template <typename C>
class RatFunc {
public:
    explicit RatFunc(Var v = Var::z) : num_(v), den_(v, C(1)) {}
    RatFunc(const Poly<C>& n) : num_(n), den_(n.var(), C(1)) {}
    RatFunc(const Poly<C>& n, const Poly<C>& d) : num_(n), den_(d) {
        n.check_var(d);
        if (d.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        normalize();
    }

    const Poly<C>& num() const { return num_; }
    const Poly<C>& den() const { return den_; }
    Var var() const { return num_.var(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree_or(0) == 0; }

    // Valid only when is_polynomial(); over Rational divides out the constant.
    Poly<C> as_polynomial() const {
        if (!is_polynomial()) throw std::domain_error("RatFunc: not a polynomial");
        if constexpr (std::is_same_v<C, Rational>) {
            return num_ * (Rational(1) / den_.coeff(0));
        } else {
            if (!(den_.coeff(0) == C(1)))
                throw std::domain_error("RatFunc: non-unit denominator");
            return num_;
        }
    }

    RatFunc operator-() const { return RatFunc(-num_, den_, no_normalize_tag{}); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFunc derivative() const {
        return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    // Cross-multiplied equality: exact over an integral domain.
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    // deg(den) - deg(num); the zero function has no order at infinity.
    int order_at_infinity() const {
        if (is_zero()) throw std::domain_error("RatFunc: zero function has no order");
        return *den_.degree() - *num_.degree();
    }

    C eval(const C& x) const
        requires std::is_same_v<C, Rational>
    {
        C d = den_.eval(x);
        if (d.is_zero()) throw std::domain_error("RatFunc: evaluation at a pole");
        return num_.eval(x) / d;
    }

    std::string str() const {
        if (is_polynomial()) return as_polynomial_str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

private:
    struct no_normalize_tag {};
    RatFunc(Poly<C> n, Poly<C> d, no_normalize_tag) : num_(std::move(n)), den_(std::move(d)) {}

    std::string as_polynomial_str() const {
        if constexpr (std::is_same_v<C, Rational>) return as_polynomial().str();
        else return num_.str();
    }

    void normalize() {
        if (num_.is_zero()) {
            den_ = Poly<C>(num_.var(), C(1));
            return;
        }
        if constexpr (std::is_same_v<C, Rational>) {
            UniPoly g = poly_gcd(num_, den_);
            if (!g.is_zero() && *g.degree() > 0) {
                num_ = exact_div(num_, g);
                den_ = exact_div(den_, g);
            }
            Rational lc = den_.leading();
            num_ = num_ * (Rational(1) / lc);
            den_ = den_ * (Rational(1) / lc);
        }
    }

    Poly<C> num_, den_;
};

using RationalFunction = RatFunc<Rational>;

}  // namespace diracint
