#pragma once

#include "diracint/poly.hpp"
#include "diracint/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace diracint {

// Exact polynomial in two parameters, sparse over (m-power, alpha-power).
// Zero coefficients are never stored, so the term map is a canonical form
// and operator== is structural. Iteration order is deterministic.
class BiPoly {
public:
    using Key = std::pair<int, int>;  // (m exponent, alpha exponent)

    BiPoly() = default;
    BiPoly(long long c) { if (c != 0) terms_[{0, 0}] = Rational(c); }
    BiPoly(const Rational& c) { if (!c.is_zero()) terms_[{0, 0}] = c; }

    static BiPoly monomial(int mpow, int apow, const Rational& c);
    static BiPoly m() { return monomial(1, 0, Rational(1)); }
    static BiPoly alpha() { return monomial(0, 1, Rational(1)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{0, 0});
    }

    int degree_m() const;      // -1 for the zero polynomial
    int degree_alpha() const;  // -1 for the zero polynomial

    const Rational& coeff(int mpow, int apow) const;

    BiPoly operator-() const;
    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const Rational& s, const BiPoly& p);
    friend BiPoly operator*(const BiPoly& p, const Rational& s) { return s * p; }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    Rational eval(const Rational& m_val, const Rational& alpha_val) const;

    // Substitute one parameter, keeping the other symbolic.
    UniPoly eval_m(const Rational& m_val) const;      // polynomial in alpha
    UniPoly eval_alpha(const Rational& a_val) const;  // polynomial in m

    // Coefficient of m^k as a polynomial in alpha.
    UniPoly coeff_of_m(int k) const;
    UniPoly leading_coeff_m() const { return coeff_of_m(degree_m()); }

    // True when every stored m exponent has the given parity (0 or 1).
    // The zero polynomial has every parity.
    bool m_parity_is(int parity) const;

    // Positive rational c with p/c having coprime integer coefficients.
    Rational content() const;
    BiPoly primitive() const;

    // Exact division by (alpha - root) when it divides; nullopt otherwise.
    std::optional<BiPoly> try_div_alpha_linear(const Rational& root) const;

    const std::map<Key, Rational>& terms() const { return terms_; }

    std::string str() const;

private:
    void add_term(const Key& k, const Rational& c);

    std::map<Key, Rational> terms_;
};

}  // namespace diracint
