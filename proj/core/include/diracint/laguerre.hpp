#pragma once

#include "diracint/poly.hpp"
#include "diracint/rational.hpp"

#include <stdexcept>

namespace diracint {

// Associated Laguerre polynomial L_d^(a)(x) over a coefficient ring C that
// contains the rationals. Generated by the three-term recurrence
//   (k+1) L_{k+1} = ((2k+1+a) - x) L_k - (k+a) L_{k-1},  L_0 = 1, L_1 = 1+a-x.
template <typename C>
Poly<C> laguerre_assoc(int d, const C& a, Var x = Var::u) {
    if (d < 0) throw std::invalid_argument("laguerre_assoc: negative degree");
    Poly<C> prev(x, C(1));
    if (d == 0) return prev;
    Poly<C> X = Poly<C>::monomial(x, 1, C(1));
    Poly<C> cur = Poly<C>(x, a + C(1)) - X;
    for (int k = 1; k < d; ++k) {
        Poly<C> mid = Poly<C>(x, a + C(2 * k + 1)) - X;
        Poly<C> next = (mid * cur - (a + C(k)) * prev) * C(Rational(1, k + 1));
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace diracint
