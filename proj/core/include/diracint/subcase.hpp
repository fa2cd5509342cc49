#pragma once

#include "diracint/bipoly.hpp"
#include "diracint/poly.hpp"
#include "diracint/ratfunc.hpp"

#include <optional>
#include <vector>

namespace diracint {

// The four square-root branches omega = rho/z + s(m + lambda z) of the central
// equation psi'' = r psi with r = V^2 + V' - E^2, V = alpha/z + m + lambda z.
// Residue rho is alpha (S1, S2) or 1 - alpha (S3, S4); s is +1 for S1, S4 and
// -1 for S2, S3. Each branch carries a three-term relation
//   a(l) p_l + b(l) p_{l-1} = c(l) p_{l-2}
// for the coefficients of the polynomial prefactor P = sum p_l z^l.
enum class Subcase { S1 = 1, S2 = 2, S3 = 3, S4 = 4 };

int subcase_index(Subcase sc);
Subcase subcase_from_index(int i);
const char* subcase_name(Subcase sc);

// lambda is restricted to +1 / -1; see heun_normalize for the exact rescale.
void check_lambda(int lambda);

struct SubcaseTraits {
    Subcase id;

    BiPoly a_coeff(int l) const;
    BiPoly b_coeff(int l) const;  // proportional to m
    Rational c_coeff(int l, int d, int lambda) const;

    // b(l)/m as a polynomial in alpha; drives the m-rescaled two-term limit.
    UniPoly b_over_m(int l) const;
    // coefficient of m*alpha in b(l); drives the alpha-rescaled limit.
    Rational b_alpha_coeff() const;

    int poly_sign() const;
    Rational residue(const Rational& alpha) const;
    BiPoly residue_sym() const;
    bool energy_needs_alpha() const;
};

const SubcaseTraits& traits(Subcase sc);

struct EnergyResult {
    Rational e2;
    bool physical;  // e2 > 0
};

// Inverts the degree condition tying E^2 to the prefactor degree d.
// Subcases 2 and 4 need alpha; passing none there throws invalid_argument.
EnergyResult energy_from_degree(Subcase sc, int d, int lambda,
                                const std::optional<Rational>& alpha = std::nullopt);

// Full count of simple real roots of the solvability condition in m,
// valid inside counting_region.
int predicted_positive_roots(Subcase sc, int d);

enum class RegionFit { Inside, VariantOnly, Outside };

// Subcase 3 has two circulating alpha-ranges; computed counts match alpha < 1,
// the alpha > 1 reading is kept and reported as VariantOnly.
RegionFit counting_region(Subcase sc, int d, int lambda, const Rational& alpha);

// alpha values where some relation coefficient a(l) or b(l) degenerates for
// l = 1..d+1; root counts need not be maximal there.
std::vector<Rational> degenerate_alphas(Subcase sc, int d);

// Roots in alpha of the solvability condition at m = 0, odd d.
std::vector<Rational> small_m_root_ladder(Subcase sc, int d);

// Roots in alpha of p_0 at m = 0, even d (the longest even-index ladder).
std::vector<Rational> even_ladder(Subcase sc, int d);

// alpha values solving the condition identically in m: the structural factor
// alpha = 0 (S1, S2) and the exact line alpha = (d+1)/2 (S4).
std::vector<Rational> exact_alpha_lines(Subcase sc, int d);

// Limits of the condition's alpha-roots as |m| -> infinity (S2, S4 only).
std::vector<Rational> large_m_asymptote_targets(Subcase sc, int d);

// ---- potential assembly, generic over the coefficient ring ----

template <typename C>
RatFunc<C> heun_potential_v(const C& alpha, const C& m, int lambda) {
    check_lambda(lambda);
    Poly<C> num = Poly<C>::from_coeffs(Var::z, {alpha, m, C(lambda)});
    Poly<C> den = Poly<C>::monomial(Var::z, 1, C(1));
    return RatFunc<C>(num, den);
}

template <typename C>
RatFunc<C> heun_r(const C& alpha, const C& m, int lambda, const C& e2) {
    RatFunc<C> v = heun_potential_v(alpha, m, lambda);
    return v * v + v.derivative() - RatFunc<C>(Poly<C>(Var::z, e2));
}

template <typename C>
RatFunc<C> subcase_omega(Subcase sc, const C& alpha, const C& m, int lambda) {
    check_lambda(lambda);
    const SubcaseTraits& t = traits(sc);
    C rho = (sc == Subcase::S1 || sc == Subcase::S2) ? alpha : C(1) - alpha;
    C s = C(t.poly_sign());
    Poly<C> num = Poly<C>::from_coeffs(Var::z, {rho, s * m, s * C(lambda)});
    Poly<C> den = Poly<C>::monomial(Var::z, 1, C(1));
    return RatFunc<C>(num, den);
}

}  // namespace diracint
