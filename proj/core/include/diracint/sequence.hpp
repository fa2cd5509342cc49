#pragma once

#include "diracint/bipoly.hpp"
#include "diracint/poly.hpp"
#include "diracint/subcase.hpp"

#include <utility>
#include <vector>

namespace diracint {

enum class ConditionKind { Full, Effective };

// Coefficient sequence p_{d+1} = 0, p_d = 1, ..., p_{-1} of the degree-d
// polynomial prefactor, generated downward by
//   p_{l-2} = (a(l) p_l + b(l) p_{l-1}) / c(l),  l = d+1 .. 1.
// c(l) is a nonzero constant throughout that range, so the generation is
// division-free in (m, alpha). p_{-1} = 0 is the solvability condition.
class PolySequence {
public:
    PolySequence(Subcase sc, int d, int lambda);

    // Bypasses generation and the parity check; for negative-control tests.
    static PolySequence from_raw(Subcase sc, int d, int lambda,
                                 std::vector<BiPoly> polys);

    Subcase subcase() const { return sc_; }
    int degree() const { return d_; }
    int lambda() const { return lambda_; }

    // l in [-1, d+1]
    const BiPoly& p(int l) const;

    // a(l) p_l + b(l) p_{l-1} - c(l) p_{l-2}, recomputed from stored values;
    // zero for every l in [1, d+1] on a generated sequence.
    BiPoly relation_residual(int l) const;

    const BiPoly& condition_raw() const { return p(-1); }

    // Primitive part of p_{-1} (integer coprime coefficients, sign kept).
    BiPoly condition_polynomial() const;
    Rational condition_content() const;

    // The condition with the structural factor stripped: p_1 for S1,
    // p_1 - 2 m p_0 for S2, p_{-1} itself for S3 and S4. Not normalized.
    BiPoly effective_condition() const;

    BiPoly condition(ConditionKind kind) const;

    // c(1); z * residual of the assembled solution equals c(1) * p_{-1}.
    Rational condition_constant() const;

    Poly<BiPoly> prefactor_symbolic() const;
    UniPoly prefactor_at(const Rational& m0, const Rational& alpha0) const;

private:
    PolySequence(Subcase sc, int d, int lambda, std::vector<BiPoly> polys)
        : sc_(sc), d_(d), lambda_(lambda), polys_(std::move(polys)) {}

    Subcase sc_;
    int d_;
    int lambda_;
    std::vector<BiPoly> polys_;  // index l+1, l = -1 .. d+1
};

PolySequence generate_sequence(Subcase sc, int d, int lambda);

// Closed product form of p_{-1} at m = 0 for odd d, as a polynomial in alpha.
UniPoly odd_product_condition(Subcase sc, int d, int lambda);

// Closed product forms of the even-index p_l at m = 0 for even d:
// pairs (l, p_l(0, alpha)) for l = d, d-2, ..., 0.
std::vector<std::pair<int, UniPoly>> even_product_formulas(Subcase sc, int d, int lambda);

enum class RescaleKind { MInfinity, AlphaInfinity };

// Limits of p_l / m^(d-l) as m -> oo (polynomials in alpha), or of
// p_l / alpha^(d-l) as alpha -> oo (polynomials in m). The three-term
// relation collapses to two terms, so each r_l is an explicit product.
class RescaledSequence {
public:
    RescaledSequence(Subcase sc, int d, int lambda, RescaleKind kind);

    Subcase subcase() const { return sc_; }
    int degree() const { return d_; }
    int lambda() const { return lambda_; }
    RescaleKind kind() const { return kind_; }

    // l in [-1, d+1]
    const UniPoly& r(int l) const;

private:
    Subcase sc_;
    int d_;
    int lambda_;
    RescaleKind kind_;
    std::vector<UniPoly> polys_;
};

RescaledSequence rescaled_limit(Subcase sc, int d, int lambda, RescaleKind kind);

}  // namespace diracint
