#include "diracint/subcase.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace diracint {

int subcase_index(Subcase sc) { return static_cast<int>(sc); }

Subcase subcase_from_index(int i) {
    if (i < 1 || i > 4) throw std::invalid_argument("subcase index must be 1..4");
    return static_cast<Subcase>(i);
}

const char* subcase_name(Subcase sc) {
    switch (sc) {
        case Subcase::S1: return "S1";
        case Subcase::S2: return "S2";
        case Subcase::S3: return "S3";
        case Subcase::S4: return "S4";
    }
    throw std::invalid_argument("bad subcase");
}

void check_lambda(int lambda) {
    if (lambda != 1 && lambda != -1)
        throw std::invalid_argument("lambda must be +1 or -1 (normalize first)");
}

namespace {

bool alpha_branch(Subcase sc) { return sc == Subcase::S1 || sc == Subcase::S2; }

const SubcaseTraits kTraits[4] = {
    {Subcase::S1}, {Subcase::S2}, {Subcase::S3}, {Subcase::S4}};

}  // namespace

const SubcaseTraits& traits(Subcase sc) { return kTraits[subcase_index(sc) - 1]; }

BiPoly SubcaseTraits::a_coeff(int l) const {
    long long ll = l;
    if (alpha_branch(id))
        return BiPoly::monomial(0, 0, Rational(ll * (ll - 1))) +
               BiPoly::monomial(0, 1, Rational(2 * ll));
    return BiPoly::monomial(0, 0, Rational(ll * (ll + 1))) +
           BiPoly::monomial(0, 1, Rational(-2 * ll));
}

BiPoly SubcaseTraits::b_coeff(int l) const {
    long long ll = l;
    switch (id) {
        case Subcase::S1: return BiPoly::monomial(1, 0, Rational(2 * (ll - 1)));
        case Subcase::S2:
            return BiPoly::monomial(1, 0, Rational(-2 * (ll - 1))) +
                   BiPoly::monomial(1, 1, Rational(-4));
        case Subcase::S3: return BiPoly::monomial(1, 0, Rational(-2 * ll));
        case Subcase::S4:
            return BiPoly::monomial(1, 0, Rational(2 * ll)) +
                   BiPoly::monomial(1, 1, Rational(-4));
    }
    throw std::invalid_argument("bad subcase");
}

Rational SubcaseTraits::c_coeff(int l, int d, int lambda) const {
    check_lambda(lambda);
    long long ll = l, dd = d;
    if (id == Subcase::S1 || id == Subcase::S4) return Rational(2 * lambda * (dd - ll + 2));
    return Rational(2 * lambda * (ll - dd - 2));
}

UniPoly SubcaseTraits::b_over_m(int l) const {
    long long ll = l;
    switch (id) {
        case Subcase::S1: return UniPoly(Var::alpha, Rational(2 * (ll - 1)));
        case Subcase::S2:
            return UniPoly::from_coeffs(Var::alpha, {Rational(-2 * (ll - 1)), Rational(-4)});
        case Subcase::S3: return UniPoly(Var::alpha, Rational(-2 * ll));
        case Subcase::S4:
            return UniPoly::from_coeffs(Var::alpha, {Rational(2 * ll), Rational(-4)});
    }
    throw std::invalid_argument("bad subcase");
}

Rational SubcaseTraits::b_alpha_coeff() const {
    return (id == Subcase::S2 || id == Subcase::S4) ? Rational(-4) : Rational(0);
}

int SubcaseTraits::poly_sign() const {
    return (id == Subcase::S1 || id == Subcase::S4) ? 1 : -1;
}

Rational SubcaseTraits::residue(const Rational& alpha) const {
    return alpha_branch(id) ? alpha : Rational(1) - alpha;
}

BiPoly SubcaseTraits::residue_sym() const {
    return alpha_branch(id) ? BiPoly::alpha() : BiPoly(1) - BiPoly::alpha();
}

bool SubcaseTraits::energy_needs_alpha() const {
    return id == Subcase::S2 || id == Subcase::S4;
}

EnergyResult energy_from_degree(Subcase sc, int d, int lambda,
                                const std::optional<Rational>& alpha) {
    check_lambda(lambda);
    if (d < 0) throw std::invalid_argument("energy_from_degree: d must be >= 0");
    if (traits(sc).energy_needs_alpha() && !alpha)
        throw std::invalid_argument("energy_from_degree: subcases 2 and 4 need alpha");
    Rational two_lambda(2 * lambda);
    Rational e2;
    switch (sc) {
        case Subcase::S1: e2 = -two_lambda * Rational(d); break;
        case Subcase::S2: e2 = two_lambda * (Rational(d + 1) + Rational(2) * *alpha); break;
        case Subcase::S3: e2 = two_lambda * Rational(d + 2); break;
        case Subcase::S4: e2 = two_lambda * (Rational(2) * *alpha - Rational(d + 1)); break;
    }
    return {e2, e2.sign() > 0};
}

int predicted_positive_roots(Subcase sc, int d) {
    if (d < 1) throw std::invalid_argument("predicted_positive_roots: d must be >= 1");
    if (sc == Subcase::S1) return (d - 1) / 2;
    return (d + 1) / 2;  // ceil(d/2)
}

RegionFit counting_region(Subcase sc, int d, int lambda, const Rational& alpha) {
    check_lambda(lambda);
    switch (sc) {
        case Subcase::S1:
            return (lambda == -1 && alpha > Rational(-1)) ? RegionFit::Inside
                                                          : RegionFit::Outside;
        case Subcase::S2:
            if (lambda == 1 && alpha > Rational(-1, 2)) return RegionFit::Inside;
            if (lambda == -1 && alpha < Rational(-d, 2)) return RegionFit::Inside;
            return RegionFit::Outside;
        case Subcase::S3:
            if (lambda == 1 && alpha < Rational(1)) return RegionFit::Inside;
            if (lambda == 1 && alpha > Rational(1)) return RegionFit::VariantOnly;
            return RegionFit::Outside;
        case Subcase::S4:
            if (lambda == 1 && alpha > Rational(d, 2)) return RegionFit::Inside;
            if (lambda == -1 && alpha < Rational(1, 2)) return RegionFit::Inside;
            return RegionFit::Outside;
    }
    throw std::invalid_argument("bad subcase");
}

std::vector<Rational> degenerate_alphas(Subcase sc, int d) {
    std::vector<Rational> out;
    for (int l = 1; l <= d + 1; ++l) {
        if (sc == Subcase::S1 || sc == Subcase::S2) out.emplace_back(1 - l, 2);
        else out.emplace_back(l + 1, 2);
        if (sc == Subcase::S4) out.emplace_back(l, 2);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Rational> small_m_root_ladder(Subcase sc, int d) {
    if (d < 1 || d % 2 == 0)
        throw std::invalid_argument("small_m_root_ladder: d must be odd");
    std::vector<Rational> out;
    for (int n = 0; n <= (d - 1) / 2; ++n) {
        if (sc == Subcase::S1 || sc == Subcase::S2) out.emplace_back(-n);
        else out.emplace_back(n + 1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Rational> even_ladder(Subcase sc, int d) {
    if (d < 2 || d % 2 != 0)
        throw std::invalid_argument("even_ladder: d must be even and >= 2");
    std::vector<Rational> out;
    for (int k = 1; k <= d / 2; ++k) {
        if (sc == Subcase::S1 || sc == Subcase::S2) out.emplace_back(1 - 2 * k, 2);
        else out.emplace_back(2 * k + 1, 2);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Rational> exact_alpha_lines(Subcase sc, int d) {
    switch (sc) {
        case Subcase::S1:
        case Subcase::S2: return {Rational(0)};
        case Subcase::S3: return {};
        case Subcase::S4: return {Rational(d + 1, 2)};
    }
    throw std::invalid_argument("bad subcase");
}

std::vector<Rational> large_m_asymptote_targets(Subcase sc, int d) {
    if (d < 1) throw std::invalid_argument("large_m_asymptote_targets: d must be >= 1");
    std::vector<Rational> out;
    if (sc == Subcase::S2) {
        for (int l = 2; l <= d + 1; ++l) out.emplace_back(1 - l, 2);
    } else if (sc == Subcase::S4) {
        for (int l = 1; l <= d; ++l) out.emplace_back(l, 2);
    } else {
        throw std::invalid_argument("large_m_asymptote_targets: defined for S2 and S4 only");
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace diracint
