#include "diracint/sequence.hpp"

#include <stdexcept>
#include <string>

namespace diracint {

namespace {

void check_degree(int d) {
    if (d < 1) throw std::invalid_argument("prefactor degree d must be >= 1");
}

int parity(int k) { return ((k % 2) + 2) % 2; }

}  // namespace

PolySequence::PolySequence(Subcase sc, int d, int lambda)
    : sc_(sc), d_(d), lambda_(lambda) {
    check_degree(d);
    check_lambda(lambda);
    const SubcaseTraits& t = traits(sc);
    polys_.assign(static_cast<size_t>(d) + 3, BiPoly());
    polys_[static_cast<size_t>(d) + 2] = BiPoly();   // p_{d+1}
    polys_[static_cast<size_t>(d) + 1] = BiPoly(1);  // p_d
    for (int l = d + 1; l >= 1; --l) {
        Rational c = t.c_coeff(l, d, lambda);
        if (c.is_zero()) throw std::logic_error("PolySequence: vanishing c(l)");
        BiPoly next = (t.a_coeff(l) * p(l) + t.b_coeff(l) * p(l - 1)) * (Rational(1) / c);
        polys_[static_cast<size_t>(l - 2) + 1] = next;
    }
    for (int l = -1; l <= d + 1; ++l) {
        if (!p(l).m_parity_is(parity(d - l)))
            throw std::logic_error("PolySequence: m-parity violated at l=" +
                                   std::to_string(l));
    }
}

PolySequence PolySequence::from_raw(Subcase sc, int d, int lambda,
                                    std::vector<BiPoly> polys) {
    check_degree(d);
    check_lambda(lambda);
    if (polys.size() != static_cast<size_t>(d) + 3)
        throw std::invalid_argument("from_raw: need d+3 polynomials (l = -1 .. d+1)");
    return PolySequence(sc, d, lambda, std::move(polys));
}

const BiPoly& PolySequence::p(int l) const {
    if (l < -1 || l > d_ + 1) throw std::out_of_range("PolySequence: l out of range");
    return polys_[static_cast<size_t>(l + 1)];
}

BiPoly PolySequence::relation_residual(int l) const {
    if (l < 1 || l > d_ + 1)
        throw std::out_of_range("relation_residual: l must be in [1, d+1]");
    const SubcaseTraits& t = traits(sc_);
    return t.a_coeff(l) * p(l) + t.b_coeff(l) * p(l - 1) -
           BiPoly(t.c_coeff(l, d_, lambda_)) * p(l - 2);
}

BiPoly PolySequence::condition_polynomial() const {
    if (p(-1).is_zero()) return BiPoly();
    return p(-1).primitive();
}

Rational PolySequence::condition_content() const { return p(-1).content(); }

BiPoly PolySequence::effective_condition() const {
    switch (sc_) {
        case Subcase::S1: return p(1);
        case Subcase::S2: return p(1) + BiPoly::monomial(1, 0, Rational(-2)) * p(0);
        case Subcase::S3:
        case Subcase::S4: return p(-1);
    }
    throw std::invalid_argument("bad subcase");
}

BiPoly PolySequence::condition(ConditionKind kind) const {
    if (kind == ConditionKind::Full) return condition_polynomial();
    BiPoly e = effective_condition();
    return e.is_zero() ? e : e.primitive();
}

Rational PolySequence::condition_constant() const {
    return traits(sc_).c_coeff(1, d_, lambda_);
}

Poly<BiPoly> PolySequence::prefactor_symbolic() const {
    std::vector<BiPoly> cs;
    cs.reserve(static_cast<size_t>(d_) + 1);
    for (int l = 0; l <= d_; ++l) cs.push_back(p(l));
    return Poly<BiPoly>::from_coeffs(Var::z, cs);
}

UniPoly PolySequence::prefactor_at(const Rational& m0, const Rational& alpha0) const {
    std::vector<Rational> cs;
    cs.reserve(static_cast<size_t>(d_) + 1);
    for (int l = 0; l <= d_; ++l) cs.push_back(p(l).eval(m0, alpha0));
    return UniPoly::from_coeffs(Var::z, cs);
}

PolySequence generate_sequence(Subcase sc, int d, int lambda) {
    return PolySequence(sc, d, lambda);
}

UniPoly odd_product_condition(Subcase sc, int d, int lambda) {
    if (d < 1 || d % 2 == 0)
        throw std::invalid_argument("odd_product_condition: d must be odd");
    check_lambda(lambda);
    UniPoly out(Var::alpha, Rational(1));
    for (int n = 0; n <= (d - 1) / 2; ++n) {
        long long den = (sc == Subcase::S1 || sc == Subcase::S4)
                            ? static_cast<long long>(d) - 2 * n + 1
                            : 2 * static_cast<long long>(n) - d - 1;
        Rational scale(2 * static_cast<long long>(n) + 1, lambda * den);
        UniPoly lin =
            (sc == Subcase::S1 || sc == Subcase::S2)
                ? UniPoly::from_coeffs(Var::alpha, {Rational(n), Rational(1)})
                : UniPoly::from_coeffs(Var::alpha, {Rational(n + 1), Rational(-1)});
        out = out * lin * scale;
    }
    return out;
}

std::vector<std::pair<int, UniPoly>> even_product_formulas(Subcase sc, int d, int lambda) {
    if (d < 2 || d % 2 != 0)
        throw std::invalid_argument("even_product_formulas: d must be even and >= 2");
    check_lambda(lambda);
    std::vector<std::pair<int, UniPoly>> out;
    UniPoly cur(Var::alpha, Rational(1));
    out.emplace_back(d, cur);
    for (int l = d; l >= 2; l -= 2) {
        long long k = l / 2;
        long long den = (sc == Subcase::S1 || sc == Subcase::S4)
                            ? static_cast<long long>(d) - 2 * k + 2
                            : 2 * k - static_cast<long long>(d) - 2;
        Rational scale(k, lambda * den);
        // factor k(2k + 2 alpha - 1) / (lambda den) for S1/S2,
        //        k(2k + 1 - 2 alpha) / (lambda den) for S3/S4
        UniPoly lin = (sc == Subcase::S1 || sc == Subcase::S2)
                          ? UniPoly::from_coeffs(Var::alpha,
                                                 {Rational(2 * k - 1), Rational(2)})
                          : UniPoly::from_coeffs(Var::alpha,
                                                 {Rational(2 * k + 1), Rational(-2)});
        cur = cur * lin * scale;
        out.emplace_back(l - 2, cur);
    }
    return out;
}

RescaledSequence::RescaledSequence(Subcase sc, int d, int lambda, RescaleKind kind)
    : sc_(sc), d_(d), lambda_(lambda), kind_(kind) {
    check_degree(d);
    check_lambda(lambda);
    const SubcaseTraits& t = traits(sc);
    Var v = (kind == RescaleKind::MInfinity) ? Var::alpha : Var::m;
    polys_.assign(static_cast<size_t>(d) + 3, UniPoly(v));
    polys_[static_cast<size_t>(d) + 1] = UniPoly(v, Rational(1));  // r_d
    for (int l = d + 1; l >= 1; --l) {
        Rational c = t.c_coeff(l, d, lambda);
        UniPoly driver =
            (kind == RescaleKind::MInfinity)
                ? t.b_over_m(l)
                : UniPoly::monomial(Var::m, 1, t.b_alpha_coeff());
        polys_[static_cast<size_t>(l - 2) + 1] =
            driver * r(l - 1) * (Rational(1) / c);
    }
}

const UniPoly& RescaledSequence::r(int l) const {
    if (l < -1 || l > d_ + 1) throw std::out_of_range("RescaledSequence: l out of range");
    return polys_[static_cast<size_t>(l + 1)];
}

RescaledSequence rescaled_limit(Subcase sc, int d, int lambda, RescaleKind kind) {
    return RescaledSequence(sc, d, lambda, kind);
}

}  // namespace diracint
