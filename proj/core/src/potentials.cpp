#include "diracint/potentials.hpp"

#include "diracint/bipoly.hpp"
#include "diracint/laguerre.hpp"

#include <algorithm>
#include <stdexcept>

namespace diracint {

HeunNormalized heun_normalize(const Rational& alpha, const Rational& m,
                              const Rational& lambda, const Rational& e) {
    if (lambda.is_zero())
        throw std::domain_error(
            "heun_normalize: lambda = 0 has no z^2 term; use the m + alpha/z family");
    auto s = lambda.abs().exact_sqrt();
    if (!s)
        throw std::domain_error("heun_normalize: sqrt(|lambda|) = sqrt(" + lambda.abs().str() +
                                ") is irrational, the rescale z -> z/sqrt(|lambda|) would leave "
                                "the rational class");
    return HeunNormalized{alpha, m * *s, e * *s, lambda.sign(), *s};
}

UniPoly solve_R1(const std::vector<Rational>& poles) {
    size_t n = poles.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (poles[i] == poles[j])
                throw std::domain_error("solve_R1: repeated pole " + poles[i].str());

    UniPoly acc(Var::z);
    for (size_t k = 0; k < n; ++k) {
        Rational yk(0);
        for (size_t l = 0; l < n; ++l)
            if (l != k) yk -= Rational(1) / (poles[k] - poles[l]);
        if (yk.is_zero()) continue;
        UniPoly basis(Var::z, Rational(1));
        Rational denom(1);
        for (size_t l = 0; l < n; ++l) {
            if (l == k) continue;
            basis = basis * UniPoly::from_coeffs(Var::z, {-poles[l], Rational(1)});
            denom *= poles[k] - poles[l];
        }
        acc = acc + basis * (yk / denom);
    }
    return acc;
}

PoleConfig make_pole_config(std::vector<Rational> poles, UniPoly r2) {
    if (poles.empty()) throw std::domain_error("make_pole_config: need at least one pole");
    PoleConfig cfg;
    cfg.poles = std::move(poles);
    cfg.r1 = solve_R1(cfg.poles);
    cfg.r2 = r2.var() == Var::z ? std::move(r2) : UniPoly::from_coeffs(Var::z, r2.coeffs());
    return cfg;
}

static UniPoly pole_product(const PoleConfig& cfg) {
    UniPoly den(Var::z, Rational(1));
    for (const auto& c : cfg.poles)
        den = den * UniPoly::from_coeffs(Var::z, {-c, Rational(1)});
    return den;
}

RationalFunction pole_potential(const PoleConfig& cfg) {
    UniPoly den = pole_product(cfg);
    // sum 1/(z - c_k) = D'/D
    UniPoly num = den.derivative() + (cfg.r1 + cfg.r2 * den) * den;
    return RationalFunction(num, den);
}

RationalFunction pole_r(const PoleConfig& cfg, const Rational& e2) {
    RationalFunction v = pole_potential(cfg);
    return v * v + v.derivative() - RationalFunction(UniPoly(Var::z, e2));
}

bool pole_free(const PoleConfig& cfg) { return pole_r(cfg, Rational(0)).is_polynomial(); }

OnePoleResult one_pole_integrable(const Rational& r0, const Rational& r1) {
    if (r1.is_zero())
        throw std::domain_error(
            "one_pole_integrable: r1 = 0 drops the z^3 growth the closed form needs");

    OnePoleResult out;
    out.r0 = r0;
    out.r1 = r1;
    out.e2 = Rational(2) * r0;
    out.physical = out.e2 > Rational(0);

    PoleConfig cfg = make_pole_config({Rational(0)}, UniPoly::from_coeffs(Var::z, {r0, r1}));
    out.v = pole_potential(cfg);
    out.r = pole_r(cfg, out.e2);
    if (!out.r.is_polynomial())
        throw std::logic_error("one_pole_integrable: residue at the origin did not cancel");

    SolutionDescriptor psi1;
    psi1.family = Family::KovacicCase1;
    psi1.prefactor = UniPoly::from_coeffs(Var::z, {r0, r1});
    psi1.omega =
        RationalFunction(UniPoly::from_coeffs(Var::z, {Rational(0), r0, r1}));
    psi1.r = out.r;
    psi1.liouvillian = true;
    psi1.cert.kind = Certificate::Kind::ExactZero;
    psi1.cert.energy_e2 = out.e2;
    psi1.params["pole"] = "0";
    psi1.params["r0"] = r0.str();
    psi1.params["r1"] = r1.str();
    psi1.params["physical"] = out.physical ? "true" : "false";
    psi1.params["form"] = "psi1 = (r1 z + r0) exp(z^2 (3 r0 + 2 r1 z)/6)";
    if (!residual_identity(psi1.prefactor, psi1.omega, psi1.r).is_zero())
        throw std::logic_error("one_pole_integrable: residual not identically zero");
    out.psi1 = psi1;
    out.psi2 = reduction_of_order(psi1);
    return out;
}

WhittakerCase build_whittaker_case(const Rational& m, const Rational& alpha, int d) {
    if (m.is_zero())
        throw std::domain_error(
            "whittaker family needs m != 0; m = 0 is the pure-oscillator family");
    if (alpha == Rational(1))
        throw std::domain_error("alpha = 1 kills the 1/z^2 coefficient of r; excluded");
    if (d < 0) throw std::invalid_argument("build_whittaker_case: negative degree");

    WhittakerCase wc;
    wc.m = m;
    wc.alpha = alpha;
    wc.d = d;

    UniPoly lag = laguerre_assoc<Rational>(d, Rational(2) * alpha - Rational(1), Var::u);
    wc.p = UniPoly::from_coeffs(Var::z, lag.scaled_arg(Rational(-2) * m).coeffs());
    if (wc.p.eval(Rational(0)).is_zero())
        throw std::domain_error("build_whittaker_case: P(0) = 0 shifts the pole residue at the "
                                "origin away from alpha; alpha = " +
                                alpha.str() + " rejected at this degree");

    UniPoly z1 = UniPoly::monomial(Var::z, 1, Rational(1));
    UniPoly num = UniPoly::from_coeffs(Var::z, {alpha, m}) * wc.p + z1 * wc.p.derivative();
    wc.v = RationalFunction(num, z1 * wc.p);

    UniPoly tnum = UniPoly::from_coeffs(
        Var::z, {alpha * (alpha - Rational(1)), Rational(2) * m * (alpha + Rational(d)), m * m});
    wc.r_reduced = RationalFunction(tnum, UniPoly::monomial(Var::z, 2, Rational(1)));
    if (!(wc.v * wc.v + wc.v.derivative() == wc.r_reduced))
        throw std::logic_error("build_whittaker_case: collapse identity failed");

    wc.mu = Rational(1, 2) - alpha;
    wc.kappa_times = -(alpha + Rational(d));
    return wc;
}

bool whittaker_symbolic_identity(int d) {
    using B = BiPoly;
    using PB = Poly<B>;
    B two_am1 = B::monomial(0, 1, Rational(2)) - B(1);
    PB lag = laguerre_assoc<B>(d, two_am1, Var::u);
    PB p = PB::from_coeffs(Var::z, lag.scaled_arg(B::monomial(1, 0, Rational(-2))).coeffs());

    B al = B::alpha(), em = B::m();
    PB z1 = PB::monomial(Var::z, 1, B(1));
    PB num = PB::from_coeffs(Var::z, {al, em}) * p + z1 * p.derivative();
    RatFunc<B> v(num, z1 * p);

    PB tnum = PB::from_coeffs(
        Var::z, {al * al - al, (Rational(2) * (al + B(d))) * em, em * em});
    RatFunc<B> target(tnum, PB::monomial(Var::z, 2, B(1)));
    return v * v + v.derivative() == target;
}

std::vector<SpectrumLevel> whittaker_levels(const WhittakerCase& wc, long long l_lo,
                                            long long l_hi) {
    Rational da = wc.alpha + Rational(wc.d);
    if (da.is_zero())
        throw std::domain_error(
            "whittaker_levels: alpha = -d is Liouvillian at every energy, not a discrete list");
    if (l_lo > l_hi) throw std::invalid_argument("whittaker_levels: empty range");

    std::vector<SpectrumLevel> out;
    std::vector<Rational> seen;
    for (long long l = l_lo; l <= l_hi; ++l) {
        for (int branch : {+1, -1}) {
            SpectrumLevel lv;
            lv.l = l;
            lv.branch = branch;
            Rational t = Rational(l) + Rational(branch) * wc.alpha;
            if (t.is_zero()) {
                lv.reason = "l + branch*alpha = 0 would force m = 0";
                out.push_back(lv);
                continue;
            }
            Rational q = da / t;
            lv.e2_over_m2 = Rational(1) - q * q;
            if (lv.e2_over_m2 < Rational(0)) {
                lv.reason = "E^2 < 0";
                out.push_back(lv);
                continue;
            }
            if (std::find(seen.begin(), seen.end(), lv.e2_over_m2) != seen.end()) {
                lv.reason = "duplicate energy";
                out.push_back(lv);
                continue;
            }
            lv.valid = true;
            lv.liouvillian = true;
            seen.push_back(lv.e2_over_m2);
            out.push_back(lv);
        }
    }
    return out;
}

WhittakerClass whittaker_liouvillian(const WhittakerCase& wc, const Rational& e2) {
    WhittakerClass out;
    Rational da = wc.alpha + Rational(wc.d);
    if (da.is_zero()) {
        out.kind = WhittakerClass::Kind::AlwaysLiouvillian;
        out.liouvillian = true;
        out.detail = "alpha = -d removes the 1/z pole of r; solvable at every energy";
        return out;
    }
    Rational m2 = wc.m * wc.m;
    if (e2 == m2) {
        out.kind = WhittakerClass::Kind::BesselDegenerate;
        out.liouvillian = (Rational(2) * wc.alpha - Rational(1, 2)).is_integer();
        out.detail = "E^2 = m^2 reduces to the Bessel pair";
        return out;
    }
    Rational denom = m2 - e2;
    out.x_squared = m2 / denom;
    if (denom < Rational(0)) {
        out.complex_argument = true;
        out.detail = "m^2 < E^2 makes kappa imaginary; the integer condition cannot hold";
        return out;
    }
    auto x = out.x_squared.exact_sqrt();
    if (!x) {
        out.detail = "m/sqrt(m^2 - E^2) is irrational";
        return out;
    }
    out.x = *x;
    Rational p = *x * da + wc.alpha;
    Rational q = *x * da - wc.alpha;
    if (p.is_integer()) out.p_value = p;
    if (q.is_integer()) out.q_value = q;
    if (out.p_value || out.q_value) {
        out.kind = WhittakerClass::Kind::LevelLiouvillian;
        out.liouvillian = true;
        out.detail = "kappa +- mu + 1/2 lands on an integer";
    } else {
        out.detail = "x(alpha + d) +- alpha misses the integers";
    }
    return out;
}

SolutionDescriptor bessel_degenerate(const WhittakerCase& wc) {
    Rational da = wc.alpha + Rational(wc.d);
    Rational m2 = wc.m * wc.m;

    SolutionDescriptor sol;
    sol.cert.kind = Certificate::Kind::ExactZero;
    sol.cert.energy_e2 = m2;
    sol.params["m"] = wc.m.str();
    sol.params["alpha"] = wc.alpha.str();
    sol.params["d"] = std::to_string(wc.d);

    if (da.is_zero()) {
        // r collapses to the Euler form alpha(alpha-1)/z^2; psi = z^alpha exactly
        sol.family = Family::Elementary;
        sol.liouvillian = true;
        sol.prefactor = UniPoly(Var::z, Rational(1));
        sol.omega = RationalFunction(UniPoly(Var::z, wc.alpha),
                                     UniPoly::monomial(Var::z, 1, Rational(1)));
        sol.r = RationalFunction(
            UniPoly(Var::z, wc.alpha * (wc.alpha - Rational(1))),
            UniPoly::monomial(Var::z, 2, Rational(1)));
        sol.params["basis"] = "z^alpha, z^(1-alpha)";
        sol.cert.note = "Euler equation; second solution z^(1-alpha)";
        if (!residual_identity(sol.prefactor, sol.omega, sol.r).is_zero())
            throw std::logic_error("bessel_degenerate: Euler residual not zero");
        return sol;
    }

    sol.family = Family::BesselFamily;
    sol.prefactor = UniPoly(Var::z, Rational(1));
    sol.omega = wc.v;
    sol.r = wc.r_reduced - RationalFunction(UniPoly(Var::z, m2));
    Rational order = Rational(1) - Rational(2) * wc.alpha;
    sol.liouvillian = (Rational(2) * wc.alpha - Rational(1, 2)).is_integer();
    sol.params["check"] = "collapse";
    sol.params["order"] = order.str();
    sol.params["argument"] = "w with w^2 = -8 m (alpha + d) z";
    sol.params["basis"] = "sqrt(z) J_nu(w), sqrt(z) Y_nu(w), nu = 1 - 2 alpha";
    sol.cert.note = sol.liouvillian ? "half-odd Bessel order; the pair is elementary"
                                    : "Bessel order 1 - 2 alpha is not half-odd";
    return sol;
}

Rational laguerre_index(const Rational& lambda, const Rational& e2) {
    if (lambda.is_zero()) throw std::domain_error("laguerre_index: lambda = 0");
    return -e2 / (Rational(4) * lambda);
}

SolutionDescriptor laguerre_special_case(const Rational& alpha, const Rational& lambda,
                                         const Rational& e2) {
    if (lambda.is_zero())
        throw std::domain_error(
            "laguerre_special_case: lambda = 0 leaves only the Coulomb term");

    UniPoly vnum = UniPoly::from_coeffs(Var::z, {alpha, Rational(0), lambda});
    RationalFunction v(vnum, UniPoly::monomial(Var::z, 1, Rational(1)));
    if (e2.is_zero()) return e_zero_solution(v);

    Rational n = laguerre_index(lambda, e2);
    bool n_int = n.is_integer();
    bool shifted_int = (n + alpha - Rational(1, 2)).is_integer();

    SolutionDescriptor sol;
    sol.family = Family::LaguerreFamily;
    sol.liouvillian = n_int || shifted_int;
    sol.omega = v;
    sol.r = v * v + v.derivative() - RationalFunction(UniPoly(Var::z, e2));
    sol.cert.kind = Certificate::Kind::ExactZero;
    sol.cert.energy_e2 = e2;
    sol.params["n"] = n.str();
    sol.params["alpha"] = alpha.str();
    sol.params["lambda"] = lambda.str();

    if (n_int && n >= Rational(0)) {
        if (n > Rational(1000000))
            throw std::domain_error("laguerre_special_case: index too large to expand");
        int nn = static_cast<int>(n.num().convert_to<long long>());
        UniPoly lag = laguerre_assoc<Rational>(nn, alpha - Rational(1, 2), Var::u);
        UniPoly p(Var::z);
        for (int k = 0; k <= lag.degree_or(0); ++k)
            p.set_coeff(2 * k, lag.coeff(k) * (-lambda).pow(k));
        sol.prefactor = p;
        sol.params["form"] = "psi = P(z) z^alpha exp(lambda z^2/2)";
        if (!residual_identity(sol.prefactor, sol.omega, sol.r).is_zero())
            throw std::logic_error("laguerre_special_case: residual not zero");
    } else {
        sol.prefactor = UniPoly(Var::z, Rational(1));
        sol.params["check"] = "collapse";
        sol.params["form"] =
            "psi = z^alpha exp(lambda z^2/2) g(-lambda z^2), g confluent with index n";
        sol.cert.note = sol.liouvillian
                            ? "n + alpha - 1/2 integral; solvable through the Kummer relations"
                            : "neither n nor n + alpha - 1/2 is an integer";
    }
    return sol;
}

static bool level_condition(const Rational& m, const Rational& alpha, int d,
                            const Rational& e2) {
    Rational denom = m * m - e2;
    if (denom <= Rational(0)) return false;
    auto x = (m * m / denom).exact_sqrt();
    if (!x) return false;
    Rational da = alpha + Rational(d);
    return (*x * da + alpha).is_integer() || (*x * da - alpha).is_integer();
}

TableCell table_dispatch(const Rational& m, const Rational& alpha, int d,
                         const Rational& e2) {
    if (m.is_zero())
        throw std::domain_error("table_dispatch: m = 0 belongs to the oscillator family");
    if (alpha == Rational(1)) throw std::domain_error("table_dispatch: alpha = 1 excluded");

    Rational da = alpha + Rational(d);
    int row = 1;
    if (da.is_zero())
        row = 3;
    else if ((Rational(2) * alpha - Rational(1, 2)).is_integer())
        row = 2;

    int col = 1;
    if (e2 == m * m)
        col = 3;
    else if (row == 3)
        col = 2;  // alpha = -d is an integer, so the combination is always integral
    else if (level_condition(m, alpha, d, e2))
        col = 2;

    TableCell cell;
    cell.row = row;
    cell.col = col;
    if (row <= 2) {
        if (col <= 2) {
            cell.basis = {"W_{kappa,mu}(u)", "W_{-kappa,mu}(-u)"};
            cell.argument = "u = 2 sqrt(m^2 - E^2) z";
            cell.liouvillian = col == 2;
        } else {
            cell.basis = {"sqrt(z) J_{1-2alpha}(w)", "sqrt(z) Y_{1-2alpha}(w)"};
            cell.argument = "w^2 = -8 m (alpha + d) z";
            cell.liouvillian = row == 2;
        }
    } else {
        if (col <= 2) {
            cell.basis = {"sqrt(z) J_{alpha-1/2}(u/(2i))", "sqrt(z) Y_{alpha-1/2}(u/(2i))"};
            cell.argument = "u = 2 sqrt(m^2 - E^2) z";
        } else {
            cell.basis = {"z^alpha", "z^(1-alpha)"};
            cell.argument = "";
        }
        cell.liouvillian = true;
    }
    return cell;
}

}  // namespace diracint
