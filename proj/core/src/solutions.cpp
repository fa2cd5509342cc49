#include "diracint/solutions.hpp"

#include "diracint/subcase.hpp"

#include <stdexcept>

namespace diracint {

RatInterval interval_eval(const UniPoly& p, const RatInterval& x) {
    RatInterval acc = RatInterval::point(Rational(0));
    const std::vector<Rational>& cs = p.coeffs();
    for (size_t i = cs.size(); i-- > 0;)
        acc = acc * x + RatInterval::point(cs[i]);
    return acc;
}

const char* family_name(Family f) {
    switch (f) {
        case Family::KovacicCase1: return "KovacicCase1";
        case Family::LaguerreFamily: return "LaguerreFamily";
        case Family::WhittakerFamily: return "WhittakerFamily";
        case Family::BesselFamily: return "BesselFamily";
        case Family::Elementary: return "Elementary";
        case Family::E0Universal: return "E0Universal";
        case Family::ReductionOfOrder: return "ReductionOfOrder";
    }
    throw std::invalid_argument("bad family");
}

Family family_from_name(const std::string& name) {
    for (Family f : {Family::KovacicCase1, Family::LaguerreFamily,
                     Family::WhittakerFamily, Family::BesselFamily,
                     Family::Elementary, Family::E0Universal,
                     Family::ReductionOfOrder})
        if (name == family_name(f)) return f;
    throw std::invalid_argument("unknown family '" + name + "'");
}

namespace {

SolutionDescriptor case1_descriptor(const PolySequence& seq, const Rational& m0,
                                    const Rational& alpha0) {
    SolutionDescriptor sol;
    sol.family = Family::KovacicCase1;
    sol.prefactor = seq.prefactor_at(m0, alpha0);
    sol.omega = subcase_omega<Rational>(seq.subcase(), alpha0, m0, seq.lambda());
    EnergyResult er = energy_from_degree(seq.subcase(), seq.degree(), seq.lambda(), alpha0);
    sol.r = heun_r<Rational>(alpha0, m0, seq.lambda(), er.e2);
    sol.cert.energy_e2 = er.e2;
    sol.liouvillian = true;
    sol.params["subcase"] = subcase_name(seq.subcase());
    sol.params["d"] = std::to_string(seq.degree());
    sol.params["lambda"] = std::to_string(seq.lambda());
    sol.params["m"] = m0.str();
    sol.params["alpha"] = alpha0.str();
    sol.params["physical"] = er.physical ? "true" : "false";
    return sol;
}

}  // namespace

SolutionDescriptor build_case1_solution(const PolySequence& seq, const Rational& m0,
                                        const Rational& alpha0) {
    Rational c = seq.condition_raw().eval(m0, alpha0);
    if (!c.is_zero())
        throw std::domain_error("build_case1_solution: condition nonzero at (m, alpha)");
    SolutionDescriptor sol = case1_descriptor(seq, m0, alpha0);
    sol.cert.kind = Certificate::Kind::ExactZero;
    RationalFunction res =
        residual_identity<Rational>(sol.prefactor, sol.omega, sol.r);
    if (!res.is_zero())
        throw std::logic_error("build_case1_solution: residual not identically zero");
    return sol;
}

namespace {

SolutionDescriptor boxed_descriptor(const PolySequence& seq, const UniPoly& slice,
                                    const RootBox& box, const Rational& fixed,
                                    bool box_is_alpha) {
    RatInterval iv{box.lo, box.hi};
    Rational mag = interval_eval(slice, iv).mag();
    Rational mid = box.exact ? box.lo : box.mid();
    Rational m0 = box_is_alpha ? fixed : mid;
    Rational a0 = box_is_alpha ? mid : fixed;
    SolutionDescriptor sol = case1_descriptor(seq, m0, a0);
    sol.cert.kind = Certificate::Kind::Bounded;
    sol.cert.bound = abs(seq.condition_constant()) * mag;
    sol.cert.has_box = true;
    sol.cert.box_param = box_is_alpha ? "alpha" : "m";
    sol.cert.box_lo = box.lo;
    sol.cert.box_hi = box.hi;
    sol.cert.note = "solution instantiated at the box midpoint";
    return sol;
}

}  // namespace

SolutionDescriptor build_case1_solution_alpha_box(const PolySequence& seq,
                                                  const Rational& m0,
                                                  const RootBox& alpha_box) {
    UniPoly slice = seq.condition_raw().eval_m(m0);
    return boxed_descriptor(seq, slice, alpha_box, m0, true);
}

SolutionDescriptor build_case1_solution_m_box(const PolySequence& seq,
                                              const RootBox& m_box,
                                              const Rational& alpha0) {
    UniPoly slice = seq.condition_raw().eval_alpha(alpha0);
    return boxed_descriptor(seq, slice, m_box, alpha0, false);
}

SolutionDescriptor e_zero_solution(const RationalFunction& v) {
    SolutionDescriptor sol;
    sol.family = Family::E0Universal;
    sol.prefactor = UniPoly(Var::z, Rational(1));
    sol.omega = v;
    sol.r = v * v + v.derivative();
    sol.cert.kind = Certificate::Kind::ExactZero;
    sol.cert.energy_e2 = Rational(0);
    sol.liouvillian = true;
    sol.params["form"] = "psi = exp(Int V dz)";
    RationalFunction res = residual_identity<Rational>(sol.prefactor, sol.omega, sol.r);
    if (!res.is_zero())
        throw std::logic_error("e_zero_solution: residual not identically zero");
    return sol;
}

SolutionDescriptor reduction_of_order(const SolutionDescriptor& psi1) {
    SolutionDescriptor sol = psi1;
    sol.family = Family::ReductionOfOrder;
    sol.params["base_family"] = family_name(psi1.family);
    sol.params["quadrature"] = "psi2 = psi1 * Int dz / (P(z)^2 exp(2 Int omega dz))";
    sol.params["wronskian"] = "1";
    sol.cert.note = "second basis element; solves the same equation as psi1";
    return sol;
}

KovacicReport kovacic_exclusions(const Rational& alpha, int lambda, const Rational& m,
                                 const Rational& e2) {
    check_lambda(lambda);
    KovacicReport rep;
    rep.alpha = alpha;
    Rational four(4);
    std::vector<Rational> family{four * (Rational(1) - alpha), Rational(2), four * alpha};
    for (const Rational& e0 : family) {
        Case2Candidate c;
        c.e0 = e0;
        c.d_value = (rep.e_infinity - e0) / Rational(2);
        c.admissible = c.d_value.is_integer() && c.d_value.sign() >= 0;
        rep.any_admissible = rep.any_admissible || c.admissible;
        rep.candidates.push_back(c);
    }
    if (!rep.any_admissible) {
        rep.case2_excluded = true;
        rep.case2_reason = "no candidate degree (e_inf - e0)/2 is a non-negative integer";
    } else {
        bool all_even = rep.e_infinity.is_integer() && rep.e_infinity.num() % 2 == 0;
        for (const Rational& e0 : family)
            all_even = all_even && e0.is_integer() && e0.num() % 2 == 0;
        rep.all_even = all_even;
        rep.case2_excluded = all_even;
        rep.case2_reason = all_even
                               ? "every pole and infinity difference is even"
                               : "candidate degree admissible and parities mixed";
    }
    RationalFunction r = heun_r<Rational>(alpha, m, lambda, e2);
    rep.order_at_infinity = r.order_at_infinity();
    rep.case3_excluded = rep.order_at_infinity < 2;
    return rep;
}

}  // namespace diracint
