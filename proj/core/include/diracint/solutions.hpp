#pragma once

#include "diracint/ratfunc.hpp"
#include "diracint/sequence.hpp"
#include "diracint/sturm.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace diracint {

// Closed interval with exact rational endpoints.
struct RatInterval {
    Rational lo, hi;

    static RatInterval point(const Rational& r) { return {r, r}; }
    Rational mag() const { return std::max(abs(lo), abs(hi)); }

    friend RatInterval operator+(const RatInterval& a, const RatInterval& b) {
        return {a.lo + b.lo, a.hi + b.hi};
    }
    friend RatInterval operator*(const RatInterval& a, const RatInterval& b) {
        Rational c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
        Rational lo = std::min(std::min(c1, c2), std::min(c3, c4));
        Rational hi = std::max(std::max(c1, c2), std::max(c3, c4));
        return {lo, hi};
    }
};

RatInterval interval_eval(const UniPoly& p, const RatInterval& x);

enum class Family {
    KovacicCase1,
    LaguerreFamily,
    WhittakerFamily,
    BesselFamily,
    Elementary,
    E0Universal,
    ReductionOfOrder,
};

const char* family_name(Family f);
Family family_from_name(const std::string& name);

struct Certificate {
    enum class Kind { ExactZero, Bounded };
    Kind kind = Kind::ExactZero;
    Rational bound;       // |z * residual| <= bound (Bounded only)
    Rational energy_e2;
    bool has_box = false;
    std::string box_param;  // "alpha" or "m"
    Rational box_lo, box_hi;
    std::string note;
};

// A Liouvillian (or certified-near) solution psi = P(z) exp(Int omega dz) of
// psi'' = r psi. The quadrature Int omega is never evaluated; omega and r are
// stored exactly so the residual P'' + 2 omega P' + (omega' + omega^2 - r) P
// can be recomputed from the descriptor alone.
struct SolutionDescriptor {
    Family family = Family::KovacicCase1;
    UniPoly prefactor{Var::z};
    RationalFunction omega{Var::z};
    RationalFunction r{Var::z};
    std::map<std::string, std::string> params;
    bool liouvillian = true;
    Certificate cert;
};

template <typename C>
RatFunc<C> residual_identity(const Poly<C>& P, const RatFunc<C>& omega,
                             const RatFunc<C>& r) {
    RatFunc<C> two(Poly<C>(P.var(), C(2)));
    return RatFunc<C>(P.derivative().derivative()) +
           two * omega * RatFunc<C>(P.derivative()) +
           (omega.derivative() + omega * omega - r) * RatFunc<C>(P);
}

// Exact solution at a rational root (m0, alpha0) of the condition; throws
// domain_error if the condition is nonzero there.
SolutionDescriptor build_case1_solution(const PolySequence& seq, const Rational& m0,
                                        const Rational& alpha0);

// Boxed variants: the solution is instantiated at the box midpoint and the
// certificate bounds |z * residual| by |c(1)| times the interval magnitude of
// the condition slice over the box, which shrinks with the box width.
SolutionDescriptor build_case1_solution_alpha_box(const PolySequence& seq,
                                                  const Rational& m0,
                                                  const RootBox& alpha_box);
SolutionDescriptor build_case1_solution_m_box(const PolySequence& seq,
                                              const RootBox& m_box,
                                              const Rational& alpha0);

// psi = exp(Int V dz) solves psi'' = (V^2 + V') psi for any rational V;
// the E = 0 line of the system is solvable for every potential.
SolutionDescriptor e_zero_solution(const RationalFunction& v);

// Second basis element psi2 = psi1 * Int psi1^{-2} dz; Wronskian is 1.
SolutionDescriptor reduction_of_order(const SolutionDescriptor& psi1);

// ---- exclusion of the other Kovacic cases for the degree-two-pole family ----

struct Case2Candidate {
    Rational e0;       // element of E_0 = {4(1-alpha), 2, 4 alpha}
    Rational d_value;  // (e_infinity - e0) / 2
    bool admissible;   // d_value is a non-negative integer
};

struct KovacicReport {
    Rational alpha;
    std::vector<Case2Candidate> candidates;
    Rational e_infinity{-2};
    bool any_admissible = false;
    bool all_even = false;
    bool case2_excluded = false;
    std::string case2_reason;
    int order_at_infinity = 0;  // of r; case 3 needs >= 2
    bool case3_excluded = false;
};

KovacicReport kovacic_exclusions(const Rational& alpha, int lambda = -1,
                                 const Rational& m = Rational(1),
                                 const Rational& e2 = Rational(1));

}  // namespace diracint
