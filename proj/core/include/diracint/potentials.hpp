#pragma once

#include "diracint/ratfunc.hpp"
#include "diracint/solutions.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace diracint {

// ---- exact rescale of the harmonic family onto lambda = +1 / -1 ----

struct HeunNormalized {
    Rational alpha, m, e;
    int lambda;
    Rational scale;  // sqrt(|lambda_raw|): z -> z/scale, m -> m*scale, e -> e*scale
};

// Exact only: refuses (domain_error) when |lambda| is not a perfect rational
// square, and redirects lambda = 0 to the linear-potential family.
HeunNormalized heun_normalize(const Rational& alpha, const Rational& m,
                              const Rational& lambda, const Rational& e);

// ---- multi-pole reconstruction: V = sum 1/(z - c_k) + R1 + R2 prod(z - c_k) ----

// Unique polynomial of degree <= N-1 with R1(c_k) = -sum_{l != k} 1/(c_k - c_l),
// which cancels the simple-pole residues of V^2 + V'. Duplicate poles are
// rejected with domain_error.
UniPoly solve_R1(const std::vector<Rational>& poles);

struct PoleConfig {
    std::vector<Rational> poles;
    UniPoly r1{Var::z};
    UniPoly r2{Var::z};
};

PoleConfig make_pole_config(std::vector<Rational> poles, UniPoly r2);

RationalFunction pole_potential(const PoleConfig& cfg);
// V^2 + V' - e2; polynomial exactly when the residue condition holds
RationalFunction pole_r(const PoleConfig& cfg, const Rational& e2);
bool pole_free(const PoleConfig& cfg);

// One pole at the origin with R2 = r0 + r1 z: the case with a closed-form
// basis. E^2 = 2 r0; r1 = 0 degenerates the degree count (domain_error);
// r0 = 0 is kept but flagged unphysical.
struct OnePoleResult {
    Rational r0, r1, e2;
    bool physical;
    RationalFunction v{Var::z};
    RationalFunction r{Var::z};
    SolutionDescriptor psi1, psi2;
};

OnePoleResult one_pole_integrable(const Rational& r0, const Rational& r1);

// ---- the harmonic-free family V = m + alpha/z + P'/P ----

// P = L_d^(2 alpha - 1)(-2 m z); with that P the coefficient function
// collapses to r = m^2 - E^2 + alpha(alpha-1)/z^2 + 2 m (alpha + d)/z,
// which is verified exactly at construction.
struct WhittakerCase {
    Rational m, alpha;
    int d = 0;
    UniPoly p{Var::z};
    RationalFunction v{Var::z};
    RationalFunction r_reduced{Var::z};  // r + E^2, i.e. the E-independent part
    Rational mu;                          // 1/2 - alpha
    Rational kappa_times;                 // kappa = kappa_times * m / sqrt(m^2 - E^2)
};

// Preconditions: m != 0, alpha != 1, P(0) != 0 (else the pole residue at the
// origin is not alpha).
WhittakerCase build_whittaker_case(const Rational& m, const Rational& alpha, int d);

// The collapse identity with (m, alpha) kept symbolic, checked exactly.
bool whittaker_symbolic_identity(int d);

struct SpectrumLevel {
    long long l = 0;
    int branch = 0;  // sign in x = (l + branch*alpha)/(d + alpha)
    Rational e2_over_m2;
    bool valid = false;
    bool liouvillian = false;
    std::string reason;  // why an invalid candidate was rejected
};

// Candidate Liouvillian energies m/sqrt(m^2-E^2) = (l ± alpha)/(d + alpha)
// for integer l in [l_lo, l_hi]; exact bound checks, duplicates by E^2
// rejected. Throws domain_error for alpha = -d (Liouvillian for every E).
std::vector<SpectrumLevel> whittaker_levels(const WhittakerCase& wc, long long l_lo,
                                            long long l_hi);

struct WhittakerClass {
    enum class Kind {
        AlwaysLiouvillian,   // alpha = -d
        LevelLiouvillian,    // integer combination holds at this E^2
        NonLiouvillian,
        BesselDegenerate,    // E^2 = m^2
    };
    Kind kind = Kind::NonLiouvillian;
    bool liouvillian = false;
    bool complex_argument = false;   // m^2 < E^2
    Rational x_squared;              // m^2 / (m^2 - E^2) when defined
    std::optional<Rational> x;       // exact square root when it exists
    std::optional<Rational> p_value; // x(alpha+d) + alpha when integral
    std::optional<Rational> q_value; // x(alpha+d) - alpha when integral
    std::string detail;
};

WhittakerClass whittaker_liouvillian(const WhittakerCase& wc, const Rational& e2);

// E^2 = m^2: basis sqrt(z) J_{1-2alpha}(w), w^2 = -8 m (alpha + d) z.
// Liouvillian exactly when 2 alpha - 1/2 is an integer. For alpha = -d the
// basis degenerates to z^alpha, z^(1-alpha) instead.
SolutionDescriptor bessel_degenerate(const WhittakerCase& wc);

// ---- the m = 0 family: z^(-alpha) psi = e^(-u/2) g(u), u = -lambda z^2 ----

// g satisfies the confluent equation with index n = -E^2/(4 lambda);
// Liouvillian iff n or n + alpha - 1/2 is an integer. E = 0 falls back to
// the universal exp(Int V) solution.
SolutionDescriptor laguerre_special_case(const Rational& alpha, const Rational& lambda,
                                         const Rational& e2);

Rational laguerre_index(const Rational& lambda, const Rational& e2);

// ---- classification table of the harmonic-free family ----

// rows: generic alpha / 2 alpha - 1/2 integer / alpha = -d (takes priority)
// cols: generic E^2 / level condition / E^2 = m^2
struct TableCell {
    int row = 0, col = 0;
    std::array<std::string, 2> basis;
    std::string argument;
    bool liouvillian = false;
};

TableCell table_dispatch(const Rational& m, const Rational& alpha, int d,
                         const Rational& e2);

}  // namespace diracint
