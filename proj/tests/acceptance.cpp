// End-to-end checks, one line each. Every check recomputes its claim from
// scratch; a FAIL exits nonzero. Random draws use fixed seeds so reruns are
// byte-identical.

#include "diracint/potentials.hpp"
#include "diracint/root_analysis.hpp"
#include "diracint/sequence.hpp"
#include "diracint/serialize.hpp"
#include "diracint/solutions.hpp"
#include "diracint/subcase.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace diracint;

namespace {

const Subcase kAll[] = {Subcase::S1, Subcase::S2, Subcase::S3, Subcase::S4};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- 1: hand-derived anchors and the three-term relation ----

bool check_recurrence_anchors(std::string&) {
    bool ok = true;
    BiPoly M = BiPoly::m(), A = BiPoly::alpha();
    for (int lam : {1, -1}) {
        Rational L(lam);

        PolySequence s1 = generate_sequence(Subcase::S1, 2, lam);
        ok &= s1.p(3).is_zero();
        ok &= s1.p(2) == BiPoly(1);
        ok &= s1.p(1) == M * (Rational(2) / L);
        ok &= s1.p(0) == BiPoly(Rational(1, 2) / L) + A * (Rational(1) / L) +
                             M * M * (Rational(1) / (L * L));
        ok &= s1.p(-1) == M * A * (Rational(2, 3) / (L * L));

        PolySequence s2 = generate_sequence(Subcase::S2, 2, lam);
        ok &= s2.p(1) == M * (BiPoly(1) + A) * (Rational(2) / L);
        ok &= s2.p(0) == (BiPoly(1) + A * Rational(2)) * (Rational(-1, 2) / L) +
                             M * M * (BiPoly(1) + A * Rational(2)) * (BiPoly(1) + A) *
                                 (Rational(1) / (L * L));

        PolySequence s4 = generate_sequence(Subcase::S4, 1, lam);
        ok &= s4.p(0) == M * (BiPoly(1) - A) * (Rational(2) / L);
        ok &= s4.p(-1) == (BiPoly(1) - A) * (Rational(1, 2) / L) +
                              M * M * (BiPoly(1) - A * Rational(2)) * (BiPoly(1) - A) *
                                  (Rational(1) / (L * L));

        for (Subcase sc : kAll) {
            PolySequence seq = generate_sequence(sc, 6, lam);
            for (int l = 1; l <= 7; ++l) ok &= seq.relation_residual(l).is_zero();
        }
    }

    PolySequence s3 = generate_sequence(Subcase::S3, 2, 1);
    ok &= s3.p(1) == M * Rational(3);
    ok &= s3.p(0) == M * M * Rational(3) + BiPoly(Rational(-3, 2)) + A;
    ok &= s3.p(-1) == M * Rational(-3, 2) + M * A * Rational(4, 3) + M * M * M;
    ok &= s3.p(-1).eval(Rational(1), Rational(3, 8)) == Rational(0);
    return ok;
}

// ---- 2: closed product form of the odd-degree condition at m = 0 ----

bool check_odd_ladders(std::string&) {
    bool ok = true;
    for (Subcase sc : kAll)
        for (int lam : {1, -1})
            for (int d : {1, 3, 5, 7, 9}) {
                PolySequence seq = generate_sequence(sc, d, lam);
                UniPoly prod = odd_product_condition(sc, d, lam);
                ok &= prod == seq.p(-1).eval_m(Rational(0));

                std::vector<Rational> ladder = small_m_root_ladder(sc, d);
                ok &= static_cast<int>(ladder.size()) == (d + 1) / 2;
                UniPoly monic(Var::alpha, Rational(1));
                for (const Rational& r0 : ladder)
                    monic = monic * UniPoly::from_coeffs(Var::alpha, {Rational(0) - r0,
                                                                      Rational(1)});
                ok &= prod * (Rational(1) / prod.leading()) == monic;
            }
    return ok;
}

// ---- 3: predicted positive root counts on random in-region slices ----

bool check_random_counts(std::string& note) {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(20260819u);
    const long long dens[] = {3, 5, 7, 11, 13};
    bool ok = true;
    for (int trial = 0; trial < 20; ++trial) {
        Subcase sc = subcase_from_index(1 + static_cast<int>(rng() % 4));
        int d = 1 + static_cast<int>(rng() % 8);
        int lam = sc == Subcase::S1 ? -1 : 1;

        // denominator an odd prime and numerator coprime to it, so alpha can
        // never be an integer or half-integer (every degenerate value is one)
        long long den = dens[rng() % 5];
        long long lo = 0;
        switch (sc) {
            case Subcase::S1: lo = -den + 1; break;                 // alpha > -1
            case Subcase::S2: lo = -(den - 1) / 2; break;           // alpha > -1/2
            case Subcase::S3: lo = -6 * den; break;                 // alpha < 1
            case Subcase::S4: lo = (d * den) / 2 + 1; break;        // alpha > d/2
        }
        long long span = sc == Subcase::S3 ? (7 * den - 1) : 6 * den;
        long long num;
        do {
            num = lo + static_cast<long long>(rng() % span);
        } while (num % den == 0);
        Rational alpha(num, den);

        ok &= counting_region(sc, d, lam, alpha) == RegionFit::Inside;
        std::vector<Rational> degen = degenerate_alphas(sc, d);
        ok &= std::find(degen.begin(), degen.end(), alpha) == degen.end();

        PolySequence seq = generate_sequence(sc, d, lam);
        PositiveRootCount cnt = count_positive_roots_in_m(seq, alpha);
        ok &= !cnt.whole_line;
        ok &= cnt.positive == predicted_positive_roots(sc, d);
    }
    double secs = seconds_since(t0);
    if (secs >= 30.0) {
        note = "took " + std::to_string(secs) + " s";
        return false;
    }
    return ok;
}

// ---- 4: even-degree root structure near m = 0 ----

bool check_near_zero_even(std::string&) {
    struct Row {
        Subcase sc;
        int lam;
    };
    const Row rows[] = {{Subcase::S1, -1}, {Subcase::S2, 1}, {Subcase::S3, 1},
                        {Subcase::S4, 1}};
    bool ok = true;
    for (const Row& row : rows)
        for (int d : {2, 4, 6}) {
            NearZeroReport rep = near_zero_m_roots(row.sc, d, row.lam, Rational(1, 100));
            ok &= rep.counts_ok;
            ok &= rep.exacts_ok;
            ok &= rep.alternation_ok;
        }
    return ok;
}

// ---- 5: large-m drift onto the rescaled-limit ladder ----

bool check_asymptotes(std::string&) {
    bool ok = true;
    for (Subcase sc : {Subcase::S2, Subcase::S4})
        for (int d : {2, 3, 4, 5}) {
            AsymptoteReport near50 = large_m_asymptotes(sc, d, 1, Rational(50));
            AsymptoteReport far100 = large_m_asymptotes(sc, d, 1, Rational(100));
            ok &= near50.line_divides;
            ok &= near50.paired_all;
            ok &= far100.line_divides;
            ok &= far100.paired_all;
            // quadratic decay: doubling m must beat the previous lower bound
            ok &= far100.max_dist_hi < near50.max_dist_lo;
        }
    return ok;
}

// ---- 6: exact residuals of every assembled solution form ----

BiPoly forced_e2(Subcase sc, int d, int lambda) {
    Rational two_lambda(2 * lambda);
    switch (sc) {
        case Subcase::S1: return BiPoly(-two_lambda * Rational(d));
        case Subcase::S2:
            return BiPoly(two_lambda * Rational(d + 1)) +
                   BiPoly::monomial(0, 1, two_lambda * Rational(2));
        case Subcase::S3: return BiPoly(two_lambda * Rational(d + 2));
        case Subcase::S4:
            return BiPoly(-two_lambda * Rational(d + 1)) +
                   BiPoly::monomial(0, 1, two_lambda * Rational(2));
    }
    throw std::invalid_argument("bad subcase");
}

bool check_residuals(std::string&) {
    bool ok = true;

    RationalFunction v = heun_potential_v(Rational(2, 3), Rational(5), -1);
    SolutionDescriptor e0 = e_zero_solution(v);
    ok &= residual_identity(e0.prefactor, e0.omega, e0.r).is_zero();
    ok &= e0.cert.energy_e2 == Rational(0);

    for (const auto& [r0, r1] : {std::pair<Rational, Rational>{Rational(1), Rational(1)},
                                 {Rational(-2), Rational(3)}}) {
        OnePoleResult opr = one_pole_integrable(r0, r1);
        ok &= opr.r.is_polynomial();
        ok &= residual_identity(opr.psi1.prefactor, opr.psi1.omega, opr.psi1.r).is_zero();
        ok &= residual_identity(opr.psi2.prefactor, opr.psi2.omega, opr.psi2.r).is_zero();
    }

    using B = BiPoly;
    using PB = Poly<B>;
    for (Subcase sc : kAll)
        for (int lam : {1, -1})
            for (int d = 1; d <= 4; ++d) {
                PolySequence seq = generate_sequence(sc, d, lam);
                PB pre = seq.prefactor_symbolic();
                RatFunc<B> omega = subcase_omega<B>(sc, B::alpha(), B::m(), lam);
                RatFunc<B> r = heun_r<B>(B::alpha(), B::m(), lam, forced_e2(sc, d, lam));
                RatFunc<B> res = residual_identity(pre, omega, r);
                RatFunc<B> z(PB::monomial(Var::z, 1, B(1)));
                RatFunc<B> expect(PB(Var::z, B(seq.condition_constant()) * seq.p(-1)));
                ok &= res * z == expect;
            }
    return ok;
}

// ---- 7: the symbolic collapse identity of the harmonic-free family ----

bool check_collapse_identity(std::string&) {
    bool ok = true;
    for (int d = 0; d <= 6; ++d) ok &= whittaker_symbolic_identity(d);
    return ok;
}

// ---- 8: level energies bounded and zero-denominator levels rejected ----

bool check_level_bounds(std::string&) {
    bool ok = true;

    struct Case {
        Rational m, alpha;
        int d;
    };
    const Case generic[] = {{Rational(1), Rational(1, 2), 1},
                            {Rational(2), Rational(1, 3), 2},
                            {Rational(1), Rational(3, 4), 3},
                            {Rational(3), Rational(-5, 3), 1}};
    for (const Case& c : generic) {
        WhittakerCase wc = build_whittaker_case(c.m, c.alpha, c.d);
        bool saw_valid = false;
        for (const SpectrumLevel& lv : whittaker_levels(wc, 0, 8)) {
            if (!lv.valid) continue;
            saw_valid = true;
            ok &= lv.e2_over_m2 >= Rational(0);
            ok &= lv.e2_over_m2 <= Rational(1);
            ok &= lv.liouvillian;
        }
        ok &= saw_valid;
    }

    const Case integral[] = {{Rational(1), Rational(2), 1}, {Rational(1), Rational(3), 2}};
    for (const Case& c : integral) {
        WhittakerCase wc = build_whittaker_case(c.m, c.alpha, c.d);
        bool found_zero_denominator = false;
        for (const SpectrumLevel& lv : whittaker_levels(wc, 0, 8)) {
            Rational t = Rational(lv.l) + Rational(lv.branch) * c.alpha;
            if (!t.is_zero()) continue;
            found_zero_denominator = true;
            ok &= !lv.valid;
            ok &= lv.reason.find("m = 0") != std::string::npos;
        }
        ok &= found_zero_denominator;
    }
    return ok;
}

// ---- 9: figure-scale grid scans against the stored regression curves ----

bool check_preset_scans(std::string& note) {
    struct Preset {
        Subcase sc;
        int d, lam;
        const char* file;
    };
    const Preset presets[] = {{Subcase::S1, 7, -1, "fig1_s1_d7.csv"},
                              {Subcase::S3, 7, 1, "fig1_s3_d7.csv"},
                              {Subcase::S2, 5, 1, "fig2_s2_d5.csv"},
                              {Subcase::S4, 5, 1, "fig2_s4_d5.csv"}};
    unsigned hw = std::thread::hardware_concurrency();
    int threads = static_cast<int>(std::min(8u, std::max(1u, hw)));

    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (const Preset& ps : presets) {
        PolySequence seq = generate_sequence(ps.sc, ps.d, ps.lam);
        CurveScan scan = scan_curve(seq, Rational(-4), Rational(4), Rational(1, 25),
                                    Rational(1, 1024), ConditionKind::Full, threads);

        std::ifstream f(std::string(DIRACINT_TESTS_DATA_DIR) + "/" + ps.file,
                        std::ios::binary);
        if (!f) {
            note = std::string("missing regression file ") + ps.file;
            return false;
        }
        std::ostringstream stored;
        stored << f.rdbuf();
        ok &= curve_to_csv(scan) == stored.str();

        // the m = 0 column is exactly the integer ladder
        std::vector<Rational> ladder = small_m_root_ladder(ps.sc, ps.d);
        const CurvePoint* zero = nullptr;
        for (const CurvePoint& pt : scan.points)
            if (pt.m.is_zero()) zero = &pt;
        ok &= zero != nullptr && !zero->whole_line &&
              zero->roots.size() == ladder.size();
        if (zero && zero->roots.size() == ladder.size())
            for (size_t i = 0; i < ladder.size(); ++i)
                ok &= zero->roots[i].exact && zero->roots[i].lo == ladder[i];

        // one grid step away, (d+1)/2 roots sit inside the ladder window
        std::vector<Rational> window_values = ladder;
        for (const Rational& x : exact_alpha_lines(ps.sc, ps.d))
            window_values.push_back(x);
        Rational wlo = *std::min_element(window_values.begin(), window_values.end()) -
                       Rational(1);
        Rational whi = *std::max_element(window_values.begin(), window_values.end()) +
                       Rational(1);
        for (const Rational& mm : {Rational(1, 25), Rational(-1, 25)}) {
            const CurvePoint* pt = nullptr;
            for (const CurvePoint& q : scan.points)
                if (q.m == mm) pt = &q;
            if (!pt) {
                ok = false;
                continue;
            }
            int in_window = 0;
            for (const RootBox& b : pt->roots) {
                Rational value = b.exact ? b.lo : b.mid();
                if (wlo <= value && value <= whi) ++in_window;
            }
            ok &= in_window == (ps.d + 1) / 2;
        }

        // structural lines give an exact root in every column
        std::vector<Rational> lines = exact_alpha_lines(ps.sc, ps.d);
        for (const CurvePoint& pt : scan.points) {
            ok &= !pt.whole_line;
            for (const Rational& line : lines) {
                bool found = false;
                for (const RootBox& b : pt.roots)
                    if (b.exact && b.lo == line) found = true;
                ok &= found;
            }
        }

        // the condition is even in m for odd d, so columns pair up exactly
        size_t n = scan.points.size();
        for (size_t i = 0; i < n; ++i) {
            const CurvePoint& a = scan.points[i];
            const CurvePoint& b = scan.points[n - 1 - i];
            ok &= (a.m + b.m).is_zero();
            ok &= a.roots.size() == b.roots.size();
            ok &= a.whole_line == b.whole_line;
        }
    }
    double secs = seconds_since(t0);
    if (secs >= 120.0) {
        note = "took " + std::to_string(secs) + " s";
        return false;
    }
    return ok;
}

// ---- 10: the other two solvability classes stay excluded ----

bool check_exclusions(std::string&) {
    std::mt19937 rng(777u);
    bool ok = true;
    for (int i = 0; i < 100; ++i) {
        long long den = 1 + static_cast<long long>(rng() % 8);
        long long num = static_cast<long long>(rng() % 401) - 200;
        KovacicReport rep = kovacic_exclusions(Rational(num, den));
        ok &= rep.case2_excluded;
        ok &= rep.case3_excluded;
        ok &= rep.order_at_infinity == -2;
        ok &= rep.e_infinity == Rational(-2);
        if (rep.any_admissible) ok &= rep.all_even;
    }
    return ok;
}

// ---- 11: multi-pole reconstruction keeps r polynomial ----

bool check_pole_reconstruction(std::string&) {
    std::mt19937 rng(4242u);
    bool ok = true;
    for (int n = 1; n <= 5; ++n)
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<Rational> poles;
            while (static_cast<int>(poles.size()) < n) {
                long long den = 1 + static_cast<long long>(rng() % 6);
                long long num = static_cast<long long>(rng() % 21) - 10;
                Rational c(num, den);
                if (std::find(poles.begin(), poles.end(), c) == poles.end())
                    poles.push_back(c);
            }

            UniPoly r1 = solve_R1(poles);
            ok &= r1.degree_or(-1) <= n - 1;
            for (size_t k = 0; k < poles.size(); ++k) {
                Rational want(0);
                for (size_t l = 0; l < poles.size(); ++l)
                    if (l != k) want = want - Rational(1) / (poles[k] - poles[l]);
                ok &= r1.eval(poles[k]) == want;
            }

            std::vector<Rational> r2c;
            int deg = static_cast<int>(rng() % 4);
            for (int j = 0; j <= deg; ++j)
                r2c.push_back(Rational(static_cast<long long>(rng() % 11) - 5));
            PoleConfig cfg = make_pole_config(poles, UniPoly::from_coeffs(Var::z, r2c));
            Rational e2(static_cast<long long>(rng() % 9) - 4);
            ok &= pole_free(cfg);
            ok &= pole_r(cfg, e2).is_polynomial();
        }
    return ok;
}

struct Criterion {
    const char* what;
    std::function<bool(std::string&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> checks = {
        {"downward recurrence reproduces the hand-derived low-degree coefficients",
         check_recurrence_anchors},
        {"odd-degree conditions at m = 0 factor exactly into their integer ladders",
         check_odd_ladders},
        {"random in-region slices match the predicted positive root count",
         check_random_counts},
        {"even-degree root sets near m = 0 are bounded, exact on lines, and alternate",
         check_near_zero_even},
        {"large-m root branches contract onto their half-integer limits",
         check_asymptotes},
        {"every assembled solution satisfies its equation by exact residual identity",
         check_residuals},
        {"the confluent prefactor collapse identity holds symbolically",
         check_collapse_identity},
        {"candidate level energies stay within [0, m^2] and degenerate levels are rejected",
         check_level_bounds},
        {"grid scans reproduce the stored regression curves byte for byte",
         check_preset_scans},
        {"the second and third solvability classes are excluded at every sampled alpha",
         check_exclusions},
        {"multi-pole reconstructions keep the coefficient function polynomial",
         check_pole_reconstruction},
    };

    int failures = 0;
    for (size_t i = 0; i < checks.size(); ++i) {
        std::string detail;
        bool pass = false;
        try {
            pass = checks[i].run(detail);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        std::cout << "[" << std::setw(2) << (i + 1) << "] " << checks[i].what << ": "
                  << (pass ? "PASS" : "FAIL");
        if (!pass && !detail.empty()) std::cout << "  (" << detail << ")";
        std::cout << "\n";
        if (!pass) ++failures;
    }
    if (failures)
        std::cout << failures << " of " << checks.size() << " checks failed\n";
    return failures == 0 ? 0 : 1;
}
