#pragma once

#include "diracint/sequence.hpp"
#include "diracint/sturm.hpp"

#include <string>
#include <vector>

namespace diracint {

// ---- root counts of the condition in m at fixed alpha ----

struct PositiveRootCount {
    bool whole_line = false;  // the slice vanished identically
    int m_degree = -1;        // degree of the slice after the m^k factor strip
    int zero_multiplicity = 0;
    int positive = 0;
    int negative = 0;
    int total_real = 0;       // distinct real roots excluding m = 0
    bool all_real_simple = false;
    std::vector<RootBox> positive_boxes;
};

PositiveRootCount count_positive_roots_in_m(const PolySequence& seq,
                                            const Rational& alpha0);

// ---- interlacing of consecutive p_l root sets in m at fixed alpha ----

struct InterlacingPair {
    int l_upper = 0;  // p_{l_upper} has one root fewer than p_{l_upper - 1}
    bool ok = false;
    std::string detail;
};

struct InterlacingReport {
    bool ok = false;
    std::vector<InterlacingPair> pairs;
};

// Checks that the roots of p_l strictly separate the roots of p_{l-1} for
// l = l_from .. l_to + 1 (descending), at fixed alpha inside the counting
// region. Exact: shared roots are detected by gcd before comparing boxes.
InterlacingReport check_interlacing(const PolySequence& seq, const Rational& alpha0,
                                    int l_from, int l_to);

// ---- root structure in alpha near m = 0 ----

struct NearZeroSlice {
    Rational m;
    std::vector<RootBox> bounded;          // roots inside the ladder window
    std::vector<Rational> exact_found;     // exact structural roots present
    int outside_count = 0;                 // roots escaping the window
    bool alternation_ok = false;           // even d: strict alternation with ladder
};

struct NearZeroReport {
    Subcase sc;
    int d = 0;
    int lambda = 0;
    Rational delta;
    std::vector<Rational> ladder;          // m = 0 ladder the roots are tracked against
    std::vector<Rational> expected_exact;  // structural lines expected in every slice
    Rational window_lo, window_hi;
    NearZeroSlice plus, minus;
    int expected_bounded = 0;
    bool counts_ok = false;
    bool exacts_ok = false;
    bool alternation_ok = false;           // trivially true for odd d
};

NearZeroReport near_zero_m_roots(Subcase sc, int d, int lambda, const Rational& delta);

// ---- large-m drift of the alpha-roots toward the rescaled-limit ladder ----

struct AsymptotePairing {
    Rational target;
    RootBox box;
    Rational dist_lo, dist_hi;  // exact interval bounds on |root - target|
};

struct AsymptoteReport {
    Subcase sc;
    int d = 0;
    int lambda = 0;
    Rational big_m;
    bool line_divides = false;      // S4: (alpha - (d+1)/2) divides the condition
    bool paired_all = false;        // every target matched exactly one root
    std::vector<AsymptotePairing> pairs;
    Rational max_dist_lo, max_dist_hi;

    bool all_within(const Rational& tol) const;
};

// S2 and S4 only. Strips the structural factor (alpha for S2, the exact line
// for S4) and pairs each remaining root at m = big_m with its limit target.
AsymptoteReport large_m_asymptotes(Subcase sc, int d, int lambda, const Rational& big_m);

// ---- curve scan of the condition zero set over an m grid ----

struct CurvePoint {
    Rational m;
    bool whole_line = false;  // the alpha-slice vanished identically
    std::vector<RootBox> roots;
};

struct CurveScan {
    Subcase sc;
    int d = 0;
    int lambda = 0;
    ConditionKind kind = ConditionKind::Full;
    Rational eps;
    std::vector<CurvePoint> points;
};

CurveScan scan_curve(const PolySequence& seq, const Rational& m_lo,
                     const Rational& m_hi, const Rational& m_step,
                     const Rational& eps, ConditionKind kind, int threads = 1);

// Exact strict-alternation test of two disjoint sorted value/box sets;
// used for ladder interlacing. Counts may differ by at most one.
bool strict_alternation(const std::vector<RootBox>& roots,
                        const std::vector<Rational>& ladder);

}  // namespace diracint
