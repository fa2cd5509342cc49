#include "diracint/root_analysis.hpp"

#include "diracint/parallel.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace diracint {

namespace {

// After refine_to_disjoint, boxes are comparable; exact boxes sort first on ties.
bool box_before(const RootBox& a, const RootBox& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.exact && !b.exact);
}

// Shrinks the box until it no longer straddles x, or collapses onto it.
RootBox refine_away_from(RootBox box, const Rational& x) {
    while (!box.exact && box.contains(x)) {
        if (box.target && sign_at(*box.target, x) == 0) {
            box.lo = box.hi = x;
            box.sign_lo = box.sign_hi = 0;
            box.exact = true;
            break;
        }
        box = refine(box, box.width() / Rational(2));
    }
    return box;
}

std::pair<Rational, Rational> dist_interval(const RootBox& b, const Rational& t) {
    if (b.exact) {
        Rational d = abs(b.lo - t);
        return {d, d};
    }
    if (t <= b.lo) return {b.lo - t, b.hi - t};
    if (t >= b.hi) return {t - b.hi, t - b.lo};
    Rational upper = std::max(b.hi - t, t - b.lo);
    return {Rational(0), upper};
}

}  // namespace

PositiveRootCount count_positive_roots_in_m(const PolySequence& seq,
                                            const Rational& alpha0) {
    PositiveRootCount out;
    UniPoly slice = seq.condition_raw().eval_alpha(alpha0);
    if (slice.is_zero()) {
        out.whole_line = true;
        return out;
    }
    int low = 0;
    while (slice.coeff(low).is_zero()) ++low;
    out.zero_multiplicity = low;
    if (low > 0) slice = exact_div(slice, UniPoly::monomial(Var::m, low, Rational(1)));
    out.m_degree = *slice.degree();
    if (out.m_degree == 0) {
        out.all_real_simple = true;
        return out;
    }
    UniPoly sf = squarefree_part(slice);
    SturmChain chain(sf);
    Rational bound = cauchy_root_bound(sf) + Rational(1);
    out.positive = chain.count_interval(Rational(0), bound);
    out.negative = chain.count_interval(-bound, Rational(0));
    out.total_real = out.positive + out.negative;  // slice(0) != 0 after the strip
    out.all_real_simple =
        (*sf.degree() == out.m_degree) && (out.total_real == out.m_degree);
    out.positive_boxes = isolate_roots(slice, Rational(0), bound);
    return out;
}

InterlacingReport check_interlacing(const PolySequence& seq, const Rational& alpha0,
                                    int l_from, int l_to) {
    if (l_from > seq.degree() || l_to < 0 || l_from < l_to)
        throw std::invalid_argument("check_interlacing: need degree >= l_from >= l_to >= 0");
    InterlacingReport report;
    report.ok = true;
    for (int l = l_from; l >= l_to; --l) {
        InterlacingPair pair;
        pair.l_upper = l;
        UniPoly u = seq.p(l).eval_alpha(alpha0);
        UniPoly v = seq.p(l - 1).eval_alpha(alpha0);
        if (u.is_zero() || v.is_zero()) {
            pair.ok = false;
            pair.detail = "slice vanished identically";
        } else {
            UniPoly usf = squarefree_part(u);
            UniPoly vsf = squarefree_part(v);
            UniPoly g = poly_gcd(usf, vsf);
            if (g.degree_or(0) > 0) {
                pair.ok = false;
                pair.detail = "consecutive slices share a root";
            } else {
                std::vector<RootBox> ub =
                    (*usf.degree() > 0) ? isolate_roots(usf) : std::vector<RootBox>{};
                std::vector<RootBox> vb =
                    (*vsf.degree() > 0) ? isolate_roots(vsf) : std::vector<RootBox>{};
                for (RootBox& a : ub)
                    for (RootBox& b : vb)
                        if (boxes_overlap(a, b)) refine_to_disjoint(a, b);
                if (vb.size() != ub.size() + 1) {
                    pair.ok = false;
                    pair.detail = "root counts are not n and n+1";
                } else {
                    // merge and require the lower-index roots at both ends,
                    // alternating strictly
                    struct Tag {
                        RootBox box;
                        bool upper;
                    };
                    std::vector<Tag> merged;
                    for (const RootBox& b : ub) merged.push_back({b, true});
                    for (const RootBox& b : vb) merged.push_back({b, false});
                    std::sort(merged.begin(), merged.end(),
                              [](const Tag& x, const Tag& y) {
                                  return box_before(x.box, y.box);
                              });
                    bool ok = !merged.front().upper && !merged.back().upper;
                    for (size_t i = 0; ok && i + 1 < merged.size(); ++i)
                        if (merged[i].upper == merged[i + 1].upper) ok = false;
                    pair.ok = ok;
                    if (!ok) pair.detail = "alternation broken";
                }
            }
        }
        report.ok = report.ok && pair.ok;
        report.pairs.push_back(std::move(pair));
    }
    return report;
}

bool strict_alternation(const std::vector<RootBox>& roots,
                        const std::vector<Rational>& ladder) {
    std::vector<RootBox> rs = roots;
    for (RootBox& b : rs) {
        for (const Rational& pt : ladder) {
            b = refine_away_from(b, pt);
            if (b.exact && b.lo == pt) return false;  // coincides with a ladder point
        }
    }
    for (size_t i = 0; i < rs.size(); ++i)
        for (size_t j = i + 1; j < rs.size(); ++j)
            if (boxes_overlap(rs[i], rs[j])) refine_to_disjoint(rs[i], rs[j]);

    struct Item {
        Rational key;
        bool is_root;
    };
    std::vector<Item> items;
    for (const RootBox& b : rs) items.push_back({b.exact ? b.lo : b.hi, true});
    for (const Rational& pt : ladder) items.push_back({pt, false});
    std::sort(items.begin(), items.end(),
              [](const Item& a, const Item& b) { return a.key < b.key; });
    for (size_t i = 0; i + 1 < items.size(); ++i)
        if (items[i].is_root == items[i + 1].is_root) return false;
    return true;
}

namespace {

struct SliceRoots {
    bool whole_line = false;
    std::vector<RootBox> inside;
    std::vector<Rational> exact_found;
    int outside = 0;
};

SliceRoots classify_slice(const UniPoly& slice, const Rational& wlo, const Rational& whi,
                          const std::vector<Rational>& probes) {
    SliceRoots out;
    if (slice.is_zero()) {
        out.whole_line = true;
        return out;
    }
    if (*slice.degree() == 0) return out;
    Rational bound = cauchy_root_bound(slice) + Rational(1);
    Rational lo = std::min(-bound, wlo - Rational(1));
    Rational hi = std::max(bound, whi + Rational(1));
    std::vector<Rational> pr = probes;
    pr.push_back(wlo);
    pr.push_back(whi);
    std::vector<RootBox> boxes = isolate_roots(slice, lo, hi, pr);
    for (RootBox b : boxes) {
        b = refine_away_from(b, wlo);
        b = refine_away_from(b, whi);
        bool in;
        if (b.exact) in = (wlo <= b.lo && b.lo <= whi);
        else in = (wlo <= b.lo && b.hi <= whi);
        if (in) {
            if (b.exact) out.exact_found.push_back(b.lo);
            out.inside.push_back(b);
        } else {
            ++out.outside;
        }
    }
    return out;
}

}  // namespace

NearZeroReport near_zero_m_roots(Subcase sc, int d, int lambda, const Rational& delta) {
    if (!(delta > Rational(0)))
        throw std::invalid_argument("near_zero_m_roots: delta must be positive");
    PolySequence seq(sc, d, lambda);
    NearZeroReport rep;
    rep.sc = sc;
    rep.d = d;
    rep.lambda = lambda;
    rep.delta = delta;
    bool even = (d % 2 == 0);
    rep.ladder = even ? even_ladder(sc, d) : small_m_root_ladder(sc, d);
    rep.expected_exact = exact_alpha_lines(sc, d);
    if (even) {
        rep.expected_bounded =
            (sc == Subcase::S2 || sc == Subcase::S4) ? d / 2 + 1 : d / 2;
    } else {
        rep.expected_bounded = (d + 1) / 2;
    }

    std::vector<Rational> anchors = rep.ladder;
    anchors.insert(anchors.end(), rep.expected_exact.begin(), rep.expected_exact.end());
    rep.window_lo = *std::min_element(anchors.begin(), anchors.end()) - Rational(1);
    rep.window_hi = *std::max_element(anchors.begin(), anchors.end()) + Rational(1);

    std::vector<Rational> probes = anchors;
    BiPoly cond = seq.condition_raw();

    auto run_slice = [&](const Rational& m) {
        NearZeroSlice s;
        s.m = m;
        SliceRoots rts = classify_slice(cond.eval_m(m), rep.window_lo, rep.window_hi, probes);
        s.bounded = rts.inside;
        s.exact_found = rts.exact_found;
        s.outside_count = rts.outside;
        if (even) {
            std::vector<RootBox> cmp;
            std::vector<Rational> lad = rep.ladder;
            for (const RootBox& b : s.bounded) {
                bool drop = false;
                if (b.exact) {
                    if (sc == Subcase::S2 && b.lo == Rational(0)) drop = true;
                    if (sc == Subcase::S4 && b.lo == Rational(d + 1, 2)) drop = true;
                }
                if (!drop) cmp.push_back(b);
            }
            if (sc == Subcase::S4)
                lad.erase(std::remove(lad.begin(), lad.end(), Rational(d + 1, 2)),
                          lad.end());
            s.alternation_ok = strict_alternation(cmp, lad);
        } else {
            s.alternation_ok = true;
        }
        return s;
    };

    rep.plus = run_slice(delta);
    rep.minus = run_slice(-delta);

    auto has_all_exacts = [&](const NearZeroSlice& s) {
        for (const Rational& e : rep.expected_exact)
            if (std::find(s.exact_found.begin(), s.exact_found.end(), e) ==
                s.exact_found.end())
                return false;
        return true;
    };
    rep.counts_ok = static_cast<int>(rep.plus.bounded.size()) == rep.expected_bounded &&
                    static_cast<int>(rep.minus.bounded.size()) == rep.expected_bounded;
    rep.exacts_ok = has_all_exacts(rep.plus) && has_all_exacts(rep.minus);
    rep.alternation_ok = rep.plus.alternation_ok && rep.minus.alternation_ok;
    return rep;
}

bool AsymptoteReport::all_within(const Rational& tol) const {
    if (!paired_all) return false;
    for (const AsymptotePairing& p : pairs)
        if (p.dist_hi > tol) return false;
    return true;
}

AsymptoteReport large_m_asymptotes(Subcase sc, int d, int lambda, const Rational& big_m) {
    if (sc != Subcase::S2 && sc != Subcase::S4)
        throw std::invalid_argument("large_m_asymptotes: defined for S2 and S4 only");
    PolySequence seq(sc, d, lambda);
    AsymptoteReport rep;
    rep.sc = sc;
    rep.d = d;
    rep.lambda = lambda;
    rep.big_m = big_m;

    BiPoly cond = seq.condition_raw();
    Rational line = (sc == Subcase::S4) ? Rational(d + 1, 2) : Rational(0);
    auto quotient = cond.try_div_alpha_linear(line);
    rep.line_divides = quotient.has_value();
    if (!rep.line_divides) return rep;

    std::vector<Rational> targets = large_m_asymptote_targets(sc, d);
    UniPoly slice = quotient->eval_m(big_m);
    if (slice.is_zero() || *slice.degree() == 0) return rep;
    std::vector<RootBox> boxes = isolate_roots(slice);
    Rational eps = Rational(1, 10).pow(12);
    for (RootBox& b : boxes) b = refine(b, eps);
    rep.paired_all = boxes.size() == targets.size();
    if (!rep.paired_all) return rep;

    bool first = true;
    for (size_t i = 0; i < targets.size(); ++i) {
        AsymptotePairing p;
        p.target = targets[i];
        p.box = boxes[i];
        auto [dlo, dhi] = dist_interval(boxes[i], targets[i]);
        p.dist_lo = dlo;
        p.dist_hi = dhi;
        if (first || dlo > rep.max_dist_lo) rep.max_dist_lo = dlo;
        if (first || dhi > rep.max_dist_hi) rep.max_dist_hi = dhi;
        first = false;
        rep.pairs.push_back(std::move(p));
    }
    return rep;
}

CurveScan scan_curve(const PolySequence& seq, const Rational& m_lo,
                     const Rational& m_hi, const Rational& m_step,
                     const Rational& eps, ConditionKind kind, int threads) {
    if (!(m_step > Rational(0)))
        throw std::invalid_argument("scan_curve: m_step must be positive");
    if (!(eps > Rational(0)))
        throw std::invalid_argument("scan_curve: eps must be positive");
    CurveScan scan;
    scan.sc = seq.subcase();
    scan.d = seq.degree();
    scan.lambda = seq.lambda();
    scan.kind = kind;
    scan.eps = eps;

    std::vector<Rational> grid;
    for (Rational m = m_lo; m <= m_hi; m = m + m_step) grid.push_back(m);
    if (grid.empty()) return scan;

    BiPoly cond = seq.condition(kind);
    int d = seq.degree();
    std::vector<Rational> probes;
    for (int k = -2 * d - 2; k <= 2 * d + 2; ++k) probes.emplace_back(k, 2);

    scan.points = parallel_map<CurvePoint>(
        grid.size(), threads, [&](size_t i) {
            CurvePoint pt;
            pt.m = grid[i];
            UniPoly slice = cond.eval_m(grid[i]);
            if (slice.is_zero()) {
                pt.whole_line = true;
                return pt;
            }
            if (*slice.degree() == 0) return pt;
            Rational bound = cauchy_root_bound(slice) + Rational(1);
            pt.roots = isolate_roots(slice, -bound, bound, probes);
            for (RootBox& b : pt.roots) b = refine(b, eps);
            return pt;
        });
    return scan;
}

}  // namespace diracint
