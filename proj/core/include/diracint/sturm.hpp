#pragma once

#include "diracint/poly.hpp"
#include "diracint/rational.hpp"

#include <memory>
#include <vector>

namespace diracint {

// Isolating interval for one real root. Half-open semantics: the root lies in
// (lo, hi], except exact boxes where lo == hi == the root itself.
struct RootBox {
    Rational lo, hi;
    int sign_lo = 0;  // sign of target at lo (0 only for exact boxes)
    int sign_hi = 0;
    bool exact = false;
    enum class Cert { SimpleBySturm, Unknown };
    Cert cert = Cert::Unknown;
    int multiplicity = 1;  // with respect to the isolated polynomial
    std::shared_ptr<const UniPoly> target;  // squarefree polynomial the box isolates

    Rational mid() const { return (lo + hi) / Rational(2); }
    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const {
        return exact ? x == lo : (lo < x && x <= hi);
    }
};

int sign_at(const UniPoly& p, const Rational& x);

// All real roots lie strictly inside (-bound, bound).
Rational cauchy_root_bound(const UniPoly& p);

// Sturm chain of a squarefree polynomial, kept with primitive integer
// coefficients (positive rescaling only, which preserves sign variations).
class SturmChain {
public:
    explicit SturmChain(const UniPoly& squarefree);

    int variations_at(const Rational& x) const;
    int variations_neg_inf() const;
    int variations_pos_inf() const;

    // Number of roots in (lo, hi]; endpoints must not be roots of the target.
    int count_interval(const Rational& lo, const Rational& hi) const;
    int count_all() const;

    const UniPoly& target() const { return chain_.front(); }

private:
    std::vector<UniPoly> chain_;
};

// Isolates all real roots (Yun decomposition first, so multiplicities are
// exact and every box isolates a squarefree factor). probe values are tested
// exactly and deflated before bisection, so rational roots at those points
// come back as exact boxes. Boxes are pairwise disjoint and sorted.
std::vector<RootBox> isolate_roots(const UniPoly& p);
std::vector<RootBox> isolate_roots(const UniPoly& p, const Rational& lo,
                                   const Rational& hi,
                                   const std::vector<Rational>& probes = {});

RootBox refine(RootBox box, const Rational& eps);

// Shrinks the pair until they no longer overlap; boxes for the same exact
// point both collapse to it and stay equal.
void refine_to_disjoint(RootBox& a, RootBox& b);

bool boxes_overlap(const RootBox& a, const RootBox& b);

}  // namespace diracint
