#include "diracint/sturm.hpp"

#include <algorithm>
#include <stdexcept>

namespace diracint {

int sign_at(const UniPoly& p, const Rational& x) { return p.eval(x).sign(); }

Rational cauchy_root_bound(const UniPoly& p) {
    if (p.is_zero()) throw std::domain_error("cauchy_root_bound: zero polynomial");
    int n = *p.degree();
    if (n == 0) return Rational(0);
    Rational lead = abs(p.leading());
    Rational maxr(0);
    for (int i = 0; i < n; ++i) {
        Rational r = abs(p.coeff(i)) / lead;
        if (r > maxr) maxr = r;
    }
    return Rational(1) + maxr;
}

namespace {

UniPoly make_primitive(const UniPoly& p) {
    if (p.is_zero()) return p;
    return p * (Rational(1) / poly_content(p));
}

int infinity_sign(const UniPoly& p, bool positive) {
    if (p.is_zero()) return 0;
    int s = p.leading().sign();
    if (!positive && (*p.degree() % 2 != 0)) s = -s;
    return s;
}

int count_variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

}  // namespace

SturmChain::SturmChain(const UniPoly& squarefree) {
    if (squarefree.is_zero()) throw std::domain_error("SturmChain: zero polynomial");
    UniPoly a = make_primitive(squarefree);
    chain_.push_back(a);
    if (*a.degree() == 0) return;
    UniPoly b = make_primitive(a.derivative());
    chain_.push_back(b);
    while (true) {
        UniPoly r = divmod(chain_[chain_.size() - 2], chain_.back()).rem;
        if (r.is_zero()) break;
        chain_.push_back(make_primitive(-r));
    }
}

int SturmChain::variations_at(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const UniPoly& p : chain_) signs.push_back(sign_at(p, x));
    return count_variations(signs);
}

int SturmChain::variations_neg_inf() const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const UniPoly& p : chain_) signs.push_back(infinity_sign(p, false));
    return count_variations(signs);
}

int SturmChain::variations_pos_inf() const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const UniPoly& p : chain_) signs.push_back(infinity_sign(p, true));
    return count_variations(signs);
}

int SturmChain::count_interval(const Rational& lo, const Rational& hi) const {
    if (!(lo < hi)) throw std::invalid_argument("count_interval: need lo < hi");
    if (sign_at(chain_.front(), lo) == 0 || sign_at(chain_.front(), hi) == 0)
        throw std::logic_error("count_interval: endpoint is a root");
    return variations_at(lo) - variations_at(hi);
}

int SturmChain::count_all() const {
    return variations_neg_inf() - variations_pos_inf();
}

namespace {

// Isolates the roots of a squarefree polynomial inside (lo, hi]. Probes are
// checked exactly and deflated first; bisection midpoints that land on a root
// are deflated as well, so every non-exact box carries a strict sign change.
std::vector<RootBox> isolate_squarefree(UniPoly f, int multiplicity,
                                        const Rational& lo, const Rational& hi,
                                        std::vector<Rational> probes) {
    std::vector<RootBox> out;
    auto emit_exact = [&](const Rational& r) {
        RootBox box;
        box.lo = box.hi = r;
        box.exact = true;
        box.cert = RootBox::Cert::SimpleBySturm;
        box.multiplicity = multiplicity;
        out.push_back(box);
    };
    auto deflate_at = [&](const Rational& r) {
        f = exact_div(f, UniPoly::from_coeffs(f.var(), {-r, Rational(1)}));
    };

    std::sort(probes.begin(), probes.end());
    probes.erase(std::unique(probes.begin(), probes.end()), probes.end());
    for (const Rational& r : probes) {
        if (lo < r && r <= hi && sign_at(f, r) == 0) {
            emit_exact(r);
            deflate_at(r);
        }
    }
    if (f.eval(lo).is_zero()) deflate_at(lo);  // lo itself is excluded from (lo, hi]
    if (f.eval(hi).is_zero()) {
        emit_exact(hi);
        deflate_at(hi);
    }

    while (*f.degree() > 0) {
        SturmChain chain(f);
        std::vector<std::pair<Rational, Rational>> stack{{lo, hi}};
        bool restarted = false;
        std::vector<RootBox> found;
        while (!stack.empty()) {
            auto [a, b] = stack.back();
            stack.pop_back();
            int n = chain.count_interval(a, b);
            if (n == 0) continue;
            if (n == 1) {
                RootBox box;
                box.lo = a;
                box.hi = b;
                box.sign_lo = sign_at(f, a);
                box.sign_hi = sign_at(f, b);
                box.exact = false;
                box.cert = RootBox::Cert::SimpleBySturm;
                box.multiplicity = multiplicity;
                found.push_back(box);
                continue;
            }
            Rational mid = (a + b) / Rational(2);
            if (sign_at(f, mid) == 0) {
                emit_exact(mid);
                deflate_at(mid);
                restarted = true;  // chain is stale, start over with deflated f
                break;
            }
            stack.push_back({a, mid});
            stack.push_back({mid, b});
        }
        if (!restarted) {
            std::shared_ptr<const UniPoly> tgt = std::make_shared<UniPoly>(f);
            for (RootBox& box : found) box.target = tgt;
            out.insert(out.end(), found.begin(), found.end());
            break;
        }
    }

    std::sort(out.begin(), out.end(),
              [](const RootBox& x, const RootBox& y) { return x.lo < y.lo; });
    return out;
}

}  // namespace

std::vector<RootBox> isolate_roots(const UniPoly& p) {
    if (p.is_zero()) throw std::domain_error("isolate_roots: zero polynomial");
    Rational b = cauchy_root_bound(p) + Rational(1);
    return isolate_roots(p, -b, b);
}

std::vector<RootBox> isolate_roots(const UniPoly& p, const Rational& lo,
                                   const Rational& hi,
                                   const std::vector<Rational>& probes) {
    if (p.is_zero()) throw std::domain_error("isolate_roots: zero polynomial");
    if (!(lo < hi)) throw std::invalid_argument("isolate_roots: need lo < hi");
    std::vector<RootBox> out;
    for (const auto& [factor, mult] : squarefree_decompose(p)) {
        std::vector<RootBox> part = isolate_squarefree(factor, mult, lo, hi, probes);
        out.insert(out.end(), part.begin(), part.end());
    }
    // roots of distinct squarefree factors are distinct; shrink overlaps away
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = i + 1; j < out.size(); ++j)
            if (boxes_overlap(out[i], out[j])) refine_to_disjoint(out[i], out[j]);
    std::sort(out.begin(), out.end(),
              [](const RootBox& x, const RootBox& y) {
                  return x.lo < y.lo || (x.lo == y.lo && x.hi < y.hi);
              });
    return out;
}

RootBox refine(RootBox box, const Rational& eps) {
    if (box.exact) return box;
    if (!box.target) throw std::logic_error("refine: box has no target polynomial");
    const UniPoly& f = *box.target;
    while (box.width() > eps) {
        Rational mid = box.mid();
        int s = sign_at(f, mid);
        if (s == 0) {
            box.lo = box.hi = mid;
            box.sign_lo = box.sign_hi = 0;
            box.exact = true;
            return box;
        }
        if (s == box.sign_lo) box.lo = mid;
        else box.hi = mid;
    }
    return box;
}

bool boxes_overlap(const RootBox& a, const RootBox& b) {
    if (a.exact && b.exact) return a.lo == b.lo;
    if (a.exact) return b.contains(a.lo);
    if (b.exact) return a.contains(b.lo);
    return a.lo < b.hi && b.lo < a.hi;
}

void refine_to_disjoint(RootBox& a, RootBox& b) {
    while (boxes_overlap(a, b)) {
        if (a.exact && b.exact) return;  // genuinely the same point
        RootBox& wider = (!a.exact && (b.exact || a.width() > b.width())) ? a : b;
        Rational w = wider.width();
        RootBox shrunk = refine(wider, w / Rational(2));
        wider = shrunk;
    }
}

}  // namespace diracint
