#include "lmriv/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace lmriv {

SturmChain::SturmChain(const IntPolynomial &p) {
    if (p.is_zero()) throw std::invalid_argument("SturmChain: zero polynomial");
    chain_.push_back(p.primitive_part());
    if (chain_[0].degree() == 0) return;
    chain_.push_back(chain_[0].derivative().primitive_part());
    while (chain_.back().degree() > 0) {
        const IntPolynomial &a = chain_[chain_.size() - 2];
        const IntPolynomial &b = chain_.back();
        IntPolynomial r = pseudo_remainder(a, b);
        if (r.is_zero()) break;
        // prem = lc(b)^(delta+1) * (a mod b); flip to -rem, keeping sign exact.
        int delta1 = a.degree() - b.degree() + 1;
        bool multiplier_negative = b.leading() < 0 && (delta1 % 2 == 1);
        IntPolynomial next = multiplier_negative ? r.primitive_part() : -r.primitive_part();
        chain_.push_back(std::move(next));
    }
}

namespace {
int count_variations(const std::vector<int> &signs) {
    int var = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}
} // namespace

int SturmChain::variations_at(const Dyadic &t) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto &q : chain_) signs.push_back(q.sign_at(t));
    return count_variations(signs);
}

int SturmChain::variations_at_neg_inf() const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto &q : chain_) signs.push_back(q.sign_at_neg_inf());
    return count_variations(signs);
}

int SturmChain::variations_at_pos_inf() const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto &q : chain_) signs.push_back(q.sign_at_pos_inf());
    return count_variations(signs);
}

int SturmChain::count_in(const Dyadic &lo, const Dyadic &hi) const {
    if (hi <= lo) return 0;
    return variations_at(lo) - variations_at(hi);
}

BigInt cauchy_root_bound(const IntPolynomial &p) {
    if (p.degree() < 1) return 1;
    BigInt maxc = 0;
    for (int i = 0; i < p.degree(); ++i) {
        BigInt a = boost::multiprecision::abs(p.coeff(i));
        if (a > maxc) maxc = a;
    }
    if (maxc == 0) return 1;
    return 1 + ceil_div(maxc, boost::multiprecision::abs(p.leading()));
}

void IsolatedRoot::refine_once() {
    if (is_exact()) return;
    Dyadic mid = midpoint(interval_.lo, interval_.hi);
    int s = factor_.sign_at(mid);
    if (s == 0) {
        interval_.lo = mid;
        interval_.hi = mid;
        sign_lo_ = sign_hi_ = 0;
        return;
    }
    if (s == sign_lo_)
        interval_.lo = mid;
    else
        interval_.hi = mid;
}

void IsolatedRoot::refine_below_width(const Dyadic &max_width) {
    while (!is_exact() && interval_.width() > max_width) refine_once();
}

namespace {

struct FactorIsolation {
    const IntPolynomial &f; // square-free, primitive, positive leading coeff
    const SturmChain &chain;
    std::vector<RationalInterval> out;

    // (lo, hi]: count roots inside, split until singletons; exact hits at the
    // split point become width-0 intervals.
    void bisect(const Dyadic &lo, const Dyadic &hi, int vlo, int vhi) {
        int count = vlo - vhi;
        if (count == 0) return;
        if (count == 1) {
            out.push_back(RationalInterval{lo, hi});
            return;
        }
        Dyadic mid = midpoint(lo, hi);
        if (f.sign_at(mid) == 0) {
            out.push_back(RationalInterval{mid, mid});
            // Carve a gap around the exact root so the flanks exclude it.
            Dyadic delta = (hi - lo).half();
            while (true) {
                Dyadic a = mid - delta;
                Dyadic b = mid + delta;
                if (f.sign_at(a) != 0 && f.sign_at(b) != 0 &&
                    chain.count_in(a, b) == 1) {
                    bisect(lo, a, vlo, chain.variations_at(a));
                    bisect(b, hi, chain.variations_at(b), vhi);
                    return;
                }
                delta = delta.half();
            }
        }
        int vmid = chain.variations_at(mid);
        bisect(lo, mid, vlo, vmid);
        bisect(mid, hi, vmid, vhi);
    }
};

} // namespace

std::vector<IsolatedRoot> isolate_real_roots(const IntPolynomial &p, const Dyadic &max_width) {
    if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
    std::vector<IsolatedRoot> roots;
    for (auto &[factor, mult] : squarefree_decompose(p)) {
        IntPolynomial f = factor;
        if (f.coeff(0) == 0) {
            // x divides f exactly once (f square-free): peel off the 0 root.
            f = divide_exact(f, IntPolynomial{0, 1});
            roots.emplace_back(RationalInterval{Dyadic(0), Dyadic(0)}, mult, factor, 0, 0);
        }
        if (f.degree() < 1) continue;
        SturmChain chain(f);
        BigInt bound = cauchy_root_bound(f);
        Dyadic lo(-bound), hi(bound);
        FactorIsolation iso{f, chain, {}};
        iso.bisect(lo, hi, chain.variations_at(lo), chain.variations_at(hi));
        for (auto &iv : iso.out) {
            int slo = f.sign_at(iv.lo);
            int shi = f.sign_at(iv.hi);
            roots.emplace_back(std::move(iv), mult, factor, slo, shi);
        }
    }
    for (auto &r : roots) r.refine_below_width(max_width);
    // Roots of distinct square-free factors are distinct; make certificates
    // pairwise disjoint (shared endpoints from bisection count as overlap).
    bool again = true;
    while (again) {
        again = false;
        for (size_t i = 0; i < roots.size(); ++i)
            for (size_t j = i + 1; j < roots.size(); ++j)
                if (overlaps(roots[i].interval(), roots[j].interval())) {
                    separate(roots[i], roots[j]);
                    again = true;
                }
    }
    std::sort(roots.begin(), roots.end(), [](const IsolatedRoot &a, const IsolatedRoot &b) {
        return a.interval().lo < b.interval().lo;
    });
    return roots;
}

void separate(IsolatedRoot &a, IsolatedRoot &b) {
    while (overlaps(a.interval(), b.interval())) {
        if (a.is_exact() && b.is_exact())
            throw std::logic_error("separate: equal roots cannot be separated");
        a.refine_once();
        b.refine_once();
    }
}

} // namespace lmriv
