#pragma once

#include <vector>

#include "lmriv/dyadic.hpp"
#include "lmriv/polynomial.hpp"

namespace lmriv {

// Signed remainder sequence; sign-variation differences count distinct real
// roots. Built once per polynomial, reused across many interval queries.
class SturmChain {
public:
    explicit SturmChain(const IntPolynomial &p);

    int variations_at(const Dyadic &t) const;
    int variations_at_neg_inf() const;
    int variations_at_pos_inf() const;

    // Distinct real roots in the half-open interval (lo, hi].
    int count_in(const Dyadic &lo, const Dyadic &hi) const;
    int count_all() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

private:
    std::vector<IntPolynomial> chain_;
};

// Integer B with every real root of p strictly inside (-B, B).
BigInt cauchy_root_bound(const IntPolynomial &p);

// Certificate for one distinct real root: a dyadic interval containing it and
// nothing else, the square-free factor it is a root of, and its multiplicity
// in the original polynomial. Width-0 intervals are exactly known roots.
class IsolatedRoot {
public:
    IsolatedRoot(RationalInterval interval, int multiplicity, IntPolynomial factor,
                 int sign_lo, int sign_hi)
        : interval_(std::move(interval)), multiplicity_(multiplicity),
          factor_(std::move(factor)), sign_lo_(sign_lo), sign_hi_(sign_hi) {}

    const RationalInterval &interval() const { return interval_; }
    int multiplicity() const { return multiplicity_; }
    const IntPolynomial &factor() const { return factor_; }
    bool is_exact() const { return interval_.is_point(); }
    const Dyadic &value() const { return interval_.lo; } // meaningful when exact
    Dyadic approx_midpoint() const { return midpoint(interval_.lo, interval_.hi); }

    // Halve the interval, keeping the root. Collapses to a point if the
    // bisection lands on the root exactly.
    void refine_once();
    void refine_below_width(const Dyadic &max_width);

private:
    RationalInterval interval_;
    int multiplicity_;
    IntPolynomial factor_;
    int sign_lo_, sign_hi_;
};

// One IsolatedRoot per distinct real root of p, pairwise disjoint intervals of
// width <= max_width, sorted ascending. Multiplicities from the square-free
// decomposition.
std::vector<IsolatedRoot> isolate_real_roots(const IntPolynomial &p, const Dyadic &max_width);

inline Dyadic default_root_width() { return Dyadic(BigInt(1), 30); }

// Refine a and b until their intervals are disjoint. Requires distinct roots.
void separate(IsolatedRoot &a, IsolatedRoot &b);

} // namespace lmriv
