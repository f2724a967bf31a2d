#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lmriv/bigint.hpp"
#include "lmriv/dyadic.hpp"

namespace lmriv {

// Dense univariate polynomial over arbitrary-precision integers.
// Coefficient index = power; trailing zeros stripped; zero polynomial = empty.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { strip(); }
    IntPolynomial(std::initializer_list<long> coeffs) {
        for (long v : coeffs) c_.emplace_back(v);
        strip();
    }

    static IntPolynomial constant(BigInt v) { return IntPolynomial(std::vector<BigInt>{std::move(v)}); }
    static IntPolynomial one() { return constant(1); }
    // The linear factor (x - r).
    static IntPolynomial x_minus(const BigInt &r) { return IntPolynomial(std::vector<BigInt>{-r, 1}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero poly
    const BigInt &leading() const { return c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    BigInt coeff(int power) const {
        if (power < 0 || power >= static_cast<int>(c_.size())) return 0;
        return c_[static_cast<size_t>(power)];
    }
    const std::vector<BigInt> &coeffs() const { return c_; }

    friend bool operator==(const IntPolynomial &a, const IntPolynomial &b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPolynomial &a, const IntPolynomial &b) { return a.c_ != b.c_; }

    friend IntPolynomial operator+(const IntPolynomial &a, const IntPolynomial &b);
    friend IntPolynomial operator-(const IntPolynomial &a, const IntPolynomial &b);
    friend IntPolynomial operator*(const IntPolynomial &a, const IntPolynomial &b);
    IntPolynomial operator-() const;

    IntPolynomial scaled(const BigInt &k) const;

    IntPolynomial derivative() const;

    BigInt evaluate(const BigInt &x) const;
    // Exact sign of p(t) at a dyadic point, via the homogenized integer value.
    int sign_at(const Dyadic &t) const;
    int sign_at_pos_inf() const { return c_.empty() ? 0 : c_.back().sign(); }
    int sign_at_neg_inf() const {
        if (c_.empty()) return 0;
        return degree() % 2 == 0 ? c_.back().sign() : -c_.back().sign();
    }

    // gcd of |coefficients| with the sign of the leading coefficient (0 for zero poly).
    BigInt content() const;
    IntPolynomial primitive_part() const; // positive leading coefficient

    // Space-separated exact decimal coefficients, constant term first.
    std::string to_string() const;

private:
    void strip() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<BigInt> c_;
};

enum class PolyOp { add, sub, mul };
IntPolynomial poly_arith(const IntPolynomial &p, const IntPolynomial &q, PolyOp op);

// q(x) = p(x - k), exact.
IntPolynomial taylor_shift(const IntPolynomial &p, const BigInt &k);

// Primitive gcd with positive leading coefficient (subresultant PRS).
IntPolynomial poly_gcd(const IntPolynomial &p, const IntPolynomial &q);

// Exact quotient p / q; throws if q does not divide p over the integers.
IntPolynomial divide_exact(const IntPolynomial &p, const IntPolynomial &q);

// Pseudo-remainder: lc(q)^(deg p - deg q + 1) * p = s*q + r. Returns r.
IntPolynomial pseudo_remainder(const IntPolynomial &p, const IntPolynomial &q);

// Yun decomposition of the primitive part: pairwise-coprime square-free
// factors with multiplicities; product of factor^mult = primitive_part(p).
std::vector<std::pair<IntPolynomial, int>> squarefree_decompose(const IntPolynomial &p);

} // namespace lmriv
