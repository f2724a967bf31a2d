#pragma once

#include <string>

#include "lmriv/bigint.hpp"

namespace lmriv {

// Exact rational of the form num / 2^exp. All interval endpoints in the root
// machinery are dyadic so bisection and midpoints stay exact.
class Dyadic {
public:
    Dyadic() = default;
    Dyadic(BigInt num, unsigned exp = 0) : num_(std::move(num)), exp_(exp) { normalize(); }
    Dyadic(long v) : num_(v), exp_(0) {}
    Dyadic(int v) : num_(v), exp_(0) {}

    const BigInt &numerator() const { return num_; }
    unsigned exponent() const { return exp_; }

    bool is_integer() const { return exp_ == 0; }
    int sign() const { return num_.sign(); }

    friend Dyadic operator+(const Dyadic &a, const Dyadic &b) {
        unsigned e = std::max(a.exp_, b.exp_);
        return Dyadic((a.num_ << (e - a.exp_)) + (b.num_ << (e - b.exp_)), e);
    }
    friend Dyadic operator-(const Dyadic &a, const Dyadic &b) {
        unsigned e = std::max(a.exp_, b.exp_);
        return Dyadic((a.num_ << (e - a.exp_)) - (b.num_ << (e - b.exp_)), e);
    }
    Dyadic operator-() const { return Dyadic(-num_, exp_); }

    friend Dyadic midpoint(const Dyadic &a, const Dyadic &b) {
        unsigned e = std::max(a.exp_, b.exp_);
        return Dyadic((a.num_ << (e - a.exp_)) + (b.num_ << (e - b.exp_)), e + 1);
    }

    // Halve; used for shrinking tolerances.
    Dyadic half() const { return Dyadic(num_, exp_ + 1); }

    friend int compare(const Dyadic &a, const Dyadic &b) {
        unsigned e = std::max(a.exp_, b.exp_);
        BigInt la = a.num_ << (e - a.exp_);
        BigInt lb = b.num_ << (e - b.exp_);
        return la < lb ? -1 : (la == lb ? 0 : 1);
    }
    friend bool operator<(const Dyadic &a, const Dyadic &b) { return compare(a, b) < 0; }
    friend bool operator<=(const Dyadic &a, const Dyadic &b) { return compare(a, b) <= 0; }
    friend bool operator>(const Dyadic &a, const Dyadic &b) { return compare(a, b) > 0; }
    friend bool operator>=(const Dyadic &a, const Dyadic &b) { return compare(a, b) >= 0; }
    friend bool operator==(const Dyadic &a, const Dyadic &b) { return compare(a, b) == 0; }
    friend bool operator!=(const Dyadic &a, const Dyadic &b) { return compare(a, b) != 0; }

    BigInt floor() const { return floor_div_pow2(num_, exp_); }
    BigInt ceil() const { return ceil_div_pow2(num_, exp_); }

    // Exact decimal/fraction rendering: "p" when integral, "p/2^k" otherwise.
    std::string str() const {
        if (exp_ == 0) return num_.str();
        return num_.str() + "/" + (BigInt(1) << exp_).str();
    }

    double to_double() const {
        BigRat r(num_, BigInt(1) << exp_);
        return r.convert_to<double>();
    }

    BigRat to_rational() const { return BigRat(num_, BigInt(1) << exp_); }

private:
    void normalize() {
        while (exp_ > 0 && num_ != 0 && (num_ & 1) == 0) {
            num_ >>= 1;
            --exp_;
        }
        if (num_ == 0) exp_ = 0;
    }

    BigInt num_ = 0;
    unsigned exp_ = 0;
};

// Closed interval [lo, hi] with exact dyadic endpoints.
struct RationalInterval {
    Dyadic lo;
    Dyadic hi;

    Dyadic width() const { return hi - lo; }
    bool is_point() const { return lo == hi; }
    bool contains(const Dyadic &x) const { return lo <= x && x <= hi; }

    friend bool overlaps(const RationalInterval &a, const RationalInterval &b) {
        return a.lo <= b.hi && b.lo <= a.hi;
    }
};

} // namespace lmriv
