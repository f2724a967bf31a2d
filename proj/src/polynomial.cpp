#include "lmriv/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace lmriv {

IntPolynomial operator+(const IntPolynomial &a, const IntPolynomial &b) {
    std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial operator-(const IntPolynomial &a, const IntPolynomial &b) {
    std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial operator*(const IntPolynomial &a, const IntPolynomial &b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<BigInt> r(c_);
    for (auto &v : r) v = -v;
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::scaled(const BigInt &k) const {
    if (k == 0) return {};
    std::vector<BigInt> r(c_);
    for (auto &v : r) v *= k;
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<BigInt> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return IntPolynomial(std::move(r));
}

BigInt IntPolynomial::evaluate(const BigInt &x) const {
    BigInt r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

int IntPolynomial::sign_at(const Dyadic &t) const {
    if (c_.empty()) return 0;
    if (t.is_integer()) return evaluate(t.numerator()).sign();
    // sign of sum c_i a^i 2^{k(d-i)} where t = a/2^k
    const BigInt &a = t.numerator();
    unsigned k = t.exponent();
    int d = degree();
    BigInt r = c_.back();
    for (int i = d - 1; i >= 0; --i) {
        r = r * a + (c_[static_cast<size_t>(i)] << (k * static_cast<unsigned>(d - i)));
    }
    return r.sign();
}

BigInt IntPolynomial::content() const {
    if (c_.empty()) return 0;
    BigInt g = 0;
    for (const auto &v : c_) g = boost::multiprecision::gcd(g, v);
    return leading() < 0 ? -g : g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (c_.empty()) return {};
    BigInt ct = content();
    std::vector<BigInt> r(c_);
    for (auto &v : r) v /= ct;
    return IntPolynomial(std::move(r));
}

std::string IntPolynomial::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ' ';
        os << c_[i].str();
    }
    return os.str();
}

IntPolynomial poly_arith(const IntPolynomial &p, const IntPolynomial &q, PolyOp op) {
    switch (op) {
        case PolyOp::add: return p + q;
        case PolyOp::sub: return p - q;
        case PolyOp::mul: return p * q;
    }
    throw std::logic_error("unreachable");
}

IntPolynomial taylor_shift(const IntPolynomial &p, const BigInt &k) {
    if (p.is_zero() || k == 0) return p;
    // Ruffini-Horner: repeated synthetic division of p(x) by (x + k) yields
    // the coefficients of p(y - k) with y = x + k, i.e. p(x - k) in x.
    std::vector<BigInt> a(p.coeffs());
    size_t n = a.size();
    for (size_t pass = 0; pass + 1 < n; ++pass) {
        for (size_t i = n - 1; i > pass; --i) a[i - 1] += -k * a[i];
    }
    return IntPolynomial(std::move(a));
}

IntPolynomial pseudo_remainder(const IntPolynomial &p, const IntPolynomial &q) {
    if (q.is_zero()) throw std::invalid_argument("pseudo_remainder: zero divisor");
    if (p.degree() < q.degree()) return p;
    std::vector<BigInt> r(p.coeffs());
    const auto &d = q.coeffs();
    const BigInt &lq = q.leading();
    int dq = q.degree();
    int dr = p.degree();
    int steps = 0;
    while (dr >= dq) {
        BigInt lead = r[static_cast<size_t>(dr)];
        for (int i = 0; i <= dr; ++i) {
            size_t si = static_cast<size_t>(i);
            r[si] *= lq;
            int j = i - (dr - dq);
            if (j >= 0 && j <= dq) r[si] -= lead * d[static_cast<size_t>(j)];
        }
        ++steps;
        --dr;
        while (dr >= 0 && r[static_cast<size_t>(dr)] == 0) --dr;
        if (dr < 0) return {};
        r.resize(static_cast<size_t>(dr) + 1);
    }
    // Contract: result equals lc(q)^(deg p - deg q + 1) * (p mod q) exactly,
    // so top up when degree dropped by more than one per elimination step.
    int want = p.degree() - dq + 1;
    if (steps < want) {
        BigInt extra = boost::multiprecision::pow(lq, static_cast<unsigned>(want - steps));
        for (auto &v : r) v *= extra;
    }
    return IntPolynomial(std::move(r));
}

IntPolynomial divide_exact(const IntPolynomial &p, const IntPolynomial &q) {
    if (q.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
    if (p.is_zero()) return {};
    if (p.degree() < q.degree()) throw std::domain_error("divide_exact: not divisible");
    std::vector<BigInt> r(p.coeffs());
    std::vector<BigInt> quot(static_cast<size_t>(p.degree() - q.degree()) + 1);
    const auto &d = q.coeffs();
    for (int i = p.degree() - q.degree(); i >= 0; --i) {
        BigInt num = r[static_cast<size_t>(i + q.degree())];
        if (num % q.leading() != 0) throw std::domain_error("divide_exact: not divisible");
        BigInt c = num / q.leading();
        quot[static_cast<size_t>(i)] = c;
        for (int j = 0; j <= q.degree(); ++j) r[static_cast<size_t>(i + j)] -= c * d[static_cast<size_t>(j)];
    }
    for (const auto &v : r)
        if (v != 0) throw std::domain_error("divide_exact: nonzero remainder");
    return IntPolynomial(std::move(quot));
}

// Subresultant PRS; keeps coefficient growth polynomial instead of exponential.
IntPolynomial poly_gcd(const IntPolynomial &p, const IntPolynomial &q) {
    if (p.is_zero() && q.is_zero()) throw std::invalid_argument("poly_gcd: both arguments zero");
    if (p.is_zero()) return q.primitive_part();
    if (q.is_zero()) return p.primitive_part();

    IntPolynomial u = p.primitive_part();
    IntPolynomial v = q.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);

    BigInt g = 1, h = 1;
    while (true) {
        int delta = u.degree() - v.degree();
        IntPolynomial r = pseudo_remainder(u, v);
        if (r.is_zero()) return v.primitive_part();
        if (r.degree() == 0) return IntPolynomial::one();
        u = v;
        BigInt divisor = g * boost::multiprecision::pow(h, static_cast<unsigned>(delta));
        {
            std::vector<BigInt> c(r.coeffs());
            for (auto &x : c) x /= divisor; // exact by subresultant theory
            v = IntPolynomial(std::move(c));
        }
        g = u.leading();
        BigInt gd = boost::multiprecision::pow(g, static_cast<unsigned>(delta));
        if (delta <= 1)
            h = gd * boost::multiprecision::pow(h, static_cast<unsigned>(1 - delta));
        else
            h = gd / boost::multiprecision::pow(h, static_cast<unsigned>(delta - 1));
    }
}

std::vector<std::pair<IntPolynomial, int>> squarefree_decompose(const IntPolynomial &p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_decompose: zero polynomial");
    std::vector<std::pair<IntPolynomial, int>> out;
    IntPolynomial f = p.primitive_part();
    if (f.degree() == 0) return out;

    // Yun's algorithm.
    IntPolynomial fp = f.derivative();
    IntPolynomial g = poly_gcd(f, fp);
    if (g.degree() == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    IntPolynomial w = divide_exact(f, g);
    IntPolynomial z = divide_exact(fp, g) - w.derivative();
    int mult = 1;
    while (w.degree() > 0) {
        IntPolynomial gi = z.is_zero() ? w.primitive_part() : poly_gcd(w, z);
        if (gi.degree() > 0) out.emplace_back(gi, mult);
        w = divide_exact(w, gi);
        if (z.is_zero()) break;
        IntPolynomial y = divide_exact(z, gi);
        z = y - w.derivative();
        ++mult;
    }
    return out;
}

} // namespace lmriv
