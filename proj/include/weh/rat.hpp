#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "weh/errors.hpp"

namespace weh {

// Arbitrary-precision rational. GMP keeps the canonical-form invariant
// (gcd(num,den)=1, den>0) as long as construction goes through rat().
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw domain_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw usage_error("unparsable rational: " + s);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline double to_double(const Rat& r) { return r.get_d(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline int sgn(const Rat& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

// Scalar in Q or in the quadratic extension Q(sqrt(d)): value a + b*sqrt(d).
// d = 0 encodes a pure rational (then b = 0). A nonzero d is a small positive
// square-free integer, fixed per computation context; mixing two different
// nonzero radicands is a usage error.
class ExtScalar {
  public:
    ExtScalar() : a_(0), b_(0), d_(0) {}
    ExtScalar(const Rat& a) : a_(a), b_(0), d_(0) {}
    ExtScalar(long n) : a_(n), b_(0), d_(0) {}
    ExtScalar(const Rat& a, const Rat& b, int d) : a_(a), b_(b), d_(d) { normalize(); }

    static ExtScalar sqrt_of(int d) { return ExtScalar(Rat(0), Rat(1), d); }

    const Rat& rational_part() const { return a_; }
    const Rat& radical_part() const { return b_; }
    int radicand() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return d_ == 0; }
    bool is_one() const { return b_ == 0 && a_ == 1; }

    // a + b*sqrt(d) |-> a - b*sqrt(d); an automorphism of Q(sqrt(d)).
    ExtScalar conj() const { return ExtScalar(a_, -b_, d_); }

    // Field norm a^2 - d*b^2; multiplicative, rational.
    Rat norm() const { return a_ * a_ - Rat(d_) * b_ * b_; }

    ExtScalar operator-() const { return ExtScalar(-a_, -b_, d_); }

    ExtScalar& operator+=(const ExtScalar& o) {
        merge_radicand(o);
        a_ += o.a_;
        b_ += o.b_;
        normalize();
        return *this;
    }
    ExtScalar& operator-=(const ExtScalar& o) {
        merge_radicand(o);
        a_ -= o.a_;
        b_ -= o.b_;
        normalize();
        return *this;
    }
    ExtScalar& operator*=(const ExtScalar& o) {
        merge_radicand(o);
        // (a1 + b1 r)(a2 + b2 r) = a1 a2 + d b1 b2 + (a1 b2 + b1 a2) r
        Rat a = a_ * o.a_ + Rat(d_) * b_ * o.b_;
        Rat b = a_ * o.b_ + b_ * o.a_;
        a_ = a;
        b_ = b;
        normalize();
        return *this;
    }

    friend ExtScalar operator+(ExtScalar x, const ExtScalar& y) { return x += y; }
    friend ExtScalar operator-(ExtScalar x, const ExtScalar& y) { return x -= y; }
    friend ExtScalar operator*(ExtScalar x, const ExtScalar& y) { return x *= y; }

    friend ExtScalar operator/(const ExtScalar& x, const ExtScalar& y) {
        if (y.is_zero()) throw domain_error("division by zero scalar");
        if (y.b_ == 0) return ExtScalar(x.a_ / y.a_, x.b_ / y.a_, x.d_);
        ExtScalar num = x * y.conj();
        Rat n = y.norm();
        return ExtScalar(num.a_ / n, num.b_ / n, num.d_);
    }

    friend bool operator==(const ExtScalar& x, const ExtScalar& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
    }
    friend bool operator!=(const ExtScalar& x, const ExtScalar& y) { return !(x == y); }

    // Sign convention used to normalize factor bases: positive means a > 0,
    // or a == 0 and b > 0. Only meaningful for comparisons, not an order.
    bool canonical_positive() const { return a_ != 0 ? a_ > 0 : b_ > 0; }

    double to_double() const;
    std::string to_string() const;

    // Exact sign of a + b*sqrt(d): -1, 0 or +1.
    int sign() const {
        if (b_ == 0) return sgn(a_);
        if (a_ == 0) return sgn(b_);
        if (sgn(a_) == sgn(b_)) return sgn(a_);
        Rat nrm = a_ * a_ - Rat(d_) * b_ * b_; // sign of |a| vs |b| sqrt(d)
        return nrm > 0 ? sgn(a_) : sgn(b_);
    }

  private:
    void normalize() {
        if (b_ == 0) d_ = 0;
    }
    void merge_radicand(const ExtScalar& o) {
        if (d_ == o.d_) return;
        if (d_ == 0) {
            d_ = o.d_;
        } else if (o.d_ != 0) {
            throw usage_error("mixed radicands " + std::to_string(d_) + " and " +
                              std::to_string(o.d_));
        }
    }

    Rat a_, b_;
    int d_;
};

} // namespace weh
