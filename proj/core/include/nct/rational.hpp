#pragma once

#include <cstdint>
#include <string>

#include "nct/checked_int.hpp"

namespace nct {

// Exact fraction with checked 128-bit numerator/denominator.
// Invariants: den > 0 and gcd(|num|, den) == 1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}

    Rational(int128 num, int128 den) : num_(num), den_(den) { normalize(); }

    // NOLINTNEXTLINE(google-explicit-constructor): integers embed naturally
    Rational(std::int64_t n) : num_(n), den_(1) {}

    int128 num() const { return num_; }
    int128 den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const {
        Rational r;
        r.num_ = checked_neg(num_);
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        int128 g = gcd128(a.den_, b.den_);
        int128 bs = b.den_ / g;
        int128 num = checked_add(checked_mul(a.num_, bs), checked_mul(b.num_, a.den_ / g));
        int128 den = checked_mul(a.den_, bs);
        return Rational(num, den);
    }

    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

    friend Rational operator*(const Rational& a, const Rational& b) {
        int128 g1 = gcd128(a.num_, b.den_);
        int128 g2 = gcd128(b.num_, a.den_);
        Rational r;
        r.num_ = checked_mul(a.num_ / g1, b.num_ / g2);
        r.den_ = checked_mul(a.den_ / g2, b.den_ / g1);
        return r;
    }

    // Multiplication by an integer scalar; the hot path in cocycle sums.
    Rational scaled(int128 k) const {
        if (k == 0 || num_ == 0) return Rational();
        int128 g = gcd128(k, den_);
        Rational r;
        r.num_ = checked_mul(num_, k / g);
        r.den_ = den_ / g;
        return r;
    }

    // Representative in [0, 1).
    Rational mod_one() const {
        Rational r;
        int128 m = num_ % den_;
        if (m < 0) m += den_;
        r.num_ = m;
        r.den_ = den_;
        // num and den stay coprime: subtracting multiples of den preserves the gcd
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    friend bool operator<(const Rational& a, const Rational& b) {
        return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
    }

    long double to_long_double() const {
        return static_cast<long double>(num_) / static_cast<long double>(den_);
    }
    double to_double() const { return static_cast<double>(to_long_double()); }

    std::string str() const {
        if (den_ == 1) return to_string(num_);
        return to_string(num_) + "/" + to_string(den_);
    }

private:
    void normalize() {
        if (den_ == 0) throw InvalidInput("rational with zero denominator");
        if (den_ < 0) {
            num_ = checked_neg(num_);
            den_ = checked_neg(den_);
        }
        int128 g = gcd128(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    int128 num_;
    int128 den_;
};

inline int128 lcm128(int128 a, int128 b) {
    if (a == 0 || b == 0) return 0;
    int128 g = gcd128(a, b);
    return checked_mul(abs128(a) / g, abs128(b));
}

}  // namespace nct
