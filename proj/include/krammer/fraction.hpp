#pragma once

#include <stdexcept>
#include <utility>

#include "krammer/laurent.hpp"

namespace krammer {

/// num / den over Z[q^±1, t^±1].  No gcd normal form; equality is by cross-multiplication.
class RingFraction {
public:
    RingFraction() : num_(0), den_(1) {}
    RingFraction(LaurentPoly num) : num_(std::move(num)), den_(1) {}
    RingFraction(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den))
    {
        if (den_.is_zero()) throw std::domain_error("fraction with zero denominator");
        simplify();
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    /// The Laurent polynomial this fraction equals, if it is one.
    std::optional<LaurentPoly> as_laurent() const { return divide_exact(num_, den_); }

    friend bool operator==(const RingFraction& a, const RingFraction& b)
    {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    RingFraction operator-() const { return {-num_, den_}; }

    friend RingFraction operator+(const RingFraction& a, const RingFraction& b)
    {
        if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RingFraction operator-(const RingFraction& a, const RingFraction& b) { return a + (-b); }
    friend RingFraction operator*(const RingFraction& a, const RingFraction& b)
    {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend RingFraction operator/(const RingFraction& a, const RingFraction& b)
    {
        if (b.is_zero()) throw std::domain_error("fraction division by zero");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }

private:
    LaurentPoly num_;
    LaurentPoly den_;

    // Cancels the denominator outright when it divides the numerator, and
    // otherwise strips common integer content.
    void simplify()
    {
        if (num_.is_zero()) {
            den_ = 1;
            return;
        }
        if (auto exact = divide_exact(num_, den_)) {
            num_ = std::move(*exact);
            den_ = 1;
            return;
        }
        Integer g = gcd(num_.content(), den_.content());
        if (den_.leading().coeff < 0) g = -g;
        if (g != 1) {
            num_ = num_.divided_coefficients(g);
            den_ = den_.divided_coefficients(g);
        }
    }
};

inline bool is_zero(const RingFraction& f) { return f.is_zero(); }

}  // namespace krammer
