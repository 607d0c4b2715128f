#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

namespace hexid {

// Exact reduced fraction with arbitrary-precision parts. Denominator is
// always positive and gcd(num, den) == 1; every comparison and arithmetic
// operation is exact. No floating point is involved anywhere.
class Rational {
public:
    using Int = boost::multiprecision::cpp_int;

    Rational() : num_(0), den_(1) {}
    Rational(Int n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(int n) : num_(n), den_(1) {}             // NOLINT(google-explicit-constructor)

    Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const Int g = gcd(num_ < 0 ? Int(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }
    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    // Denominators are positive, so cross-multiplication preserves order.
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const Int lhs = a.num_ * b.den_;
        const Int rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend Rational abs(const Rational& a) { return a.num_ < 0 ? -a : a; }

    // "num/den", e.g. "11/84"; whole numbers keep their "/1".
    std::string to_fraction_string() const;

    // Fixed-point decimal with the given number of places, rounded
    // half-to-even. Display only; never feeds back into arithmetic.
    std::string to_decimal_string(int places) const;

private:
    Int num_;
    Int den_;
};

}  // namespace hexid
