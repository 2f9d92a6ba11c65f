#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

#include "polydyn/errors.hpp"

namespace polydyn {

/// Exact arbitrary-precision rational, always in lowest terms with positive
/// denominator. Thin value wrapper over GMP's mpq_class that enforces the
/// canonical form on every construction path.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}                // NOLINT: implicit by design
    Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT
    Rational(long num, long den) {
        if (den == 0) throw ParameterError("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "num" or "num/den" with optional leading '-'.
    static Rational from_string(const std::string& text);

    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ + b.v_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ - b.v_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ * b.v_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw ParameterError("rational division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// Canonical text form: "n" when the denominator is 1, else "n/d".
    std::string str() const;

    double to_double() const { return v_.get_d(); }

    /// Exact integer power, k >= 0.
    Rational pow(unsigned k) const;

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

using Complex = std::complex<double>;

inline Complex to_complex(const Rational& q) { return Complex(q.to_double(), 0.0); }

/// Canonical "a+bi" rendering with %.17g parts, e.g. "0.5-0.25i".
std::string complex_str(const Complex& z);

/// %.17g rendering used everywhere a double is printed.
std::string double_str(double x);

}  // namespace polydyn
