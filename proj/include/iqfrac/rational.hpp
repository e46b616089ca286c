#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "iqfrac/checked.hpp"

namespace iqfrac {

// Exact rational on checked 64-bit integers. Always stored reduced with
// positive denominator, so equality is field-wise.
class Rational {
  public:
    Rational() = default;

    Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den_ < 0) {
            num_ = checked_neg(num_);
            den_ = checked_neg(den_);
        }
        const std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        const std::int64_t g = std::gcd(a.den_, b.den_);
        const std::int64_t bd = b.den_ / g;
        return Rational(checked_add(checked_mul(a.num_, bd), checked_mul(b.num_, a.den_ / g)),
                        checked_mul(a.den_, bd));
    }

    friend Rational operator-(const Rational& a, const Rational& b) {
        return a + Rational(checked_neg(b.num_), b.den_);
    }

    friend Rational operator*(const Rational& a, const Rational& b) {
        const std::int64_t g1 = std::gcd(a.num_, b.den_);
        const std::int64_t g2 = std::gcd(b.num_, a.den_);
        return Rational(checked_mul(a.num_ / g1, b.num_ / g2),
                        checked_mul(a.den_ / g2, b.den_ / g1));
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
        return a * Rational(b.den_, b.num_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    friend bool operator<(const Rational& a, const Rational& b) {
        return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
    }

    friend bool operator<=(const Rational& a, const Rational& b) { return a < b || a == b; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace iqfrac
