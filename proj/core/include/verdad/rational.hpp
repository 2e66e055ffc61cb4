#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace verdad {

// Small exact rational over int64, always kept in lowest terms with a
// positive denominator. Used for dimension exponents, where magnitudes
// stay tiny; overflow is a programming error and throws.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
        normalize();
    }

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return den_ == 1; }

    double as_double() const noexcept {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }
    Rational operator-() const { return Rational(-num_, den_); }

    bool operator==(const Rational& o) const noexcept {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const Rational& o) const noexcept { return !(*this == o); }
    bool operator<(const Rational& o) const noexcept {
        return num_ * o.den_ < o.num_ * den_;
    }

    // "3", "-2", "1/2", "-3/4"
    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace verdad
