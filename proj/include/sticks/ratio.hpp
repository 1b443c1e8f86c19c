#pragma once

/**
 * @file ratio.hpp
 * @brief Exact rational arithmetic on arbitrary-precision integers.
 *
 * Ratios are kept in canonical form at all times: denominator positive,
 * numerator and denominator coprime, zero stored as 0/1. Equality is
 * therefore structural. Decimal rendering is exact, round-half-even at a
 * caller-chosen number of significant digits; no floating point is involved
 * anywhere in this header.
 */

#include <sticks/bigint.hpp>

#include <compare>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>

namespace sticks {

class Ratio {
public:
    Ratio() : num_(0), den_(1) {}
    Ratio(BigInt value) : num_(std::move(value)), den_(1) {}  // NOLINT: implicit by design
    Ratio(int value) : num_(value), den_(1) {}                // NOLINT
    Ratio(BigInt numerator, BigInt denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        normalize();
    }

    static Ratio reciprocal_of(const BigInt& value) { return Ratio(1, value); }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }

    Ratio operator-() const {
        Ratio r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Ratio operator+(const Ratio& rhs) const {
        return Ratio(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
    }
    Ratio operator-(const Ratio& rhs) const {
        return Ratio(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
    }
    Ratio operator*(const Ratio& rhs) const {
        return Ratio(num_ * rhs.num_, den_ * rhs.den_);
    }
    Ratio operator/(const Ratio& rhs) const {
        if (rhs.num_ == 0) throw std::domain_error("Ratio: division by zero");
        return Ratio(num_ * rhs.den_, den_ * rhs.num_);
    }

    Ratio& operator+=(const Ratio& rhs) { return *this = *this + rhs; }
    Ratio& operator-=(const Ratio& rhs) { return *this = *this - rhs; }
    Ratio& operator*=(const Ratio& rhs) { return *this = *this * rhs; }
    Ratio& operator/=(const Ratio& rhs) { return *this = *this / rhs; }

    bool operator==(const Ratio& rhs) const {
        return num_ == rhs.num_ && den_ == rhs.den_;
    }
    bool operator!=(const Ratio& rhs) const { return !(*this == rhs); }
    bool operator<(const Ratio& rhs) const { return num_ * rhs.den_ < rhs.num_ * den_; }
    bool operator<=(const Ratio& rhs) const { return num_ * rhs.den_ <= rhs.num_ * den_; }
    bool operator>(const Ratio& rhs) const { return rhs < *this; }
    bool operator>=(const Ratio& rhs) const { return rhs <= *this; }

    Ratio reciprocal() const {
        if (num_ == 0) throw std::domain_error("Ratio: reciprocal of zero");
        return Ratio(den_, num_);
    }

    /// "num/den", e.g. "1/30". Integers still carry the denominator ("1/1")
    /// so the format is uniform across a table column.
    std::string str() const { return num_.str() + "/" + den_.str(); }

    /// Exact decimal string with `digits` significant digits, rounded
    /// half-to-even. Trailing zeros are kept so every value in a column has
    /// the same precision, e.g. 1/2 -> "0.500000000000" at 12 digits.
    std::string decimal(int digits) const {
        if (digits < 1) throw std::domain_error("Ratio::decimal: digits must be >= 1");
        if (num_ == 0) return "0";
        const BigInt mag = boost::multiprecision::abs(num_);

        // e such that 10^e <= |value| < 10^(e+1)
        int e = decimal_digits(mag) - decimal_digits(den_);
        auto at_least_10e = [&](int ex) {
            return ex >= 0 ? den_ * pow10(ex) <= mag : den_ <= mag * pow10(-ex);
        };
        while (!at_least_10e(e)) --e;
        while (at_least_10e(e + 1)) ++e;

        // Scale so the rounded mantissa has exactly `digits` digits.
        const int shift = digits - 1 - e;
        const BigInt n = shift >= 0 ? mag * pow10(shift) : mag;
        const BigInt d = shift >= 0 ? den_ : den_ * pow10(-shift);
        BigInt mantissa = n / d;
        const BigInt twice_rem = (n - mantissa * d) * 2;
        if (twice_rem > d || (twice_rem == d && mantissa % 2 != 0)) ++mantissa;
        if (mantissa == pow10(digits)) {  // e.g. 0.999.. rounding up to 1.00..
            mantissa = pow10(digits - 1);
            ++e;
        }

        std::string s = mantissa.str();
        std::string out;
        if (e >= 0) {
            if (e + 1 >= static_cast<int>(s.size()))
                out = s + std::string(static_cast<size_t>(e + 1) - s.size(), '0');
            else
                out = s.substr(0, static_cast<size_t>(e + 1)) + "." +
                      s.substr(static_cast<size_t>(e + 1));
        } else {
            out = "0." + std::string(static_cast<size_t>(-e - 1), '0') + s;
        }
        return num_ < 0 ? "-" + out : out;
    }

    /// Nearest double, computed through the exact decimal renderer so the
    /// result is well-defined even when numerator and denominator are far
    /// outside double range.
    double to_double() const {
        if (num_ == 0) return 0.0;
        return std::strtod(decimal(17).c_str(), nullptr);
    }

private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("Ratio: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;  // always > 0
};

inline std::ostream& operator<<(std::ostream& os, const Ratio& r) { return os << r.str(); }

}  // namespace sticks
