#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace mwps {

// Exact rational number on int64 numerator / positive int64 denominator.
// All intermediates go through __int128; results that do not fit back into
// int64 after gcd reduction throw EvalError. Equation constants and corpus
// values are small, so the headroom is ample in practice.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {}  // NOLINT: implicit by design
    Rational(long long num, long long den);

    // Parses "42", "-3.25", "0.01". No thousands separators here; callers
    // normalize those away first.
    static Rational from_decimal(std::string_view text);
    static Rational from_double(double value);  // exact binary expansion when it fits

    long long num() const noexcept { return num_; }
    long long den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return den_ == 1; }
    bool is_negative() const noexcept { return num_ < 0; }

    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

    // "p" for integers, "p/q" otherwise. Stable formatting, used in
    // canonical structural keys.
    std::string to_string() const;

    Rational operator-() const;
    Rational operator+(const Rational& other) const;
    Rational operator-(const Rational& other) const;
    Rational operator*(const Rational& other) const;
    Rational operator/(const Rational& other) const;  // EvalError on zero divisor

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& other) const noexcept {
        return num_ == other.num_ && den_ == other.den_;
    }
    bool operator!=(const Rational& other) const noexcept { return !(*this == other); }
    bool operator<(const Rational& other) const noexcept;
    bool operator>(const Rational& other) const noexcept { return other < *this; }
    bool operator<=(const Rational& other) const noexcept { return !(other < *this); }
    bool operator>=(const Rational& other) const noexcept { return !(*this < other); }

    Rational reciprocal() const;  // EvalError on zero
    Rational abs() const;

private:
    static Rational reduce(__int128 num, __int128 den);

    long long num_;
    long long den_;  // always > 0
};

}  // namespace mwps
