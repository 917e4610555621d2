#include "mwps/rational.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

#include "mwps/errors.hpp"

namespace mwps {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

constexpr __int128 kInt64Max = std::numeric_limits<long long>::max();
constexpr __int128 kInt64Min = std::numeric_limits<long long>::min();

}  // namespace

Rational Rational::reduce(__int128 num, __int128 den) {
    if (den == 0) {
        throw EvalError("division by zero");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) {
        return Rational();
    }
    __int128 g = gcd128(num, den);
    num /= g;
    den /= g;
    if (num > kInt64Max || num < kInt64Min || den > kInt64Max) {
        throw EvalError("rational overflow past 64-bit range");
    }
    Rational r;
    r.num_ = static_cast<long long>(num);
    r.den_ = static_cast<long long>(den);
    return r;
}

Rational::Rational(long long num, long long den) {
    *this = reduce(static_cast<__int128>(num), static_cast<__int128>(den));
}

Rational Rational::from_decimal(std::string_view text) {
    if (text.empty()) {
        throw ParseError("empty numeric literal");
    }
    bool negative = false;
    std::size_t pos = 0;
    if (text[0] == '+' || text[0] == '-') {
        negative = text[0] == '-';
        pos = 1;
    }
    __int128 value = 0;
    __int128 scale = 1;
    bool seen_digit = false;
    bool seen_dot = false;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c >= '0' && c <= '9') {
            value = value * 10 + (c - '0');
            if (seen_dot) scale *= 10;
            seen_digit = true;
            if (value > kInt64Max * 1000 || scale > kInt64Max) {
                throw ParseError("numeric literal out of range: " + std::string(text));
            }
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else {
            throw ParseError("bad numeric literal: " + std::string(text));
        }
    }
    if (!seen_digit) {
        throw ParseError("bad numeric literal: " + std::string(text));
    }
    return reduce(negative ? -value : value, scale);
}

Rational Rational::from_double(double value) {
    if (!std::isfinite(value)) {
        throw EvalError("non-finite value cannot become a rational");
    }
    if (value == std::floor(value) && std::fabs(value) < 9e15) {
        return Rational(static_cast<long long>(value));
    }
    // Binary expansion: value * 2^k for the smallest k that makes it integral.
    double scaled = value;
    __int128 den = 1;
    for (int k = 0; k < 62 && scaled != std::floor(scaled); ++k) {
        scaled *= 2;
        den *= 2;
    }
    if (scaled != std::floor(scaled) || std::fabs(scaled) > 9e17) {
        throw EvalError("double does not fit exactly into a 64-bit rational");
    }
    return reduce(static_cast<__int128>(scaled), den);
}

std::string Rational::to_string() const {
    std::string out = std::to_string(num_);
    if (den_ != 1) {
        out += "/" + std::to_string(den_);
    }
    return out;
}

Rational Rational::operator-() const {
    return reduce(-static_cast<__int128>(num_), den_);
}

Rational Rational::operator+(const Rational& o) const {
    return reduce(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                  static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return reduce(static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_,
                  static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return reduce(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) {
        throw EvalError("division by zero");
    }
    return reduce(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
}

bool Rational::operator<(const Rational& o) const noexcept {
    return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
}

Rational Rational::reciprocal() const {
    if (num_ == 0) {
        throw EvalError("division by zero");
    }
    return reduce(den_, num_);
}

Rational Rational::abs() const {
    return num_ < 0 ? -*this : *this;
}

}  // namespace mwps
