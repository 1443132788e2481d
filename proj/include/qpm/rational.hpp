#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "qpm/error.hpp"

namespace qpm {

// Exact rational on int64 numerator / positive int64 denominator, always
// reduced. Intermediates use __int128; results that do not fit back into
// int64 throw std::overflow_error instead of wrapping. All distance values
// in this library live on tiny grids, so overflow signals a misuse, not a
// capacity plan.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t value) : num_(value), den_(1) {} // NOLINT: implicit by design

    Rational(std::int64_t num, std::int64_t den) {
        if (den == 0)
            throw input_error("rational: zero denominator");
        __int128 n = num;
        __int128 d = den;
        if (d < 0) {
            n = -n;
            d = -d;
        }
        assign_reduced(n, d);
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from_wide(wide(a.num_) * b.den_ + wide(b.num_) * a.den_,
                         wide(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from_wide(wide(a.num_) * b.den_ - wide(b.num_) * a.den_,
                         wide(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_wide(wide(a.num_) * b.num_, wide(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0)
            throw input_error("rational: division by zero");
        return from_wide(wide(a.num_) * b.den_, wide(a.den_) * b.num_);
    }
    friend Rational operator-(const Rational& a) {
        Rational r;
        r.num_ = -a.num_;
        r.den_ = a.den_;
        return r;
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    // Cross-multiplication in __int128 is always exact for int64 operands.
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return wide(a.num_) * b.den_ < wide(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // "p/q", or just "p" for integers.
    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) {
            s += '/';
            s += std::to_string(den_);
        }
        return s;
    }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // Accepts "p", "p/q", and exact decimals like "1.5" or ".25".
    static Rational parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    using wide = __int128;

    void assign_reduced(__int128 n, __int128 d) {
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        constexpr __int128 lo = std::numeric_limits<std::int64_t>::min();
        constexpr __int128 hi = std::numeric_limits<std::int64_t>::max();
        if (n < lo || n > hi || d > hi)
            throw std::overflow_error("rational: value exceeds 64-bit range");
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
    }

    static Rational from_wide(__int128 n, __int128 d) {
        Rational r;
        if (d < 0) {
            n = -n;
            d = -d;
        }
        r.assign_reduced(n, d);
        return r;
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

inline Rational Rational::parse(std::string_view text) {
    std::size_t pos = 0;
    auto fail = [&]() -> Rational {
        throw parse_error("rational: cannot parse \"" + std::string(text) + "\"");
    };

    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-'))
        ++pos;
    bool negative = !text.empty() && text[0] == '-';

    auto digits = [&](__int128& out) -> bool {
        bool any = false;
        out = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            out = out * 10 + (text[pos] - '0');
            if (out > (__int128)std::numeric_limits<std::int64_t>::max() * 1000000)
                throw std::overflow_error("rational: literal too large");
            ++pos;
            any = true;
        }
        return any;
    };

    __int128 intpart = 0;
    bool hasInt = digits(intpart);

    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        __int128 den = 0;
        if (!hasInt || !digits(den) || pos != text.size() || den == 0)
            return fail();
        Rational r;
        r.assign_reduced(negative ? -intpart : intpart, den);
        return r;
    }

    __int128 scale = 1;
    __int128 frac = 0;
    bool hasFrac = false;
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            frac = frac * 10 + (text[pos] - '0');
            scale *= 10;
            if (scale > (__int128)1000000000000000000LL)
                throw std::overflow_error("rational: too many decimal digits");
            ++pos;
            hasFrac = true;
        }
    }
    if (pos != text.size() || (!hasInt && !hasFrac))
        return fail();

    __int128 n = intpart * scale + frac;
    Rational r;
    r.assign_reduced(negative ? -n : n, scale);
    return r;
}

} // namespace qpm
