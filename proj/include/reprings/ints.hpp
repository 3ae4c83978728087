#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace reprings {

using i64 = long long;
using i128 = __int128;

inline i64 checked_mul(i64 a, i64 b) {
    i128 p = i128(a) * i128(b);
    if (p > i128(INT64_MAX) || p < i128(INT64_MIN))
        throw std::overflow_error("integer overflow in multiplication");
    return i64(p);
}

// floor-positive remainder, result in [0, m)
inline i64 mod_pos(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

// extended gcd: returns g = gcd(a,b) >= 0 with g = x*a + y*b
inline i64 gcd_ext(i64 a, i64 b, i64& x, i64& y) {
    if (b == 0) {
        x = a < 0 ? -1 : 1;
        y = 0;
        return a < 0 ? -a : a;
    }
    i64 x1, y1;
    i64 g = gcd_ext(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

// exact rational with i64 numerator/denominator, always reduced, den > 0
struct Rat {
    i64 num = 0;
    i64 den = 1;

    Rat() = default;
    Rat(i64 n) : num(n), den(1) {}
    Rat(i64 n, i64 d) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        i64 g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    Rat operator+(const Rat& o) const {
        i64 g = std::gcd(den, o.den);
        return Rat(checked_mul(num, o.den / g) + checked_mul(o.num, den / g),
                   checked_mul(den / g, o.den));
    }
    Rat operator-(const Rat& o) const { return *this + Rat(-o.num, o.den); }
    Rat operator*(const Rat& o) const {
        i64 g1 = std::gcd(num < 0 ? -num : num, o.den);
        i64 g2 = std::gcd(o.num < 0 ? -o.num : o.num, den);
        return Rat(checked_mul(num / g1, o.num / g2), checked_mul(den / g2, o.den / g1));
    }
    Rat operator/(const Rat& o) const {
        if (o.num == 0) throw std::domain_error("division by zero rational");
        return *this * Rat(o.den, o.num);
    }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }
    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const {
        return i128(num) * o.den < i128(o.num) * den;
    }
    bool operator>(const Rat& o) const { return o < *this; }

    bool is_integer() const { return den == 1; }
    i64 as_integer() const {
        if (den != 1) throw std::domain_error("rational " + std::to_string(num) + "/" +
                                              std::to_string(den) + " is not an integer");
        return num;
    }
};

} // namespace reprings
