#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace cofill {

/// Exact rational over 64-bit integers. All quantities in this project
/// (normalized sizes, bound values, residuals) are small fractions, so
/// 64-bit numerator/denominator with __int128 intermediates is enough.
struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rat() = default;
    Rat(std::int64_t n) : num(n), den(1) {}
    Rat(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    static Rat from128(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("Rat: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n, b = d;
        while (b) { __int128 t = a % b; a = b; b = t; }
        if (a > 1) { n /= a; d /= a; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("Rat: overflow");
        return Rat(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return from128(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                       static_cast<__int128>(a.den) * b.den);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return from128(static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den,
                       static_cast<__int128>(a.den) * b.den);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return from128(static_cast<__int128>(a.num) * b.num,
                       static_cast<__int128>(a.den) * b.den);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw std::domain_error("Rat: division by zero");
        return from128(static_cast<__int128>(a.num) * b.den,
                       static_cast<__int128>(a.den) * b.num);
    }
    Rat operator-() const { return Rat(-num, den); }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rat& a, const Rat& b) { return a == b || a < b; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }
};

inline Rat abs(const Rat& r) { return r.num < 0 ? -r : r; }

}  // namespace cofill
