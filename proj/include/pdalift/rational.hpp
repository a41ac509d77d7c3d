#pragma once

#include <cstdint>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pdalift {

// Exact integer fraction. Kept reduced with a positive denominator so that
// equality is plain member comparison. Magnitudes in this project stay well
// inside 64 bits (subpacketizations up to a few thousand).
struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational of(long long n, long long d) {
        if (d == 0) throw std::invalid_argument("Rational: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const long long g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        return Rational{n, d};
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    // Decimal form with `sig` significant digits, e.g. "0.1875", "13".
    std::string decimal(int sig = 12) const {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.*g", sig, to_double());
        return buf;
    }

    std::string fraction() const {
        return std::to_string(num) + "/" + std::to_string(den);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
};

}  // namespace pdalift
