#pragma once

// Exact rational arithmetic for the logic core. All symbolic computation
// in the toolchain is exact; floating point only appears in emitted C
// code when the user asks for the double backend.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace reacsynth {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational; // lowest terms, positive denominator

inline Rational rat(long long n, long long d = 1) { return Rational(n, d); }

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return den(r) == 1; }

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline BigInt rat_floor(const Rational& r) { return floor_div(num(r), den(r)); }

inline BigInt rat_ceil(const Rational& r) { return -rat_floor(-r); }

// mathematical mod: result in [0, b) for b > 0
inline BigInt mod_euclid(const BigInt& a, const BigInt& b) { return a - floor_div(a, b) * b; }

inline BigInt big_gcd(BigInt a, BigInt b) { return boost::multiprecision::gcd(a, b); }

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) return 0;
    return boost::multiprecision::lcm(a, b);
}

inline std::string to_string(const Rational& r) {
    if (is_integer(r)) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

// Parses "n", "-n", "n/d" and decimal "a.b" forms.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        BigInt n(s.substr(0, slash)), d(s.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("rational with zero denominator: " + s);
        return Rational(n, d);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        bool neg = !digits.empty() && digits[0] == '-';
        BigInt n(digits.empty() || digits == "-" ? "0" : digits);
        BigInt d = 1;
        for (std::size_t i = dot + 1; i < s.size(); ++i) d *= 10;
        (void)neg;
        return Rational(n, d);
    }
    return Rational(BigInt(s));
}

inline double to_double(const Rational& r) { return static_cast<double>(r); }

} // namespace reacsynth
