#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace qstbc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int mod(const Int& x, const Int& m) {
    Int r = x % m;
    return r < 0 ? r + m : r;
}

// Floor of sqrt(n) when n is a perfect square, nullopt otherwise.
inline std::optional<Int> exact_isqrt(const Int& n) {
    if (n < 0) return std::nullopt;
    Int r = boost::multiprecision::sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

// sqrt(r) as a rational when r is the square of a rational, else nullopt.
// Relies on cpp_rational keeping num/den in lowest terms.
inline std::optional<Rat> exact_sqrt(const Rat& r) {
    if (r < 0) return std::nullopt;
    auto n = exact_isqrt(numerator(r));
    if (!n) return std::nullopt;
    auto d = exact_isqrt(denominator(r));
    if (!d) return std::nullopt;
    return Rat(*n, *d);
}

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline std::string rational_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

// Accepts "num" or "num/den".
inline Rat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

inline Rat rat_pow(const Rat& base, unsigned exp) {
    Rat acc(1);
    for (unsigned i = 0; i < exp; ++i) acc *= base;
    return acc;
}

}  // namespace qstbc
