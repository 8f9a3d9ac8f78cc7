#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace zlab {

using Int = boost::multiprecision::cpp_int;

// Exact rational; always reduced, denominator > 0.
using Rat = boost::multiprecision::cpp_rational;

// 50-significant-digit binary float, used by the high-precision
// evaluation path and the test oracles.
using Real50 = boost::multiprecision::cpp_bin_float_50;

inline double to_double(const Rat& r) { return static_cast<double>(r); }
inline Real50 to_real50(const Rat& r) { return static_cast<Real50>(r); }

// Every finite double is a dyadic rational; the conversion is exact.
inline Rat rat_from_double(double x) { return Rat(x); }

// Parses an exact rational from text. Accepted forms:
//   "12", "-3", "4/7", "1.305", "-0.025", "2.5e-3"
// Decimal literals map to numerator/power-of-ten, e.g. "0.064" -> 8/125.
inline Rat rat_from_string(std::string_view text)
{
    auto fail = [&](const char* why) -> Rat {
        throw std::invalid_argument("bad rational '" + std::string(text) + "': " + why);
    };

    size_t lo = text.find_first_not_of(" \t");
    size_t hi = text.find_last_not_of(" \t");
    if (lo == std::string_view::npos) return fail("empty");
    std::string_view s = text.substr(lo, hi - lo + 1);

    if (size_t slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view ns = s.substr(0, slash), ds = s.substr(slash + 1);
        if (ns.empty() || ds.empty()) return fail("malformed fraction");
        for (std::string_view part : {ns, ds}) {
            size_t i = (part[0] == '+' || part[0] == '-') ? 1 : 0;
            if (i == part.size()) return fail("malformed fraction");
            for (; i < part.size(); ++i)
                if (part[i] < '0' || part[i] > '9') return fail("fraction parts must be integers");
        }
        const Int num{std::string(ns)};
        const Int den{std::string(ds)};
        if (den == 0) return fail("zero denominator");
        return Rat(num, den);
    }

    bool neg = false;
    size_t i = 0;
    if (s[0] == '+' || s[0] == '-') { neg = (s[0] == '-'); i = 1; }

    Int mantissa = 0;
    long frac_digits = 0, exponent = 0;
    bool any_digit = false, seen_dot = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c >= '0' && c <= '9') {
            mantissa = mantissa * 10 + (c - '0');
            if (seen_dot) ++frac_digits;
            any_digit = true;
        } else if (c == '.') {
            if (seen_dot) return fail("repeated '.'");
            seen_dot = true;
        } else if (c == 'e' || c == 'E') {
            if (!any_digit) return fail("exponent without mantissa");
            try {
                exponent = std::stol(std::string(s.substr(i + 1)));
            } catch (const std::exception&) {
                return fail("malformed exponent");
            }
            break;
        } else {
            return fail("unexpected character");
        }
    }
    if (!any_digit) return fail("no digits");

    Rat r(mantissa, 1);
    long p10 = exponent - frac_digits;
    Int pow10 = 1;
    for (long k = 0; k < (p10 < 0 ? -p10 : p10); ++k) pow10 *= 10;
    if (p10 >= 0) r *= Rat(pow10, 1);
    else          r /= Rat(pow10, 1);
    return neg ? Rat(-r) : r;
}

// Exact text form ("n" or "n/d"); rat_from_string round-trips it bit-identically.
inline std::string rat_to_string(const Rat& r)
{
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

} // namespace zlab
