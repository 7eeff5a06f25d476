#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace produal {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// cpp_rational keeps numerator/denominator coprime with positive denominator,
// matching the stored-reduced invariant.

inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

inline Int rat_floor(const Rat& q) { return floor_div(numerator(q), denominator(q)); }

inline Int rat_ceil(const Rat& q) { return ceil_div(numerator(q), denominator(q)); }

/// Fractional part in [0, 1).
inline Rat frac_part(const Rat& q) { return q - Rat(rat_floor(q)); }

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

std::string to_string(const Int& v);
std::string to_string(const Rat& v);  // "p" or "p/q"

Int parse_int(const std::string& s);
Rat parse_rat(const std::string& s);

}  // namespace produal
