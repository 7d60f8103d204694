// Exact rational arithmetic helpers used throughout the library.
// All capacity/bandwidth math is done on boost cpp_rational (arbitrary
// precision, canonical lowest terms, positive denominator); nothing in the
// core ever round-trips through floating point.

#ifndef CLUSTERCAP_RATIONAL_HPP
#define CLUSTERCAP_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace clustercap {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

// Largest integer <= r.
Int rat_floor(const Rat& r);

// Smallest integer >= r.
Int rat_ceil(const Rat& r);

// Parse "p/q", a plain integer, or a decimal such as "1.05" (-> 21/20).
// Throws std::invalid_argument on anything else.
Rat parse_rat(const std::string& text);

// "p/q" when the denominator is not 1, otherwise just "p".
std::string rat_to_string(const Rat& r);

// Fixed-point decimal rendering with `digits` fractional digits, computed by
// exact integer division (round half away from zero). Trailing zeros kept.
std::string rat_to_decimal(const Rat& r, int digits = 12);

// A rational extended with a +infinity tag.  Used for z_0, the y-sequence at
// epsilon = 0, edge capacities and cut values.  Never a sentinel number.
struct ExtRat {
    bool infinite = false;
    Rat value = 0;  // meaningful only when !infinite

    static ExtRat inf() { return ExtRat{true, 0}; }
    static ExtRat fin(Rat v) { return ExtRat{false, std::move(v)}; }

    bool operator==(const ExtRat& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
};

// Comparisons treating the tag as +infinity.
bool ext_less(const ExtRat& a, const ExtRat& b);
bool ext_geq_one(const ExtRat& a);  // a >= 1

std::string ext_to_string(const ExtRat& e);

}  // namespace clustercap

#endif
