#ifndef TRIG_ENCLOSE_TESTS_CHECK_HELPERS_HPP
#define TRIG_ENCLOSE_TESTS_CHECK_HELPERS_HPP

#include "trig_enclose/interval.hpp"

namespace testutil {

using trig_enclose::BigFloat;
using trig_enclose::Interval;

// Two enclosures of the same real number must intersect.
inline bool overlaps(const Interval& a, const Interval& b) {
    return a.lo() <= b.hi() && b.lo() <= a.hi();
}

// |v - literal| <= tol, for decimal spot literals of limited accuracy.
inline bool close_to(const Interval& v, const char* literal, const char* tol) {
    const auto prec = v.precision();
    Interval ref = Interval::point(BigFloat::from_string(literal, prec));
    return (v - ref).abs().hi() <= BigFloat::from_string(tol, prec);
}

} // namespace testutil

#endif
