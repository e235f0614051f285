#ifndef TRIG_ENCLOSE_INTERVAL_HPP
#define TRIG_ENCLOSE_INTERVAL_HPP

#include <string>

#include "trig_enclose/bigfloat.hpp"
#include "trig_enclose/numbers.hpp"

namespace trig_enclose {

// Closed interval [lo, hi] certifying containment of a real value.
// Every arithmetic operation rounds lo down and hi up, so composition of
// Interval operations yields rigorous enclosures, never heuristics.
class Interval {
public:
    explicit Interval(Prec prec = 64); // [0, 0]
    Interval(BigFloat lo, BigFloat hi);

    static Interval zero(Prec prec) { return Interval(prec); }
    static Interval point(const BigFloat& x);
    static Interval from_long(long v, Prec prec);
    static Interval from_rat(const Rat& q, Prec prec);
    static Interval from_int(const Int& n, Prec prec);
    // [-mag, +mag]; mag must be >= 0.
    static Interval pm(const BigFloat& mag);
    // [0, mag] or [mag, 0] depending on the sign of mag.
    static Interval zero_to(const BigFloat& mag);

    Prec precision() const { return lo_.precision() > hi_.precision() ? lo_.precision() : hi_.precision(); }
    const BigFloat& lo() const { return lo_; }
    const BigFloat& hi() const { return hi_; }

    bool is_point() const { return cmp(lo_, hi_) == 0; }
    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
    bool strictly_positive() const { return lo_.sign() > 0; }
    bool strictly_negative() const { return hi_.sign() < 0; }
    bool contains(const BigFloat& x) const { return lo_ <= x && x <= hi_; }
    bool contains(const Interval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
    bool contains_rat(const Rat& q) const;

    BigFloat mid() const;   // rounded to nearest
    BigFloat width() const; // hi - lo, rounded up
    BigFloat mag() const;   // max(|lo|, |hi|), rounded up

    Interval operator-() const;
    Interval operator+(const Interval& b) const;
    Interval operator-(const Interval& b) const;
    Interval operator*(const Interval& b) const;
    // b must not contain zero.
    Interval operator/(const Interval& b) const;
    Interval& operator+=(const Interval& b);
    Interval& operator-=(const Interval& b);
    Interval& operator*=(const Interval& b);

    Interval abs() const;
    Interval recip() const;  // argument must not contain zero
    Interval sqrt() const;   // lo must be >= 0
    Interval cbrt() const;
    Interval pow_int(long e) const; // 0 not in interval when e < 0
    Interval mul_2exp(long e) const; // exact scaling by 2^e

    static Interval hull(const Interval& a, const Interval& b);
    // Intersection; the intervals must overlap.
    static Interval meet(const Interval& a, const Interval& b);

    // Outward rounding to a (usually smaller) precision.
    Interval rounded_to(Prec prec) const;

    std::string to_string(std::size_t digits = 20) const;

private:
    BigFloat lo_, hi_;
};

// Certified enclosures of the basis constants, cached per precision.
Interval const_pi(Prec prec);
Interval const_ln2(Prec prec);   // sum_{k>=1} 1/(k 2^k), tail certified
Interval const_zeta3(Prec prec); // Apery's alternating central-binomial series

// Point evaluations of elementary functions: the argument is a single
// representable number, both roundings of MPFR's correctly-rounded result
// give a rigorous enclosure regardless of monotonicity.
Interval pt_sin(const BigFloat& x, Prec prec);
Interval pt_cos(const BigFloat& x, Prec prec);
Interval pt_tan(const BigFloat& x, Prec prec);
Interval pt_sec(const BigFloat& x, Prec prec);
Interval pt_csc(const BigFloat& x, Prec prec);
Interval pt_cot(const BigFloat& x, Prec prec);
Interval pt_tanh(const BigFloat& x, Prec prec);

// Interval-argument versions.  Valid only on a monotone stretch of the
// function; each checks its required range against the pi enclosure and
// falls back to point evaluation for degenerate intervals.
Interval iv_sin(const Interval& x);   // requires x within [-pi/2, pi/2]
Interval iv_cos(const Interval& x);   // requires x within [0, pi]
Interval iv_tan(const Interval& x);   // requires x within (-pi/2, pi/2)
Interval iv_sec(const Interval& x);   // requires x within [0, pi/2)
Interval iv_cot(const Interval& x);   // requires x within (0, pi)
Interval iv_csc(const Interval& x);   // requires x within (0, pi/2]
Interval iv_tanh(const Interval& x);

} // namespace trig_enclose

#endif
