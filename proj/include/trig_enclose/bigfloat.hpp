#ifndef TRIG_ENCLOSE_BIGFLOAT_HPP
#define TRIG_ENCLOSE_BIGFLOAT_HPP

#include <mpfr.h>

#include <string>

#include "trig_enclose/numbers.hpp"

namespace trig_enclose {

using Prec = mpfr_prec_t;

// Arbitrary-precision binary float with an explicit precision in bits.
// A thin RAII wrapper over mpfr_t; rounding direction is chosen per call.
class BigFloat {
public:
    explicit BigFloat(Prec prec = 64);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    static BigFloat from_double(double d, Prec prec);
    static BigFloat from_long(long v, Prec prec);
    static BigFloat from_rat(const Rat& q, Prec prec, mpfr_rnd_t rnd);
    static BigFloat from_string(const std::string& s, Prec prec,
                                mpfr_rnd_t rnd = MPFR_RNDN);
    // 2^e, exact.
    static BigFloat pow2(long e, Prec prec);

    Prec precision() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // Exact rational value; the value must be finite.
    Rat to_rat() const;
    // Scientific-notation decimal string with the given significant digits.
    std::string to_decimal(std::size_t digits) const;

private:
    mpfr_t v_;
};

int cmp(const BigFloat& a, const BigFloat& b);
bool operator<(const BigFloat& a, const BigFloat& b);
bool operator<=(const BigFloat& a, const BigFloat& b);
bool operator>(const BigFloat& a, const BigFloat& b);
bool operator>=(const BigFloat& a, const BigFloat& b);
bool operator==(const BigFloat& a, const BigFloat& b);

} // namespace trig_enclose

#endif
