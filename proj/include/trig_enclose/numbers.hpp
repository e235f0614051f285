#ifndef TRIG_ENCLOSE_NUMBERS_HPP
#define TRIG_ENCLOSE_NUMBERS_HPP

#include <gmpxx.h>

#include <string>

namespace trig_enclose {

// Exact integer and rational types.  Rat is always canonical (positive
// denominator, reduced) after gmpxx arithmetic.
using Int = mpz_class;
using Rat = mpq_class;

Int binomial(unsigned long n, unsigned long k);
Int factorial(unsigned long n);
Int pow2(unsigned long e);
Int int_pow(const Int& base, unsigned long e);
Rat rat_pow(const Rat& base, long e);

// num/den in lowest terms (mpq_class's two-argument constructor does not
// canonicalize on its own).
Rat make_rat(const Int& num, const Int& den);

std::string rat_to_string(const Rat& q);

} // namespace trig_enclose

#endif
