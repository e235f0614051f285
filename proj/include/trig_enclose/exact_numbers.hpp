#ifndef TRIG_ENCLOSE_EXACT_NUMBERS_HPP
#define TRIG_ENCLOSE_EXACT_NUMBERS_HPP

#include <string>

#include "trig_enclose/exact_form.hpp"
#include "trig_enclose/numbers.hpp"

namespace trig_enclose {

// Indices above this are rejected rather than silently burning time.
inline constexpr unsigned long kMaxIndex = 512;

// Bernoulli number B_n for the generating function t/(e^t - 1):
// B_0 = 1, B_1 = -1/2, B_odd = 0 for odd n >= 3.
Rat bernoulli(unsigned long n);

// Euler number E_n (integer-valued; E_odd = 0, signs of E_{2j} alternate).
Rat euler_number(unsigned long n);

// Tangent number T_n (n >= 1): tan x = sum T_n x^{2n-1}/(2n-1)!.
Int tangent_number(unsigned long n);
// Secant number S_n = |E_{2n}|.
Int secant_number(unsigned long n);

enum class FunctionId { tan, tanh, sec, cot, csc, wilker, huygens, sec2tan };

FunctionId parse_function_id(const std::string& name);
std::string function_id_name(FunctionId id);

// Exact coefficient in the named expansion:
//   tan     -> 2^{2j}(2^{2j}-1)|B_{2j}|/(2j)!              (of t^{2j-1}, j>=1)
//   tanh    -> 2^{2j}(2^{2j}-1) B_{2j} /(2j)!  (signed)    (of t^{2j-1}, j>=1)
//   sec     -> |E_{2j}|/(2j)!                              (of t^{2j},   j>=0)
//   cot     -> -2^{2j}|B_{2j}|/(2j)!        (after the 1/t term, of t^{2j-1})
//   csc     -> (2^{2j}-2)|B_{2j}|/(2j)!     (after the 1/t term, of t^{2j-1})
//   wilker  -> j*2^{2j+3}|B_{2j+2}|/(2j+2)!                (of x^{2j+2}, j>=1)
//   huygens -> (2^{2j}-4)|B_{2j}|/(2j)!                    (of x^{2j},   j>=1)
//   sec2tan -> 2j*2^{2j+2}(2^{2j+2}-1)|B_{2j+2}|/(2j+2)!   (of t^{2j+1}, j>=1)
Rat series_coefficient(FunctionId id, unsigned long j);

// Rational multiple of a power of pi; pi enters bound formulas only as an
// explicit power so comparisons can pick their precision late.
struct PiPower {
    Rat coef;
    int pi_pow = 0;
    ExactForm form() const { return ExactForm::pi_power(coef, pi_pow); }
    Interval eval(Prec prec) const { return form().eval(prec); }
};

struct RatioBounds {
    PiPower lower;
    PiPower upper;
};

// Two-sided bound on |B_{2n}|/(2n)!:
//   2/(2 pi)^{2n}  <  |B_{2n}|/(2n)!  <  2/((2 pi)^{2n}(1 - 2^{1-2n})),  n>=1.
RatioBounds bernoulli_ratio_bounds(unsigned long n);

// Two-sided bound on |E_{2n}|/(2n)!:
//   (4^{n+1}/pi^{2n+1}) / (1 + 3^{-1-2n})  <  |E_{2n}|/(2n)!  <  4^{n+1}/pi^{2n+1}.
RatioBounds euler_ratio_bounds(unsigned long n);

} // namespace trig_enclose

#endif
