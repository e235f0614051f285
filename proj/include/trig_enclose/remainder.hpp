#ifndef TRIG_ENCLOSE_REMAINDER_HPP
#define TRIG_ENCLOSE_REMAINDER_HPP

#include "trig_enclose/exact_numbers.hpp"
#include "trig_enclose/interval.hpp"
#include "trig_enclose/tail.hpp"

namespace trig_enclose {

// Relative guard band at each singular endpoint of an open domain.
inline constexpr double kDomainGuard = 1e-6;

struct RemainderEval {
    FunctionId fn = FunctionId::tan;
    unsigned long order = 0;
    BigFloat t{64};
    BigFloat partial_sum{64}; // exact rational partial sum, rounded once
    Interval remainder{64};
    Interval value{64}; // partial sum (exact) + remainder
    unsigned long terms_used = 0;
    TailBound tail;
};

// Series representations of the truncation remainders, evaluated with
// certified enclosures.  Orders: N >= 0 everywhere (the sec2tan two-sum form
// degenerates correctly at N = 0).
//
//  tan   t, |t| < pi/2 : sum over odd 2k-1 of 1/((2k-1)^{2N}(pi^2(2k-1)^2-4t^2))
//  tanh  t, any t      : same shape with +4t^2, alternating in N
//  sec   t, |t| < pi/2 : alternating-in-k version with (2k-1)^{2N-1}
//  cot   t, 0<|t|<pi   : natural base k, negative values on (0, pi)
//  csc   t, 0<|t|<pi   : natural base k, alternating in k
//  sec2tan, 0<=t<pi/2  : two sums, second with squared pole denominators
Interval remainder_tan(unsigned long N, const BigFloat& t, Prec prec);
Interval remainder_tanh(unsigned long N, const BigFloat& t, Prec prec);
Interval remainder_sec(unsigned long N, const BigFloat& t, Prec prec);
Interval remainder_cot(unsigned long N, const BigFloat& t, Prec prec);
Interval remainder_csc(unsigned long N, const BigFloat& t, Prec prec);
Interval remainder_sec2tan(unsigned long N, const BigFloat& t, Prec prec);

// xi(t, N) = g(t)/g(0) with g(t) = sum 1/((2k-1)^{2N}(pi^2(2k-1)^2+4t^2));
// strictly inside (0, 1) for t != 0.
Interval xi_factor(unsigned long N, const BigFloat& t, Prec prec);

// Exact rational partial sum of the named expansion at rational t
// (includes the 1/t term for cot and csc).
Rat partial_sum_exact(FunctionId fn, unsigned long N, const Rat& t);

// Partial sum + remainder with everything recorded.
RemainderEval eval_with_enclosure(FunctionId fn, unsigned long N, const BigFloat& t,
                                  Prec prec);

// Direct point evaluation of the function itself (the independent route the
// identity suite checks remainders against).
Interval fn_point(FunctionId fn, const BigFloat& t, Prec prec);

// Throws DomainError outside the guarded domain of fn.
void check_domain(FunctionId fn, const BigFloat& t, Prec prec);

} // namespace trig_enclose

#endif
