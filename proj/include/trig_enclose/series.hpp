#ifndef TRIG_ENCLOSE_SERIES_HPP
#define TRIG_ENCLOSE_SERIES_HPP

#include <functional>
#include <string>

#include "trig_enclose/interval.hpp"
#include "trig_enclose/tail.hpp"

namespace trig_enclose {

// One infinite series sum_{k>=first_k} sign_k * a_k with a_k > 0.
//   sign_k = leading_sign                      when alternating == false
//   sign_k = leading_sign * (-1)^{k-first_k}   when alternating == true
//
// term(k) must return a rigorous enclosure of a_k and accept arbitrarily
// large k (the accelerated engines sample far beyond the direct range).
//
// envelope: a_k <= envelope_c / k^envelope_p for all k >= envelope_from,
// with envelope_c exact so tail bounds stay rigorous.
//
// completely_monotone certifies that k |-> a_k extends to a completely
// monotone function on [first_k, inf); every rule in this project is a
// product of factors 1/(k-a)^m with a < first_k, which is such a function.
// The accelerated engines require the flag.
struct SeriesRule {
    std::function<Interval(const Int& k, Prec prec)> term;
    unsigned long first_k = 1;
    bool alternating = false;
    int leading_sign = 1;
    Rat envelope_c = 1;
    int envelope_p = 2;
    unsigned long envelope_from = 1;
    bool completely_monotone = true;
    std::string name;
};

struct SumOutcome {
    Interval value{64};
    TailBound tail;
    std::string method;
};

// Plain partial summation.  Positive series close with the integral
// comparison sum_{k>K} C/k^p <= C/((p-1) K^{p-1}); alternating series close
// with the first omitted term (magnitudes decrease: completely monotone).
// Throws BudgetError when max_terms cannot certify `tol`.
SumOutcome sum_direct(const SeriesRule& rule, Prec prec, const BigFloat& tol,
                      unsigned long max_terms);

// Cohen-Rodriguez Villegas-Zagier acceleration for alternating series whose
// magnitude sequence is a Hausdorff moment sequence (completely monotone).
// The methodological error is bounded by 2*a_{first}/d_n with
// d_n = ((3+sqrt 8)^n + (3-sqrt 8)^n)/2, all coefficients exact rationals.
SumOutcome sum_cvz(const SeriesRule& rule, Prec prec, const BigFloat& tol);

// Positive completely monotone series: van Wijngaarden's transform to an
// alternating series w(j) = sum_i 2^i a(2^i j), then CVZ on w.
SumOutcome sum_vw_cvz(const SeriesRule& rule, Prec prec, const BigFloat& tol);

// Oracle-grade summation: direct when the envelope says that is affordable,
// accelerated otherwise.
SumOutcome brute_force_sum(const SeriesRule& rule, Prec prec, const BigFloat& tol);

} // namespace trig_enclose

#endif
