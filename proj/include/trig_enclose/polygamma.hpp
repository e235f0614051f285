#ifndef TRIG_ENCLOSE_POLYGAMMA_HPP
#define TRIG_ENCLOSE_POLYGAMMA_HPP

#include "trig_enclose/interval.hpp"
#include "trig_enclose/tail.hpp"

namespace trig_enclose {

struct PolygammaValue {
    int order = 1;
    Rat argument;
    Interval value{64};
    TailBound tail;
};

// psi^(m)(z) for m in {1, 3} at positive integer or half-integer z.
// Computed as an exact rational head (the recurrence shift
// psi^(m)(z) = psi^(m)(z+M) + m! sum_{i<M} (z+i)^{-m-1}) plus the asymptotic
// expansion at the shifted argument, whose remainder is enveloped by the
// first omitted term.
PolygammaValue polygamma(int m, const Rat& z, Prec prec);

// sum_{k>N} 1/k^4 = psi'''(N+1)/6
Interval tail_inverse_quartic(unsigned long N, Prec prec);

// sum_{k>N} 1/(4k^2-1)^2 = psi'(N+1/2)/8 - (N+1)/(2(2N+1)^2)
Interval tail_4k2_minus_1_sq(unsigned long N, Prec prec);

} // namespace trig_enclose

#endif
