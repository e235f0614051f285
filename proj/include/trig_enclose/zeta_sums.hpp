#ifndef TRIG_ENCLOSE_ZETA_SUMS_HPP
#define TRIG_ENCLOSE_ZETA_SUMS_HPP

#include <string>
#include <vector>

#include "trig_enclose/exact_form.hpp"
#include "trig_enclose/series.hpp"

namespace trig_enclose {

struct ClosedFormConstant {
    std::string id;
    ExactForm exact;
    Interval numeric{64};
};

// sum_{k>=1} 1/(2k-1)^{2n} = (2^{2n}-1) pi^{2n} |B_{2n}| / (2 (2n)!)
ExactForm odd_zeta_even_form(unsigned long n);
// sum_{k>=1} 1/k^{2n} = 2^{2n-1} pi^{2n} |B_{2n}| / (2n)!
ExactForm even_zeta_form(unsigned long n);
// sum_{k>=1} (-1)^{k+1}/k^{2n} = (2^{2n-1}-1) pi^{2n} |B_{2n}| / (2n)!
ExactForm alt_even_zeta_form(unsigned long n);
// sum_{k>=1} (-1)^{k+1}/(2k-1)^{2n+1} = pi^{2n+1} |E_{2n}| / (2^{2n+1} (2n)!)
ExactForm alt_odd_sum_form(unsigned long n);

ClosedFormConstant odd_zeta_even(unsigned long n, Prec prec);
ClosedFormConstant even_zeta(unsigned long n, Prec prec);
ClosedFormConstant alt_even_zeta(unsigned long n, Prec prec);
ClosedFormConstant alt_odd_sum(unsigned long n, Prec prec);

// Closed-form tails sum_{k>K} of the four families above (full closed form
// minus the exact rational partial sum), memoized per (s, K, precision).
Interval tail_odd_pow(unsigned long s, unsigned long K, Prec prec);      // s even >= 2
Interval tail_alt_odd_pow(unsigned long s, unsigned long K, Prec prec);  // s odd  >= 1
Interval tail_even_pow(unsigned long s, unsigned long K, Prec prec);     // s even >= 2
Interval tail_alt_even_pow(unsigned long s, unsigned long K, Prec prec); // s even >= 2

// The fixed registry S1..S15 of mixed rational sums with closed forms over
// {1, pi^k, ln 2, zeta(3)}.
std::vector<std::string> sum_registry_ids();
ClosedFormConstant registry_constant(const std::string& id, Prec prec);
SeriesRule registry_rule(const std::string& id);

struct BruteResult {
    Interval value{64};
    TailBound tail;
    std::string method;
};

// Independent oracle: sums the defining series with a certified tail at or
// below `tolerance`.  Direct summation with the integral-comparison envelope
// bound when affordable, accelerated summation otherwise; throws BudgetError
// (carrying the best achieved bound) when neither certifies.
BruteResult brute_sum(const SeriesRule& rule, Prec prec, const BigFloat& tolerance);

} // namespace trig_enclose

#endif
