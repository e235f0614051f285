#ifndef TRIG_ENCLOSE_BEST_CONSTANTS_HPP
#define TRIG_ENCLOSE_BEST_CONSTANTS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trig_enclose/exact_form.hpp"
#include "trig_enclose/interval.hpp"

namespace trig_enclose {

enum class Exactness { exact_rational, pi_closed_form, series_evaluated };

struct ConstantValue {
    Interval value{64};
    std::optional<ExactForm> exact;
    Exactness exactness = Exactness::series_evaluated;
};

struct SharpConstantPair {
    std::string inequality_id;
    unsigned long order = 0;
    ConstantValue lower;
    ConstantValue upper;
};

// lambda_N = N 2^{2N+3}|B_{2N+2}|/(2N+2)!  (exact rational);
// mu_N by its two defining series with certified tails.
SharpConstantPair wilker_lambda_mu(unsigned long N, Prec prec);

// alpha_N = 2 psi'''(N+1)/(3 pi^4),
// beta_N  = 8((2N+1)^2 psi'(N+1/2) - 4(N+1))/((2N+1)^2 pi^4).
SharpConstantPair wilker_alpha_beta(unsigned long N, Prec prec);

// p_N = 0 and q_N = lambda_N, exactly.
Rat wilker_q(unsigned long N);

// a_N = (2^{2N+2}-4)|B_{2N+2}|/(2N+2)! (exact);  b_N by four series.
SharpConstantPair huygens_a_b(unsigned long N, Prec prec);

// rho_N = 0 and varrho_N = 4(2^{2N}-1)|B_{2N+2}|/(2N+2)!, exactly.
Rat huygens_varrho(unsigned long N);

// The two polynomial-in-t envelopes around the kappa_N split; the second
// components use the lattice sums over 1/((2k-1)^{2N} k(k-1)) shapes.
std::pair<Interval, Interval> papenfuss_L_M(unsigned long N, const BigFloat& t, Prec prec);

// Numerators P(x), Q(x) of the fifth-order sec2tan bounds (denominator
// (pi^2-4x^2)^2 applied by the caller).
std::pair<Interval, Interval> papenfuss_PQ(const BigFloat& x, Prec prec);
ExactForm papenfuss_P_coefficient(int i); // i = 0..4 for x^{3,5,7,9,11}
ExactForm papenfuss_Q_coefficient(int i);

// lower = |E_{2N}|/(2N)! exact, upper = (2/pi)^{2N-1} in pi-power form.
SharpConstantPair sec_remainder_constants(unsigned long N, Prec prec);

// Registry of displayed rational bound functions (tan x/x, tanh t/t, sec t).
std::vector<std::string> rational_bound_ids();
Interval rational_bound(const std::string& bound_id, const Interval& x, Prec prec);
// lower/upper orientation of a registered bound
bool rational_bound_is_upper(const std::string& bound_id);

// Closed forms known for the small orders (oracle duty and display).
std::optional<ExactForm> mu_closed_form(unsigned long N);    // N in {1, 2}
std::optional<ExactForm> b_closed_form(unsigned long N);     // N in {1, 2}
std::optional<ExactForm> alpha_closed_form(unsigned long N); // N in {0, 1}
std::optional<ExactForm> beta_closed_form(unsigned long N);  // N in {0, 1}

} // namespace trig_enclose

#endif
