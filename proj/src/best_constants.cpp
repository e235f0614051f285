#include "trig_enclose/best_constants.hpp"

#include <map>
#include <mutex>

#include "trig_enclose/errors.hpp"
#include "trig_enclose/exact_numbers.hpp"
#include "trig_enclose/polygamma.hpp"
#include "trig_enclose/series.hpp"
#include "trig_enclose/zeta_sums.hpp"

namespace trig_enclose {

namespace {

void require_order(unsigned long N, unsigned long lo, const char* op) {
    if (N < lo) throw RejectedInput(std::string(op) + ": order too small");
    if (2 * N + 6 > kMaxIndex) throw RejectedInput(std::string(op) + ": order too large");
}

BigFloat series_tol(Prec prec) { return BigFloat::pow2(-(static_cast<long>(prec) / 2 + 16), prec); }

// sum_{k>=1} 1/(k^a (4k^2-1)^2); (4k^2-1)^2 >= 9 k^4
SeriesRule mu_series_rule(unsigned long a) {
    SeriesRule r;
    r.name = "mu-series-a" + std::to_string(a);
    r.term = [a](const Int& k, Prec p) {
        Int d = 4 * k * k - 1;
        return Interval::from_rat(make_rat(1, int_pow(k, a) * d * d), p);
    };
    r.envelope_c = Rat(1, 9);
    r.envelope_p = static_cast<int>(a) + 4;
    return r;
}

// sum_{k>=1} (sign pattern) 1/(k^{2N} (2k+c)), c in {-1,+1}
SeriesRule b_series_rule(unsigned long twoN, int c, bool alternating) {
    SeriesRule r;
    r.name = std::string("b-series-") + (alternating ? "alt-" : "") +
             (c < 0 ? "minus" : "plus") + std::to_string(twoN);
    r.alternating = alternating;
    r.term = [twoN, c](const Int& k, Prec p) {
        return Interval::from_rat(make_rat(1, int_pow(k, twoN) * (2 * k + c)), p);
    };
    r.envelope_c = 1; // 2k+c >= k for k >= 1
    r.envelope_p = static_cast<int>(twoN) + 1;
    return r;
}

// sum_{k>=2} 1/((2k-1)^{2N} k (k-1));  (2k-1)^{2N} k(k-1) >= k^{2N+2}/2
SeriesRule m1_series_rule(unsigned long twoN) {
    SeriesRule r;
    r.name = "papenfuss-M1-" + std::to_string(twoN);
    r.first_k = 2;
    r.term = [twoN](const Int& k, Prec p) {
        return Interval::from_rat(make_rat(1, int_pow(2 * k - 1, twoN) * k * (k - 1)), p);
    };
    r.envelope_c = 2;
    r.envelope_p = static_cast<int>(twoN) + 2;
    r.envelope_from = 2;
    return r;
}

// sum_{k>=2} 1/((2k-1)^{2N} k^2 (k-1)^2)
SeriesRule m2_series_rule(unsigned long twoN) {
    SeriesRule r;
    r.name = "papenfuss-M2-" + std::to_string(twoN);
    r.first_k = 2;
    r.term = [twoN](const Int& k, Prec p) {
        Int kk = k * (k - 1);
        return Interval::from_rat(make_rat(1, int_pow(2 * k - 1, twoN) * kk * kk), p);
    };
    r.envelope_c = 4;
    r.envelope_p = static_cast<int>(twoN) + 4;
    r.envelope_from = 2;
    return r;
}

std::mutex g_series_mutex;
std::map<std::pair<std::string, Prec>, Interval> g_series_cache;

Interval cached_sum(const SeriesRule& rule, Prec prec) {
    {
        std::lock_guard<std::mutex> lock(g_series_mutex);
        auto it = g_series_cache.find({rule.name, prec});
        if (it != g_series_cache.end()) return it->second;
    }
    Interval v = brute_force_sum(rule, prec, series_tol(prec)).value;
    std::lock_guard<std::mutex> lock(g_series_mutex);
    g_series_cache.emplace(std::make_pair(rule.name, prec), v);
    return v;
}

ConstantValue exact_rational_value(const Rat& r, Prec prec) {
    ConstantValue v;
    v.value = Interval::from_rat(r, prec);
    v.exact = ExactForm::rational(r);
    v.exactness = Exactness::exact_rational;
    return v;
}

ConstantValue pi_form_value(const ExactForm& f, Prec prec) {
    ConstantValue v;
    v.value = f.eval(prec);
    v.exact = f;
    v.exactness = Exactness::pi_closed_form;
    return v;
}

} // namespace

std::optional<ExactForm> mu_closed_form(unsigned long N) {
    if (N == 1) // 4(pi^2-8)/pi^4
        return (ExactForm::pi_power(1, 2) + ExactForm::rational(-8)).scaled_pi(4, -4);
    if (N == 2) // 8(-720+90pi^2-pi^4)/(45 pi^6)
        return (ExactForm::rational(-720) + ExactForm::pi_power(90, 2) +
                ExactForm::pi_power(-1, 4))
            .scaled_pi(Rat(8, 45), -6);
    return std::nullopt;
}

std::optional<ExactForm> b_closed_form(unsigned long N) {
    if (N == 1) // 16(pi-3)/pi^4
        return (ExactForm::pi_power(1, 1) + ExactForm::rational(-3)).scaled_pi(16, -4);
    if (N == 2) // (960 pi - pi^4 - 2880)/(15 pi^6)
        return (ExactForm::pi_power(960, 1) + ExactForm::pi_power(-1, 4) +
                ExactForm::rational(-2880))
            .scaled_pi(Rat(1, 15), -6);
    return std::nullopt;
}

std::optional<ExactForm> alpha_closed_form(unsigned long N) {
    if (N == 0) return ExactForm::rational(Rat(2, 45));
    if (N == 1) // 2(pi^4-90)/(45 pi^4)
        return (ExactForm::pi_power(1, 4) + ExactForm::rational(-90)).scaled_pi(Rat(2, 45), -4);
    return std::nullopt;
}

std::optional<ExactForm> beta_closed_form(unsigned long N) {
    if (N == 0) return mu_closed_form(1);
    if (N == 1) // 4(9 pi^2 - 88)/(9 pi^4)
        return (ExactForm::pi_power(9, 2) + ExactForm::rational(-88)).scaled_pi(Rat(4, 9), -4);
    return std::nullopt;
}

SharpConstantPair wilker_lambda_mu(unsigned long N, Prec prec) {
    require_order(N, 1, "wilker_lambda_mu");
    SharpConstantPair out;
    out.inequality_id = "wilker.sharp";
    out.order = N;
    out.lower = exact_rational_value(series_coefficient(FunctionId::wilker, N), prec);

    const Prec wp = prec + 16;
    Interval first = cached_sum(mu_series_rule(2 * N - 2), wp);
    Interval mu = Interval::from_long(64 * static_cast<long>(N), wp) * first;
    if (N > 1) {
        Interval second = cached_sum(mu_series_rule(2 * N), wp);
        mu -= Interval::from_long(16 * (static_cast<long>(N) - 1), wp) * second;
    }
    mu = mu * const_pi(wp).pow_int(-(2 * static_cast<int>(N) + 2));
    out.upper.value = mu.rounded_to(prec);
    out.upper.exactness = Exactness::series_evaluated;
    out.upper.exact = mu_closed_form(N);
    if (out.upper.exact) out.upper.exactness = Exactness::pi_closed_form;
    return out;
}

SharpConstantPair wilker_alpha_beta(unsigned long N, Prec prec) {
    require_order(N, 0, "wilker_alpha_beta");
    const Prec wp = prec + 16;
    const Interval pi4 = const_pi(wp).pow_int(4);

    SharpConstantPair out;
    out.inequality_id = "wilker.alphabeta";
    out.order = N;

    Interval alpha = polygamma(3, Rat(static_cast<long>(N) + 1), wp).value *
                     Interval::from_rat(Rat(2, 3), wp) / pi4;
    Interval beta;
    {
        Rat z = make_rat(2 * static_cast<long>(N) + 1, 2);
        Int twoN1 = Int(2 * N + 1);
        Interval psi1 = polygamma(1, z, wp).value;
        beta = (Interval::from_int(twoN1 * twoN1, wp) * psi1 -
                Interval::from_long(4 * (static_cast<long>(N) + 1), wp)) *
               Interval::from_rat(make_rat(8, twoN1 * twoN1), wp) / pi4;
    }
    out.lower.value = alpha.rounded_to(prec);
    out.lower.exact = alpha_closed_form(N);
    out.lower.exactness = out.lower.exact ? Exactness::pi_closed_form
                                          : Exactness::series_evaluated;
    out.upper.value = beta.rounded_to(prec);
    out.upper.exact = beta_closed_form(N);
    out.upper.exactness = out.upper.exact ? Exactness::pi_closed_form
                                          : Exactness::series_evaluated;
    return out;
}

Rat wilker_q(unsigned long N) {
    require_order(N, 1, "wilker_q");
    return series_coefficient(FunctionId::wilker, N);
}

SharpConstantPair huygens_a_b(unsigned long N, Prec prec) {
    require_order(N, 1, "huygens_a_b");
    SharpConstantPair out;
    out.inequality_id = "huygens.sharp";
    out.order = N;
    out.lower = exact_rational_value(series_coefficient(FunctionId::huygens, N + 1), prec);

    const Prec wp = prec + 16;
    Interval alt_minus = cached_sum(b_series_rule(2 * N, -1, true), wp);
    Interval alt_plus = cached_sum(b_series_rule(2 * N, +1, true), wp);
    Interval pos_minus = cached_sum(b_series_rule(2 * N, -1, false), wp);
    Interval pos_plus = cached_sum(b_series_rule(2 * N, +1, false), wp);
    Interval b = (Interval::from_long(8, wp) * (alt_minus - alt_plus) -
                  Interval::from_long(4, wp) * (pos_minus - pos_plus)) *
                 const_pi(wp).pow_int(-(2 * static_cast<int>(N) + 2));
    out.upper.value = b.rounded_to(prec);
    out.upper.exact = b_closed_form(N);
    out.upper.exactness = out.upper.exact ? Exactness::pi_closed_form
                                          : Exactness::series_evaluated;
    return out;
}

Rat huygens_varrho(unsigned long N) {
    require_order(N, 1, "huygens_varrho");
    return make_rat(4 * (pow2(2 * N) - 1), factorial(2 * N + 2)) * abs(bernoulli(2 * N + 2));
}

std::pair<Interval, Interval> papenfuss_L_M(unsigned long N, const BigFloat& t, Prec prec) {
    require_order(N, 1, "papenfuss_L_M");
    {
        const Interval lim = const_pi(prec) * Interval::from_rat(Rat(1, 2), prec);
        if (t.sign() <= 0 || t >= lim.lo())
            throw DomainError("papenfuss_L_M: t must lie in (0, pi/2)");
    }
    const Prec wp = prec + 16;
    const Rat tr = t.to_rat();
    const long n = static_cast<long>(N);

    // L_N(t) through the closed odd-power tails sum_{k>=2} (2k-1)^{-s}
    ExactForm tail1 = odd_zeta_even_form(N + 1) + ExactForm::rational(-1);
    ExactForm tail2 = odd_zeta_even_form(N + 2) + ExactForm::rational(-1);
    ExactForm L = tail1.scaled_pi(Rat(Int(N) * pow2(2 * N + 4)) * rat_pow(tr, 2 * n + 1),
                                  -(2 * static_cast<int>(N) + 2)) +
                  tail2.scaled_pi(Rat(pow2(2 * N + 6)) * rat_pow(tr, 2 * n + 3),
                                  -(2 * static_cast<int>(N) + 4));

    // M_N(t) via the two lattice sums
    Interval sum1 = cached_sum(m1_series_rule(2 * N), wp);
    Interval sum2 = cached_sum(m2_series_rule(2 * N), wp);
    Interval pi_m2N2 = const_pi(wp).pow_int(-(2 * static_cast<int>(N) + 2));
    Interval pi_m2N4 = const_pi(wp).pow_int(-(2 * static_cast<int>(N) + 4));
    Interval M =
        Interval::from_rat(Rat(Int(N) * pow2(2 * N + 2)) * rat_pow(tr, 2 * n + 1), wp) *
            pi_m2N2 * sum1 +
        Interval::from_rat(Rat(pow2(2 * N + 2)) * rat_pow(tr, 2 * n + 3), wp) * pi_m2N4 *
            sum2;

    return {L.eval(prec), M.rounded_to(prec)};
}

ExactForm papenfuss_P_coefficient(int i) {
    switch (i) {
        case 0: return ExactForm::pi_power(Rat(2, 3), 4);
        case 1: // 8 pi^2 (pi^2 - 10)/15
            return (ExactForm::pi_power(1, 2) + ExactForm::rational(-10))
                .scaled_pi(Rat(8, 15), 2);
        case 2: // 2(322560 + 1680 pi^4 - 672 pi^6 + 17 pi^8)/(315 pi^4)
            return (ExactForm::rational(322560) + ExactForm::pi_power(1680, 4) +
                    ExactForm::pi_power(-672, 6) + ExactForm::pi_power(17, 8))
                .scaled_pi(Rat(2, 315), -4);
        case 3: // 16(168 - 17 pi^2)/315
            return (ExactForm::rational(168) + ExactForm::pi_power(-17, 2))
                .scaled_pi(Rat(16, 315), 0);
        case 4: // 32(17 pi^8 - 161280)/(315 pi^8)
            return (ExactForm::pi_power(17, 8) + ExactForm::rational(-161280))
                .scaled_pi(Rat(32, 315), -8);
    }
    throw RejectedInput("papenfuss_P_coefficient: index 0..4");
}

ExactForm papenfuss_Q_coefficient(int i) {
    switch (i) {
        case 0: return ExactForm::pi_power(Rat(2, 3), 4);
        case 1: // 32(156 - 6 pi^2 - pi^4)/(3 pi^2)
            return (ExactForm::rational(156) + ExactForm::pi_power(-6, 2) +
                    ExactForm::pi_power(-1, 4))
                .scaled_pi(Rat(32, 3), -2);
        case 2: // 64(-657 + 37 pi^2 + 3 pi^4)/(3 pi^4)
            return (ExactForm::rational(-657) + ExactForm::pi_power(37, 2) +
                    ExactForm::pi_power(3, 4))
                .scaled_pi(Rat(64, 3), -4);
        case 3: // 512(285 - 19 pi^2 - pi^4)/(3 pi^6)
            return (ExactForm::rational(285) + ExactForm::pi_power(-19, 2) +
                    ExactForm::pi_power(-1, 4))
                .scaled_pi(Rat(512, 3), -6);
        case 4: // 512(-354 + 26 pi^2 + pi^4)/(3 pi^8)
            return (ExactForm::rational(-354) + ExactForm::pi_power(26, 2) +
                    ExactForm::pi_power(1, 4))
                .scaled_pi(Rat(512, 3), -8);
    }
    throw RejectedInput("papenfuss_Q_coefficient: index 0..4");
}

std::pair<Interval, Interval> papenfuss_PQ(const BigFloat& x, Prec prec) {
    {
        const Interval lim = const_pi(prec) * Interval::from_rat(Rat(1, 2), prec);
        if (x.sign() <= 0 || x >= lim.lo())
            throw DomainError("papenfuss_PQ: x must lie in (0, pi/2)");
    }
    const Rat xr = x.to_rat();
    ExactForm P, Q;
    for (int i = 0; i <= 4; ++i) {
        Rat xpow = rat_pow(xr, 3 + 2 * i);
        P = P + papenfuss_P_coefficient(i).scaled(xpow);
        Q = Q + papenfuss_Q_coefficient(i).scaled(xpow);
    }
    return {P.eval(prec), Q.eval(prec)};
}

SharpConstantPair sec_remainder_constants(unsigned long N, Prec prec) {
    require_order(N, 0, "sec_remainder_constants");
    SharpConstantPair out;
    out.inequality_id = "sec.remainder";
    out.order = N;
    out.lower = exact_rational_value(series_coefficient(FunctionId::sec, N), prec);
    // (2/pi)^{2N-1} = 2^{2N-1} pi^{1-2N}
    Rat coef = (N == 0) ? Rat(1, 2) : Rat(pow2(2 * N - 1));
    out.upper = pi_form_value(ExactForm::pi_power(coef, 1 - 2 * static_cast<int>(N)), prec);
    return out;
}

// ---------------------------------------------------------------------------
// Displayed rational bound registry

namespace {

enum class BoundDenom { pi2_minus_4x2, pi2_plus_4x2 };

struct RationalBound {
    std::vector<std::pair<unsigned, ExactForm>> numerator; // (x power, coefficient)
    BoundDenom denom;
    bool is_upper;
};

const std::map<std::string, RationalBound>& bound_registry() {
    using EF = ExactForm;
    static const std::map<std::string, RationalBound> table = [] {
        std::map<std::string, RationalBound> t;
        const EF pi2 = EF::pi_power(1, 2);
        t["becker-stark.lower"] = {{{0, EF::rational(8)}}, BoundDenom::pi2_minus_4x2, false};
        t["becker-stark.upper"] = {{{0, pi2}}, BoundDenom::pi2_minus_4x2, true};
        t["banjac.lower"] = {{{0, pi2},
                              {2, EF::pi_power(Rat(1, 3), 2) + EF::rational(-4)},
                              {4, EF::pi_power(Rat(1, 18), 2) + EF::rational(Rat(-2, 3))}},
                             BoundDenom::pi2_minus_4x2,
                             false};
        t["banjac.upper"] = {{{0, pi2},
                              {2, EF::pi_power(Rat(-1, 16), 2)},
                              {4, EF::rational(Rat(1, 2))},
                              {6, EF::pi_power(-1, -2)}},
                             BoundDenom::pi2_minus_4x2,
                             true};
        t["chen.tan.N1.lower"] = {{{0, pi2},
                                   {2, EF::pi_power(Rat(1, 3), 2) + EF::rational(-4)},
                                   {4, EF::pi_power(128, -4) + EF::rational(Rat(-4, 3))}},
                                  BoundDenom::pi2_minus_4x2,
                                  false};
        t["chen.tan.N1.upper"] = {{{0, pi2},
                                   {2, EF::pi_power(72, -2) + EF::rational(-8)},
                                   {4, EF::pi_power(16, -2) + EF::pi_power(-160, -4)}},
                                  BoundDenom::pi2_minus_4x2,
                                  true};
        t["chen.tanh.N1N2.lower"] = {{{0, pi2},
                                      {2, EF::rational(4) + EF::pi_power(Rat(-1, 3), 2)},
                                      {4, EF::rational(Rat(-4, 3)) + EF::pi_power(128, -4)}},
                                     BoundDenom::pi2_plus_4x2,
                                     false};
        t["chen.tanh.N1N2.upper"] = {{{0, pi2},
                                      {2, EF::rational(4) + EF::pi_power(Rat(-1, 3), 2)},
                                      {4, EF::rational(Rat(-4, 3)) + EF::pi_power(Rat(2, 15), 2)},
                                      {6, EF::rational(Rat(8, 15)) + EF::pi_power(-512, -6)}},
                                     BoundDenom::pi2_plus_4x2,
                                     true};
        t["chen-sandor.sec.lower"] = {{{0, pi2}}, BoundDenom::pi2_minus_4x2, false};
        t["chen-sandor.sec.upper"] = {{{0, EF::pi_power(4, 1)}}, BoundDenom::pi2_minus_4x2, true};
        t["chen.sec.N1.lower"] = {{{0, pi2},
                                   {2, EF::pi_power(28, -1) + EF::rational(-8)},
                                   {4, EF::pi_power(-48, -3) + EF::pi_power(16, -2)}},
                                  BoundDenom::pi2_minus_4x2,
                                  false};
        t["chen.sec.N1.upper"] = {{{0, pi2},
                                   {2, EF::pi_power(Rat(1, 2), 2) + EF::rational(-4)},
                                   {4, EF::rational(-2) + EF::pi_power(64, -3)}},
                                  BoundDenom::pi2_minus_4x2,
                                  true};
        return t;
    }();
    return table;
}

} // namespace

std::vector<std::string> rational_bound_ids() {
    std::vector<std::string> ids;
    for (const auto& [id, entry] : bound_registry()) ids.push_back(id);
    return ids;
}

bool rational_bound_is_upper(const std::string& bound_id) {
    auto it = bound_registry().find(bound_id);
    if (it == bound_registry().end())
        throw RejectedInput("unknown bound id '" + bound_id + "'");
    return it->second.is_upper;
}

Interval rational_bound(const std::string& bound_id, const Interval& x, Prec prec) {
    auto it = bound_registry().find(bound_id);
    if (it == bound_registry().end())
        throw RejectedInput("unknown bound id '" + bound_id + "'");
    const RationalBound& b = it->second;
    const Prec wp = prec + 16;

    Interval num(wp);
    for (const auto& [pw, form] : b.numerator)
        num += form.eval(wp) * x.pow_int(static_cast<long>(pw));
    Interval x2 = x.pow_int(2).mul_2exp(2); // 4x^2
    Interval pi2 = const_pi(wp).pow_int(2);
    Interval den = (b.denom == BoundDenom::pi2_minus_4x2) ? pi2 - x2 : pi2 + x2;
    if (!den.strictly_positive())
        throw DomainError("rational_bound: denominator not certainly positive");
    return (num / den).rounded_to(prec);
}

} // namespace trig_enclose
