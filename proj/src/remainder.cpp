#include "trig_enclose/remainder.hpp"

#include <algorithm>
#include <stdexcept>

#include "trig_enclose/errors.hpp"
#include "trig_enclose/zeta_sums.hpp"

namespace trig_enclose {

namespace {

// One remainder-series shape:
//
//   sum_{k>=1} sgn_k / (b(k)^a * (pi^2 b(k)^2 - c)^e)
//
// with base b(k) = 2k-1 (odd) or k (natural), a >= -1, e in {1, 2}, c an
// exact rational (4t^2 for the pi/2-pole family, -4t^2 for tanh, t^2 for the
// pi-pole family), and sgn_k = 1 throughout or (-1)^{k+1}.
//
// The head k <= K is summed term by term; for k > K the pole factor is
// expanded geometrically in q_k = c/(pi^2 b(k)^2):
//
//   1/(1-q)   = sum_{m<M} q^m       + q^M/(1-q)
//   1/(1-q)^2 = sum_{m<M} (m+1) q^m + q^M((M+1) - M q)/(1-q)^2
//
// so layer m contributes c^m pi^{-2m-2e} (times m+1 when e = 2) multiplied
// by the closed-form zeta tail sum_{k>K} sgn_k b^{-(a+2e+2m)} of the
// matching Bernoulli/Euler family.  K is chosen so |q_{K+1}| is at most a
// threshold that keeps the layer count inside the Bernoulli index budget.
struct SplitShape {
    bool odd_base = true;
    bool alternating = false;
    long a = 0;
    int e = 1;
    Rat c;
};

struct SplitOutcome {
    Interval value{64};   // the series sum itself, no prefactor
    unsigned long terms = 0;
    BigFloat tail{64};    // bound on the discarded geometric leftover
};

Interval family_tail(const SplitShape& s, unsigned long pow, unsigned long K, Prec wp) {
    if (s.odd_base)
        return s.alternating ? tail_alt_odd_pow(pow, K, wp) : tail_odd_pow(pow, K, wp);
    return s.alternating ? tail_alt_even_pow(pow, K, wp) : tail_even_pow(pow, K, wp);
}

Int base_at(const SplitShape& s, unsigned long k) {
    return s.odd_base ? Int(2 * k - 1) : Int(k);
}

Interval pow_of_int(const Int& b, long e, Prec wp) {
    if (e >= 0) return Interval::from_int(int_pow(b, static_cast<unsigned long>(e)), wp);
    return Interval::from_int(int_pow(b, static_cast<unsigned long>(-e)), wp).recip();
}

SplitOutcome split_sum(const SplitShape& shape, Prec prec, const BigFloat& width_target) {
    const Prec wp = prec + 32;
    const Interval pi2 = const_pi(wp).pow_int(2);
    const Interval pi_inv2 = pi2.recip();
    const Interval c_iv = Interval::from_rat(shape.c, wp);

    // Threshold on |q|: 2^-qexp.  Layer count is about (prec/2 + 16)/qexp;
    // keep it near 200 so the zeta-family exponents stay within the
    // Bernoulli/Euler index budget.
    const unsigned long budget = (kMaxIndex - 16 -
                                  static_cast<unsigned long>(shape.a > 0 ? shape.a : 0)) / 2;
    unsigned long qexp = (static_cast<unsigned long>(prec) / 2 + 48) / std::min<unsigned long>(budget, 200) + 2;
    BigFloat q_threshold = BigFloat::pow2(-static_cast<long>(qexp), wp);

    unsigned long K = 2;
    BigFloat q_mag(wp);
    while (true) {
        Interval b2 = Interval::from_int(int_pow(base_at(shape, K + 1), 2), wp);
        q_mag = (c_iv / (pi2 * b2)).mag();
        if (q_mag <= q_threshold) break;
        K *= 2;
        if (K > 2000000)
            throw BudgetError("split_sum: cannot drive q below threshold", q_mag.to_decimal(8));
    }

    // head: k <= K with exact integer bases
    Interval head(wp);
    for (unsigned long k = 1; k <= K; ++k) {
        Int b = base_at(shape, k);
        Interval den = pi2 * Interval::from_int(b * b, wp) - c_iv;
        if (!den.strictly_positive())
            throw DomainError("split_sum: pole denominator not certainly positive");
        if (shape.e == 2) den = den.pow_int(2);
        Interval term = den.recip() * pow_of_int(b, -shape.a, wp);
        const bool negative = shape.alternating && (k % 2 == 0);
        head += negative ? -term : term;
    }

    const Interval one_minus_q =
        Interval::from_long(1, wp) - Interval::point(q_mag);

    Interval layers(wp);
    Interval c_pow = Interval::from_long(1, wp);
    Interval pi_fac = shape.e == 1 ? pi_inv2 : pi_inv2.pow_int(2);
    const Interval pi_fac_e = pi_fac;
    unsigned long M = 0;
    BigFloat tail_bound(wp);
    while (true) {
        // geometric leftover after M layers, summed over k > K:
        //   positive series:    |q|^M/(1-|q|)^e * (M+1 if e=2)
        //                         * pi^{-2e} * sum_{k>K} b^{-(a+2e)}
        //   alternating (e=1):  magnitude of the first leftover term,
        //                       |q|^M/(1-|q|) * pi^{-2} * b(K+1)^{-(a+2)}
        // (the leftover terms alternate with decreasing magnitudes).
        BigFloat qpow(wp);
        mpfr_pow_ui(qpow.raw(), q_mag.raw(), static_cast<unsigned long>(M), MPFR_RNDU);
        Interval factor = Interval::point(qpow) / one_minus_q;
        if (shape.e == 2)
            factor = factor * Interval::from_long(static_cast<long>(M + 1), wp) / one_minus_q;
        Interval scale(wp);
        if (shape.alternating) {
            scale = pi_fac_e * pow_of_int(base_at(shape, K + 1), -(shape.a + 2 * shape.e), wp);
        } else {
            // a + 2e is even and >= 2 for every positive shape in scope
            unsigned long pow = static_cast<unsigned long>(shape.a + 2 * shape.e);
            Interval abs_tail = shape.odd_base ? tail_odd_pow(pow, K, wp)
                                               : tail_even_pow(pow, K, wp);
            scale = pi_fac_e * abs_tail;
        }
        tail_bound = (factor * scale).mag();
        if (tail_bound <= width_target) break;

        unsigned long pow = static_cast<unsigned long>(shape.a + 2 * shape.e) + 2 * M;
        Interval layer = c_pow * pi_fac * family_tail(shape, pow, K, wp);
        if (shape.e == 2) layer = layer * Interval::from_long(static_cast<long>(M + 1), wp);
        layers += layer;
        c_pow *= c_iv;
        pi_fac *= pi_inv2;
        ++M;
        if (M > budget)
            throw BudgetError("split_sum: layer budget exceeded", tail_bound.to_decimal(8));
    }

    SplitOutcome out;
    out.value = head + layers + Interval::pm(tail_bound);
    out.terms = K + M;
    out.tail = tail_bound;
    return out;
}

struct RemainderParts {
    Interval value{64};
    unsigned long terms = 0;
    BigFloat tail{64};
};

BigFloat width_target_for(Prec prec) {
    return BigFloat::pow2(-(static_cast<long>(prec) / 2 + 16), prec);
}

// prefactor = rat * pi^pipow, evaluated as an interval
Interval prefactor(const Rat& rat, long pipow, Prec wp) {
    Interval r = Interval::from_rat(rat, wp);
    if (pipow != 0) r = r * const_pi(wp).pow_int(pipow);
    return r;
}

// series width target scaled down by the prefactor magnitude, so the final
// remainder enclosure keeps an absolute width near 2^-(prec/2) even when a
// large argument inflates the monomial prefactor
BigFloat scaled_target(Prec prec, const Interval& pref) {
    BigFloat tgt = width_target_for(prec);
    BigFloat m = pref.mag();
    if (m > BigFloat::from_long(1, m.precision())) {
        BigFloat out(tgt.precision());
        mpfr_div(out.raw(), tgt.raw(), m.raw(), MPFR_RNDD);
        return out;
    }
    return tgt;
}

RemainderParts remainder_parts(FunctionId fn, unsigned long N, const BigFloat& t, Prec prec) {
    check_domain(fn, t, prec);
    if (2 * N + 8 > kMaxIndex) throw RejectedInput("remainder order too large");
    const Prec wp = prec + 32;
    const Rat tr = t.to_rat();
    const Rat t2 = tr * tr;
    const long n = static_cast<long>(N);

    RemainderParts out;
    // t = 0: every monomial prefactor with a positive power kills the series.
    const bool zero_prefactor = t.is_zero() && !(fn == FunctionId::sec && N == 0);
    if (zero_prefactor) {
        out.value = Interval::zero(prec);
        return out;
    }

    switch (fn) {
        case FunctionId::tan: {
            SplitShape s{true, false, 2 * n, 1, 4 * t2};
            Rat pref = Rat(pow2(2 * N + 3)) * rat_pow(tr, 2 * n + 1);
            Interval pf = prefactor(pref, -2 * n, wp);
            SplitOutcome sum = split_sum(s, prec, scaled_target(prec, pf));
            out.value = pf * sum.value;
            out.terms = sum.terms;
            out.tail = sum.tail;
            break;
        }
        case FunctionId::tanh: {
            SplitShape s{true, false, 2 * n, 1, -4 * t2};
            Rat pref = Rat(pow2(2 * N + 3)) * rat_pow(tr, 2 * n + 1);
            if (N % 2 == 1) pref = -pref;
            Interval pf = prefactor(pref, -2 * n, wp);
            SplitOutcome sum = split_sum(s, prec, scaled_target(prec, pf));
            out.value = pf * sum.value;
            out.terms = sum.terms;
            out.tail = sum.tail;
            break;
        }
        case FunctionId::sec: {
            SplitShape s{true, true, 2 * n - 1, 1, 4 * t2};
            Rat pref = Rat(pow2(2 * N + 2)) * rat_pow(tr, 2 * n);
            Interval pf = prefactor(pref, 1 - 2 * n, wp);
            SplitOutcome sum = split_sum(s, prec, scaled_target(prec, pf));
            out.value = pf * sum.value;
            out.terms = sum.terms;
            out.tail = sum.tail;
            break;
        }
        case FunctionId::cot: {
            // theta_N(t) = -(2 t^{2N+1}/pi^{2N}) sum 1/(k^{2N}(pi^2 k^2 - t^2))
            SplitShape s{false, false, 2 * n, 1, t2};
            Rat pref = Rat(-2) * rat_pow(tr, 2 * n + 1);
            Interval pf = prefactor(pref, -2 * n, wp);
            SplitOutcome sum = split_sum(s, prec, scaled_target(prec, pf));
            out.value = pf * sum.value;
            out.terms = sum.terms;
            out.tail = sum.tail;
            break;
        }
        case FunctionId::csc: {
            SplitShape s{false, true, 2 * n, 1, t2};
            Rat pref = Rat(2) * rat_pow(tr, 2 * n + 1);
            Interval pf = prefactor(pref, -2 * n, wp);
            SplitOutcome sum = split_sum(s, prec, scaled_target(prec, pf));
            out.value = pf * sum.value;
            out.terms = sum.terms;
            out.tail = sum.tail;
            break;
        }
        case FunctionId::sec2tan: {
            SplitShape s1{true, false, 2 * n, 1, 4 * t2};
            SplitShape s2{true, false, 2 * n, 2, 4 * t2};
            Interval part1(wp);
            unsigned long terms1 = 0;
            BigFloat tail1(wp);
            if (N > 0) {
                Rat pref1 = Rat(Int(N) * pow2(2 * N + 4)) * rat_pow(tr, 2 * n + 1);
                Interval pf1 = prefactor(pref1, -2 * n, wp);
                SplitOutcome sum1 = split_sum(s1, prec, scaled_target(prec, pf1));
                part1 = pf1 * sum1.value;
                terms1 = sum1.terms;
                tail1 = sum1.tail;
            }
            Rat pref2 = Rat(pow2(2 * N + 6)) * rat_pow(tr, 2 * n + 3);
            Interval pf2 = prefactor(pref2, -2 * n, wp);
            SplitOutcome sum2 = split_sum(s2, prec, scaled_target(prec, pf2));
            Interval part2 = pf2 * sum2.value;
            out.value = part1 + part2;
            out.terms = terms1 + sum2.terms;
            BigFloat tacc(wp);
            mpfr_add(tacc.raw(), tail1.raw(), sum2.tail.raw(), MPFR_RNDU);
            out.tail = tacc;
            break;
        }
        default:
            throw RejectedInput("remainder: unsupported function id");
    }
    return out;
}

} // namespace

Interval remainder_tan(unsigned long N, const BigFloat& t, Prec prec) {
    return remainder_parts(FunctionId::tan, N, t, prec).value;
}
Interval remainder_tanh(unsigned long N, const BigFloat& t, Prec prec) {
    return remainder_parts(FunctionId::tanh, N, t, prec).value;
}
Interval remainder_sec(unsigned long N, const BigFloat& t, Prec prec) {
    return remainder_parts(FunctionId::sec, N, t, prec).value;
}
Interval remainder_cot(unsigned long N, const BigFloat& t, Prec prec) {
    return remainder_parts(FunctionId::cot, N, t, prec).value;
}
Interval remainder_csc(unsigned long N, const BigFloat& t, Prec prec) {
    return remainder_parts(FunctionId::csc, N, t, prec).value;
}
Interval remainder_sec2tan(unsigned long N, const BigFloat& t, Prec prec) {
    return remainder_parts(FunctionId::sec2tan, N, t, prec).value;
}

Interval xi_factor(unsigned long N, const BigFloat& t, Prec prec) {
    if (t.is_zero()) throw RejectedInput("xi_factor: t must be nonzero");
    const Prec wp = prec + 32;
    const Rat t2 = t.to_rat() * t.to_rat();
    SplitShape s{true, false, static_cast<long>(2 * N), 1, -4 * t2};
    Interval g_t = split_sum(s, prec, width_target_for(prec)).value;
    // g(0) = pi^{-2} sum (2k-1)^{-(2N+2)}, exact pi-power form
    Interval g_0 = odd_zeta_even_form(N + 1).scaled_pi(1, -2).eval(wp);
    return (g_t / g_0).rounded_to(prec);
}

Rat partial_sum_exact(FunctionId fn, unsigned long N, const Rat& t) {
    Rat acc(0);
    switch (fn) {
        case FunctionId::tan:
        case FunctionId::tanh:
            for (unsigned long j = 1; j <= N; ++j)
                acc += series_coefficient(fn, j) * rat_pow(t, 2 * static_cast<long>(j) - 1);
            return acc;
        case FunctionId::sec:
            for (unsigned long j = 0; j < N; ++j)
                acc += series_coefficient(fn, j) * rat_pow(t, 2 * static_cast<long>(j));
            return acc;
        case FunctionId::cot:
        case FunctionId::csc:
            if (t == 0) throw RejectedInput("partial_sum_exact: cot/csc need t != 0");
            acc = Rat(1) / t;
            for (unsigned long j = 1; j <= N; ++j)
                acc += series_coefficient(fn, j) * rat_pow(t, 2 * static_cast<long>(j) - 1);
            return acc;
        case FunctionId::sec2tan:
            for (unsigned long j = 1; j + 1 <= N; ++j)
                acc += series_coefficient(fn, j) * rat_pow(t, 2 * static_cast<long>(j) + 1);
            return acc;
        default:
            throw RejectedInput("partial_sum_exact: unsupported function id");
    }
}

RemainderEval eval_with_enclosure(FunctionId fn, unsigned long N, const BigFloat& t,
                                  Prec prec) {
    RemainderParts parts = remainder_parts(fn, N, t, prec);
    const Rat partial = partial_sum_exact(fn, N, t.to_rat());

    RemainderEval ev;
    ev.fn = fn;
    ev.order = N;
    ev.t = t;
    ev.partial_sum = BigFloat::from_rat(partial, prec, MPFR_RNDN);
    ev.remainder = parts.value.rounded_to(prec);
    ev.value = (Interval::from_rat(partial, parts.value.precision()) + parts.value)
                   .rounded_to(prec);
    ev.terms_used = parts.terms;
    ev.tail = TailBound{parts.terms, parts.tail};
    return ev;
}

Interval fn_point(FunctionId fn, const BigFloat& t, Prec prec) {
    switch (fn) {
        case FunctionId::tan: return pt_tan(t, prec);
        case FunctionId::tanh: return pt_tanh(t, prec);
        case FunctionId::sec: return pt_sec(t, prec);
        case FunctionId::cot: return pt_cot(t, prec);
        case FunctionId::csc: return pt_csc(t, prec);
        case FunctionId::sec2tan: {
            Interval sec = pt_sec(t, prec + 8);
            Interval tan = pt_tan(t, prec + 8);
            return (Interval::point(t) * sec * sec - tan).rounded_to(prec);
        }
        default:
            throw RejectedInput("fn_point: unsupported function id");
    }
}

void check_domain(FunctionId fn, const BigFloat& t, Prec prec) {
    const Prec wp = prec > 64 ? prec : 64;
    const Interval pi = const_pi(wp);
    const Rat g(1, 1000000);
    switch (fn) {
        case FunctionId::tan:
        case FunctionId::sec: {
            // |t| < pi/2 - pi*g (domain width is pi)
            Interval lim = pi * Interval::from_rat(Rat(1, 2) - g, wp);
            if (mpfr_cmpabs(t.raw(), lim.lo().raw()) >= 0)
                throw DomainError(function_id_name(fn) +
                                  ": |t| inside the guard band of pi/2");
            return;
        }
        case FunctionId::tanh:
            if (!t.is_finite()) throw DomainError("tanh: t must be finite");
            return;
        case FunctionId::cot:
        case FunctionId::csc: {
            Interval lower = pi * Interval::from_rat(g, wp);
            Interval upper = pi * Interval::from_rat(Rat(1) - g, wp);
            if (mpfr_cmpabs(t.raw(), lower.hi().raw()) <= 0)
                throw DomainError(function_id_name(fn) + ": |t| inside the guard band of 0");
            if (mpfr_cmpabs(t.raw(), upper.lo().raw()) >= 0)
                throw DomainError(function_id_name(fn) + ": |t| inside the guard band of pi");
            return;
        }
        case FunctionId::sec2tan: {
            if (t.sign() < 0) throw DomainError("sec2tan: t must be >= 0");
            Interval lim = pi * Interval::from_rat((Rat(1) - g) / 2, wp);
            if (t >= lim.lo())
                throw DomainError("sec2tan: t inside the guard band of pi/2");
            return;
        }
        default:
            throw RejectedInput("check_domain: unsupported function id");
    }
}

} // namespace trig_enclose
