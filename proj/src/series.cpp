#include "trig_enclose/series.hpp"

#include <cmath>
#include <stdexcept>

#include "trig_enclose/errors.hpp"

namespace trig_enclose {

namespace {

// Rigorous integral-comparison bound: sum_{k>K} C/k^p <= C/((p-1) K^{p-1}),
// valid for K >= envelope_from and p >= 2.  Exact rational, rounded up once.
BigFloat envelope_tail(const SeriesRule& rule, unsigned long K, Prec prec) {
    Rat t = rule.envelope_c /
            (Rat(rule.envelope_p - 1) * Rat(int_pow(Int(K), rule.envelope_p - 1)));
    return BigFloat::from_rat(t, prec, MPFR_RNDU);
}

// Smallest K with the envelope tail below tol, estimated in doubles; the
// bound actually used is recomputed exactly at the chosen K.
unsigned long direct_terms_needed(const SeriesRule& rule, const BigFloat& tol) {
    const double c = rule.envelope_c.get_d();
    const double t = tol.to_double();
    if (t <= 0) return ~0ul;
    double k;
    if (rule.alternating) {
        // first omitted term <= C/K^p
        k = std::pow(c / t, 1.0 / rule.envelope_p);
    } else {
        k = std::pow(c / ((rule.envelope_p - 1) * t), 1.0 / (rule.envelope_p - 1));
    }
    if (!std::isfinite(k) || k > 4.0e18) return ~0ul;
    unsigned long needed = static_cast<unsigned long>(k) + 2;
    if (needed < rule.envelope_from) needed = rule.envelope_from;
    if (needed < rule.first_k) needed = rule.first_k;
    return needed;
}

int sign_at(const SeriesRule& rule, unsigned long k) {
    if (!rule.alternating) return rule.leading_sign;
    return ((k - rule.first_k) % 2 == 0) ? rule.leading_sign : -rule.leading_sign;
}

// d_n = ((3+sqrt 8)^n + (3-sqrt 8)^n)/2 via d_n = 6 d_{n-1} - d_{n-2}.
Int cvz_d(unsigned n) {
    Int dm1 = 1, d = 3;
    if (n == 0) return dm1;
    for (unsigned i = 2; i <= n; ++i) {
        Int next = 6 * d - dm1;
        dm1 = d;
        d = next;
    }
    return d;
}

unsigned cvz_order(const BigFloat& mass, const BigFloat& tol) {
    // smallest n with 2*mass/d_n <= tol, plus a little slack
    BigFloat need(mass.precision());
    mpfr_div(need.raw(), mass.raw(), tol.raw(), MPFR_RNDU);
    mpfr_mul_2ui(need.raw(), need.raw(), 2, MPFR_RNDU);
    Int dm1 = 1, d = 3;
    unsigned n = 1;
    while (mpfr_cmp_z(need.raw(), d.get_mpz_t()) > 0) {
        Int next = 6 * d - dm1;
        dm1 = d;
        d = next;
        ++n;
        if (n > 4096) throw BudgetError("cvz order exceeded 4096", need.to_decimal(8));
    }
    return n + 2;
}

} // namespace

SumOutcome sum_direct(const SeriesRule& rule, Prec prec, const BigFloat& tol,
                      unsigned long max_terms) {
    const Prec wp = prec + 32;
    const unsigned long needed = direct_terms_needed(rule, tol);
    if (needed == ~0ul || needed - rule.first_k + 1 > max_terms) {
        unsigned long K = rule.first_k + max_terms - 1;
        if (K < rule.envelope_from) K = rule.envelope_from;
        throw BudgetError("sum_direct(" + rule.name + "): cannot certify tolerance within " +
                              std::to_string(max_terms) + " terms",
                          envelope_tail(rule, K, wp).to_decimal(8));
    }

    Interval acc(wp);
    BigFloat prev_mag(wp);
    for (unsigned long k = rule.first_k; k <= needed; ++k) {
        Interval a = rule.term(Int(k), wp);
        if (rule.alternating && k > rule.first_k && a.lo() > prev_mag)
            throw std::logic_error("sum_direct(" + rule.name +
                                   "): alternating magnitudes not decreasing");
        prev_mag = a.hi();
        acc += sign_at(rule, k) > 0 ? a : -a;
    }

    BigFloat bound(wp);
    if (rule.alternating) {
        // remainder has the sign of the first omitted term, magnitude below it
        bound = rule.term(Int(needed + 1), wp).hi();
        Interval slack = Interval::zero_to(bound);
        acc += sign_at(rule, needed + 1) > 0 ? slack : -slack;
    } else {
        bound = envelope_tail(rule, needed, wp);
        Interval slack = Interval::zero_to(bound);
        acc += rule.leading_sign > 0 ? slack : -slack;
    }

    SumOutcome out;
    out.value = acc;
    out.tail = TailBound{needed - rule.first_k + 1, bound};
    out.method = "direct";
    return out;
}

SumOutcome sum_cvz(const SeriesRule& rule, Prec prec, const BigFloat& tol) {
    if (!rule.alternating) throw std::logic_error("sum_cvz: rule must be alternating");
    if (!rule.completely_monotone)
        throw std::logic_error("sum_cvz(" + rule.name + "): needs a completely monotone rule");
    const Prec wp = prec + 64;

    Interval first = rule.term(Int(rule.first_k), wp);
    const unsigned n = cvz_order(first.mag(), tol);
    const Int d = cvz_d(n);

    Rat b(-1);
    Rat c(-d);
    Interval s(wp);
    unsigned long terms = 0;
    for (unsigned k = 0; k < n; ++k) {
        c = b - c;
        Interval a = (k == 0) ? first : rule.term(Int(rule.first_k + k), wp);
        s += Interval::from_rat(c, wp) * a;
        ++terms;
        {
            const long kk = static_cast<long>(k), nn = static_cast<long>(n);
            b *= make_rat(Int(2 * (kk + nn)) * Int(kk - nn),
                          Int(2 * kk + 1) * Int(kk + 1));
        }
    }
    Interval est = s / Interval::from_int(d, wp);

    // |S - est| <= 2 * a_first / d_n  (moment-measure mass bound)
    BigFloat err(wp);
    {
        Interval bound = first.mul_2exp(1) / Interval::from_int(d, wp);
        err = bound.mag();
    }
    Interval value = est + Interval::pm(err);
    if (rule.leading_sign < 0) value = -value;

    SumOutcome out;
    out.value = value;
    out.tail = TailBound{terms, err};
    out.method = "cvz";
    return out;
}

SumOutcome sum_vw_cvz(const SeriesRule& rule, Prec prec, const BigFloat& tol) {
    if (rule.alternating) throw std::logic_error("sum_vw_cvz: rule must be positive");
    if (!rule.completely_monotone)
        throw std::logic_error("sum_vw_cvz(" + rule.name + "): needs a completely monotone rule");
    const Prec wp = prec + 64;
    const int p = rule.envelope_p;
    if (p < 2) throw std::logic_error("sum_vw_cvz: envelope power must be >= 2");

    // Reindexed h(m) = a(first_k - 1 + m) for m >= 1; h is completely
    // monotone, hence so is every positive combination below.
    const unsigned long shift = rule.first_k - 1;

    // inner truncation target, shared across the w(j) evaluations
    BigFloat tol_inner(wp);
    mpfr_div_ui(tol_inner.raw(), tol.raw(), 64, MPFR_RNDD);

    unsigned long total_terms = 0;
    auto w = [&](unsigned long j, Prec wp2) {
        Interval acc(wp2);
        Int arg;       // 2^i * j + shift
        Int scale = 1; // 2^i
        for (int i = 0;; ++i) {
            arg = scale * j + shift;
            Interval t = rule.term(arg, wp2) * Interval::from_int(scale, wp2);
            acc += t;
            ++total_terms;
            // tail over the remaining i: sum_{i'>i} 2^{i'} C/(2^{i'} j)^p is
            // geometric with ratio 2^{1-p} <= 1/2, so it is bounded by
            // C 2^{i+1} / ((2^{i+1} j)^p (1 - 2^{1-p})).
            if (arg >= Int(rule.envelope_from)) {
                Rat tail_rat = rule.envelope_c * Rat(pow2(i + 1)) /
                               (rat_pow(Rat(pow2(i + 1) * Int(j)), p) *
                                (Rat(1) - make_rat(Int(1), pow2(p - 1))));
                BigFloat tb = BigFloat::from_rat(tail_rat, wp2, MPFR_RNDU);
                if (tb <= tol_inner) {
                    acc += Interval::zero_to(tb);
                    break;
                }
            }
            scale <<= 1;
            if (i > 600) throw BudgetError("sum_vw_cvz inner loop stuck", "");
        }
        return acc;
    };

    Interval w1 = w(1, wp);
    const unsigned n = cvz_order(w1.mag(), tol);
    const Int d = cvz_d(n);

    Rat b(-1);
    Rat c(-d);
    Interval s(wp);
    for (unsigned k = 0; k < n; ++k) {
        c = b - c;
        Interval a = (k == 0) ? w1 : w(k + 1, wp);
        s += Interval::from_rat(c, wp) * a;
        {
            const long kk = static_cast<long>(k), nn = static_cast<long>(n);
            b *= make_rat(Int(2 * (kk + nn)) * Int(kk - nn),
                          Int(2 * kk + 1) * Int(kk + 1));
        }
    }
    Interval est = s / Interval::from_int(d, wp);
    BigFloat err = (w1.mul_2exp(1) / Interval::from_int(d, wp)).mag();
    Interval value = est + Interval::pm(err);
    if (rule.leading_sign < 0) value = -value;

    SumOutcome out;
    out.value = value;
    out.tail = TailBound{total_terms, err};
    out.method = "vw+cvz";
    return out;
}

SumOutcome brute_force_sum(const SeriesRule& rule, Prec prec, const BigFloat& tol) {
    constexpr unsigned long kDirectBudget = 200000;
    const unsigned long needed = direct_terms_needed(rule, tol);
    if (needed != ~0ul && needed - rule.first_k + 1 <= kDirectBudget)
        return sum_direct(rule, prec, tol, kDirectBudget);
    if (!rule.completely_monotone) {
        // fall back to the best direct bound and report the shortfall
        try {
            return sum_direct(rule, prec, tol, kDirectBudget);
        } catch (const BudgetError&) {
            throw;
        }
    }
    return rule.alternating ? sum_cvz(rule, prec, tol) : sum_vw_cvz(rule, prec, tol);
}

} // namespace trig_enclose
