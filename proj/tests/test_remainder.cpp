#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "check_helpers.hpp"
#include "trig_enclose/errors.hpp"
#include "trig_enclose/remainder.hpp"

using namespace trig_enclose;

namespace {

constexpr Prec kPrec = 256;

BigFloat bf(double d) { return BigFloat::from_double(d, kPrec); }

// the six functions with small test grids inside their guarded domains
struct Domain {
    FunctionId fn;
    std::vector<double> grid;
};

const std::vector<Domain>& domains() {
    static const std::vector<Domain> d = {
        {FunctionId::tan, {-1.4, -0.9, -0.3, 0.0, 0.2, 0.7, 1.1, 1.5}},
        {FunctionId::tanh, {-4.5, -2.0, -0.6, 0.0, 0.4, 1.3, 3.0, 5.0}},
        {FunctionId::sec, {-1.45, -0.8, -0.2, 0.0, 0.35, 0.9, 1.35}},
        {FunctionId::cot, {0.05, 0.4, 1.0, 1.8, 2.6, 3.1}},
        {FunctionId::csc, {0.05, 0.4, 1.0, 1.8, 2.6, 3.1}},
        {FunctionId::sec2tan, {0.0, 0.1, 0.5, 0.9, 1.2, 1.5}},
    };
    return d;
}

} // namespace

TEST_CASE("identity: direct evaluation lies inside the enclosure") {
    for (const auto& dom : domains()) {
        for (unsigned long N = 0; N <= 6; ++N) {
            for (double x : dom.grid) {
                if ((dom.fn == FunctionId::cot || dom.fn == FunctionId::csc) && x == 0.0)
                    continue;
                CAPTURE(function_id_name(dom.fn));
                CAPTURE(N);
                CAPTURE(x);
                RemainderEval ev = eval_with_enclosure(dom.fn, N, bf(x), kPrec);
                Interval direct = fn_point(dom.fn, bf(x), 2 * kPrec);
                CHECK(ev.value.contains(direct.mid()));
                CHECK(ev.value.width() <= BigFloat::from_string("1e-30", kPrec));
            }
        }
    }
}

TEST_CASE("spot examples") {
    // empty sum at N = 0: the remainder is the function itself
    Interval t0 = remainder_tan(0, bf(0.5), kPrec);
    CHECK(t0.contains(pt_tan(bf(0.5), 2 * kPrec).mid()));
    CHECK(testutil::close_to(t0, "0.5463024898", "1e-9")); // tan 0.5 = 0.546302...

    // N = 1: tan(0.5) - 0.5
    Interval t1 = remainder_tan(1, bf(0.5), kPrec);
    Interval expect = pt_tan(bf(0.5), 2 * kPrec) - Interval::point(bf(0.5));
    CHECK(t1.contains(expect.mid()));

    // tanh: remainder at N=1 is negative at t=1 (tanh 1 < 1)
    Interval h1 = remainder_tanh(1, bf(1.0), kPrec);
    CHECK(h1.strictly_negative());
    Interval h0 = remainder_tanh(0, bf(1.0), kPrec);
    CHECK(h0.contains(pt_tanh(bf(1.0), 2 * kPrec).mid()));

    // sec: omega_1(0.3) = sec(0.3) - 1
    Interval w1 = remainder_sec(1, bf(0.3), kPrec);
    Interval sec_ref = pt_sec(bf(0.3), 2 * kPrec) - Interval::from_long(1, 2 * kPrec);
    CHECK(w1.contains(sec_ref.mid()));

    // cot: theta_0(1) = cot(1) - 1; theta_1(1) = cot(1) - 1 + 1/3
    Interval c0 = remainder_cot(0, bf(1.0), kPrec);
    Interval cot_ref = pt_cot(bf(1.0), 2 * kPrec) - Interval::from_long(1, 2 * kPrec);
    CHECK(c0.contains(cot_ref.mid()));
    Interval c1 = remainder_cot(1, bf(1.0), kPrec);
    Interval cot_ref1 = cot_ref + Interval::from_rat(Rat(1, 3), 2 * kPrec);
    CHECK(c1.contains(cot_ref1.mid()));

    // csc: r_1(1) = csc(1) - 1 - 1/6
    Interval r1 = remainder_csc(1, bf(1.0), kPrec);
    Interval csc_ref = pt_csc(bf(1.0), 2 * kPrec) - Interval::from_rat(Rat(7, 6), 2 * kPrec);
    CHECK(r1.contains(csc_ref.mid()));

    // csc small argument: |r_1(0.001)| <= 1e-8  (t^3 scaling)
    Interval tiny = remainder_csc(1, bf(0.001), kPrec);
    CHECK(tiny.abs().hi() <= BigFloat::from_string("1e-8", kPrec));

    // sec2tan: kappa_1(0.4) = 0.4 sec^2(0.4) - tan(0.4); kappa_2 subtracts (2/3)t^3
    Interval k1 = remainder_sec2tan(1, bf(0.4), kPrec);
    Interval st = fn_point(FunctionId::sec2tan, bf(0.4), 2 * kPrec);
    CHECK(k1.contains(st.mid()));
    Interval k2 = remainder_sec2tan(2, bf(0.4), kPrec);
    // the evaluation point is the 53-bit rounding of 0.4, so the subtracted
    // cubic term uses that exact dyadic value
    Interval st2 = st - Interval::from_rat(Rat(2, 3) * rat_pow(bf(0.4).to_rat(), 3), 2 * kPrec);
    CHECK(testutil::overlaps(k2, st2));

    // sec2tan near zero: t^{2N+1} scaling
    Interval kz = remainder_sec2tan(1, bf(1e-6), kPrec);
    CHECK(kz.abs().hi() <= BigFloat::from_string("1e-17", kPrec));
}

TEST_CASE("remainders vanish exactly at t = 0 where defined") {
    for (unsigned long N = 0; N <= 4; ++N) {
        CHECK(remainder_tan(N, bf(0.0), kPrec).is_point());
        CHECK(remainder_tan(N, bf(0.0), kPrec).contains_zero());
        CHECK(remainder_tanh(N, bf(0.0), kPrec).is_point());
        CHECK(remainder_sec2tan(N, bf(0.0), kPrec).is_point());
        if (N >= 1) {
            Interval s = remainder_sec(N, bf(0.0), kPrec);
            CHECK((s.is_point() && s.contains_zero()));
        }
    }
    // sec at N = 0, t = 0 is sec 0 = 1, not 0
    CHECK(remainder_sec(0, bf(0.0), kPrec).contains_rat(Rat(1)));
}

TEST_CASE("sign laws on the positive grid") {
    for (unsigned long N = 0; N <= 4; ++N) {
        for (double x : {0.2, 0.8, 1.4}) {
            CHECK(remainder_tan(N, bf(x), kPrec).strictly_positive());
            Interval tau = remainder_tanh(N, bf(x), kPrec);
            CHECK((N % 2 == 0 ? tau.strictly_positive() : tau.strictly_negative()));
        }
        for (double x : {0.5, 1.5, 2.8}) {
            CHECK(remainder_cot(N, bf(x), kPrec).strictly_negative());
        }
        if (N >= 1)
            for (double x : {0.3, 1.0, 1.5}) {
                CHECK(remainder_sec2tan(N, bf(x), kPrec).strictly_positive());
            }
    }
}

TEST_CASE("remainder magnitudes shrink with N once 2|t|/pi < 1") {
    for (double x : {0.3, 0.9, 1.3}) {
        BigFloat prev = remainder_tan(1, bf(x), kPrec).mid();
        for (unsigned long N = 2; N <= 6; ++N) {
            BigFloat cur = remainder_tan(N, bf(x), kPrec).mid();
            BigFloat pa(kPrec), ca(kPrec);
            mpfr_abs(pa.raw(), prev.raw(), MPFR_RNDN);
            mpfr_abs(ca.raw(), cur.raw(), MPFR_RNDN);
            CHECK(ca < pa);
            prev = cur;
        }
    }
}

TEST_CASE("tanh partial sums alternate around tanh t / t") {
    // with N = 2m terms the partial sum is below tanh t/t, with N = 2m-1 above
    for (double x : {0.4, 1.7, 3.2, 5.0}) {
        Rat tr = bf(x).to_rat();
        Interval target = pt_tanh(bf(x), 2 * kPrec) / Interval::point(bf(x));
        for (unsigned long m = 1; m <= 3; ++m) {
            Rat below = partial_sum_exact(FunctionId::tanh, 2 * m, tr) / tr;
            Rat above = partial_sum_exact(FunctionId::tanh, 2 * m - 1, tr) / tr;
            CHECK(BigFloat::from_rat(below, kPrec, MPFR_RNDU) < target.lo());
            CHECK(BigFloat::from_rat(above, kPrec, MPFR_RNDD) > target.hi());
        }
    }
}

TEST_CASE("xi factor stays in (0,1) and decreases in t") {
    Interval near_one = xi_factor(0, bf(1e-6), kPrec);
    Interval gap = Interval::from_long(1, kPrec) - near_one;
    CHECK(gap.abs().hi() <= BigFloat::from_string("1e-10", kPrec));

    Interval x1 = xi_factor(1, bf(1.0), kPrec);
    CHECK(x1.strictly_positive());
    CHECK(x1.hi() < BigFloat::from_long(1, kPrec));

    Interval x2 = xi_factor(1, bf(2.0), kPrec);
    CHECK(x2.hi() < x1.lo());

    CHECK_THROWS_AS(xi_factor(1, bf(0.0), kPrec), RejectedInput);
}

TEST_CASE("xi factor against a direct series quotient") {
    // g(1)/g(0) for N = 1, brute-forced with a plain partial sum
    const Prec prec = 128;
    Interval g1(prec), g0(prec);
    Interval pi2 = const_pi(prec).pow_int(2);
    for (unsigned long k = 1; k <= 20000; ++k) {
        Int u = 2 * k - 1;
        Interval u2 = Interval::from_int(u * u, prec);
        g1 += (u2 * (pi2 * u2 + Interval::from_long(4, prec))).recip();
        g0 += (u2 * pi2 * u2).recip();
    }
    // tails ~ 1/(3 pi^2 K^3) < 1e-13: enough to pin the leading digits
    Interval approx = g1 / g0;
    Interval xi = xi_factor(1, BigFloat::from_double(1.0, prec), prec);
    CHECK((xi - approx).abs().hi() <= BigFloat::from_string("1e-10", prec));
}

TEST_CASE("domain guards") {
    CHECK_THROWS_AS(remainder_tan(1, bf(1.5707963), kPrec), DomainError); // inside guard
    CHECK_NOTHROW(remainder_tan(1, bf(1.57079), kPrec));
    CHECK_THROWS_AS(remainder_cot(1, bf(0.0), kPrec), DomainError);
    CHECK_THROWS_AS(remainder_cot(1, bf(3.14159265), kPrec), DomainError);
    CHECK_THROWS_AS(remainder_sec2tan(1, bf(-0.5), kPrec), DomainError);
    CHECK_THROWS_AS(eval_with_enclosure(FunctionId::csc, 2, bf(1e-8), kPrec), DomainError);
}

TEST_CASE("eval_with_enclosure bookkeeping") {
    RemainderEval ev = eval_with_enclosure(FunctionId::tan, 3, bf(1.0), kPrec);
    CHECK(ev.order == 3);
    CHECK(ev.terms_used > 0);
    CHECK(testutil::close_to(ev.value, "1.5574077246549022305", "1e-18"));
    // partial + remainder consistency up to the one partial-sum rounding
    Interval recon = Interval::point(ev.partial_sum) + ev.remainder;
    CHECK((recon - ev.value).abs().hi() <= BigFloat::from_string("1e-40", kPrec));
}
