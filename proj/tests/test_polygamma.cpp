#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "check_helpers.hpp"
#include "trig_enclose/errors.hpp"
#include "trig_enclose/exact_form.hpp"
#include "trig_enclose/polygamma.hpp"
#include "trig_enclose/zeta_sums.hpp"

using namespace trig_enclose;

TEST_CASE("trigamma and tetragamma closed-form spot values") {
    const Prec prec = 256;
    Interval pi2 = const_pi(prec).pow_int(2);
    Interval pi4 = const_pi(prec).pow_int(4);

    Interval p_half = polygamma(1, Rat(1, 2), prec).value;
    CHECK(testutil::overlaps(p_half, pi2 / Interval::from_long(2, prec)));

    Interval p_one = polygamma(1, Rat(1), prec).value;
    CHECK(testutil::overlaps(p_one, pi2 / Interval::from_long(6, prec)));

    Interval p3_one = polygamma(3, Rat(1), prec).value;
    CHECK(testutil::overlaps(p3_one, pi4 / Interval::from_long(15, prec)));

    CHECK(p_half.width() < BigFloat::from_string("1e-70", prec));
}

TEST_CASE("rejected inputs") {
    CHECK_THROWS_AS(polygamma(2, Rat(1), 128), RejectedInput);
    CHECK_THROWS_AS(polygamma(1, Rat(-1), 128), RejectedInput);
    CHECK_THROWS_AS(polygamma(1, Rat(1, 3), 128), RejectedInput);
}

TEST_CASE("recurrence psi'(z+1) = psi'(z) - 1/z^2 within 4 ulp") {
    const Prec prec = 256;
    const BigFloat four_ulp = BigFloat::pow2(2 - (prec - 8), prec);
    for (long twice_z = 1; twice_z <= 40; ++twice_z) {
        Rat z = make_rat(twice_z, 2);
        Interval lhs = polygamma(1, z + 1, prec).value;
        Interval rhs = polygamma(1, z, prec).value - Interval::from_rat(1 / (z * z), prec);
        Interval diff = lhs - rhs;
        CHECK(diff.abs().hi() <= four_ulp);
    }
}

TEST_CASE("psi' strictly decreasing along the half-integer grid") {
    const Prec prec = 192;
    Interval prev = polygamma(1, Rat(1, 2), prec).value;
    for (long twice_z = 2; twice_z <= 40; ++twice_z) {
        Interval cur = polygamma(1, make_rat(twice_z, 2), prec).value;
        CHECK(cur.hi() < prev.lo());
        prev = cur;
    }
}

TEST_CASE("tail_inverse_quartic spot values") {
    const Prec prec = 256;
    Interval z4 = const_pi(prec).pow_int(4) / Interval::from_long(90, prec);
    CHECK(testutil::overlaps(tail_inverse_quartic(0, prec), z4));

    Interval t1 = tail_inverse_quartic(1, prec);
    Interval expect1 = z4 - Interval::from_long(1, prec);
    CHECK(testutil::overlaps(t1, expect1));

    Interval t2 = tail_inverse_quartic(2, prec);
    Interval expect2 = expect1 - Interval::from_rat(Rat(1, 16), prec);
    CHECK(testutil::overlaps(t2, expect2));
}

TEST_CASE("appendix tail identity against the brute oracle, N = 0..20") {
    const Prec prec = 256;
    const BigFloat tol = BigFloat::from_string("1e-35", prec);
    for (unsigned long N = 0; N <= 20; ++N) {
        CAPTURE(N);
        Interval lhs = tail_4k2_minus_1_sq(N, prec);
        SeriesRule r;
        r.name = "tail-4k2m1-sq";
        r.first_k = N + 1;
        r.term = [](const Int& k, Prec p) {
            Int d = 4 * k * k - 1;
            return Interval::from_rat(make_rat(1, d * d), p);
        };
        r.envelope_c = Rat(1, 9);
        r.envelope_p = 4;
        r.envelope_from = 1;
        BruteResult rhs = brute_sum(r, prec, tol);
        CHECK((lhs - rhs.value).abs().hi() <= BigFloat::from_string("1e-30", prec));
        CHECK(lhs.lo() <= rhs.value.hi());
        CHECK(rhs.value.lo() <= lhs.hi());
    }
    // N = 0 in exact pi-form: (pi^2 - 8)/16
    Interval n0 = tail_4k2_minus_1_sq(0, prec);
    ExactForm closed = ExactForm::pi_power(Rat(1, 16), 2) + ExactForm::rational(Rat(-1, 2));
    CHECK(testutil::overlaps(n0, closed.eval(prec)));
}

TEST_CASE("tail_4k2 subtracts leading terms correctly") {
    const Prec prec = 200;
    Interval n0 = tail_4k2_minus_1_sq(0, prec);
    Interval n1 = tail_4k2_minus_1_sq(1, prec);
    Interval diff = n0 - n1; // first term 1/9
    CHECK(diff.contains_rat(Rat(1, 9)));
}
