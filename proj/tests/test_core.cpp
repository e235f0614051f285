#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "check_helpers.hpp"
#include "trig_enclose/exact_form.hpp"
#include "trig_enclose/interval.hpp"

using namespace trig_enclose;

TEST_CASE("interval arithmetic encloses exact rational arithmetic") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 1000);
    const Prec prec = 64; // coarse on purpose, so rounding actually happens
    for (int iter = 0; iter < 500; ++iter) {
        Rat a = make_rat(Int(num(rng)), Int(den(rng)));
        Rat b = make_rat(Int(num(rng)), Int(den(rng)));
        Interval ia = Interval::from_rat(a, prec);
        Interval ib = Interval::from_rat(b, prec);
        CHECK((ia + ib).contains_rat(a + b));
        CHECK((ia - ib).contains_rat(a - b));
        CHECK((ia * ib).contains_rat(a * b));
        if (b != 0 && !ib.contains_zero()) CHECK((ia / ib).contains_rat(Rat(a / b)));
        CHECK(ia.pow_int(3).contains_rat(rat_pow(a, 3)));
        CHECK(ia.pow_int(4).contains_rat(rat_pow(a, 4)));
    }
}

TEST_CASE("interval basics") {
    Interval x = Interval::from_rat(Rat(1, 3), 64);
    CHECK(x.lo() < x.hi()); // 1/3 is not a binary float
    CHECK(x.width() > BigFloat(64));
    Interval p = Interval::point(BigFloat::from_double(0.25, 64));
    CHECK(p.is_point());
    CHECK((-p).lo() == BigFloat::from_double(-0.25, 64));
    CHECK_THROWS(Interval::from_long(1, 64) / Interval::zero(64));
}

TEST_CASE("pi, ln2, zeta3 enclosures agree with the library oracles") {
    for (Prec prec : {128L, 256L}) {
        Interval pi = const_pi(prec);
        Interval l2 = const_ln2(prec);
        Interval z3 = const_zeta3(prec);
        CHECK(pi.width() <= BigFloat::pow2(3 - prec, prec));
        CHECK(l2.width() <= BigFloat::pow2(4 - prec, prec));
        CHECK(z3.width() <= BigFloat::pow2(4 - prec, prec));

        BigFloat l2_ref(prec + 8), z3_ref(prec + 8);
        mpfr_const_log2(l2_ref.raw(), MPFR_RNDN);
        mpfr_zeta_ui(z3_ref.raw(), 3, MPFR_RNDN);
        CHECK(l2.contains(l2_ref));
        CHECK(z3.contains(z3_ref));
    }
}

TEST_CASE("exact form algebra and evaluation") {
    ExactForm f = ExactForm::rational(5) + ExactForm::pi_power(Rat(-1, 2), 2);
    CHECK(f.to_string() == "5 - 1/2*pi^2");
    Interval v = f.eval(128);
    // 5 - pi^2/2 = 0.0651977994553206906...
    CHECK(testutil::close_to(v, "0.0651977994553206906", "1e-18"));

    ExactForm pi2 = ExactForm::pi_power(1, 2);
    ExactForm prod = pi2 * pi2;
    CHECK(prod == ExactForm::pi_power(1, 4));

    ExactForm mixed = ExactForm::ln2_term(3) - ExactForm::ln2_term(3);
    CHECK(mixed.is_zero());

    Rat r;
    CHECK(ExactForm::rational(Rat(7, 9)).is_rational(&r));
    CHECK(r == Rat(7, 9));
    CHECK_FALSE(pi2.is_rational());

    ExactForm shifted = f.scaled_pi(Rat(2), -2);
    CHECK(shifted == ExactForm::pi_power(10, -2) + ExactForm::rational(-1));
}

TEST_CASE("decimal round trip is a fixed point") {
    BigFloat x = BigFloat::from_string("1.234567890123456789012345678901234567890e-3", 256);
    std::string s1 = x.to_decimal(79);
    BigFloat y = BigFloat::from_string(s1, 256);
    std::string s2 = y.to_decimal(79);
    CHECK(s1 == s2);
    BigFloat z = BigFloat::from_string(s2, 256);
    CHECK(y == z);
}

TEST_CASE("point trig evaluations are consistent with interval-argument ones") {
    const Prec prec = 128;
    BigFloat x = BigFloat::from_double(0.7, prec);
    Interval ix = Interval::point(x);
    CHECK(iv_sin(ix).contains(pt_sin(x, prec).mid()));
    CHECK(iv_tan(ix).contains(pt_tan(x, prec).mid()));

    // a genuine interval through a monotone stretch
    Interval wide(BigFloat::from_double(0.5, prec), BigFloat::from_double(0.9, prec));
    Interval s = iv_sin(wide);
    CHECK(s.contains(pt_sin(BigFloat::from_double(0.6, prec), prec).mid()));
    CHECK(s.contains(pt_sin(BigFloat::from_double(0.9, prec), prec).mid()));
    CHECK_THROWS(iv_tan(Interval(BigFloat::from_double(1.0, prec),
                                 BigFloat::from_double(2.0, prec))));
}
