#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "check_helpers.hpp"
#include "trig_enclose/best_constants.hpp"
#include "trig_enclose/errors.hpp"
#include "trig_enclose/exact_numbers.hpp"
#include "trig_enclose/verifier.hpp"

using namespace trig_enclose;

namespace {
constexpr Prec kPrec = 256;
}

TEST_CASE("registry lists the thirty-three inequalities") {
    CHECK(inequality_ids().size() == 33);
    for (const auto& id : inequality_ids()) CHECK_NOTHROW(margin_evaluator(id, 128));
}

TEST_CASE("spot verifications certify on a modest grid") {
    for (const char* id : {"wilker.classic", "chen.tan.N1", "huygens.sharp.N2",
                           "lazarevic", "wilker.conjecture2.N", "neuman-sandor.chain",
                           "tanh.corollary.m1", "sun-zhu", "ge", "papenfuss"}) {
        CAPTURE(id);
        InequalityReport rep = verify(id, 101, kPrec);
        CHECK(rep.verdict == Verdict::certified);
        CHECK(rep.min_margin.sign() > 0);
        CHECK(rep.grid_points == 101);
        CHECK(rep.unresolved_points == 0);
    }
}

TEST_CASE("rejected inputs") {
    CHECK_THROWS_AS(verify("nope", 11, kPrec), RejectedInput);
    CHECK_THROWS_AS(verify("wilker.classic", 2, kPrec), RejectedInput);
    CHECK_THROWS_AS(compare_bounds("becker-stark.lower", "banjac.upper", 11, kPrec),
                    RejectedInput);
    CHECK_THROWS_AS(sharpness_falsify("wilker.classic", 1e-6, kPrec), RejectedInput);
}

namespace {

// ascending enclosure sequence with gaps exceeding the combined widths
void check_strictly_increasing(const std::vector<Interval>& seq) {
    for (std::size_t i = 1; i < seq.size(); ++i) CHECK(seq[i - 1].hi() < seq[i].lo());
}

void check_strictly_decreasing(const std::vector<Interval>& seq) {
    for (std::size_t i = 1; i < seq.size(); ++i) CHECK(seq[i - 1].lo() > seq[i].hi());
}

std::vector<BigFloat> ascending_grid(double lo, double hi, int n) {
    std::vector<BigFloat> g;
    for (int i = 0; i < n; ++i)
        g.push_back(BigFloat::from_double(lo + (hi - lo) * i / (n - 1), kPrec));
    return g;
}

} // namespace

TEST_CASE("proof monotonicity lemmas, restated on grids") {
    const Prec wp = kPrec;
    auto grid = ascending_grid(0.1, 1.5, 12);

    // V_N(t) = (W2(t) - 2 - partial) pi^{2N} / (4 t^{2N+2}) increases, N = 1..3
    for (unsigned long N = 1; N <= 3; ++N) {
        std::vector<Interval> vals;
        for (const auto& t : grid) {
            Interval x = Interval::point(t);
            Interval w = margin_evaluator("wu-srivastava", wp)(x); // W2 - 2
            Interval acc = w;
            for (unsigned long j = 1; j + 1 <= N; ++j)
                acc -= Interval::from_rat(series_coefficient(FunctionId::wilker, j), wp) *
                       x.pow_int(2 * static_cast<long>(j) + 2);
            Interval v = acc * const_pi(wp).pow_int(2 * static_cast<int>(N)) /
                         x.pow_int(2 * static_cast<long>(N) + 2).mul_2exp(2);
            vals.push_back(v);
        }
        check_strictly_increasing(vals);
    }

    // g(t) of the xi factor decreases for t > 0 (N = 1)
    {
        std::vector<Interval> vals;
        for (const auto& t : ascending_grid(0.2, 3.0, 10)) {
            // remainder_tanh(N=1)/prefactor reproduces the series g up to sign
            Interval x = Interval::point(t);
            Interval tau = iv_tanh(x) - x; // tanh t - t = tau_1(t), negative
            Interval g = -tau * const_pi(wp).pow_int(2) /
                         (x.pow_int(3).mul_2exp(5)); // / (2^5 t^3)
            vals.push_back(g);
        }
        check_strictly_decreasing(vals);
    }

    // U_N(x) = (H2 - 3 - partial) pi^{2N} / (2 x^{2N+2}) increases (N = 1)
    {
        std::vector<Interval> vals;
        for (const auto& t : grid) {
            Interval x = Interval::point(t);
            Interval sinx = iv_sin(x), cosx = iv_cos(x);
            Interval inv_sinc = x / sinx;
            Interval H2 = inv_sinc.mul_2exp(1) + inv_sinc * cosx;
            Interval u = (H2 - Interval::from_long(3, wp)) * const_pi(wp).pow_int(2) /
                         x.pow_int(4).mul_2exp(1);
            vals.push_back(u);
        }
        check_strictly_increasing(vals);
    }

    // H(t) of the sec proof decreases on (0, pi/2) (N = 1): recover it from
    // the sec remainder minus the k = 1 pole term
    {
        std::vector<Interval> vals;
        for (const auto& t : grid) {
            Interval x = Interval::point(t);
            Interval omega = iv_cos(x).recip() - Interval::from_long(1, wp); // omega_1
            Interval pi2 = const_pi(wp).pow_int(2);
            Interval den = pi2 - x.pow_int(2).mul_2exp(2);
            Interval H = omega * const_pi(wp) / x.pow_int(2).mul_2exp(4) - den.recip();
            vals.push_back(H);
        }
        check_strictly_decreasing(vals);
    }
}

TEST_CASE("endpoint limits reproduce the displayed closed forms") {
    for (const auto& id : limit_expression_ids()) {
        CAPTURE(id);
        LimitCheck z = endpoint_limit(id, Endpoint::zero_plus, kPrec);
        CHECK(z.within_tolerance);
        CHECK(z.sample_points.size() == 8);
        LimitCheck p = endpoint_limit(id, Endpoint::pi_half_minus, kPrec);
        CHECK(p.within_tolerance);
    }
    CHECK_THROWS_AS(endpoint_limit("nope", Endpoint::zero_plus, kPrec), RejectedInput);
}

TEST_CASE("sun-zhu limits match the stated constants") {
    LimitCheck z = endpoint_limit("sun-zhu.ratio", Endpoint::zero_plus, kPrec);
    Interval claim_z = (ExactForm::pi_power(Rat(8, 15), 4) +
                        ExactForm::pi_power(Rat(-16, 3), 2))
                           .eval(kPrec);
    const bool extrapolation_close =
        claim_z.contains(z.extrapolated) ||
        (Interval::point(z.extrapolated) - claim_z).abs().hi() <=
            BigFloat::from_string("1e-30", kPrec);
    CHECK(extrapolation_close);

    LimitCheck p = endpoint_limit("sun-zhu.ratio", Endpoint::pi_half_minus, kPrec);
    CHECK(p.discrepancy <= BigFloat::from_string("1e-6", kPrec));
}

TEST_CASE("bound comparisons match the remarks") {
    CompareReport c1 = compare_bounds("becker-stark.lower", "banjac.lower", 201, kPrec);
    CHECK(c1.verdict == Dominance::incomparable);
    CHECK(c1.has_witness_a);
    CHECK(c1.has_witness_b);

    CompareReport c2 = compare_bounds("banjac.upper", "becker-stark.upper", 201, kPrec);
    CHECK(c2.verdict == Dominance::a_dominates);

    CompareReport c3 = compare_bounds("chen.tan.N1.upper", "banjac.upper", 201, kPrec);
    CHECK(c3.verdict == Dominance::a_dominates);

    // "no strict comparison" flips
    CompareReport c4 = compare_bounds("wilker.sharpN2.lower", "wilker.alphabetaN1.lower",
                                      201, kPrec);
    CHECK(c4.verdict == Dominance::incomparable);
    CompareReport c5 = compare_bounds("wilker.sharpN2.upper", "wilker.alphabetaN1.upper",
                                      201, kPrec);
    CHECK(c5.verdict == Dominance::incomparable);
    CompareReport c6 = compare_bounds("huygens.sharpN1.upper", "huygens.thm1.upper",
                                      201, kPrec);
    CHECK(c6.verdict == Dominance::incomparable);
}

TEST_CASE("sharpness falsification flips all four sharp pairs") {
    for (const char* id :
         {"wilker.sharp.N1", "huygens.sharp.N1", "sun-zhu.open", "sec.remainder.N"}) {
        CAPTURE(id);
        SharpnessReport rep = sharpness_falsify(id, 1e-6, kPrec);
        CHECK(rep.lower_flipped);
        CHECK(rep.upper_flipped);
    }
    // and the unperturbed versions certify
    for (const char* id :
         {"wilker.sharp.N1", "huygens.sharp.N1", "sun-zhu.open", "sec.remainder.N"}) {
        CHECK(verify(id, 51, kPrec).verdict == Verdict::certified);
    }
}
