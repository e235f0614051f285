// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion.  Exits nonzero if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "trig_enclose/best_constants.hpp"
#include "trig_enclose/polygamma.hpp"
#include "trig_enclose/remainder.hpp"
#include "trig_enclose/verifier.hpp"
#include "trig_enclose/zeta_sums.hpp"

using namespace trig_enclose;

namespace {

constexpr Prec kPrec = 256;
int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int criterion, bool pass, const std::string& what, double secs, double budget) {
    const bool in_budget = secs <= budget;
    if (!pass || !in_budget) ++g_failures;
    std::printf("%s criterion %d: %s (%.2fs of %.0fs budget)\n",
                pass && in_budget ? "PASS" : "FAIL", criterion, what.c_str(), secs, budget);
}

BigFloat tol30() { return BigFloat::from_string("1e-30", kPrec); }

// --- criterion 1: constant reproduction -------------------------------------

void criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;

    ok &= wilker_q(1) == Rat(2, 45);
    ok &= wilker_q(2) == Rat(8, 945);
    ok &= series_coefficient(FunctionId::huygens, 2) == Rat(1, 60);   // a_1
    ok &= series_coefficient(FunctionId::huygens, 3) == Rat(1, 504);  // a_2
    ok &= wilker_lambda_mu(1, kPrec).lower.value.contains_rat(Rat(2, 45));
    ok &= huygens_a_b(1, kPrec).lower.value.contains_rat(Rat(1, 60));

    struct Case {
        const char* name;
        Interval series;
        ExactForm closed;
    };
    const std::vector<Case> cases = {
        {"mu1", wilker_lambda_mu(1, kPrec).upper.value, *mu_closed_form(1)},
        {"mu2", wilker_lambda_mu(2, kPrec).upper.value, *mu_closed_form(2)},
        {"b1", huygens_a_b(1, kPrec).upper.value, *b_closed_form(1)},
        {"b2", huygens_a_b(2, kPrec).upper.value, *b_closed_form(2)},
        {"alpha1", wilker_alpha_beta(1, kPrec).lower.value, *alpha_closed_form(1)},
        {"beta1", wilker_alpha_beta(1, kPrec).upper.value, *beta_closed_form(1)},
    };
    for (const auto& c : cases) {
        Interval ref = c.closed.eval(kPrec);
        if ((c.series - ref).abs().hi() > tol30()) {
            std::printf("  criterion 1: %s off by more than 1e-30\n", c.name);
            ok = false;
        }
    }
    report(1, ok, "exact and series constants reproduce the stated closed forms",
           seconds_since(t0), 10);
}

// --- criterion 2: remainder identity suite ----------------------------------

void criterion_2() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;

    struct Dom {
        FunctionId fn;
        double lo, hi; // guarded grid range
        bool skip_zero;
    };
    const double pi_d = 3.14159265358979323846;
    const double g = 1e-6;
    const std::vector<Dom> doms = {
        {FunctionId::tan, -(pi_d / 2) * (1 - g), (pi_d / 2) * (1 - g), false},
        {FunctionId::tanh, -5.0, 5.0, false},
        {FunctionId::sec, -(pi_d / 2) * (1 - g), (pi_d / 2) * (1 - g), false},
        {FunctionId::cot, pi_d * g * 1.5, pi_d * (1 - g), true},
        {FunctionId::csc, pi_d * g * 1.5, pi_d * (1 - g), true},
        {FunctionId::sec2tan, 0.0, (pi_d / 2) * (1 - g), false},
    };
    const int kPoints = 41;
    const BigFloat width_cap = tol30();
    for (const auto& dom : doms) {
        for (unsigned long N = 0; N <= 6; ++N) {
            for (int i = 0; i < kPoints; ++i) {
                // Chebyshev nodes over the guarded range
                const double theta = (2.0 * i + 1.0) * pi_d / (2.0 * kPoints);
                const double xd = (dom.lo + dom.hi) / 2 +
                                  (dom.hi - dom.lo) / 2 * std::cos(theta);
                if (dom.skip_zero && xd == 0.0) continue;
                BigFloat t = BigFloat::from_double(xd, kPrec);
                RemainderEval ev = eval_with_enclosure(dom.fn, N, t, kPrec);
                Interval direct = fn_point(dom.fn, t, 2 * kPrec);
                if (!ev.value.contains(direct.mid())) {
                    std::printf("  criterion 2: %s N=%lu t=%.6f not enclosed\n",
                                function_id_name(dom.fn).c_str(), N, xd);
                    ok = false;
                }
                if (ev.value.width() > width_cap) {
                    std::printf("  criterion 2: %s N=%lu t=%.6f width %s\n",
                                function_id_name(dom.fn).c_str(), N, xd,
                                ev.value.width().to_decimal(4).c_str());
                    ok = false;
                }
            }
        }
    }
    report(2, ok, "direct values lie inside all 6x7x41 enclosures, widths <= 1e-30",
           seconds_since(t0), 60);
}

// --- criterion 3: appendix identity -----------------------------------------

void criterion_3() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (unsigned long N = 0; N <= 20; ++N) {
        Interval lhs = tail_4k2_minus_1_sq(N, kPrec);
        SeriesRule r;
        r.name = "acc-tail-4k2";
        r.first_k = N + 1;
        r.term = [](const Int& k, Prec p) {
            Int d = 4 * k * k - 1;
            return Interval::from_rat(make_rat(1, d * d), p);
        };
        r.envelope_c = Rat(1, 9);
        r.envelope_p = 4;
        BruteResult rhs = brute_sum(r, kPrec, BigFloat::from_string("1e-35", kPrec));
        if ((lhs - rhs.value).abs().hi() > tol30()) {
            std::printf("  criterion 3: N=%lu differs beyond 1e-30\n", N);
            ok = false;
        }
    }
    // N = 0 in exact pi-form: psi'(1/2)/8 - 1/2 = (pi^2 - 8)/16
    ExactForm lhs_form = ExactForm::pi_power(Rat(1, 2), 2).scaled(Rat(1, 8)) +
                         ExactForm::rational(Rat(-1, 2));
    ExactForm rhs_form = ExactForm::pi_power(Rat(1, 16), 2) + ExactForm::rational(Rat(-1, 2));
    ok &= lhs_form == rhs_form;
    ok &= tail_4k2_minus_1_sq(0, kPrec).contains(rhs_form.eval(kPrec).mid());
    report(3, ok, "appendix tail identity matches brute sums for N = 0..20",
           seconds_since(t0), 60);
}

// --- criterion 4: closed-form sum registry -----------------------------------

void criterion_4() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (const auto& id : sum_registry_ids()) {
        ClosedFormConstant c = registry_constant(id, kPrec);
        BruteResult b = brute_sum(registry_rule(id), kPrec,
                                  BigFloat::pow2(-128, kPrec));
        // enclosures of the same number must overlap...
        bool overlap = c.numeric.lo() <= b.value.hi() && b.value.lo() <= c.numeric.hi();
        // ...and differ by no more than the certified tails
        BigFloat allowance(kPrec);
        mpfr_add(allowance.raw(), b.value.width().raw(), c.numeric.width().raw(), MPFR_RNDU);
        bool close = (c.numeric - b.value).abs().hi() <= allowance;
        if (!overlap || !close) {
            std::printf("  criterion 4: %s closed form vs brute mismatch\n", id.c_str());
            ok = false;
        }
    }
    report(4, ok, "all 15 registry constants match their brute-force oracles",
           seconds_since(t0), 60);
}

// --- criterion 5: inequality certification ------------------------------------

void criterion_5() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::vector<InequalityReport> reports = verify_all(2001, kPrec);
    if (reports.size() != 33) ok = false;
    for (const auto& r : reports) {
        if (r.verdict != Verdict::certified || r.min_margin.sign() <= 0) {
            std::printf("  criterion 5: %s -> %s\n", r.id.c_str(),
                        verdict_name(r.verdict).c_str());
            ok = false;
        }
    }
    report(5, ok, "verify all: 33/33 certified at 2001 Chebyshev points, 256 bits",
           seconds_since(t0), 300);
}

// --- criterion 6: sharpness falsification --------------------------------------

void criterion_6() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (const char* id :
         {"wilker.sharp.N1", "huygens.sharp.N1", "sun-zhu.open", "sec.remainder.N"}) {
        SharpnessReport rep = sharpness_falsify(id, 1e-6, kPrec);
        if (!rep.lower_flipped || !rep.upper_flipped) {
            std::printf("  criterion 6: %s lower=%d upper=%d\n", id, rep.lower_flipped,
                        rep.upper_flipped);
            ok = false;
        }
    }
    report(6, ok, "1e-6 adverse perturbations flip all four sharp pairs to violated",
           seconds_since(t0), 60);
}

// --- criterion 7: endpoint limits ----------------------------------------------

void criterion_7() {
    auto t0 = std::chrono::steady_clock::now();
    LimitCheck z = endpoint_limit("sun-zhu.ratio", Endpoint::zero_plus, kPrec);
    LimitCheck p = endpoint_limit("sun-zhu.ratio", Endpoint::pi_half_minus, kPrec);
    bool ok = z.within_tolerance && p.within_tolerance;
    report(7, ok, "Sun-Zhu ratio limits reproduce both closed forms to 1e-6 relative",
           seconds_since(t0), 30);
}

// --- criterion 8: cross-formula identities ---------------------------------------

void criterion_8() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (unsigned long n = 1; n <= 6; ++n) {
        ok &= wilker_q(n) == series_coefficient(FunctionId::wilker, n);
        ok &= huygens_varrho(n) == series_coefficient(FunctionId::huygens, n + 1);
    }
    ok &= wilker_alpha_beta(0, kPrec).lower.value.contains_rat(Rat(2, 45)); // alpha_0 = lambda_1
    ok &= *beta_closed_form(0) == *mu_closed_form(1);                       // beta_0 = mu_1
    {
        Interval beta0 = wilker_alpha_beta(0, kPrec).upper.value;
        Interval mu1 = wilker_lambda_mu(1, kPrec).upper.value;
        ok &= (beta0 - mu1).abs().hi() <= tol30();
    }
    const Interval pi4 = const_pi(kPrec).pow_int(4);
    for (unsigned long n = 0; n <= 10; ++n) {
        Interval beta = wilker_alpha_beta(n, kPrec).upper.value;
        Interval other = Interval::from_long(64, kPrec) * tail_4k2_minus_1_sq(n, kPrec) / pi4;
        if ((beta - other).abs().hi() > tol30()) {
            std::printf("  criterion 8: beta_%lu vs tail form beyond 1e-30\n", n);
            ok = false;
        }
    }
    report(8, ok, "q=lambda, varrho=a, alpha0=lambda1, beta0=mu1, beta_N tail identity",
           seconds_since(t0), 30);
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    if (g_failures == 0) {
        std::printf("acceptance: all criteria PASS\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return 1;
}
