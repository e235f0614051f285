#include "trig_enclose/zeta_sums.hpp"

#include <cmath>

#include <map>
#include <mutex>
#include <tuple>

#include "trig_enclose/errors.hpp"
#include "trig_enclose/exact_numbers.hpp"

namespace trig_enclose {

namespace {

void require_n(unsigned long n, const char* op) {
    if (n == 0) throw RejectedInput(std::string(op) + ": n must be >= 1");
    if (2 * n > kMaxIndex)
        throw RejectedInput(std::string(op) + ": index out of range");
}

ClosedFormConstant make_constant(std::string id, ExactForm form, Prec prec) {
    ClosedFormConstant c;
    c.id = std::move(id);
    c.numeric = form.eval(prec);
    c.exact = std::move(form);
    return c;
}

} // namespace

ExactForm odd_zeta_even_form(unsigned long n) {
    require_n(n, "odd_zeta_even");
    Rat coef = make_rat(pow2(2 * n) - 1, 2 * factorial(2 * n)) * abs(bernoulli(2 * n));
    return ExactForm::pi_power(coef, static_cast<int>(2 * n));
}

ExactForm even_zeta_form(unsigned long n) {
    require_n(n, "even_zeta");
    Rat coef = make_rat(pow2(2 * n - 1), factorial(2 * n)) * abs(bernoulli(2 * n));
    return ExactForm::pi_power(coef, static_cast<int>(2 * n));
}

ExactForm alt_even_zeta_form(unsigned long n) {
    require_n(n, "alt_even_zeta");
    Rat coef = make_rat(pow2(2 * n - 1) - 1, factorial(2 * n)) * abs(bernoulli(2 * n));
    return ExactForm::pi_power(coef, static_cast<int>(2 * n));
}

ExactForm alt_odd_sum_form(unsigned long n) {
    if (2 * n > kMaxIndex) throw RejectedInput("alt_odd_sum: index out of range");
    // denominator 2^{2n+2} (2n)!: n = 0 must reproduce Leibniz pi/4 and the
    // closed form must hand the sec expansion exactly |E_{2j}|/(2j)!.
    Rat coef = make_rat(secant_number(n), pow2(2 * n + 2) * factorial(2 * n));
    return ExactForm::pi_power(coef, static_cast<int>(2 * n + 1));
}

ClosedFormConstant odd_zeta_even(unsigned long n, Prec prec) {
    return make_constant("odd-zeta-even-" + std::to_string(n), odd_zeta_even_form(n), prec);
}
ClosedFormConstant even_zeta(unsigned long n, Prec prec) {
    return make_constant("even-zeta-" + std::to_string(n), even_zeta_form(n), prec);
}
ClosedFormConstant alt_even_zeta(unsigned long n, Prec prec) {
    return make_constant("alt-even-zeta-" + std::to_string(n), alt_even_zeta_form(n), prec);
}
ClosedFormConstant alt_odd_sum(unsigned long n, Prec prec) {
    return make_constant("alt-odd-sum-" + std::to_string(n), alt_odd_sum_form(n), prec);
}

// ---------------------------------------------------------------------------
// Closed-form tails

namespace {

enum class TailFamily { odd, alt_odd, even, alt_even };

std::mutex g_tail_mutex;
std::map<std::tuple<TailFamily, unsigned long, unsigned long, Prec>, Interval> g_tail_cache;

Interval tail_impl(TailFamily fam, unsigned long s, unsigned long K, Prec prec) {
    {
        std::lock_guard<std::mutex> lock(g_tail_mutex);
        auto it = g_tail_cache.find({fam, s, K, prec});
        if (it != g_tail_cache.end()) return it->second;
    }

    ExactForm full;
    switch (fam) {
        case TailFamily::odd:
            if (s % 2 != 0) throw RejectedInput("tail_odd_pow: s must be even");
            full = odd_zeta_even_form(s / 2);
            break;
        case TailFamily::alt_odd:
            if (s % 2 != 1) throw RejectedInput("tail_alt_odd_pow: s must be odd");
            full = alt_odd_sum_form((s - 1) / 2);
            break;
        case TailFamily::even:
            if (s % 2 != 0) throw RejectedInput("tail_even_pow: s must be even");
            full = even_zeta_form(s / 2);
            break;
        case TailFamily::alt_even:
            if (s % 2 != 0) throw RejectedInput("tail_alt_even_pow: s must be even");
            full = alt_even_zeta_form(s / 2);
            break;
    }

    Rat partial(0);
    const bool alternating = fam == TailFamily::alt_odd || fam == TailFamily::alt_even;
    const bool odd_base = fam == TailFamily::odd || fam == TailFamily::alt_odd;
    for (unsigned long k = 1; k <= K; ++k) {
        Int base = odd_base ? Int(2 * k - 1) : Int(k);
        Rat term = make_rat(Int(1), int_pow(base, s));
        if (alternating && k % 2 == 0) term = -term;
        partial += term;
    }

    // The subtraction cancels down to the first omitted term, a factor of
    // about (first tail base)^s below the full sum; work at a precision that
    // absorbs the cancellation so the result keeps full relative accuracy.
    const double first_base = odd_base ? 2.0 * static_cast<double>(K) + 1.0
                                       : static_cast<double>(K) + 1.0;
    const Prec boost =
        static_cast<Prec>(static_cast<double>(s) * std::log2(first_base)) + 32;
    Interval out =
        (full.eval(prec + boost) - Interval::from_rat(partial, prec + boost))
            .rounded_to(prec);
    std::lock_guard<std::mutex> lock(g_tail_mutex);
    g_tail_cache.emplace(std::make_tuple(fam, s, K, prec), out);
    return out;
}

} // namespace

Interval tail_odd_pow(unsigned long s, unsigned long K, Prec prec) {
    return tail_impl(TailFamily::odd, s, K, prec);
}
Interval tail_alt_odd_pow(unsigned long s, unsigned long K, Prec prec) {
    return tail_impl(TailFamily::alt_odd, s, K, prec);
}
Interval tail_even_pow(unsigned long s, unsigned long K, Prec prec) {
    return tail_impl(TailFamily::even, s, K, prec);
}
Interval tail_alt_even_pow(unsigned long s, unsigned long K, Prec prec) {
    return tail_impl(TailFamily::alt_even, s, K, prec);
}

// ---------------------------------------------------------------------------
// Registry S1..S15
//
// Every term rule below is a finite product of factors 1/(k-a) with a at
// least one below the first summed index, hence completely monotone on its
// summation ray; that is what licenses the accelerated oracle summation.

namespace {

Interval inv_int(const Int& d, Prec prec) {
    return Interval::from_rat(make_rat(Int(1), d), prec);
}

struct RegistryEntry {
    ExactForm (*form)();
    SeriesRule (*rule)();
};

SeriesRule rule_s1() {
    SeriesRule r;
    r.name = "S1";
    r.first_k = 2;
    r.term = [](const Int& k, Prec p) {
        Int u = 2 * k - 1;
        return inv_int(k * (k - 1) * u * u, p);
    };
    // k(k-1)(2k-1)^2 >= k^4/2 for k >= 2
    r.envelope_c = 2;
    r.envelope_p = 4;
    r.envelope_from = 2;
    return r;
}

SeriesRule rule_s2() {
    SeriesRule r;
    r.name = "S2";
    r.first_k = 2;
    r.alternating = true;
    r.leading_sign = -1; // (-1)^{k+1} at k=2
    r.term = [](const Int& k, Prec p) { return inv_int(k * (k - 1) * (2 * k - 1), p); };
    r.envelope_c = 2;
    r.envelope_p = 3;
    r.envelope_from = 2;
    return r;
}

SeriesRule rule_inv_odd_pow(const char* name, unsigned long s, unsigned long first,
                            bool alternating) {
    SeriesRule r;
    r.name = name;
    r.first_k = first;
    r.alternating = alternating;
    if (alternating) r.leading_sign = (first % 2 == 1) ? 1 : -1; // matches (-1)^{k+1}
    r.term = [s](const Int& k, Prec p) { return inv_int(int_pow(2 * k - 1, s), p); };
    r.envelope_c = 1; // (2k-1)^s >= k^s
    r.envelope_p = static_cast<int>(s);
    r.envelope_from = first;
    return r;
}

// 1/(k^a (2k+c)) with c in {-1, +1}
SeriesRule rule_pow_linear(const char* name, unsigned long a, int c, bool alternating) {
    SeriesRule r;
    r.name = name;
    r.first_k = 1;
    r.alternating = alternating;
    r.term = [a, c](const Int& k, Prec p) {
        return inv_int(int_pow(k, a) * (2 * k + c), p);
    };
    // 2k + c >= k for k >= 1 (both signs of c)
    r.envelope_c = 1;
    r.envelope_p = static_cast<int>(a) + 1;
    r.envelope_from = 1;
    return r;
}

SeriesRule rule_s14() {
    SeriesRule r;
    r.name = "S14";
    r.first_k = 2;
    r.term = [](const Int& k, Prec p) {
        return inv_int(int_pow(2 * k - 1, 4) * k * (k - 1), p);
    };
    // (2k-1)^4 k(k-1) >= k^4 * k * k/2
    r.envelope_c = 2;
    r.envelope_p = 6;
    r.envelope_from = 2;
    return r;
}

SeriesRule rule_s15() {
    SeriesRule r;
    r.name = "S15";
    r.first_k = 2;
    r.term = [](const Int& k, Prec p) {
        Int kk = k * (k - 1);
        return inv_int(int_pow(2 * k - 1, 4) * kk * kk, p);
    };
    // (2k-1)^4 k^2 (k-1)^2 >= k^4 k^2 k^2/4
    r.envelope_c = 4;
    r.envelope_p = 8;
    r.envelope_from = 2;
    return r;
}

const std::map<std::string, RegistryEntry>& registry() {
    static const std::map<std::string, RegistryEntry> table = {
        {"S1",
         {[] {
              return ExactForm::rational(5) + ExactForm::pi_power(Rat(-1, 2), 2);
          },
          rule_s1}},
        {"S2",
         {[] { return ExactForm::rational(3) + ExactForm::pi_power(-1, 1); }, rule_s2}},
        {"S3",
         {[] {
              return ExactForm::pi_power(Rat(1, 96), 4) + ExactForm::rational(-1);
          },
          [] { return rule_inv_odd_pow("S3", 4, 2, false); }}},
        {"S4",
         {[] {
              return ExactForm::pi_power(Rat(1, 960), 6) + ExactForm::rational(-1);
          },
          [] { return rule_inv_odd_pow("S4", 6, 2, false); }}},
        {"S5",
         {[] {
              return ExactForm::pi_power(Rat(1, 32), 3) + ExactForm::rational(-1);
          },
          [] { return rule_inv_odd_pow("S5", 3, 2, true); }}},
        {"S6",
         {[] {
              return ExactForm::pi_power(1, 1) + ExactForm::ln2_term(-2) +
                     ExactForm::pi_power(Rat(-1, 12), 2);
          },
          [] { return rule_pow_linear("S6", 2, -1, true); }}},
        {"S7",
         {[] {
              return ExactForm::rational(4) + ExactForm::ln2_term(-2) +
                     ExactForm::pi_power(-1, 1) + ExactForm::pi_power(Rat(1, 12), 2);
          },
          [] { return rule_pow_linear("S7", 2, 1, true); }}},
        {"S8",
         {[] {
              return ExactForm::pi_power(Rat(-1, 6), 2) + ExactForm::ln2_term(4);
          },
          [] { return rule_pow_linear("S8", 2, -1, false); }}},
        {"S9",
         {[] {
              return ExactForm::rational(-4) + ExactForm::ln2_term(4) +
                     ExactForm::pi_power(Rat(1, 6), 2);
          },
          [] { return rule_pow_linear("S9", 2, 1, false); }}},
        {"S10",
         {[] {
              return ExactForm::pi_power(4, 1) + ExactForm::ln2_term(-8) +
                     ExactForm::pi_power(Rat(-1, 3), 2) + ExactForm::zeta3_term(Rat(-3, 2)) +
                     ExactForm::pi_power(Rat(-7, 720), 4);
          },
          [] { return rule_pow_linear("S10", 4, -1, true); }}},
        {"S11",
         {[] {
              return ExactForm::rational(16) + ExactForm::pi_power(-4, 1) +
                     ExactForm::ln2_term(-8) + ExactForm::pi_power(Rat(1, 3), 2) +
                     ExactForm::zeta3_term(Rat(-3, 2)) + ExactForm::pi_power(Rat(7, 720), 4);
          },
          [] { return rule_pow_linear("S11", 4, 1, true); }}},
        {"S12",
         {[] {
              return ExactForm::ln2_term(16) + ExactForm::pi_power(Rat(-2, 3), 2) +
                     ExactForm::zeta3_term(-2) + ExactForm::pi_power(Rat(-1, 90), 4);
          },
          [] { return rule_pow_linear("S12", 4, -1, false); }}},
        {"S13",
         {[] {
              return ExactForm::rational(-16) + ExactForm::ln2_term(16) +
                     ExactForm::pi_power(Rat(2, 3), 2) + ExactForm::zeta3_term(-2) +
                     ExactForm::pi_power(Rat(1, 90), 4);
          },
          [] { return rule_pow_linear("S13", 4, 1, false); }}},
        {"S14",
         {[] {
              return ExactForm::rational(9) + ExactForm::pi_power(Rat(-1, 24), 4) +
                     ExactForm::pi_power(Rat(-1, 2), 2);
          },
          rule_s14}},
        {"S15",
         {[] {
              return ExactForm::rational(-59) + ExactForm::pi_power(Rat(13, 3), 2) +
                     ExactForm::pi_power(Rat(1, 6), 4);
          },
          rule_s15}},
    };
    return table;
}

} // namespace

std::vector<std::string> sum_registry_ids() {
    std::vector<std::string> ids;
    for (const auto& [id, entry] : registry()) ids.push_back(id);
    return ids;
}

ClosedFormConstant registry_constant(const std::string& id, Prec prec) {
    auto it = registry().find(id);
    if (it == registry().end()) throw RejectedInput("unknown sum id '" + id + "'");
    return make_constant(id, it->second.form(), prec);
}

SeriesRule registry_rule(const std::string& id) {
    auto it = registry().find(id);
    if (it == registry().end()) throw RejectedInput("unknown sum id '" + id + "'");
    return it->second.rule();
}

BruteResult brute_sum(const SeriesRule& rule, Prec prec, const BigFloat& tolerance) {
    SumOutcome out = brute_force_sum(rule, prec, tolerance);
    return BruteResult{out.value, out.tail, out.method};
}

} // namespace trig_enclose
