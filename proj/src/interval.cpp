#include "trig_enclose/interval.hpp"

#include <cassert>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "trig_enclose/errors.hpp"

namespace trig_enclose {

namespace {

Prec max_prec(const Interval& a, const Interval& b) {
    return a.precision() > b.precision() ? a.precision() : b.precision();
}

} // namespace

Interval::Interval(Prec prec) : lo_(prec), hi_(prec) {}

Interval::Interval(BigFloat lo, BigFloat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (!(lo_ <= hi_)) throw std::logic_error("Interval: lo > hi");
}

Interval Interval::point(const BigFloat& x) { return Interval(x, x); }

Interval Interval::from_long(long v, Prec prec) {
    Interval r(prec);
    mpfr_set_si(r.lo_.raw(), v, MPFR_RNDD);
    mpfr_set_si(r.hi_.raw(), v, MPFR_RNDU);
    return r;
}

Interval Interval::from_rat(const Rat& q, Prec prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_.raw(), q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_.raw(), q.get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::from_int(const Int& n, Prec prec) {
    Interval r(prec);
    mpfr_set_z(r.lo_.raw(), n.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_.raw(), n.get_mpz_t(), MPFR_RNDU);
    return r;
}

Interval Interval::pm(const BigFloat& mag) {
    if (mag.sign() < 0) throw std::logic_error("Interval::pm: negative magnitude");
    Interval r(mag.precision());
    mpfr_neg(r.lo_.raw(), mag.raw(), MPFR_RNDD);
    mpfr_set(r.hi_.raw(), mag.raw(), MPFR_RNDU);
    return r;
}

Interval Interval::zero_to(const BigFloat& mag) {
    Interval r(mag.precision());
    if (mag.sign() >= 0)
        mpfr_set(r.hi_.raw(), mag.raw(), MPFR_RNDU);
    else
        mpfr_set(r.lo_.raw(), mag.raw(), MPFR_RNDD);
    return r;
}

bool Interval::contains_rat(const Rat& q) const {
    return mpfr_cmp_q(lo_.raw(), q.get_mpq_t()) <= 0 &&
           mpfr_cmp_q(hi_.raw(), q.get_mpq_t()) >= 0;
}

BigFloat Interval::mid() const {
    BigFloat m(precision());
    mpfr_add(m.raw(), lo_.raw(), hi_.raw(), MPFR_RNDN);
    mpfr_div_2ui(m.raw(), m.raw(), 1, MPFR_RNDN);
    return m;
}

BigFloat Interval::width() const {
    BigFloat w(precision());
    mpfr_sub(w.raw(), hi_.raw(), lo_.raw(), MPFR_RNDU);
    return w;
}

BigFloat Interval::mag() const {
    BigFloat a(precision()), b(precision());
    mpfr_abs(a.raw(), lo_.raw(), MPFR_RNDU);
    mpfr_abs(b.raw(), hi_.raw(), MPFR_RNDU);
    return a > b ? a : b;
}

Interval Interval::operator-() const {
    Interval r(precision());
    mpfr_neg(r.lo_.raw(), hi_.raw(), MPFR_RNDD);
    mpfr_neg(r.hi_.raw(), lo_.raw(), MPFR_RNDU);
    return r;
}

Interval Interval::operator+(const Interval& b) const {
    Interval r(max_prec(*this, b));
    mpfr_add(r.lo_.raw(), lo_.raw(), b.lo_.raw(), MPFR_RNDD);
    mpfr_add(r.hi_.raw(), hi_.raw(), b.hi_.raw(), MPFR_RNDU);
    return r;
}

Interval Interval::operator-(const Interval& b) const {
    Interval r(max_prec(*this, b));
    mpfr_sub(r.lo_.raw(), lo_.raw(), b.hi_.raw(), MPFR_RNDD);
    mpfr_sub(r.hi_.raw(), hi_.raw(), b.lo_.raw(), MPFR_RNDU);
    return r;
}

Interval Interval::operator*(const Interval& b) const {
    const Prec p = max_prec(*this, b);
    Interval r(p);
    // min over the four endpoint products rounded down, max rounded up.
    BigFloat t(p), best(p);
    mpfr_srcptr as[2] = {lo_.raw(), hi_.raw()};
    mpfr_srcptr bs[2] = {b.lo_.raw(), b.hi_.raw()};
    bool first = true;
    for (auto a : as)
        for (auto bb : bs) {
            mpfr_mul(t.raw(), a, bb, MPFR_RNDD);
            if (first || t < best) best = t;
            first = false;
        }
    r.lo_ = best;
    first = true;
    for (auto a : as)
        for (auto bb : bs) {
            mpfr_mul(t.raw(), a, bb, MPFR_RNDU);
            if (first || t > best) best = t;
            first = false;
        }
    r.hi_ = best;
    return r;
}

Interval Interval::operator/(const Interval& b) const {
    if (b.contains_zero()) throw DomainError("Interval division by interval containing zero");
    const Prec p = max_prec(*this, b);
    Interval r(p);
    BigFloat t(p), best(p);
    mpfr_srcptr as[2] = {lo_.raw(), hi_.raw()};
    mpfr_srcptr bs[2] = {b.lo_.raw(), b.hi_.raw()};
    bool first = true;
    for (auto a : as)
        for (auto bb : bs) {
            mpfr_div(t.raw(), a, bb, MPFR_RNDD);
            if (first || t < best) best = t;
            first = false;
        }
    r.lo_ = best;
    first = true;
    for (auto a : as)
        for (auto bb : bs) {
            mpfr_div(t.raw(), a, bb, MPFR_RNDU);
            if (first || t > best) best = t;
            first = false;
        }
    r.hi_ = best;
    return r;
}

Interval& Interval::operator+=(const Interval& b) { return *this = *this + b; }
Interval& Interval::operator-=(const Interval& b) { return *this = *this - b; }
Interval& Interval::operator*=(const Interval& b) { return *this = *this * b; }

Interval Interval::abs() const {
    Interval r(precision());
    if (lo_.sign() >= 0) return *this;
    if (hi_.sign() <= 0) return -*this;
    // straddles zero
    mpfr_set_zero(r.lo_.raw(), 1);
    r.hi_ = mag();
    return r;
}

Interval Interval::recip() const {
    return Interval::from_long(1, precision()) / *this;
}

Interval Interval::sqrt() const {
    if (lo_.sign() < 0) throw DomainError("Interval::sqrt of negative interval");
    Interval r(precision());
    mpfr_sqrt(r.lo_.raw(), lo_.raw(), MPFR_RNDD);
    mpfr_sqrt(r.hi_.raw(), hi_.raw(), MPFR_RNDU);
    return r;
}

Interval Interval::cbrt() const {
    Interval r(precision());
    mpfr_cbrt(r.lo_.raw(), lo_.raw(), MPFR_RNDD);
    mpfr_cbrt(r.hi_.raw(), hi_.raw(), MPFR_RNDU);
    return r;
}

Interval Interval::pow_int(long e) const {
    const Prec p = precision();
    if (e == 0) return from_long(1, p);
    if (e < 0) return recip().pow_int(-e);
    const unsigned long n = static_cast<unsigned long>(e);
    Interval r(p);
    const bool odd = (n % 2 == 1);
    if (odd || lo_.sign() >= 0) {
        // monotone on the whole line (odd) or on [0, inf)
        mpfr_pow_ui(r.lo_.raw(), lo_.raw(), n, MPFR_RNDD);
        mpfr_pow_ui(r.hi_.raw(), hi_.raw(), n, MPFR_RNDU);
    } else if (hi_.sign() <= 0) {
        // even power of a nonpositive interval: decreasing
        mpfr_pow_ui(r.lo_.raw(), hi_.raw(), n, MPFR_RNDD);
        mpfr_pow_ui(r.hi_.raw(), lo_.raw(), n, MPFR_RNDU);
    } else {
        mpfr_set_zero(r.lo_.raw(), 1);
        BigFloat m = mag();
        mpfr_pow_ui(r.hi_.raw(), m.raw(), n, MPFR_RNDU);
    }
    return r;
}

Interval Interval::mul_2exp(long e) const {
    Interval r(precision());
    mpfr_mul_2si(r.lo_.raw(), lo_.raw(), e, MPFR_RNDD);
    mpfr_mul_2si(r.hi_.raw(), hi_.raw(), e, MPFR_RNDU);
    return r;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
    Interval r(max_prec(a, b));
    r.lo_ = a.lo_ < b.lo_ ? a.lo_ : b.lo_;
    r.hi_ = a.hi_ > b.hi_ ? a.hi_ : b.hi_;
    return r;
}

Interval Interval::meet(const Interval& a, const Interval& b) {
    Interval r(max_prec(a, b));
    r.lo_ = a.lo_ > b.lo_ ? a.lo_ : b.lo_;
    r.hi_ = a.hi_ < b.hi_ ? a.hi_ : b.hi_;
    if (!(r.lo_ <= r.hi_)) throw std::logic_error("Interval::meet: disjoint intervals");
    return r;
}

Interval Interval::rounded_to(Prec prec) const {
    Interval r(prec);
    mpfr_set(r.lo_.raw(), lo_.raw(), MPFR_RNDD);
    mpfr_set(r.hi_.raw(), hi_.raw(), MPFR_RNDU);
    return r;
}

std::string Interval::to_string(std::size_t digits) const {
    return "[" + lo_.to_decimal(digits) + ", " + hi_.to_decimal(digits) + "]";
}

// ---------------------------------------------------------------------------
// Constants

namespace {

std::mutex g_const_mutex;
std::map<Prec, Interval> g_pi_cache;
std::map<Prec, Interval> g_ln2_cache;
std::map<Prec, Interval> g_zeta3_cache;

// ln 2 = sum_{k>=1} 1/(k 2^k).  Tail after K terms is below
// (1/(K+1)) * 2^-K, since the remaining series is dominated by a geometric
// one with ratio 1/2.
Interval compute_ln2(Prec prec) {
    const unsigned long K = static_cast<unsigned long>(prec) + 16;
    Rat partial(0);
    Rat term; // 1/(k 2^k)
    Int p2 = 2;
    for (unsigned long k = 1; k <= K; ++k) {
        term = make_rat(Int(1), Int(k) * p2);
        partial += term;
        p2 *= 2;
    }
    Interval sum = Interval::from_rat(partial, prec + 8);
    BigFloat tail = BigFloat::from_rat(make_rat(Int(1), Int(K + 1) * trig_enclose::pow2(K)),
                                       prec + 8, MPFR_RNDU);
    return (sum + Interval::zero_to(tail)).rounded_to(prec);
}

// zeta(3) = (5/2) sum_{k>=1} (-1)^{k-1} / (k^3 binom(2k,k)).  Terms strictly
// decrease in magnitude, so the remainder is bounded by the first omitted
// term and carries its sign.
Interval compute_zeta3(Prec prec) {
    const Prec wp = prec + 16;
    Rat partial(0);
    unsigned long k = 1;
    Int binom_2k_k;
    Rat term;
    const Rat cutoff = make_rat(Int(1), trig_enclose::pow2(static_cast<unsigned long>(wp)));
    int sign = 1;
    while (true) {
        mpz_bin_uiui(binom_2k_k.get_mpz_t(), 2 * k, k);
        term = make_rat(Int(5), Int(2) * Int(k) * Int(k) * Int(k) * binom_2k_k);
        if (term < cutoff) break;
        partial += sign > 0 ? term : -term;
        sign = -sign;
        ++k;
        if (k > 100000) throw BudgetError("zeta3 series budget exceeded", "");
    }
    Interval sum = Interval::from_rat(partial, wp);
    // first omitted term: sign `sign`, magnitude `term`
    BigFloat t = BigFloat::from_rat(sign > 0 ? term : -term, wp, sign > 0 ? MPFR_RNDU : MPFR_RNDD);
    return (sum + Interval::zero_to(t)).rounded_to(prec);
}

} // namespace

Interval const_pi(Prec prec) {
    std::lock_guard<std::mutex> lock(g_const_mutex);
    auto it = g_pi_cache.find(prec);
    if (it != g_pi_cache.end()) return it->second;
    Interval r(prec);
    BigFloat lo(prec), hi(prec);
    mpfr_const_pi(lo.raw(), MPFR_RNDD);
    mpfr_const_pi(hi.raw(), MPFR_RNDU);
    r = Interval(lo, hi);
    g_pi_cache.emplace(prec, r);
    return r;
}

Interval const_ln2(Prec prec) {
    std::lock_guard<std::mutex> lock(g_const_mutex);
    auto it = g_ln2_cache.find(prec);
    if (it != g_ln2_cache.end()) return it->second;
    Interval r = compute_ln2(prec);
    g_ln2_cache.emplace(prec, r);
    return r;
}

Interval const_zeta3(Prec prec) {
    std::lock_guard<std::mutex> lock(g_const_mutex);
    auto it = g_zeta3_cache.find(prec);
    if (it != g_zeta3_cache.end()) return it->second;
    Interval r = compute_zeta3(prec);
    g_zeta3_cache.emplace(prec, r);
    return r;
}

// ---------------------------------------------------------------------------
// Elementary functions

namespace {

using MpfrUnary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

Interval point_eval(MpfrUnary f, const BigFloat& x, Prec prec) {
    BigFloat lo(prec), hi(prec);
    f(lo.raw(), x.raw(), MPFR_RNDD);
    f(hi.raw(), x.raw(), MPFR_RNDU);
    return Interval(lo, hi);
}

Interval monotone_incr(MpfrUnary f, const Interval& x) {
    BigFloat lo(x.precision()), hi(x.precision());
    f(lo.raw(), x.lo().raw(), MPFR_RNDD);
    f(hi.raw(), x.hi().raw(), MPFR_RNDU);
    return Interval(lo, hi);
}

Interval monotone_decr(MpfrUnary f, const Interval& x) {
    BigFloat lo(x.precision()), hi(x.precision());
    f(lo.raw(), x.hi().raw(), MPFR_RNDD);
    f(hi.raw(), x.lo().raw(), MPFR_RNDU);
    return Interval(lo, hi);
}

// x must lie within [lo_mult, hi_mult] * pi (conservative check against the
// pi enclosure).  Degenerate intervals skip the check: a point evaluation of
// a correctly rounded function needs no monotonicity.
void require_range(const Interval& x, const Rat& lo_mult, const Rat& hi_mult,
                   bool lo_strict, bool hi_strict, const char* fn) {
    const Interval pi = const_pi(x.precision());
    Interval lo_bound = Interval::from_rat(lo_mult, x.precision()) * pi;
    Interval hi_bound = Interval::from_rat(hi_mult, x.precision()) * pi;
    const bool lo_ok = lo_strict ? x.lo() > lo_bound.hi() : x.lo() >= lo_bound.hi();
    const bool hi_ok = hi_strict ? x.hi() < hi_bound.lo() : x.hi() <= hi_bound.lo();
    if (!lo_ok || !hi_ok)
        throw DomainError(std::string(fn) + ": interval argument outside monotone range");
}

} // namespace

Interval pt_sin(const BigFloat& x, Prec prec) { return point_eval(mpfr_sin, x, prec); }
Interval pt_cos(const BigFloat& x, Prec prec) { return point_eval(mpfr_cos, x, prec); }
Interval pt_tan(const BigFloat& x, Prec prec) { return point_eval(mpfr_tan, x, prec); }
Interval pt_sec(const BigFloat& x, Prec prec) { return point_eval(mpfr_sec, x, prec); }
Interval pt_csc(const BigFloat& x, Prec prec) { return point_eval(mpfr_csc, x, prec); }
Interval pt_cot(const BigFloat& x, Prec prec) { return point_eval(mpfr_cot, x, prec); }
Interval pt_tanh(const BigFloat& x, Prec prec) { return point_eval(mpfr_tanh, x, prec); }

Interval iv_sin(const Interval& x) {
    if (x.is_point()) return pt_sin(x.lo(), x.precision());
    require_range(x, Rat(-1, 2), Rat(1, 2), false, false, "iv_sin");
    return monotone_incr(mpfr_sin, x);
}

Interval iv_cos(const Interval& x) {
    if (x.is_point()) return pt_cos(x.lo(), x.precision());
    require_range(x, Rat(0), Rat(1), false, false, "iv_cos");
    return monotone_decr(mpfr_cos, x);
}

Interval iv_tan(const Interval& x) {
    if (x.is_point()) return pt_tan(x.lo(), x.precision());
    require_range(x, Rat(-1, 2), Rat(1, 2), true, true, "iv_tan");
    return monotone_incr(mpfr_tan, x);
}

Interval iv_sec(const Interval& x) {
    if (x.is_point()) return pt_sec(x.lo(), x.precision());
    require_range(x, Rat(0), Rat(1, 2), false, true, "iv_sec");
    return monotone_incr(mpfr_sec, x);
}

Interval iv_cot(const Interval& x) {
    if (x.is_point()) return pt_cot(x.lo(), x.precision());
    require_range(x, Rat(0), Rat(1), true, true, "iv_cot");
    return monotone_decr(mpfr_cot, x);
}

Interval iv_csc(const Interval& x) {
    if (x.is_point()) return pt_csc(x.lo(), x.precision());
    require_range(x, Rat(0), Rat(1, 2), true, false, "iv_csc");
    return monotone_decr(mpfr_csc, x);
}

Interval iv_tanh(const Interval& x) {
    if (x.is_point()) return pt_tanh(x.lo(), x.precision());
    return monotone_incr(mpfr_tanh, x);
}

} // namespace trig_enclose
