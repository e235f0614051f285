#include "trig_enclose/bigfloat.hpp"

#include <cstdlib>
#include <stdexcept>

namespace trig_enclose {

BigFloat::BigFloat(Prec prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(v_, other.precision());
    mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(v_, other.precision());
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    if (this != &other) mpfr_swap(v_, other.v_);
    return *this;
}

BigFloat::~BigFloat() {
    mpfr_clear(v_);
}

BigFloat BigFloat::from_double(double d, Prec prec) {
    BigFloat r(prec);
    mpfr_set_d(r.v_, d, MPFR_RNDN); // exact for prec >= 53
    return r;
}

BigFloat BigFloat::from_long(long v, Prec prec) {
    BigFloat r(prec);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_rat(const Rat& q, Prec prec, mpfr_rnd_t rnd) {
    BigFloat r(prec);
    mpfr_set_q(r.v_, q.get_mpq_t(), rnd);
    return r;
}

BigFloat BigFloat::from_string(const std::string& s, Prec prec, mpfr_rnd_t rnd) {
    BigFloat r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, rnd) != 0)
        throw std::invalid_argument("BigFloat: cannot parse '" + s + "'");
    return r;
}

BigFloat BigFloat::pow2(long e, Prec prec) {
    BigFloat r(prec);
    mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
}

Rat BigFloat::to_rat() const {
    if (!is_finite()) throw std::domain_error("BigFloat::to_rat: non-finite value");
    Rat q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
}

std::string BigFloat::to_decimal(std::size_t digits) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return sign() < 0 ? "-inf" : "inf";
    if (is_zero()) return "0";
    mpfr_exp_t e = 0;
    char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
    std::string m(s);
    mpfr_free_str(s);
    std::string sign_part;
    if (!m.empty() && m[0] == '-') {
        sign_part = "-";
        m.erase(0, 1);
    }
    // mpfr exponent convention: value = 0.m * 10^e
    std::string out = sign_part + m.substr(0, 1);
    if (m.size() > 1) out += "." + m.substr(1);
    out += "e" + std::to_string(static_cast<long>(e - 1));
    return out;
}

int cmp(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.raw(), b.raw()); }
bool operator<(const BigFloat& a, const BigFloat& b) { return cmp(a, b) < 0; }
bool operator<=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) <= 0; }
bool operator>(const BigFloat& a, const BigFloat& b) { return cmp(a, b) > 0; }
bool operator>=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) >= 0; }
bool operator==(const BigFloat& a, const BigFloat& b) { return cmp(a, b) == 0; }

} // namespace trig_enclose
