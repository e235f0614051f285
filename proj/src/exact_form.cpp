#include "trig_enclose/exact_form.hpp"

#include <sstream>
#include <stdexcept>

namespace trig_enclose {

void ExactForm::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ExactForm ExactForm::rational(const Rat& r) {
    ExactForm f;
    f.add_term(Monomial{}, r);
    return f;
}

ExactForm ExactForm::pi_power(const Rat& coef, int pow) {
    ExactForm f;
    f.add_term(Monomial{pow, 0, 0}, coef);
    return f;
}

ExactForm ExactForm::ln2_term(const Rat& coef) {
    ExactForm f;
    f.add_term(Monomial{0, 1, 0}, coef);
    return f;
}

ExactForm ExactForm::zeta3_term(const Rat& coef) {
    ExactForm f;
    f.add_term(Monomial{0, 0, 1}, coef);
    return f;
}

ExactForm ExactForm::operator+(const ExactForm& other) const {
    ExactForm f = *this;
    for (const auto& [m, c] : other.terms_) f.add_term(m, c);
    return f;
}

ExactForm ExactForm::operator-(const ExactForm& other) const {
    ExactForm f = *this;
    for (const auto& [m, c] : other.terms_) f.add_term(m, -c);
    return f;
}

ExactForm ExactForm::operator-() const {
    ExactForm f;
    for (const auto& [m, c] : terms_) f.add_term(m, -c);
    return f;
}

ExactForm ExactForm::operator*(const ExactForm& other) const {
    ExactForm f;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_) {
            Monomial m{ma.pi_pow + mb.pi_pow, ma.ln2_deg + mb.ln2_deg,
                       ma.zeta3_deg + mb.zeta3_deg};
            if (m.ln2_deg > 1 || m.zeta3_deg > 1)
                throw std::logic_error("ExactForm: transcendental degree above 1");
            f.add_term(m, ca * cb);
        }
    return f;
}

ExactForm ExactForm::scaled(const Rat& r) const {
    ExactForm f;
    if (r == 0) return f;
    for (const auto& [m, c] : terms_) f.add_term(m, c * r);
    return f;
}

ExactForm ExactForm::scaled_pi(const Rat& coef, int pow) const {
    ExactForm f;
    if (coef == 0) return f;
    for (const auto& [m, c] : terms_)
        f.add_term(Monomial{m.pi_pow + pow, m.ln2_deg, m.zeta3_deg}, c * coef);
    return f;
}

bool ExactForm::is_rational(Rat* out) const {
    if (terms_.empty()) {
        if (out) *out = 0;
        return true;
    }
    if (terms_.size() == 1 && terms_.begin()->first == Monomial{}) {
        if (out) *out = terms_.begin()->second;
        return true;
    }
    return false;
}

Interval ExactForm::eval(Prec prec) const {
    const Prec wp = prec + 16;
    Interval acc(wp);
    const Interval pi = const_pi(wp);
    for (const auto& [m, c] : terms_) {
        Interval t = Interval::from_rat(c, wp);
        if (m.pi_pow != 0) t *= pi.pow_int(m.pi_pow);
        if (m.ln2_deg) t *= const_ln2(wp);
        if (m.zeta3_deg) t *= const_zeta3(wp);
        acc += t;
    }
    return acc.rounded_to(prec);
}

std::string ExactForm::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (!first) {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::string basis;
        if (m.pi_pow == 1) basis = "pi";
        else if (m.pi_pow != 0) basis = "pi^" + std::to_string(m.pi_pow);
        if (m.ln2_deg) basis += (basis.empty() ? "" : "*") + std::string("ln2");
        if (m.zeta3_deg) basis += (basis.empty() ? "" : "*") + std::string("zeta3");
        if (basis.empty()) {
            os << rat_to_string(a);
        } else if (a == 1) {
            os << basis;
        } else if (a == -1) {
            os << "-" << basis;
        } else {
            os << rat_to_string(a) << "*" << basis;
        }
    }
    return os.str();
}

} // namespace trig_enclose
