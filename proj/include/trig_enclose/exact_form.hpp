#ifndef TRIG_ENCLOSE_EXACT_FORM_HPP
#define TRIG_ENCLOSE_EXACT_FORM_HPP

#include <compare>
#include <map>
#include <string>

#include "trig_enclose/interval.hpp"
#include "trig_enclose/numbers.hpp"

namespace trig_enclose {

// Monomial over the constant basis: pi^p * ln2^a * zeta3^b.  The closed
// forms in scope never need a or b above 1.
struct Monomial {
    int pi_pow = 0;
    unsigned ln2_deg = 0;
    unsigned zeta3_deg = 0;
    auto operator<=>(const Monomial&) const = default;
};

// Exact linear combination of basis monomials with rational coefficients.
// Rounding happens only when eval() produces an Interval.
class ExactForm {
public:
    ExactForm() = default;

    static ExactForm rational(const Rat& r);
    static ExactForm pi_power(const Rat& coef, int pow);
    static ExactForm ln2_term(const Rat& coef);
    static ExactForm zeta3_term(const Rat& coef);

    ExactForm operator+(const ExactForm& other) const;
    ExactForm operator-(const ExactForm& other) const;
    ExactForm operator-() const;
    ExactForm operator*(const ExactForm& other) const;
    ExactForm scaled(const Rat& r) const;
    // Multiply by the monomial coef * pi^pow.
    ExactForm scaled_pi(const Rat& coef, int pow) const;

    bool operator==(const ExactForm& other) const { return terms_ == other.terms_; }
    bool is_zero() const { return terms_.empty(); }
    // The purely rational value, if the form has no transcendental part.
    bool is_rational(Rat* out = nullptr) const;

    Interval eval(Prec prec) const;
    std::string to_string() const;

    const std::map<Monomial, Rat>& terms() const { return terms_; }

private:
    void add_term(const Monomial& m, const Rat& c);
    std::map<Monomial, Rat> terms_;
};

} // namespace trig_enclose

#endif
