#include "trig_enclose/polygamma.hpp"

#include "trig_enclose/errors.hpp"
#include "trig_enclose/exact_numbers.hpp"

namespace trig_enclose {

namespace {

bool is_half_integer_arg(const Rat& z) {
    const Int& den = z.get_den();
    return den == 1 || den == 2;
}

} // namespace

PolygammaValue polygamma(int m, const Rat& z, Prec prec) {
    if (m != 1 && m != 3) throw RejectedInput("polygamma: order must be 1 or 3");
    if (z <= 0) throw RejectedInput("polygamma: argument must be positive");
    if (!is_half_integer_arg(z))
        throw RejectedInput("polygamma: argument must be an integer or half-integer");

    // Shift until the asymptotic series can certify the target: its smallest
    // term is of order e^{-2 pi Z}, so Z around 0.12*prec bits suffices with
    // margin; max(20, prec/8) is kept as a floor.
    const long z_min = std::max<long>({20, static_cast<long>(prec) / 8,
                                       static_cast<long>(0.12 * static_cast<double>(prec)) + 8});
    long shift = 0;
    {
        Rat deficit = Rat(z_min) - z;
        if (deficit > 0) {
            shift = static_cast<long>(mpz_get_si(Int(deficit.get_num() / deficit.get_den()).get_mpz_t())) + 1;
        }
    }

    const Rat m_fact = (m == 1) ? Rat(1) : Rat(6);
    Rat head(0);
    for (long i = 0; i < shift; ++i) {
        Rat w = z + i;
        head += m_fact / rat_pow(w, m + 1);
    }

    const Rat Z = z + shift;

    // Asymptotic expansion with enveloping remainder (first omitted term
    // bounds the remainder and carries its sign, for real Z > 0):
    //   psi'(Z)   = 1/Z + 1/(2Z^2) + sum_j B_{2j} Z^{-2j-1}
    //   psi'''(Z) = 2/Z^3 + 3/Z^4  + sum_j (2j+1)(2j+2) B_{2j} Z^{-2j-3}
    Rat series(0);
    if (m == 1)
        series = Rat(1) / Z + Rat(1, 2) / rat_pow(Z, 2);
    else
        series = Rat(2) / rat_pow(Z, 3) + Rat(3) / rat_pow(Z, 4);

    const Rat cutoff = make_rat(Int(1), pow2(static_cast<unsigned long>(prec) + 16));
    Rat next_term(0);
    unsigned long j = 1;
    Rat prev_mag(0);
    while (true) {
        Rat b = bernoulli(2 * j);
        Rat term = (m == 1)
                       ? Rat(b / rat_pow(Z, static_cast<long>(2 * j + 1)))
                       : Rat(Rat(Int(2 * j + 1) * Int(2 * j + 2)) * b /
                             rat_pow(Z, static_cast<long>(2 * j + 3)));
        Rat mag = abs(term);
        if (j > 1 && mag > prev_mag)
            throw BudgetError("polygamma: asymptotic series diverging before target",
                              BigFloat::from_rat(mag, 64, MPFR_RNDU).to_decimal(8));
        if (mag < cutoff) {
            next_term = term;
            break;
        }
        series += term;
        prev_mag = mag;
        ++j;
        if (2 * j > kMaxIndex)
            throw BudgetError("polygamma: series budget exceeded", "");
    }

    const Prec wp = prec + 16;
    Interval value = Interval::from_rat(head + series, wp) +
                     Interval::zero_to(BigFloat::from_rat(
                         next_term, wp, next_term >= 0 ? MPFR_RNDU : MPFR_RNDD));

    PolygammaValue out;
    out.order = m;
    out.argument = z;
    out.value = value.rounded_to(prec);
    out.tail = TailBound{j, BigFloat::from_rat(abs(next_term), prec, MPFR_RNDU)};
    return out;
}

Interval tail_inverse_quartic(unsigned long N, Prec prec) {
    Interval p3 = polygamma(3, Rat(static_cast<long>(N) + 1), prec + 8).value;
    return (p3 / Interval::from_long(6, prec + 8)).rounded_to(prec);
}

Interval tail_4k2_minus_1_sq(unsigned long N, Prec prec) {
    Rat z = Rat(2 * static_cast<long>(N) + 1, 2); // N + 1/2
    Interval p1 = polygamma(1, z, prec + 8).value;
    Int twoN1 = Int(2 * N + 1);
    Rat corr = make_rat(Int(N + 1), 2 * twoN1 * twoN1);
    return (p1 / Interval::from_long(8, prec + 8) - Interval::from_rat(corr, prec + 8))
        .rounded_to(prec);
}

} // namespace trig_enclose
