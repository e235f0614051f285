#include "trig_enclose/verifier.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "trig_enclose/best_constants.hpp"
#include "trig_enclose/errors.hpp"
#include "trig_enclose/exact_numbers.hpp"
#include "trig_enclose/remainder.hpp"
#include "trig_enclose/zeta_sums.hpp"

namespace trig_enclose {

namespace {

using MarginFn = std::function<Interval(const Interval&)>;

Interval min_iv(const Interval& a, const Interval& b) {
    BigFloat lo = a.lo() < b.lo() ? a.lo() : b.lo();
    BigFloat hi = a.hi() < b.hi() ? a.hi() : b.hi();
    return Interval(lo, hi);
}

// shared trigonometric building blocks at a point/interval inside (0, pi/2)
struct Trig {
    Interval x{64}, sinx{64}, cosx{64}, tanx{64};
    Interval sinc{64};     // sin x / x
    Interval tn{64};       // tan x / x
    Interval inv_sinc{64}; // x / sin x
    Interval x_cot{64};    // x / tan x
};

Trig trig_at(const Interval& x) {
    Trig t;
    t.x = x;
    t.sinx = iv_sin(x);
    t.cosx = iv_cos(x);
    t.tanx = iv_tan(x);
    t.sinc = t.sinx / x;
    t.tn = t.tanx / x;
    t.inv_sinc = x / t.sinx;
    t.x_cot = t.inv_sinc * t.cosx;
    return t;
}

Interval wilker2(const Trig& t) { return t.inv_sinc * t.inv_sinc + t.x_cot; }
Interval wilker1(const Trig& t) { return t.sinc * t.sinc + t.tn; }
Interval huygens1(const Trig& t) { return t.sinc.mul_2exp(1) + t.tn; }
Interval huygens2(const Trig& t) { return t.inv_sinc.mul_2exp(1) + t.x_cot; }

Interval sec2tan_at(const Interval& x) {
    Interval sec = iv_cos(x).recip();
    return x * sec * sec - iv_tan(x);
}

// (2/pi)^k as an exact form
ExactForm two_over_pi(unsigned k) { return ExactForm::pi_power(Rat(pow2(k)), -static_cast<int>(k)); }

enum class DomainKind { pi_half, five };

struct Entry {
    DomainKind domain = DomainKind::pi_half;
    std::function<MarginFn(Prec)> make;
};

// two-sided margin against a rational-bound pair from the bound registry
MarginFn make_ratio_bound_margin(const std::string& lower_id, const std::string& upper_id,
                                 char target, Prec prec) {
    return [=](const Interval& x) {
        Interval v{prec};
        switch (target) {
            case 't': v = iv_tan(x) / x; break;
            case 'h': v = iv_tanh(x) / x; break;
            case 's': v = iv_cos(x).recip(); break;
            default: throw std::logic_error("bad target");
        }
        Interval lo = rational_bound(lower_id, x, prec);
        Interval hi = rational_bound(upper_id, x, prec);
        return min_iv(v - lo, hi - v);
    };
}

// tanh t/t partial sums S_N(t)/t = sum_{j<=N} c_j t^{2j-2}, exact coefficients
Interval tanh_partial_over_t(const Interval& x, unsigned long N, Prec prec) {
    Interval acc(prec);
    for (unsigned long j = 1; j <= N; ++j)
        acc += Interval::from_rat(series_coefficient(FunctionId::tanh, j), prec) *
               x.pow_int(2 * static_cast<long>(j) - 2);
    return acc;
}

const std::map<std::string, Entry>& registry() {
    static const std::map<std::string, Entry> table = [] {
        std::map<std::string, Entry> t;

        t["becker-stark"] = {DomainKind::pi_half, [](Prec p) {
            return make_ratio_bound_margin("becker-stark.lower", "becker-stark.upper", 't', p);
        }};
        t["banjac"] = {DomainKind::pi_half, [](Prec p) {
            return make_ratio_bound_margin("banjac.lower", "banjac.upper", 't', p);
        }};
        t["chen.tan.N1"] = {DomainKind::pi_half, [](Prec p) {
            return make_ratio_bound_margin("chen.tan.N1.lower", "chen.tan.N1.upper", 't', p);
        }};
        t["chen.tanh.N1N2"] = {DomainKind::five, [](Prec p) {
            return make_ratio_bound_margin("chen.tanh.N1N2.lower", "chen.tanh.N1N2.upper", 'h', p);
        }};
        t["chen-sandor.sec"] = {DomainKind::pi_half, [](Prec p) {
            return make_ratio_bound_margin("chen-sandor.sec.lower", "chen-sandor.sec.upper", 's', p);
        }};
        t["chen.sec.N1"] = {DomainKind::pi_half, [](Prec p) {
            return make_ratio_bound_margin("chen.sec.N1.lower", "chen.sec.N1.upper", 's', p);
        }};

        t["tanh.corollary.m1"] = {DomainKind::five, [](Prec p) -> MarginFn {
            return [p](const Interval& x) {
                Interval r = iv_tanh(x) / x;
                return min_iv(r - tanh_partial_over_t(x, 2, p),
                              tanh_partial_over_t(x, 1, p) - r);
            };
        }};
        t["tanh.corollary.m2"] = {DomainKind::five, [](Prec p) -> MarginFn {
            return [p](const Interval& x) {
                Interval r = iv_tanh(x) / x;
                return min_iv(r - tanh_partial_over_t(x, 4, p),
                              tanh_partial_over_t(x, 3, p) - r);
            };
        }};

        t["wilker.classic"] = {DomainKind::pi_half, [](Prec p) -> MarginFn {
            return [p](const Interval& x) {
                return wilker1(trig_at(x)) - Interval::from_long(2, p);
            };
        }};
        t["wilker.sumner"] = {DomainKind::pi_half, [](Prec p) -> MarginFn {
            Interval lo_c = two_over_pi(4).eval(p);
            Interval hi_c = Interval::from_rat(Rat(8, 45), p);
            return [=](const Interval& x) {
                Trig tr = trig_at(x);
                Interval w = wilker1(tr) - Interval::from_long(2, p);
                Interval weight = x.pow_int(3) * tr.tanx;
                return min_iv(w - lo_c * weight, hi_c * weight - w);
            };
        }};
        t["chen-cheung.wilker.1"] = {DomainKind::pi_half, [](Prec p) -> MarginFn {
            Interval c4 = Interval::from_rat(Rat(8, 45), p);
            Interval lo_c = Interval::from_rat(Rat(16, 315), p);
            Interval hi_c = two_over_pi(6).eval(p);
            return [=](const Interval& x) {
                Trig tr = trig_at(x);
                Interval w = wilker1(tr) - Interval::from_long(2, p) - c4 * x.pow_int(4);
                Interval weight = x.pow_int(5) * tr.tanx;
                return min_iv(w - lo_c * weight, hi_c * weight - w);
            };
        }};
        t["chen-cheung.wilker.2"] = {DomainKind::pi_half, [](Prec p) -> MarginFn {
            Interval c4 = Interval::from_rat(Rat(8, 45), p);
            Interval c6 = Interval::from_rat(Rat(16, 315), p);
            Interval lo_c = Interval::from_rat(Rat(104, 4725), p);
            Interval hi_c = two_over_pi(8).eval(p);
            return [=](const Interval& x) {
                Trig tr = trig_at(x);
                Interval w = wilker1(tr) - Interval::from_long(2, p) - c4 * x.pow_int(4) -
                             c6 * x.pow_int(6);
                Interval weight = x.pow_int(7) * tr.tanx;
                return min_iv(w - lo_c * weight, hi_c * weight - w);
            };
        }};

        t["huygens.classic"] = {DomainKind::pi_half, [](Prec p) -> MarginFn {
            return [p](const Interval& x) {
                return huygens1(trig_at(x)) - Interval::from_long(3, p);
            };
        }};
        t["chen-cheung.huygens.1"] = {DomainKind::pi_half, [](Prec p) -> MarginFn {
            Interval lo_c = Interval::from_rat(Rat(3, 20), p);
            Interval hi_c = two_over_pi(4).eval(p);
            return [=](const Interval& x) {
                Trig tr = trig_at(x);
                Interval h = huygens1(tr) - Interval::from_long(3, p);
                Interval weight = x.pow_int(3) * tr.tanx;
                return min_iv(h - lo_c * weight, hi_c * weight - h);
            };
        }};
        t["chen-cheung.huygens.2"] = {DomainKind::pi_half, [](Prec p) -> MarginFn {
            Interval c4 = Interval::from_rat(Rat(3, 20), p);
            Interval lo_c = Interval::from_rat(Rat(3, 56), p);
            Interval hi_c = two_over_pi(6).eval(p);
            return [=](const Interval& x) {
                Trig tr = trig_at(x);
                Interval h = huygens1(tr) - Interval::from_long(3, p) - c4 * x.pow_int(4);
                Interval weight = x.pow_int(5) * tr.tanx;
                return min_iv(h - lo_c * weight, hi_c * weight - h);
            };
        }};

        t["lazarevic"] = {DomainKind::pi_half, [](Prec p) -> MarginFn {
            return [p](const Interval& x) {
                Trig tr = trig_at(x);
                return tr.sinc * tr.sinc * tr.tn - Interval::from_long(1, p);
            };
        }};
        t["wu-srivastava"] = {DomainKind::pi_half, [](Prec p) -> MarginFn {
            return [p](const Interval& x) {
                return wilker2(trig_at(x)) - Interval::from_long(2, p);
            };
        }};
        t["neuman-sandor.chain"] = {DomainKind::pi_half, [](Prec p) -> MarginFn {
            return [p](const Interval& x) {
                Trig tr = trig_at(x);
                Interval mid = (Interval::from_long(2, p) + tr.cosx) /
                               Interval::from_long(3, p);
                Interval right = (tr.inv_sinc + tr.cosx) * Interval::from_rat(Rat(1, 2), p);
                return min_iv(mid - tr.sinc, right - mid);
            };
        }};
        t["chen-sandor.chain"] = {DomainKind::pi_half, [](Prec p) -> MarginFn {
            return [p](const Interval& x) {
                Trig tr = trig_at(x);
                Interval half = Interval::from_rat(Rat(1, 2), p);
                Interval third = Interval::from_rat(Rat(1, 3), p);
                Interval A = wilker1(tr) * half;
                Interval B = tr.sinc * tr.sinc * tr.tn;
                Interval C = huygens1(tr) * third;
                Interval D = B.cbrt();
                Interval E = wilker2(tr) * half;
                Interval F = huygens2(tr) * third;
                Interval m = min_iv(A - B, B - C);
                m = min_iv(m, C - D);
                m = min_iv(m, D - E);
                m = min_iv(m, E - F);
                m = min_iv(m, F - Interval::from_long(1, p));
                return m;
            };
        }};

        t["wilker.conjecture2.N"] = {DomainKind::pi_half, [](Prec p) -> MarginFn {
            // order 2: partial sum has the k=1 term, weight x^5 tan x
            Interval c4 = Interval::from_rat(series_coefficient(FunctionId::wilker, 1), p);
            Interval q2 = Interval::from_rat(wilker_q(2), p);
            return [=](const Interval& x) {
                Trig tr = trig_at(x);
                Interval w = wilker2(tr) - Interval::from_long(2, p) - c4 * x.pow_int(4);
                return min_iv(w, q2 * x.pow_int(5) * tr.tanx - w);
            };
        }};
        t["huygens.varrho.N"] = {DomainKind::pi_half, [](Prec p) -> MarginFn {
            Interval c4 = Interval::from_rat(series_coefficient(FunctionId::huygens, 2), p);
            Interval vr2 = Interval::from_rat(huygens_varrho(2), p);
            return [=](const Interval& x) {
                Trig tr = trig_at(x);
                Interval h = huygens2(tr) - Interval::from_long(3, p) - c4 * x.pow_int(4);
                return min_iv(h, vr2 * x.pow_int(5) * tr.tanx - h);
            };
        }};

        t["wilker.sharp.N2"] = {DomainKind::pi_half, [](Prec p) -> MarginFn {
            Interval l1 = Interval::from_rat(series_coefficient(FunctionId::wilker, 1), p);
            SharpConstantPair c = wilker_lambda_mu(2, p);
            Interval l2 = c.lower.value, m2 = c.upper.value;
            return [=](const Interval& x) {
                Trig tr = trig_at(x);
                Interval w = wilker2(tr) - Interval::from_long(2, p) - l1 * x.pow_int(4);
                return min_iv(w - l2 * x.pow_int(6), m2 * x.pow_int(6) - w);
            };
        }};
        t["wilker.alphabeta.N1"] = {DomainKind::pi_half, [](Prec p) -> MarginFn {
            SharpConstantPair c = wilker_alpha_beta(1, p);
            Interval a1 = c.lower.value, b1 = c.upper.value;
            Interval pi2 = const_pi(p).pow_int(2);
            return [=](const Interval& x) {
                Trig tr = trig_at(x);
                Interval den = pi2 - x.pow_int(2);
                Interval mid = Interval::from_long(2, p) +
                               x.pow_int(4).mul_2exp(2) / (den * den);
                Interval w = wilker2(tr);
                return min_iv(w - mid - a1 * x.pow_int(4), mid + b1 * x.pow_int(4) - w);
            };
        }};
        t["huygens.sharp.N2"] = {DomainKind::pi_half, [](Prec p) -> MarginFn {
            Interval a1 = Interval::from_rat(series_coefficient(FunctionId::huygens, 2), p);
            SharpConstantPair c = huygens_a_b(2, p);
            Interval a2 = c.lower.value, b2 = c.upper.value;
            return [=](const Interval& x) {
                Trig tr = trig_at(x);
                Interval h = huygens2(tr) - Interval::from_long(3, p) - a1 * x.pow_int(4);
                return min_iv(h - a2 * x.pow_int(6), b2 * x.pow_int(6) - h);
            };
        }};

        t["papenfuss"] = {DomainKind::pi_half, [](Prec p) -> MarginFn {
            Interval c = const_pi(p).pow_int(2).mul_2exp(3); // 8 pi^2
            Interval pi2 = const_pi(p).pow_int(2);
            return [=](const Interval& x) {
                Interval den = pi2 - x.pow_int(2).mul_2exp(2);
                return c * x.pow_int(3) / (den * den) - sec2tan_at(x);
            };
        }};
        t["bach"] = {DomainKind::pi_half, [](Prec p) -> MarginFn {
            Interval c = ExactForm::pi_power(Rat(2, 3), 4).eval(p);
            Interval pi2 = const_pi(p).pow_int(2);
            return [=](const Interval& x) {
                Interval den = pi2 - x.pow_int(2).mul_2exp(2);
                return c * x.pow_int(3) / (den * den) - sec2tan_at(x);
            };
        }};
        t["ge"] = {DomainKind::pi_half, [](Prec p) -> MarginFn {
            Interval lo_c = Interval::from_long(64, p);
            Interval hi_c = ExactForm::pi_power(Rat(2, 3), 4).eval(p);
            Interval pi2 = const_pi(p).pow_int(2);
            return [=](const Interval& x) {
                Interval den = pi2 - x.pow_int(2).mul_2exp(2);
                Interval den2 = den * den;
                Interval st = sec2tan_at(x);
                Interval x3 = x.pow_int(3);
                return min_iv(st - lo_c * x3 / den2, hi_c * x3 / den2 - st);
            };
        }};
        t["sun-zhu"] = {DomainKind::pi_half, [](Prec p) -> MarginFn {
            Interval c3 = ExactForm::pi_power(Rat(2, 3), 4).eval(p);
            Interval lo5 = (ExactForm::pi_power(Rat(8, 15), 4) +
                            ExactForm::pi_power(Rat(-16, 3), 2))
                               .eval(p);
            Interval hi5 = (ExactForm::pi_power(Rat(256 * 513, 511), -2) +
                            ExactForm::pi_power(Rat(-8, 3), 2))
                               .eval(p);
            Interval pi2 = const_pi(p).pow_int(2);
            return [=](const Interval& x) {
                Interval den = pi2 - x.pow_int(2).mul_2exp(2);
                Interval den2 = den * den;
                Interval st = sec2tan_at(x);
                Interval x3 = x.pow_int(3), x5 = x.pow_int(5);
                return min_iv(st - (c3 * x3 + lo5 * x5) / den2,
                              (c3 * x3 + hi5 * x5) / den2 - st);
            };
        }};
        t["chen.sectan.N2"] = {DomainKind::pi_half, [](Prec p) -> MarginFn {
            std::vector<Interval> pc, qc;
            for (int i = 0; i <= 4; ++i) {
                pc.push_back(papenfuss_P_coefficient(i).eval(p));
                qc.push_back(papenfuss_Q_coefficient(i).eval(p));
            }
            Interval pi2 = const_pi(p).pow_int(2);
            return [=](const Interval& x) {
                Interval den = pi2 - x.pow_int(2).mul_2exp(2);
                Interval den2 = den * den;
                Interval P(p), Q(p);
                for (int i = 0; i <= 4; ++i) {
                    Interval xp = x.pow_int(3 + 2 * i);
                    P += pc[static_cast<std::size_t>(i)] * xp;
                    Q += qc[static_cast<std::size_t>(i)] * xp;
                }
                Interval st = sec2tan_at(x);
                return min_iv(st - P / den2, Q / den2 - st);
            };
        }};
        return t;
    }();
    return table;
}

// --- sharp (parameterized-constant) entries ---------------------------------

struct SharpEntry {
    std::function<MarginFn(const Interval& lo_c, const Interval& hi_c, Prec)> make;
    std::function<std::pair<Interval, Interval>(Prec)> constants;
};

const std::map<std::string, SharpEntry>& sharp_registry() {
    static const std::map<std::string, SharpEntry> table = [] {
        std::map<std::string, SharpEntry> t;
        t["wilker.sharp.N1"] = {
            [](const Interval& lo_c, const Interval& hi_c, Prec p) -> MarginFn {
                return [=](const Interval& x) {
                    Interval w = wilker2(trig_at(x)) - Interval::from_long(2, p);
                    Interval x4 = x.pow_int(4);
                    return min_iv(w - lo_c * x4, hi_c * x4 - w);
                };
            },
            [](Prec p) {
                SharpConstantPair c = wilker_lambda_mu(1, p);
                return std::make_pair(c.lower.value, c.upper.value);
            }};
        t["huygens.sharp.N1"] = {
            [](const Interval& lo_c, const Interval& hi_c, Prec p) -> MarginFn {
                return [=](const Interval& x) {
                    Interval h = huygens2(trig_at(x)) - Interval::from_long(3, p);
                    Interval x4 = x.pow_int(4);
                    return min_iv(h - lo_c * x4, hi_c * x4 - h);
                };
            },
            [](Prec p) {
                SharpConstantPair c = huygens_a_b(1, p);
                return std::make_pair(c.lower.value, c.upper.value);
            }};
        t["sun-zhu.open"] = {
            [](const Interval& lo_c, const Interval& hi_c, Prec p) -> MarginFn {
                Interval c3 = ExactForm::pi_power(Rat(2, 3), 4).eval(p);
                Interval pi2 = const_pi(p).pow_int(2);
                return [=](const Interval& x) {
                    Interval den = pi2 - x.pow_int(2).mul_2exp(2);
                    Interval den2 = den * den;
                    Interval st = sec2tan_at(x);
                    Interval x3 = x.pow_int(3), x5 = x.pow_int(5);
                    return min_iv(st - (c3 * x3 + lo_c * x5) / den2,
                                  (c3 * x3 + hi_c * x5) / den2 - st);
                };
            },
            [](Prec p) {
                Interval lo = (ExactForm::pi_power(Rat(8, 15), 4) +
                               ExactForm::pi_power(Rat(-16, 3), 2))
                                  .eval(p);
                Interval hi = (ExactForm::pi_power(256, -2) +
                               ExactForm::pi_power(Rat(-8, 3), 2))
                                  .eval(p);
                return std::make_pair(lo, hi);
            }};
        t["sec.remainder.N"] = {
            [](const Interval& lo_c, const Interval& hi_c, Prec p) -> MarginFn {
                // order 1: s_1(x) = 1, weight x^{2N-1} tan x = x tan x
                return [=](const Interval& x) {
                    Interval diff = iv_cos(x).recip() - Interval::from_long(1, p);
                    Interval weight = x * iv_tan(x);
                    return min_iv(diff - lo_c * weight, hi_c * weight - diff);
                };
            },
            [](Prec p) {
                SharpConstantPair c = sec_remainder_constants(1, p);
                return std::make_pair(c.lower.value, c.upper.value);
            }};
        return t;
    }();
    return table;
}

DomainKind domain_of(const std::string& id) {
    auto it = registry().find(id);
    if (it != registry().end()) return it->second.domain;
    if (sharp_registry().count(id)) return DomainKind::pi_half;
    throw RejectedInput("unknown inequality id '" + id + "'");
}

MarginFn make_margin(const std::string& id, Prec prec) {
    auto it = registry().find(id);
    if (it != registry().end()) return it->second.make(prec);
    auto is = sharp_registry().find(id);
    if (is != sharp_registry().end()) {
        auto [lo_c, hi_c] = is->second.constants(prec);
        return is->second.make(lo_c, hi_c, prec);
    }
    throw RejectedInput("unknown inequality id '" + id + "'");
}

double domain_width(DomainKind d) {
    return d == DomainKind::pi_half ? 1.5707963267948966 : 5.0;
}

std::string domain_desc(DomainKind d) {
    return d == DomainKind::pi_half ? "(0, pi/2)" : "(0, 5)";
}

} // namespace

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::certified: return "certified";
        case Verdict::violated: return "violated";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "unknown";
}

const std::vector<std::string>& inequality_ids() {
    static const std::vector<std::string> ids = {
        "becker-stark", "banjac", "chen.tan.N1", "tanh.corollary.m1", "tanh.corollary.m2",
        "chen.tanh.N1N2", "chen-sandor.sec", "chen.sec.N1", "wilker.classic",
        "wilker.sumner", "chen-cheung.wilker.1", "chen-cheung.wilker.2", "huygens.classic",
        "chen-cheung.huygens.1", "chen-cheung.huygens.2", "lazarevic", "wu-srivastava",
        "neuman-sandor.chain", "chen-sandor.chain", "wilker.sharp.N1", "wilker.sharp.N2",
        "wilker.alphabeta.N1", "wilker.conjecture2.N", "huygens.sharp.N1",
        "huygens.sharp.N2", "huygens.varrho.N", "papenfuss", "bach", "ge", "sun-zhu",
        "sun-zhu.open", "chen.sectan.N2", "sec.remainder.N"};
    return ids;
}

std::function<Interval(const Interval&)> margin_evaluator(const std::string& id, Prec prec) {
    return make_margin(id, prec);
}

InequalityReport verify(const std::string& id, unsigned long grid_points, Prec prec) {
    if (grid_points < 3) throw RejectedInput("verify: grid_points must be >= 3");
    const DomainKind dom = domain_of(id);
    MarginFn margin = make_margin(id, prec + 16);

    const double width = domain_width(dom);
    const double guard = width * 1e-6;
    const double a = guard, b = width - guard;
    const double mid = (a + b) / 2, rad = (b - a) / 2;

    InequalityReport rep;
    rep.id = id;
    rep.domain = domain_desc(dom);
    rep.grid_points = grid_points;
    rep.precision_bits = prec;

    bool first = true;
    const double pi_d = 3.14159265358979323846;
    for (unsigned long i = 1; i <= grid_points; ++i) {
        const double theta = (2.0 * static_cast<double>(i) - 1.0) * pi_d /
                             (2.0 * static_cast<double>(grid_points));
        const double xd = mid + rad * std::cos(theta);
        BigFloat x = BigFloat::from_double(xd, prec + 16);
        Interval m = margin(Interval::point(x));
        if (first || m.lo() < rep.min_margin ||
            (m.lo() == rep.min_margin && x < rep.argmin)) {
            rep.min_margin = m.lo();
            rep.argmin = x;
        }
        first = false;
        if (m.hi().sign() < 0 && !rep.has_violation) {
            rep.has_violation = true;
            rep.violation_at = x;
        }
        if (m.lo().sign() <= 0 && m.hi().sign() >= 0) ++rep.unresolved_points;
    }

    if (rep.has_violation)
        rep.verdict = Verdict::violated;
    else if (rep.unresolved_points == 0)
        rep.verdict = Verdict::certified;
    else
        rep.verdict = Verdict::inconclusive;
    return rep;
}

std::vector<InequalityReport> verify_all(unsigned long grid_points, Prec prec) {
    std::vector<InequalityReport> reports;
    for (const auto& id : inequality_ids()) reports.push_back(verify(id, grid_points, prec));
    return reports;
}

// --- endpoint limits --------------------------------------------------------

namespace {

struct LimitExpr {
    std::function<Interval(const Interval& x, Prec)> fn;
    ExactForm claim_zero;
    ExactForm claim_pi;
    int p0_zero = 2, q_zero = 2;
    int p0_pi = 1, q_pi = 1;
};

const std::map<std::string, LimitExpr>& limit_registry() {
    static const std::map<std::string, LimitExpr> table = [] {
        std::map<std::string, LimitExpr> t;
        t["sun-zhu.ratio"] = {
            [](const Interval& x, Prec p) {
                Interval pi2 = const_pi(p).pow_int(2);
                Interval den = pi2 - x.pow_int(2).mul_2exp(2);
                Interval c3 = ExactForm::pi_power(Rat(2, 3), 4).eval(p);
                return (sec2tan_at(x) * den * den - c3 * x.pow_int(3)) / x.pow_int(5);
            },
            ExactForm::pi_power(Rat(8, 15), 4) + ExactForm::pi_power(Rat(-16, 3), 2),
            ExactForm::pi_power(256, -2) + ExactForm::pi_power(Rat(-8, 3), 2),
            2, 2, 1, 1};
        t["wilker.conjecture2.ratio.N1"] = {
            [](const Interval& x, Prec p) {
                Interval w = wilker2(trig_at(x)) - Interval::from_long(2, p);
                return w / (x.pow_int(3) * iv_tan(x));
            },
            ExactForm::rational(Rat(2, 45)),
            ExactForm(),
            2, 2, 1, 1};
        t["huygens.varrho.ratio.N1"] = {
            [](const Interval& x, Prec p) {
                Interval h = huygens2(trig_at(x)) - Interval::from_long(3, p);
                return h / (x.pow_int(3) * iv_tan(x));
            },
            ExactForm::rational(Rat(1, 60)),
            ExactForm(),
            2, 2, 1, 1};
        t["sec.remainder.ratio.N1"] = {
            [](const Interval& x, Prec p) {
                Interval diff = iv_cos(x).recip() - Interval::from_long(1, p);
                return diff / (x * iv_tan(x));
            },
            ExactForm::rational(Rat(1, 2)),
            ExactForm::pi_power(2, -1),
            2, 2, 1, 1};
        t["sec.remainder.ratio.N2"] = {
            [](const Interval& x, Prec p) {
                Interval diff = iv_cos(x).recip() - Interval::from_long(1, p) -
                                x.pow_int(2) * Interval::from_rat(Rat(1, 2), p);
                return diff / (x.pow_int(3) * iv_tan(x));
            },
            ExactForm::rational(Rat(5, 24)),
            ExactForm::pi_power(8, -3),
            2, 2, 1, 1};
        return t;
    }();
    return table;
}

} // namespace

const std::vector<std::string>& limit_expression_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [id, e] : limit_registry()) v.push_back(id);
        return v;
    }();
    return ids;
}

LimitCheck endpoint_limit(const std::string& expression_id, Endpoint ep, Prec prec) {
    auto it = limit_registry().find(expression_id);
    if (it == limit_registry().end())
        throw RejectedInput("unknown limit expression '" + expression_id + "'");
    const LimitExpr& ex = it->second;
    const Prec wp = prec + 32;

    LimitCheck out;
    out.expression_id = expression_id;
    out.endpoint = ep;
    out.claimed = (ep == Endpoint::zero_plus) ? ex.claim_zero : ex.claim_pi;

    const int p0 = (ep == Endpoint::zero_plus) ? ex.p0_zero : ex.p0_pi;
    const int q = (ep == Endpoint::zero_plus) ? ex.q_zero : ex.q_pi;

    constexpr int kPoints = 8;
    std::vector<Interval> row;
    Interval pi_half = const_pi(wp) * Interval::from_rat(Rat(1, 2), wp);
    for (int j = 0; j < kPoints; ++j) {
        BigFloat u = BigFloat::pow2(-(j + 2), wp); // 1/4, 1/8, ..., geometric ratio 1/2
        Interval x = (ep == Endpoint::zero_plus)
                         ? Interval::point(u)
                         : pi_half - Interval::point(u);
        out.sample_points.push_back(x.mid());
        row.push_back(ex.fn(x, wp));
    }
    // Richardson elimination of u^{p0}, u^{p0+q}, ... on the halving grid:
    // each level m removes the power p0 + (m-1) q via the factor 2^power - 1.
    for (int m = 1; m < kPoints; ++m) {
        const long power = p0 + static_cast<long>(m - 1) * q;
        Interval denom = Interval::from_int(pow2(static_cast<unsigned long>(power)), wp) -
                         Interval::from_long(1, wp);
        std::vector<Interval> next;
        for (int j = 1; j < static_cast<int>(row.size()); ++j) {
            // row[j] is the finer point (smaller u)
            next.push_back(row[static_cast<std::size_t>(j)] +
                           (row[static_cast<std::size_t>(j)] -
                            row[static_cast<std::size_t>(j - 1)]) /
                               denom);
        }
        row = std::move(next);
    }

    Interval extrapolated = row.front();
    out.extrapolated = extrapolated.mid();

    Interval claim = out.claimed.eval(wp);
    BigFloat diff(wp);
    mpfr_sub(diff.raw(), out.extrapolated.raw(), claim.mid().raw(), MPFR_RNDN);
    mpfr_abs(diff.raw(), diff.raw(), MPFR_RNDN);
    if (!out.claimed.is_zero()) {
        BigFloat denom(wp);
        mpfr_abs(denom.raw(), claim.mid().raw(), MPFR_RNDN);
        mpfr_div(diff.raw(), diff.raw(), denom.raw(), MPFR_RNDN);
    }
    out.discrepancy = diff;
    out.within_tolerance = diff <= BigFloat::from_string("1e-6", wp);
    return out;
}

// --- bound comparison --------------------------------------------------------

namespace {

struct ComparableBound {
    std::function<Interval(const Interval& x, Prec)> eval;
    bool is_upper;
    char target; // quantities must match to compare
};

const std::map<std::string, ComparableBound>& comparable_registry() {
    static const std::map<std::string, ComparableBound> table = [] {
        std::map<std::string, ComparableBound> t;
        for (const auto& id : rational_bound_ids()) {
            char target = 't';
            if (id.find("tanh") != std::string::npos) target = 'h';
            else if (id.find("sec") != std::string::npos) target = 's';
            t[id] = {[id](const Interval& x, Prec p) { return rational_bound(id, x, p); },
                     rational_bound_is_upper(id), target};
        }
        t["wilker.sharpN2.lower"] = {
            [](const Interval& x, Prec p) {
                return Interval::from_long(2, p) +
                       Interval::from_rat(Rat(2, 45), p) * x.pow_int(4) +
                       Interval::from_rat(wilker_q(2), p) * x.pow_int(6);
            },
            false, 'w'};
        t["wilker.sharpN2.upper"] = {
            [](const Interval& x, Prec p) {
                return Interval::from_long(2, p) +
                       Interval::from_rat(Rat(2, 45), p) * x.pow_int(4) +
                       wilker_lambda_mu(2, p).upper.value * x.pow_int(6);
            },
            true, 'w'};
        t["wilker.alphabetaN1.lower"] = {
            [](const Interval& x, Prec p) {
                Interval den = const_pi(p).pow_int(2) - x.pow_int(2);
                return Interval::from_long(2, p) + x.pow_int(4).mul_2exp(2) / (den * den) +
                       wilker_alpha_beta(1, p).lower.value * x.pow_int(4);
            },
            false, 'w'};
        t["wilker.alphabetaN1.upper"] = {
            [](const Interval& x, Prec p) {
                Interval den = const_pi(p).pow_int(2) - x.pow_int(2);
                return Interval::from_long(2, p) + x.pow_int(4).mul_2exp(2) / (den * den) +
                       wilker_alpha_beta(1, p).upper.value * x.pow_int(4);
            },
            true, 'w'};
        t["huygens.sharpN1.upper"] = {
            [](const Interval& x, Prec p) {
                return Interval::from_long(3, p) +
                       huygens_a_b(1, p).upper.value * x.pow_int(4);
            },
            true, 'g'};
        t["huygens.thm1.upper"] = {
            [](const Interval& x, Prec p) {
                return Interval::from_long(3, p) +
                       Interval::from_rat(Rat(1, 60), p) * x.pow_int(3) * iv_tan(x);
            },
            true, 'g'};
        return t;
    }();
    return table;
}

} // namespace

std::string dominance_name(Dominance d) {
    switch (d) {
        case Dominance::a_dominates: return "a-dominates";
        case Dominance::b_dominates: return "b-dominates";
        case Dominance::incomparable: return "incomparable";
        case Dominance::inconclusive: return "inconclusive";
    }
    return "unknown";
}

const std::vector<std::string>& comparable_bound_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [id, e] : comparable_registry()) v.push_back(id);
        return v;
    }();
    return ids;
}

CompareReport compare_bounds(const std::string& bound_a, const std::string& bound_b,
                             unsigned long grid_points, Prec prec) {
    const auto& reg = comparable_registry();
    auto ia = reg.find(bound_a), ib = reg.find(bound_b);
    if (ia == reg.end() || ib == reg.end())
        throw RejectedInput("compare_bounds: unknown bound id");
    if (ia->second.is_upper != ib->second.is_upper)
        throw RejectedInput("compare_bounds: bounds have different orientations");
    if (ia->second.target != ib->second.target)
        throw RejectedInput("compare_bounds: bounds constrain different quantities");
    const bool upper = ia->second.is_upper;

    CompareReport rep;
    rep.bound_a = bound_a;
    rep.bound_b = bound_b;

    const double width = 1.5707963267948966;
    const double guard = width * 1e-6;
    const double mid = width / 2, rad = (width - 2 * guard) / 2;
    const double pi_d = 3.14159265358979323846;

    bool all_a = true, all_b = true;
    for (unsigned long i = 1; i <= grid_points; ++i) {
        const double theta = (2.0 * static_cast<double>(i) - 1.0) * pi_d /
                             (2.0 * static_cast<double>(grid_points));
        BigFloat x = BigFloat::from_double(mid + rad * std::cos(theta), prec + 16);
        Interval ix = Interval::point(x);
        Interval va = ia->second.eval(ix, prec + 16);
        Interval vb = ib->second.eval(ix, prec + 16);
        // positive margin means a is sharper at x
        Interval m = upper ? vb - va : va - vb;
        if (m.lo().sign() > 0) {
            all_b = false;
            if (!rep.has_witness_a) {
                rep.has_witness_a = true;
                rep.witness_a = x;
            }
        } else if (m.hi().sign() < 0) {
            all_a = false;
            if (!rep.has_witness_b) {
                rep.has_witness_b = true;
                rep.witness_b = x;
            }
        } else {
            ++rep.unresolved_points;
        }
    }

    if (rep.has_witness_a && rep.has_witness_b)
        rep.verdict = Dominance::incomparable;
    else if (all_a && rep.unresolved_points == 0)
        rep.verdict = Dominance::a_dominates;
    else if (all_b && rep.unresolved_points == 0)
        rep.verdict = Dominance::b_dominates;
    else
        rep.verdict = Dominance::inconclusive;
    return rep;
}

// --- sharpness falsification --------------------------------------------------

SharpnessReport sharpness_falsify(const std::string& id, double rel_eps, Prec prec) {
    auto it = sharp_registry().find(id);
    if (it == sharp_registry().end())
        throw RejectedInput("sharpness_falsify: unsupported id '" + id + "'");
    const Prec wp = prec + 16;
    auto [lo_c, hi_c] = it->second.constants(wp);

    SharpnessReport rep;
    rep.id = id;
    rep.rel_eps = rel_eps;

    Interval eps = Interval::point(BigFloat::from_double(rel_eps, wp));
    Interval lo_pert = lo_c + lo_c.abs() * eps; // adverse: lower bound raised
    Interval hi_pert = hi_c - hi_c.abs() * eps; // adverse: upper bound lowered

    Interval pi_half = const_pi(wp) * Interval::from_rat(Rat(1, 2), wp);
    const int kMaxSteps = 60;

    // lower constant is attained at 0+: approach zero
    {
        MarginFn margin = it->second.make(lo_pert, hi_c, wp);
        for (int j = 3; j <= kMaxSteps; ++j) {
            BigFloat u = BigFloat::pow2(-j, wp);
            Interval m = margin(Interval::point(u));
            if (m.hi().sign() < 0) {
                rep.lower_flipped = true;
                rep.lower_witness = u;
                break;
            }
        }
    }
    // upper constant is attained at (pi/2)-: approach pi/2
    {
        MarginFn margin = it->second.make(lo_c, hi_pert, wp);
        for (int j = 3; j <= kMaxSteps; ++j) {
            BigFloat u = BigFloat::pow2(-j, wp);
            Interval x = pi_half - Interval::point(u);
            Interval m = margin(x);
            if (m.hi().sign() < 0) {
                rep.upper_flipped = true;
                rep.upper_witness = x.mid();
                break;
            }
        }
    }
    return rep;
}

} // namespace trig_enclose
