#include "trig_enclose/report_io.hpp"

#include <cmath>

namespace trig_enclose {

std::size_t decimal_digits_for(Prec prec) {
    return static_cast<std::size_t>(std::ceil(0.30103 * static_cast<double>(prec))) + 1;
}

std::string fmt_number(const BigFloat& x, Prec prec) {
    return x.to_decimal(decimal_digits_for(prec));
}

nlohmann::json interval_to_json(const Interval& v, Prec prec) {
    return {{"lo", fmt_number(v.lo(), prec)},
            {"hi", fmt_number(v.hi(), prec)},
            {"width", v.width().to_decimal(6)}};
}

std::string exactness_name(Exactness e) {
    switch (e) {
        case Exactness::exact_rational: return "exact-rational";
        case Exactness::pi_closed_form: return "pi-closed-form";
        case Exactness::series_evaluated: return "series-evaluated";
    }
    return "unknown";
}

nlohmann::json eval_to_json(const RemainderEval& ev, Prec prec) {
    nlohmann::json j;
    j["function"] = function_id_name(ev.fn);
    j["order"] = ev.order;
    j["at"] = fmt_number(ev.t, prec);
    j["precision_bits"] = static_cast<long>(prec);
    j["partial_sum"] = fmt_number(ev.partial_sum, prec);
    j["remainder"] = interval_to_json(ev.remainder, prec);
    j["value"] = interval_to_json(ev.value, prec);
    j["terms_used"] = ev.terms_used;
    j["tail_bound"] = ev.tail.bound.to_decimal(6);
    return j;
}

namespace {

nlohmann::json constant_to_json(const ConstantValue& c, Prec prec) {
    nlohmann::json j;
    j["value"] = interval_to_json(c.value, prec);
    j["exactness"] = exactness_name(c.exactness);
    if (c.exact) j["closed_form"] = c.exact->to_string();
    return j;
}

} // namespace

nlohmann::json pair_to_json(const SharpConstantPair& pair, Prec prec) {
    nlohmann::json j;
    j["inequality"] = pair.inequality_id;
    j["order"] = pair.order;
    j["precision_bits"] = static_cast<long>(prec);
    j["lower"] = constant_to_json(pair.lower, prec);
    j["upper"] = constant_to_json(pair.upper, prec);
    return j;
}

nlohmann::json report_to_json(const InequalityReport& rep, Prec prec) {
    nlohmann::json j;
    j["id"] = rep.id;
    j["domain"] = rep.domain;
    j["guard_rel"] = rep.guard_rel;
    j["grid_points"] = rep.grid_points;
    j["precision_bits"] = static_cast<long>(rep.precision_bits);
    j["min_margin"] = fmt_number(rep.min_margin, prec);
    j["argmin"] = fmt_number(rep.argmin, prec);
    j["verdict"] = verdict_name(rep.verdict);
    j["unresolved_points"] = rep.unresolved_points;
    if (rep.has_violation) j["violation_at"] = fmt_number(rep.violation_at, prec);
    return j;
}

nlohmann::json sum_to_json(const ClosedFormConstant& c, const BruteResult* brute, Prec prec) {
    nlohmann::json j;
    j["id"] = c.id;
    j["closed_form"] = c.exact.to_string();
    j["value"] = interval_to_json(c.numeric, prec);
    if (brute) {
        j["brute"] = {{"value", interval_to_json(brute->value, prec)},
                      {"tail_bound", brute->tail.bound.to_decimal(6)},
                      {"terms_used", brute->tail.terms_used},
                      {"method", brute->method}};
    }
    return j;
}

nlohmann::json limit_to_json(const LimitCheck& chk, Prec prec) {
    nlohmann::json j;
    j["expression"] = chk.expression_id;
    j["endpoint"] = chk.endpoint == Endpoint::zero_plus ? "0+" : "pi/2-";
    j["claimed"] = chk.claimed.to_string();
    j["extrapolated"] = fmt_number(chk.extrapolated, prec);
    j["discrepancy"] = chk.discrepancy.to_decimal(6);
    j["within_tolerance"] = chk.within_tolerance;
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& x : chk.sample_points) pts.push_back(fmt_number(x, prec));
    j["sample_points"] = pts;
    return j;
}

} // namespace trig_enclose
