#ifndef TRIG_ENCLOSE_REPORT_IO_HPP
#define TRIG_ENCLOSE_REPORT_IO_HPP

#include <json.hpp>

#include <string>

#include "trig_enclose/best_constants.hpp"
#include "trig_enclose/remainder.hpp"
#include "trig_enclose/verifier.hpp"
#include "trig_enclose/zeta_sums.hpp"

namespace trig_enclose {

// Significant decimal digits that make the binary value round-trip:
// ceil(0.30103 * bits) + 1.
std::size_t decimal_digits_for(Prec prec);

// Decimal rendering at the round-trip digit count for `prec`.
std::string fmt_number(const BigFloat& x, Prec prec);

nlohmann::json interval_to_json(const Interval& v, Prec prec);
nlohmann::json eval_to_json(const RemainderEval& ev, Prec prec);
nlohmann::json pair_to_json(const SharpConstantPair& pair, Prec prec);
nlohmann::json report_to_json(const InequalityReport& rep, Prec prec);
nlohmann::json sum_to_json(const ClosedFormConstant& c, const BruteResult* brute, Prec prec);
nlohmann::json limit_to_json(const LimitCheck& chk, Prec prec);

std::string exactness_name(Exactness e);

} // namespace trig_enclose

#endif
