#ifndef TRIG_ENCLOSE_VERIFIER_HPP
#define TRIG_ENCLOSE_VERIFIER_HPP

#include <functional>
#include <string>
#include <vector>

#include "trig_enclose/exact_form.hpp"
#include "trig_enclose/interval.hpp"

namespace trig_enclose {

enum class Verdict { certified, violated, inconclusive };

std::string verdict_name(Verdict v);

struct InequalityReport {
    std::string id;
    std::string domain;           // human-readable, e.g. "(0, pi/2)"
    double guard_rel = 1e-6;      // relative guard band at each open endpoint
    unsigned long grid_points = 0;
    Prec precision_bits = 0;
    BigFloat min_margin{64};      // rigorous lower bound over the grid
    BigFloat argmin{64};
    Verdict verdict = Verdict::inconclusive;
    bool has_violation = false;
    BigFloat violation_at{64};
    unsigned long unresolved_points = 0;
};

// All 33 registry inequality ids.
const std::vector<std::string>& inequality_ids();

// Certify one inequality on Chebyshev nodes inside its guarded domain.
// Margin orientation: larger side minus smaller side; a chain id takes the
// minimum margin over its links, so `certified` means every link holds.
InequalityReport verify(const std::string& id, unsigned long grid_points, Prec prec);

std::vector<InequalityReport> verify_all(unsigned long grid_points, Prec prec);

// --- endpoint limits -------------------------------------------------------

enum class Endpoint { zero_plus, pi_half_minus };

struct LimitCheck {
    std::string expression_id;
    Endpoint endpoint = Endpoint::zero_plus;
    ExactForm claimed;
    std::vector<BigFloat> sample_points;
    BigFloat extrapolated{64};
    BigFloat discrepancy{64}; // |extrapolated - claimed|, relative when claimed != 0
    bool within_tolerance = false;
};

const std::vector<std::string>& limit_expression_ids();

// Evaluate on an 8-point geometric sequence (ratio 1/2) approaching the
// endpoint, Richardson-extrapolate with the display's leading power, and
// compare against the claimed closed form at 1e-6 relative tolerance.
LimitCheck endpoint_limit(const std::string& expression_id, Endpoint ep, Prec prec);

// --- bound comparison ------------------------------------------------------

enum class Dominance { a_dominates, b_dominates, incomparable, inconclusive };

std::string dominance_name(Dominance d);

struct CompareReport {
    std::string bound_a, bound_b;
    Dominance verdict = Dominance::inconclusive;
    bool has_witness_a = false, has_witness_b = false;
    BigFloat witness_a{64}; // a sharper here
    BigFloat witness_b{64}; // b sharper here
    unsigned long unresolved_points = 0;
};

const std::vector<std::string>& comparable_bound_ids();

// Classify which of two same-orientation bounds is sharper across the grid.
CompareReport compare_bounds(const std::string& bound_a, const std::string& bound_b,
                             unsigned long grid_points, Prec prec);

// --- sharpness falsification ------------------------------------------------

struct SharpnessReport {
    std::string id;
    double rel_eps = 0;
    bool lower_flipped = false;
    BigFloat lower_witness{64};
    bool upper_flipped = false;
    BigFloat upper_witness{64};
};

// Perturb each best-possible constant adversely by rel_eps (lower up,
// upper down) and walk a geometric sequence toward the endpoint where that
// constant is attained until the enclosure certifies a violation.
// Supported ids: wilker.sharp.N1, huygens.sharp.N1, sun-zhu.open,
// sec.remainder.N.
SharpnessReport sharpness_falsify(const std::string& id, double rel_eps, Prec prec);

// Margin evaluator access for tests (the same closures verify() uses).
std::function<Interval(const Interval&)> margin_evaluator(const std::string& id, Prec prec);

} // namespace trig_enclose

#endif
