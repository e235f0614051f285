#ifndef TRIG_ENCLOSE_TAIL_HPP
#define TRIG_ENCLOSE_TAIL_HPP

#include "trig_enclose/bigfloat.hpp"

namespace trig_enclose {

// Truncation record: how many terms were summed and a rigorous upper bound
// (rounded up) on everything that was omitted.
struct TailBound {
    unsigned long terms_used = 0;
    BigFloat bound{64};
};

} // namespace trig_enclose

#endif
