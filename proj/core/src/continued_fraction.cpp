#include "pspos/continued_fraction.hpp"

#include <algorithm>

namespace pspos {

ExtRational cf_to_rational(const ContinuedFraction& cf) {
    if (cf.entries.empty())
        throw std::invalid_argument("cf_to_rational: no entries");
    ExtRational value(cf.entries.front());
    for (std::size_t i = 1; i < cf.entries.size(); ++i)
        value = ExtRational(cf.entries[i]) + value.reciprocal();
    return value;
}

ContinuedFraction rational_to_cf(const ExtRational& r) {
    if (r.is_infinite())
        throw std::domain_error("rational_to_cf: no finite expansion for infinity");
    // Outermost-first Euclidean expansion, reversed into evaluation order.
    std::vector<Int> outer_first;
    ExtRational v = r;
    for (;;) {
        Int a = v.floor();
        outer_first.push_back(a);
        ExtRational frac = v - ExtRational(a);
        if (frac.is_zero()) break;
        v = frac.reciprocal();  // frac in (0,1), so v > 1 and the loop terminates
    }
    std::reverse(outer_first.begin(), outer_first.end());
    return ContinuedFraction{std::move(outer_first)};
}

std::string to_string(const ContinuedFraction& cf) {
    std::string s = "[";
    for (std::size_t i = 0; i < cf.entries.size(); ++i) {
        if (i) s += ", ";
        s += cf.entries[i].str();
    }
    s += "]";
    return s;
}

}  // namespace pspos
