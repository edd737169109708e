#include "pspos/tangle.hpp"

namespace pspos {

ExtRational tangle_fraction(const RationalTangle& t) { return t.fraction(); }

bool tangles_equivalent(const RationalTangle& t1, const RationalTangle& t2) {
    return t1.fraction() == t2.fraction();
}

std::string to_string(const RationalTangle& t) {
    if (t.presentation()) {
        std::string s = "R(";
        const auto& entries = t.presentation()->entries;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (i) s += ",";
            s += entries[i].str();
        }
        return s + ")";
    }
    return "R(" + to_display_string(t.fraction()) + ")";
}

TangleTriple make_tangle_triple(TangleCase tangle_case, Int l, Int m, Int third) {
    if (tangle_case == TangleCase::Case1) {
        const Int& n = third;
        return TangleTriple{
            tangle_case, l, m, third,
            RationalTangle(ContinuedFraction{{l}}),
            RationalTangle(ContinuedFraction{{m, -l}}),
            RationalTangle(ContinuedFraction{{-n, 2, m - 1, 2, 0}}),
        };
    }
    const Int& p = third;
    return TangleTriple{
        tangle_case, l, m, third,
        RationalTangle(ContinuedFraction{{l}}),
        RationalTangle(ContinuedFraction{{p, -2, m, -l}}),
        RationalTangle(ContinuedFraction{{m - 1, 2, 0}}),
    };
}

}  // namespace pspos
