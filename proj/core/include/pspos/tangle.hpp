#pragma once

#include "pspos/continued_fraction.hpp"
#include "pspos/rational.hpp"

#include <optional>
#include <string>

namespace pspos {

/// A rational tangle, modeled by its fraction parameter r in Q union {inf}
/// plus the integer presentation it was built from, when there is one.
/// Two rational tangles are equivalent exactly when their fractions agree,
/// so no diagram data is kept.
class RationalTangle {
public:
    explicit RationalTangle(ExtRational fraction)
        : fraction_(std::move(fraction)) {}
    explicit RationalTangle(ContinuedFraction presentation)
        : presentation_(std::move(presentation)),
          fraction_(cf_to_rational(*presentation_)) {}

    const ExtRational& fraction() const { return fraction_; }
    const std::optional<ContinuedFraction>& presentation() const {
        return presentation_;
    }

private:
    std::optional<ContinuedFraction> presentation_;
    ExtRational fraction_;
};

ExtRational tangle_fraction(const RationalTangle& t);
bool tangles_equivalent(const RationalTangle& t1, const RationalTangle& t2);

/// "R(a1,...,an)" when a presentation exists, else "R(r)".
std::string to_string(const RationalTangle& t);

enum class TangleCase {
    Case1,  // k(l, m, n, 0)
    Case2,  // k(l, m, 0, p)
};

/// The tangle triples (A, B, C) whose union with R(inf) closes up to a
/// trivial knot, one per solution family:
///
///   Case1: A = R(l), B = R(m, -l), C = R(-n, 2, m-1, 2, 0)
///   Case2: A = R(l), B = R(p, -2, m, -l), C = R(m-1, 2, 0)
///
/// A rotation of the diagram interchanges A and B; the triple is kept in
/// the printed order and never auto-normalized under that symmetry.
struct TangleTriple {
    TangleCase tangle_case;
    Int l;
    Int m;
    Int third;  // n in Case1, p in Case2
    RationalTangle a;
    RationalTangle b;
    RationalTangle c;
};

TangleTriple make_tangle_triple(TangleCase tangle_case, Int l, Int m, Int third);

}  // namespace pspos
