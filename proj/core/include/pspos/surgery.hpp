#pragma once

#include "pspos/rational.hpp"
#include "pspos/seifert.hpp"
#include "pspos/tangle.hpp"
#include "pspos/verdict.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace pspos {

/// Symbolic slopes of the two tangle fillings R(0) and R(1). The tangle
/// construction never expresses them in meridian-longitude coordinates;
/// the distinctness logic only ever needs that two positions share one.
enum class SlopeTag { Gamma0, Gamma1 };

/// A surgery slope: an integer surface slope for twisted torus knots, a
/// symbolic gamma_s for the tangle-constructed knots.
struct Slope {
    std::variant<Int, SlopeTag> value;

    static Slope integer(Int v) { return Slope{std::move(v)}; }
    static Slope symbolic(SlopeTag t) { return Slope{t}; }

    bool is_integer() const { return std::holds_alternative<Int>(value); }

    friend bool operator==(const Slope& a, const Slope& b) {
        return a.value == b.value;
    }
    friend bool operator!=(const Slope& a, const Slope& b) { return !(a == b); }
};

std::string to_string(const Slope& s);

/// One primitive/Seifert position: the Heegaard surface it lives on (as a
/// label), the shared surface slope, the index set of its Seifert half,
/// and the Seifert-half invariants when they are known. Invariant data is
/// attached only where the construction actually computes it.
struct PsPosition {
    std::string surface_label;
    Slope slope;
    IndexSet index_set;
    std::optional<SfsDescriptor> seifert_half;
};

enum class ResultKind {
    SeifertOverS2,
    LensSpace,
    ConnectedSumOfTwoLensSpaces,
    Degenerate,
};

enum class BergeType { VII, VIII, Unspecified };

/// Classification of the surgered manifold.
struct ResultClass {
    ResultKind kind;
    std::vector<Int> fiber_indices;  // SeifertOverS2: sorted index multiset
    BergeType berge = BergeType::Unspecified;  // LensSpace
    std::string reason;                        // Degenerate
};

std::string to_string(const ResultClass& c);

/// K(p, q, p+q, n): the torus knot T(p,q) twisted n times along the
/// unknotted circle that links it p+q times. Valid parameters have
/// gcd(p,q) = 1, |p| >= 2, |q| >= 2 and |p+q| > 1.
struct TtkParams {
    Int p;
    Int q;
    Int n;
};

/// Throws std::invalid_argument naming the violated constraint.
void validate(const TtkParams& params);

/// k(l, m, n, 0) (Case1) or k(l, m, 0, p) (Case2) together with the
/// filling slope gamma_s. All integer parameters are admissible here;
/// degenerate index data is reported downstream rather than rejected.
struct TangleKnotParams {
    TangleCase tangle_case;
    Int l;
    Int m;
    Int third;  // n in Case1, p in Case2
    SlopeTag s;
};

enum class KnotFamily { TwistedTorus, TangleKnot };

/// One knot-family member with everything the pipeline computed about its
/// surgery. `verdict` is filled by the distinctness engine, except for
/// degenerate records, which carry a HypothesisViolated verdict from
/// construction and no positions.
struct SurgeryRecord {
    KnotFamily family;
    std::variant<TtkParams, TangleKnotParams> params;
    Slope slope;
    ResultClass classification;
    std::vector<PsPosition> positions;
    std::optional<Verdict> verdict;
    std::optional<bool> ab_indices_distinct;  // tangle-knot hypothesis flag
    std::optional<Int> braid_index;           // tangle-knot, when defined
    std::optional<bool> hyperbolic_certified;  // twisted torus
};

}  // namespace pspos
