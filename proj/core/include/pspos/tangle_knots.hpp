#pragma once

#include "pspos/surgery.hpp"
#include "pspos/tangle.hpp"

#include <array>
#include <vector>

namespace pspos {

/// The (A, B, C) tangle triple underlying the knot.
TangleTriple tangles(const TangleKnotParams& params);

/// Indices of the three exceptional fibers of the gamma_s surgered
/// manifold, in branch order (A-fiber, B-fiber, C-fiber):
///
///   Case1, gamma0: |l-1|, |lm+m-1|, |2mn-m-n+1|
///   Case1, gamma1: |l+1|, |lm-m-1|, |2mn-m+n|
///   Case2, gamma0: |l-1|, |2lmp-lm-lp+2mp-m-3p+1|, |m-1|
///   Case2, gamma1: |l+1|, |2lmp-lm-lp-2mp+m-p+1|, |m|
///
/// Branch order matters: the two positions select fibers by branch, not
/// by value, even though the resulting index sets collapse duplicates.
std::array<Int, 3> exceptional_indices(const TangleKnotParams& params);

/// The two primitive/Seifert positions, both with the symbolic slope
/// gamma_s: index set {B-fiber, C-fiber} on S and {A-fiber, C-fiber} on
/// S'. Requires all three indices >= 2 and throws otherwise.
///
/// Seifert-half invariants are attached only for the one family the
/// construction computes them for (Case1, l = 2, m = 4, gamma1):
/// {4/3, (16n-7)/(9n-4)} on S and {-1/3, (16n-7)/(9n-4)} on S'.
std::vector<PsPosition> ps_positions(const TangleKnotParams& params);

/// Whether the A-fiber and B-fiber indices differ — the hypothesis under
/// which the index-set test alone already separates the two positions.
bool ab_indices_distinct(const TangleKnotParams& params);

/// Braid index: Case1 gives 2lm-1 (m > 0) or 2|lm|+1 (m < 0), Case2
/// gives 2lm-l-1 (m > 0) or 2|lm|+l+1 (m < 0). Stated for l > 0 and
/// m != 0 only; throws outside that range.
Int braid_index(const TangleKnotParams& params);

/// Assembles the full record. Degenerate index data (any index <= 1)
/// yields a record with no positions and a HypothesisViolated verdict;
/// otherwise the verdict is left for the distinctness engine.
SurgeryRecord make_record(const TangleKnotParams& params);

}  // namespace pspos
