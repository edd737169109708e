#pragma once

#include "pspos/surgery.hpp"
#include "pspos/verdict.hpp"

namespace pspos {

/// Decides whether two primitive/Seifert positions of the same surgery
/// are distinct. Sufficient conditions only, tried in order:
///
///  1. unequal index sets                    -> DistinctByIndexSet
///  2. equal index sets, both Seifert halves known and not
///     orientation-preservingly homeomorphic -> DistinctByInvariantsMod1
///  3. both halves known and homeomorphic    -> Inconclusive (the
///     positions may or may not coincide; deciding that would need
///     isotopy data this engine does not have)
///  4. invariant data unavailable            -> Inconclusive
///
/// Throws when the positions do not share a slope (not the same surgery).
Verdict decide_distinct(const PsPosition& pos1, const PsPosition& pos2);

/// Fills the record's verdict from its two positions. For tangle-knot
/// records whose A/B index hypothesis failed but whose invariants still
/// decide distinctness, the evidence notes that the index-set route was
/// inconclusive. Throws unless the record has exactly two positions.
SurgeryRecord decide_surgery(SurgeryRecord record);

}  // namespace pspos
