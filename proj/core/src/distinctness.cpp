#include "pspos/distinctness.hpp"

#include <algorithm>

namespace pspos {

namespace {

std::vector<ExtRational> normalized_invariants(const SfsDescriptor& half) {
    return sfs_normalize(half).invariants;
}

}  // namespace

Verdict decide_distinct(const PsPosition& pos1, const PsPosition& pos2) {
    if (pos1.slope != pos2.slope)
        throw std::invalid_argument(
            "decide_distinct: positions have different slopes (" +
            to_string(pos1.slope) + " vs " + to_string(pos2.slope) +
            "), not the same surgery");

    VerdictEvidence evidence;
    evidence.index_set_1 = pos1.index_set;
    evidence.index_set_2 = pos2.index_set;

    if (pos1.index_set != pos2.index_set)
        return Verdict{VerdictKind::DistinctByIndexSet,
                       "index sets " + to_string(pos1.index_set) + " and " +
                           to_string(pos2.index_set) + " differ",
                       std::move(evidence)};

    if (pos1.seifert_half && pos2.seifert_half) {
        evidence.invariants_mod1_1 = normalized_invariants(*pos1.seifert_half);
        evidence.invariants_mod1_2 = normalized_invariants(*pos2.seifert_half);
        if (!sfs_homeomorphic(*pos1.seifert_half, *pos2.seifert_half))
            return Verdict{
                VerdictKind::DistinctByInvariantsMod1,
                "equal index sets, but the Seifert-half invariants differ mod 1",
                std::move(evidence)};
        return Verdict{
            VerdictKind::Inconclusive,
            "Seifert halves are orientation-preservingly homeomorphic; the "
            "positions may coincide",
            std::move(evidence)};
    }

    return Verdict{VerdictKind::Inconclusive,
                   "index sets equal and Seifert-half invariant data unavailable",
                   std::move(evidence)};
}

SurgeryRecord decide_surgery(SurgeryRecord record) {
    if (record.positions.size() != 2)
        throw std::invalid_argument(
            "decide_surgery: record needs exactly 2 positions, has " +
            std::to_string(record.positions.size()));
    Verdict verdict = decide_distinct(record.positions[0], record.positions[1]);
    if (record.family == KnotFamily::TangleKnot &&
        record.ab_indices_distinct == false &&
        verdict.kind == VerdictKind::DistinctByInvariantsMod1) {
        verdict.evidence.note =
            "A- and B-fiber indices agree, so the index-set test alone is "
            "inconclusive; the mod-1 invariants still separate the positions";
    }
    record.verdict = std::move(verdict);
    return record;
}

}  // namespace pspos
