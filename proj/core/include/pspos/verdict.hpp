#pragma once

#include "pspos/rational.hpp"
#include "pspos/seifert.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pspos {

/// Outcome of comparing two primitive/Seifert positions of one surgery.
///
/// Every "distinct" kind is a sufficient condition; the engine never
/// certifies that two positions are the same, so equality of all computed
/// data yields Inconclusive, not "same".
enum class VerdictKind {
    DistinctByIndexSet,
    DistinctByInvariantsMod1,
    Inconclusive,
    HypothesisViolated,
};

std::string to_string(VerdictKind k);

/// The data the verdict was decided on: the two index sets whenever two
/// positions were compared, and the normalized (mod-1) Seifert-invariant
/// multisets whenever the comparison escalated to invariant level.
struct VerdictEvidence {
    std::optional<IndexSet> index_set_1;
    std::optional<IndexSet> index_set_2;
    std::optional<std::vector<ExtRational>> invariants_mod1_1;
    std::optional<std::vector<ExtRational>> invariants_mod1_2;
    std::string note;
};

struct Verdict {
    VerdictKind kind;
    std::string reason;
    VerdictEvidence evidence;
};

}  // namespace pspos
