#include "pspos/surgery.hpp"

namespace pspos {

std::string to_string(const Slope& s) {
    if (const Int* v = std::get_if<Int>(&s.value)) return v->str();
    return std::get<SlopeTag>(s.value) == SlopeTag::Gamma0 ? "gamma0" : "gamma1";
}

std::string to_string(const ResultClass& c) {
    switch (c.kind) {
        case ResultKind::SeifertOverS2: {
            std::string s = "Seifert fibered space over S2, fiber indices {";
            for (std::size_t i = 0; i < c.fiber_indices.size(); ++i) {
                if (i) s += ", ";
                s += c.fiber_indices[i].str();
            }
            return s + "}";
        }
        case ResultKind::LensSpace:
            switch (c.berge) {
                case BergeType::VII: return "lens space (Berge type VII)";
                case BergeType::VIII: return "lens space (Berge type VIII)";
                case BergeType::Unspecified: return "lens space";
            }
            return "lens space";
        case ResultKind::ConnectedSumOfTwoLensSpaces:
            return "connected sum of two lens spaces";
        case ResultKind::Degenerate:
            return "degenerate: " + c.reason;
    }
    return {};
}

std::string to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::DistinctByIndexSet: return "distinct_by_index_set";
        case VerdictKind::DistinctByInvariantsMod1:
            return "distinct_by_invariants_mod1";
        case VerdictKind::Inconclusive: return "inconclusive";
        case VerdictKind::HypothesisViolated: return "hypothesis_violated";
    }
    return {};
}

}  // namespace pspos
