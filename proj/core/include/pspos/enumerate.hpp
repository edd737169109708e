#pragma once

#include "pspos/surgery.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace pspos {

/// Inclusive integer range; empty when lo > hi.
struct IntRange {
    Int lo;
    Int hi;
};

/// Parses "a..b" or a single integer "a" (= a..a).
IntRange parse_range(const std::string& text);

struct TtkSweep {
    IntRange p;
    IntRange q;
    IntRange n;
};

struct TangleKnotSweep {
    TangleCase tangle_case;
    IntRange l;
    IntRange m;
    IntRange third;               // n (Case1) or p (Case2)
    std::vector<SlopeTag> slopes;  // iterated innermost, in the given order
};

struct EnumerationSummary {
    std::size_t records = 0;
    std::map<VerdictKind, std::size_t> verdict_counts;
    // Pairwise-distinct braid indices seen across the sweep; growth of
    // this count across disjoint parameter windows is the desk-scale
    // certificate that the family contains infinitely many knots.
    std::size_t distinct_braid_indices = 0;
};

std::string to_string(const EnumerationSummary& summary);

using RecordSink = std::function<void(const SurgeryRecord&)>;

/// Sweeps (p, q, n) in ascending lexicographic order, skipping parameter
/// triples that violate the family constraints, deciding every record.
/// Output order is deterministic: byte-identical across runs.
EnumerationSummary enumerate_ttk(const TtkSweep& sweep, const RecordSink& sink);

/// Sweeps (l, m, third, slope) in ascending lexicographic order. All
/// integer parameters are admissible; degenerate members are emitted with
/// their HypothesisViolated verdicts rather than skipped.
EnumerationSummary enumerate_tangle_knots(const TangleKnotSweep& sweep,
                                          const RecordSink& sink);

}  // namespace pspos
