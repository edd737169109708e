#pragma once

#include "pspos/rational.hpp"

#include <string>
#include <vector>

namespace pspos {

/// Integer entries a1, ..., an of a finite continued fraction, evaluated
/// innermost-first:
///
///     value = an + 1/(a(n-1) + 1/( ... + 1/a1 ))
///
/// Entries may be negative or zero. An intermediate zero denominator is
/// legal and propagates through the extended reciprocal, so the total
/// value lives in Q union {inf}.
struct ContinuedFraction {
    std::vector<Int> entries;
};

/// Exact value of the nested fraction. Throws if entries is empty.
ExtRational cf_to_rational(const ContinuedFraction& cf);

/// A finite expansion whose cf_to_rational equals r exactly (floor-based
/// Euclidean expansion, emitted innermost-first). Throws on infinity.
ContinuedFraction rational_to_cf(const ExtRational& r);

/// "[a1, a2, ..., an]"
std::string to_string(const ContinuedFraction& cf);

}  // namespace pspos
