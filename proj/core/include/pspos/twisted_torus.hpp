#pragma once

#include "pspos/surgery.hpp"

#include <vector>

namespace pspos {

/// Non-throwing form of validate().
bool is_valid(const TtkParams& params);

/// The integer surface slope pq + n(p+q)^2 shared by both positions.
Slope surgery_slope(const TtkParams& params);

/// What pq + n(p+q)^2 surgery on K(p, q, p+q, n) yields:
/// n = 0 a connected sum of two lens spaces, n = +-1 a lens space (Berge
/// type VII for n = 1, VIII for n = -1), otherwise a Seifert fibered
/// space over S2 with fiber index multiset {|p|, |q|, |n|}.
ResultClass classify(const TtkParams& params);

/// The two primitive/Seifert positions, sharing the surface slope:
/// index set {|q|, |n|} on F and {|p|, |n|} on F'. Requires |n| >= 2;
/// for |n| <= 1 the Seifert half is not a D2(p,q) piece and this throws.
std::vector<PsPosition> ps_positions(const TtkParams& params);

/// True when |n| > 3, a sufficient hyperbolicity condition. False means
/// "not certified", not "not hyperbolic".
bool hyperbolic_certified(const TtkParams& params);

/// Assembles the full record. For |n| <= 1 the record carries no
/// positions and a HypothesisViolated verdict; otherwise the verdict is
/// left for the distinctness engine.
SurgeryRecord make_record(const TtkParams& params);

}  // namespace pspos
