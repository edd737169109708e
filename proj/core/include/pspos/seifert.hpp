#pragma once

#include "pspos/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pspos {

enum class SfsBase { DiskD2, SphereS2 };

/// A Seifert fibered space over D2 or S2, given by the multiset of its
/// Seifert invariants beta/alpha (each finite, stored reduced and sorted).
///
/// Disk descriptors model the Seifert halves of primitive/Seifert
/// positions and carry exactly two invariants; sphere descriptors model
/// surgered manifolds and carry at most three.
///
/// `invariant_sum` is set by sfs_normalize for sphere descriptors: mod-1
/// reduction alone loses the Euler-number datum of a closed space, so the
/// total sum is kept alongside. Disk descriptors never set it.
struct SfsDescriptor {
    SfsBase base;
    std::vector<ExtRational> invariants;
    std::optional<ExtRational> invariant_sum;
    std::string label;

    SfsDescriptor(SfsBase base, std::vector<ExtRational> invariants,
                  std::string label = {});

    // label is presentation data and does not take part in equality
    friend bool operator==(const SfsDescriptor& a, const SfsDescriptor& b) {
        return a.base == b.base && a.invariants == b.invariants &&
               a.invariant_sum == b.invariant_sum;
    }
};

/// The exceptional-fiber indices {p, q} of a Seifert half over D2(p, q),
/// p, q >= 2. Duplicates collapse: this is a set, not a multiset.
class IndexSet {
public:
    explicit IndexSet(std::vector<Int> values);

    const std::vector<Int>& values() const { return values_; }

    friend bool operator==(const IndexSet& a, const IndexSet& b) {
        return a.values_ == b.values_;
    }
    friend bool operator!=(const IndexSet& a, const IndexSet& b) {
        return !(a == b);
    }

private:
    std::vector<Int> values_;  // sorted ascending, unique
};

std::string to_string(const IndexSet& s);

/// The index of the exceptional fiber with Seifert invariant -q/p is |p|,
/// i.e. the reduced denominator of the invariant. An integer invariant
/// gives index 1 (a regular fiber).
Int index_of_invariant(const ExtRational& inv);

/// Canonical form under orientation-preserving fiber-preserving
/// homeomorphism: invariants reduced mod 1 and sorted; for a sphere base
/// the invariant sum is recorded as well. Idempotent.
SfsDescriptor sfs_normalize(const SfsDescriptor& d);

/// Whether d1 and d2 describe orientation-preservingly homeomorphic
/// Seifert fibered spaces: normalized mod-1 multisets agree, and for a
/// closed (sphere) base the invariant sums agree too. Throws when the
/// bases differ.
bool sfs_homeomorphic(const SfsDescriptor& d1, const SfsDescriptor& d2);

/// The index set of a Seifert half. Requires a disk base whose invariants
/// both have index >= 2; anything else is not a D2(p, q) piece and throws.
IndexSet index_set_of(const SfsDescriptor& d);

/// The same space with reversed orientation (all invariants negated).
/// Provided for completeness; the distinctness engine never calls it.
SfsDescriptor orientation_reversed(const SfsDescriptor& d);

}  // namespace pspos
