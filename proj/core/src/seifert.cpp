#include "pspos/seifert.hpp"

#include <algorithm>

namespace pspos {

SfsDescriptor::SfsDescriptor(SfsBase base_in,
                             std::vector<ExtRational> invariants_in,
                             std::string label_in)
    : base(base_in), invariants(std::move(invariants_in)),
      label(std::move(label_in)) {
    for (const auto& inv : invariants)
        if (inv.is_infinite())
            throw std::invalid_argument(
                "SfsDescriptor: Seifert invariants must be finite");
    if (base == SfsBase::DiskD2 && invariants.size() != 2)
        throw std::invalid_argument(
            "SfsDescriptor: a disk-base Seifert half carries exactly 2 invariants");
    if (base == SfsBase::SphereS2 && invariants.size() > 3)
        throw std::invalid_argument(
            "SfsDescriptor: sphere-base descriptors carry at most 3 invariants");
    std::sort(invariants.begin(), invariants.end());
}

IndexSet::IndexSet(std::vector<Int> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
    for (const auto& v : values_)
        if (v < 2)
            throw std::invalid_argument("IndexSet: indices must be >= 2, got " +
                                        v.str());
}

std::string to_string(const IndexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.values().size(); ++i) {
        if (i) out += ", ";
        out += s.values()[i].str();
    }
    return out + "}";
}

Int index_of_invariant(const ExtRational& inv) {
    if (inv.is_infinite())
        throw std::domain_error("index_of_invariant: undefined for infinity");
    return inv.denominator();
}

SfsDescriptor sfs_normalize(const SfsDescriptor& d) {
    std::vector<ExtRational> parts;
    parts.reserve(d.invariants.size());
    for (const auto& inv : d.invariants) parts.push_back(mod_one(inv));

    SfsDescriptor out(d.base, std::move(parts), d.label);
    if (d.base == SfsBase::SphereS2) {
        if (d.invariant_sum) {
            out.invariant_sum = d.invariant_sum;  // already normalized once
        } else {
            ExtRational sum(0);
            for (const auto& inv : d.invariants) sum = sum + inv;
            out.invariant_sum = sum;
        }
    }
    return out;
}

bool sfs_homeomorphic(const SfsDescriptor& d1, const SfsDescriptor& d2) {
    if (d1.base != d2.base)
        throw std::invalid_argument(
            "sfs_homeomorphic: descriptors have different base surfaces");
    SfsDescriptor n1 = sfs_normalize(d1);
    SfsDescriptor n2 = sfs_normalize(d2);
    if (n1.invariants != n2.invariants) return false;
    if (d1.base == SfsBase::SphereS2) return n1.invariant_sum == n2.invariant_sum;
    return true;
}

IndexSet index_set_of(const SfsDescriptor& d) {
    if (d.base != SfsBase::DiskD2)
        throw std::invalid_argument("index_set_of: needs a disk-base descriptor");
    std::vector<Int> indices;
    indices.reserve(d.invariants.size());
    for (const auto& inv : d.invariants) {
        Int idx = index_of_invariant(inv);
        if (idx <= 1)
            throw std::invalid_argument(
                "index_set_of: invariant " + to_display_string(inv) +
                " has index " + idx.str() +
                "; not a D2(p,q) piece with p,q >= 2");
        indices.push_back(std::move(idx));
    }
    return IndexSet(std::move(indices));
}

SfsDescriptor orientation_reversed(const SfsDescriptor& d) {
    std::vector<ExtRational> negated;
    negated.reserve(d.invariants.size());
    for (const auto& inv : d.invariants) negated.push_back(-inv);
    SfsDescriptor out(d.base, std::move(negated), d.label);
    if (d.invariant_sum) out.invariant_sum = -*d.invariant_sum;
    return out;
}

}  // namespace pspos
