#include "pspos/tangle_knots.hpp"

namespace pspos {

namespace {

Int abs_int(Int v) { return v < 0 ? -v : v; }

const char* branch_name(std::size_t i) {
    return i == 0 ? "A" : (i == 1 ? "B" : "C");
}

}  // namespace

TangleTriple tangles(const TangleKnotParams& params) {
    return make_tangle_triple(params.tangle_case, params.l, params.m, params.third);
}

std::array<Int, 3> exceptional_indices(const TangleKnotParams& params) {
    const Int& l = params.l;
    const Int& m = params.m;
    if (params.tangle_case == TangleCase::Case1) {
        const Int& n = params.third;
        if (params.s == SlopeTag::Gamma0)
            return {abs_int(l - 1), abs_int(l * m + m - 1),
                    abs_int(2 * m * n - m - n + 1)};
        return {abs_int(l + 1), abs_int(l * m - m - 1),
                abs_int(2 * m * n - m + n)};
    }
    const Int& p = params.third;
    if (params.s == SlopeTag::Gamma0)
        return {abs_int(l - 1),
                abs_int(2 * l * m * p - l * m - l * p + 2 * m * p - m - 3 * p + 1),
                abs_int(m - 1)};
    return {abs_int(l + 1),
            abs_int(2 * l * m * p - l * m - l * p - 2 * m * p + m - p + 1),
            abs_int(m)};
}

std::vector<PsPosition> ps_positions(const TangleKnotParams& params) {
    auto indices = exceptional_indices(params);
    for (std::size_t i = 0; i < indices.size(); ++i)
        if (indices[i] <= 1)
            throw std::invalid_argument(
                std::string("k(A,B,C): ") + branch_name(i) + "-fiber index " +
                indices[i].str() +
                " <= 1; the Seifert half is not over D2(p,q) with p,q >= 2");

    Slope slope = Slope::symbolic(params.s);
    PsPosition on_s{"S", slope, IndexSet({indices[1], indices[2]}), std::nullopt};
    PsPosition on_s_prime{"S'", slope, IndexSet({indices[0], indices[2]}),
                          std::nullopt};

    // The only family whose Seifert-half invariants the construction
    // computes explicitly: k(2, 4, n, 0) at gamma1, with C-fiber invariant
    // (16n-7)/(9n-4).
    if (params.tangle_case == TangleCase::Case1 && params.l == 2 &&
        params.m == 4 && params.s == SlopeTag::Gamma1) {
        const Int& n = params.third;
        ExtRational c_invariant(16 * n - 7, 9 * n - 4);
        on_s.seifert_half = SfsDescriptor(
            SfsBase::DiskD2, {ExtRational(4, 3), c_invariant},
            "Seifert half over D2 at S, k(2,4,n,0), gamma1");
        on_s_prime.seifert_half = SfsDescriptor(
            SfsBase::DiskD2, {ExtRational(-1, 3), c_invariant},
            "Seifert half over D2 at S', k(2,4,n,0), gamma1");
    }
    return {std::move(on_s), std::move(on_s_prime)};
}

bool ab_indices_distinct(const TangleKnotParams& params) {
    auto indices = exceptional_indices(params);
    return indices[0] != indices[1];
}

Int braid_index(const TangleKnotParams& params) {
    const Int& l = params.l;
    const Int& m = params.m;
    if (l <= 0 || m == 0)
        throw std::domain_error(
            "braid_index: formula stated for l > 0 and m != 0 only");
    if (params.tangle_case == TangleCase::Case1)
        return m > 0 ? 2 * l * m - 1 : 2 * abs_int(l * m) + 1;
    return m > 0 ? 2 * l * m - l - 1 : 2 * abs_int(l * m) + l + 1;
}

SurgeryRecord make_record(const TangleKnotParams& params) {
    auto indices = exceptional_indices(params);

    ResultClass classification;
    bool zero_index = false;
    std::size_t zero_branch = 0;
    for (std::size_t i = 0; i < indices.size(); ++i)
        if (indices[i] == 0 && !zero_index) {
            zero_index = true;
            zero_branch = i;
        }
    if (zero_index) {
        classification = ResultClass{
            ResultKind::Degenerate, {}, BergeType::Unspecified,
            std::string(branch_name(zero_branch)) +
                "-fiber index 0: the filling kills that fiber and the Seifert "
                "description collapses"};
    } else {
        std::vector<Int> sorted(indices.begin(), indices.end());
        std::sort(sorted.begin(), sorted.end());
        classification = ResultClass{ResultKind::SeifertOverS2, std::move(sorted),
                                     BergeType::Unspecified, {}};
    }

    SurgeryRecord rec{
        KnotFamily::TangleKnot,
        params,
        Slope::symbolic(params.s),
        std::move(classification),
        {},
        std::nullopt,
        ab_indices_distinct(params),
        std::nullopt,
        std::nullopt,
    };
    if (params.l > 0 && params.m != 0) rec.braid_index = braid_index(params);

    Int min_index = std::min({indices[0], indices[1], indices[2]});
    if (min_index >= 2) {
        rec.positions = ps_positions(params);
    } else {
        std::size_t bad = 0;
        for (std::size_t i = 0; i < indices.size(); ++i)
            if (indices[i] == min_index) {
                bad = i;
                break;
            }
        rec.verdict = Verdict{
            VerdictKind::HypothesisViolated,
            std::string(branch_name(bad)) + "-fiber index " + indices[bad].str() +
                " <= 1: no primitive/Seifert position with a D2(p,q), p,q >= 2 "
                "Seifert half",
            {},
        };
    }
    return rec;
}

}  // namespace pspos
