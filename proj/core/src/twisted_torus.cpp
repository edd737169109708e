#include "pspos/twisted_torus.hpp"

namespace pspos {

namespace {

Int abs_int(Int v) { return v < 0 ? -v : v; }

Int gcd_int(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

}  // namespace

void validate(const TtkParams& params) {
    if (abs_int(params.p) < 2)
        throw std::invalid_argument("K(p,q,p+q,n): |p| >= 2 required, got p = " +
                                    params.p.str());
    if (abs_int(params.q) < 2)
        throw std::invalid_argument("K(p,q,p+q,n): |q| >= 2 required, got q = " +
                                    params.q.str());
    if (gcd_int(params.p, params.q) != 1)
        throw std::invalid_argument("K(p,q,p+q,n): gcd(p, q) = 1 required, got gcd(" +
                                    params.p.str() + ", " + params.q.str() + ") = " +
                                    gcd_int(params.p, params.q).str());
    if (abs_int(params.p + params.q) <= 1)
        throw std::invalid_argument(
            "K(p,q,p+q,n): |p+q| > 1 required (otherwise the twisting circle is a meridian)");
}

bool is_valid(const TtkParams& params) {
    return abs_int(params.p) >= 2 && abs_int(params.q) >= 2 &&
           gcd_int(params.p, params.q) == 1 &&
           abs_int(params.p + params.q) > 1;
}

Slope surgery_slope(const TtkParams& params) {
    validate(params);
    Int link = params.p + params.q;
    return Slope::integer(params.p * params.q + params.n * link * link);
}

ResultClass classify(const TtkParams& params) {
    validate(params);
    if (params.n == 0)
        return ResultClass{ResultKind::ConnectedSumOfTwoLensSpaces, {}, BergeType::Unspecified, {}};
    if (params.n == 1)
        return ResultClass{ResultKind::LensSpace, {}, BergeType::VII, {}};
    if (params.n == -1)
        return ResultClass{ResultKind::LensSpace, {}, BergeType::VIII, {}};
    std::vector<Int> indices{abs_int(params.p), abs_int(params.q), abs_int(params.n)};
    std::sort(indices.begin(), indices.end());
    return ResultClass{ResultKind::SeifertOverS2, std::move(indices), BergeType::Unspecified, {}};
}

std::vector<PsPosition> ps_positions(const TtkParams& params) {
    validate(params);
    if (abs_int(params.n) < 2)
        throw std::invalid_argument(
            "K(p,q,p+q,n): no primitive/Seifert positions computed for |n| <= 1; "
            "the twisted half is not a Seifert piece over D2(p,q) with p,q >= 2");
    Slope slope = surgery_slope(params);
    // F carries the position whose Seifert half has indices {|q|, |n|},
    // F' the one with {|p|, |n|}.
    return {
        PsPosition{"F", slope, IndexSet({abs_int(params.q), abs_int(params.n)}), std::nullopt},
        PsPosition{"F'", slope, IndexSet({abs_int(params.p), abs_int(params.n)}), std::nullopt},
    };
}

bool hyperbolic_certified(const TtkParams& params) {
    validate(params);
    return abs_int(params.n) > 3;
}

SurgeryRecord make_record(const TtkParams& params) {
    validate(params);
    SurgeryRecord rec{
        KnotFamily::TwistedTorus,
        params,
        surgery_slope(params),
        classify(params),
        {},
        std::nullopt,
        std::nullopt,
        std::nullopt,
        hyperbolic_certified(params),
    };
    if (abs_int(params.n) >= 2) {
        rec.positions = ps_positions(params);
    } else {
        rec.verdict = Verdict{
            VerdictKind::HypothesisViolated,
            "no primitive/Seifert positions for |n| <= 1: the surgery yields " +
                to_string(rec.classification),
            {},
        };
    }
    return rec;
}

}  // namespace pspos
