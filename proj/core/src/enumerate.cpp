#include "pspos/enumerate.hpp"

#include "pspos/distinctness.hpp"
#include "pspos/tangle_knots.hpp"
#include "pspos/twisted_torus.hpp"

#include <set>
#include <sstream>

namespace pspos {

IntRange parse_range(const std::string& text) {
    auto parse_int = [](const std::string& s) {
        if (s.empty())
            throw std::invalid_argument("parse_range: empty bound");
        try {
            return Int(s);
        } catch (const std::exception&) {
            throw std::invalid_argument("parse_range: '" + s +
                                        "' is not an integer");
        }
    };
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        Int v = parse_int(text);
        return IntRange{v, v};
    }
    return IntRange{parse_int(text.substr(0, dots)),
                    parse_int(text.substr(dots + 2))};
}

std::string to_string(const EnumerationSummary& summary) {
    std::ostringstream os;
    os << "records: " << summary.records << "\n";
    os << "verdicts:";
    if (summary.verdict_counts.empty()) os << " none";
    for (const auto& [kind, count] : summary.verdict_counts)
        os << " " << to_string(kind) << "=" << count;
    os << "\n";
    os << "distinct braid indices: " << summary.distinct_braid_indices << "\n";
    return os.str();
}

namespace {

class SummaryBuilder {
public:
    void add(const SurgeryRecord& record) {
        ++summary_.records;
        if (record.verdict) ++summary_.verdict_counts[record.verdict->kind];
        if (record.braid_index) braid_indices_.insert(*record.braid_index);
    }
    EnumerationSummary take() {
        summary_.distinct_braid_indices = braid_indices_.size();
        return std::move(summary_);
    }

private:
    EnumerationSummary summary_;
    std::set<Int> braid_indices_;
};

SurgeryRecord decided(SurgeryRecord record) {
    if (record.verdict) return record;  // degenerate, decided at build time
    return decide_surgery(std::move(record));
}

}  // namespace

EnumerationSummary enumerate_ttk(const TtkSweep& sweep, const RecordSink& sink) {
    SummaryBuilder summary;
    for (Int p = sweep.p.lo; p <= sweep.p.hi; ++p)
        for (Int q = sweep.q.lo; q <= sweep.q.hi; ++q)
            for (Int n = sweep.n.lo; n <= sweep.n.hi; ++n) {
                TtkParams params{p, q, n};
                if (!is_valid(params)) continue;
                SurgeryRecord record = decided(make_record(params));
                summary.add(record);
                sink(record);
            }
    return summary.take();
}

EnumerationSummary enumerate_tangle_knots(const TangleKnotSweep& sweep,
                                          const RecordSink& sink) {
    SummaryBuilder summary;
    for (Int l = sweep.l.lo; l <= sweep.l.hi; ++l)
        for (Int m = sweep.m.lo; m <= sweep.m.hi; ++m)
            for (Int third = sweep.third.lo; third <= sweep.third.hi; ++third)
                for (SlopeTag s : sweep.slopes) {
                    TangleKnotParams params{sweep.tangle_case, l, m, third, s};
                    SurgeryRecord record = decided(make_record(params));
                    summary.add(record);
                    sink(record);
                }
    return summary.take();
}

}  // namespace pspos
