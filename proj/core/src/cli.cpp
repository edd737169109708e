#include "pspos/cli.hpp"

#include "pspos/continued_fraction.hpp"
#include "pspos/distinctness.hpp"
#include "pspos/enumerate.hpp"
#include "pspos/report.hpp"
#include "pspos/tangle_knots.hpp"
#include "pspos/twisted_torus.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace pspos {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const char* kUsage = R"(usage: pspos <command> [options]

commands:
  tangle --cf A1,A2,...      evaluate a rational-tangle continued fraction
  tangle --rational P/Q      expand a fraction into a continued fraction
  ttk P Q N                  one twisted torus knot K(P, Q, P+Q, N) record
  emk CASE L M X --slope S   one tangle-constructed knot record; CASE is
                             case1 (X = n) or case2 (X = p); S is 0 or 1
  enumerate ttk --p A..B --q A..B --n A..B
  enumerate emk --case 1|2 --l A..B --m A..B (--n|--p) A..B --slope 0|1|0..1
  compare-sfs --base disk|sphere INVS1 INVS2
                             compare Seifert invariant lists (comma separated)

options for record-producing commands:
  --format text|jsonl|csv    output format (default text)
  --output PATH              write records to PATH instead of stdout

exit codes: 0 success, 1 I/O failure, 2 usage or validation error
)";

// Tokens beginning with "--" are flags; everything else (including
// negative numbers such as -4 or -1/3,9/5) is positional.
bool is_flag(const std::string& token) {
    return token.size() >= 2 && token[0] == '-' && token[1] == '-';
}

std::string take_value(const std::vector<std::string>& args, std::size_t& i,
                       const std::string& flag) {
    if (i + 1 >= args.size())
        throw UsageError("missing value for " + flag);
    return args[++i];
}

Int parse_int_arg(const std::string& text, const std::string& what) {
    try {
        return Int(text);
    } catch (const std::exception&) {
        throw UsageError("cannot parse " + what + " '" + text +
                         "' as an integer");
    }
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    return parts;
}

SlopeTag parse_slope_tag(const std::string& text) {
    if (text == "0") return SlopeTag::Gamma0;
    if (text == "1") return SlopeTag::Gamma1;
    throw UsageError("--slope must be 0 or 1, got '" + text + "'");
}

TangleCase parse_case(const std::string& text) {
    if (text == "case1" || text == "1") return TangleCase::Case1;
    if (text == "case2" || text == "2") return TangleCase::Case2;
    throw UsageError("case must be case1 or case2, got '" + text + "'");
}

// Common record-output options.
struct RecordOutput {
    ReportFormat format = ReportFormat::HumanText;
    std::optional<std::string> path;
    std::ofstream file;
    std::ostream* stream = nullptr;

    std::ostream& open(std::ostream& fallback) {
        if (!path) {
            stream = &fallback;
            return fallback;
        }
        file.open(*path);
        if (!file)
            throw IoError("cannot open output path '" + *path + "'");
        stream = &file;
        return file;
    }
};

void emit_record(const SurgeryRecord& record, ReportFormat format,
                 std::ostream& os, bool with_csv_header) {
    switch (format) {
        case ReportFormat::HumanText:
            os << to_text(record);
            break;
        case ReportFormat::JsonLines:
            os << to_jsonl(record) << "\n";
            break;
        case ReportFormat::Csv:
            if (with_csv_header) os << csv_header() << "\n";
            os << to_csv_row(record) << "\n";
            break;
    }
}

SurgeryRecord finalize(SurgeryRecord record) {
    if (record.verdict) return record;
    return decide_surgery(std::move(record));
}

int cmd_tangle(const std::vector<std::string>& args, std::ostream& out) {
    std::optional<std::string> cf_text;
    std::optional<std::string> rational_text;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--cf") cf_text = take_value(args, i, "--cf");
        else if (args[i] == "--rational")
            rational_text = take_value(args, i, "--rational");
        else throw UsageError("tangle: unexpected argument '" + args[i] + "'");
    }
    if (cf_text.has_value() == rational_text.has_value())
        throw UsageError("tangle: give exactly one of --cf or --rational");

    if (cf_text) {
        ContinuedFraction cf;
        for (const auto& part : split(*cf_text, ','))
            cf.entries.push_back(parse_int_arg(part, "continued fraction entry"));
        ExtRational value = cf_to_rational(cf);
        out << "continued fraction: " << to_string(cf) << "\n";
        out << "fraction: " << value << "\n";
        if (value.is_infinite())
            out << "no finite expansion (fraction is inf)\n";
        else
            out << "canonical continued fraction: " << to_string(rational_to_cf(value))
                << "\n";
        return 0;
    }

    ExtRational r;
    try {
        r = parse_rational(*rational_text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("tangle: ") + e.what());
    }
    if (r.is_infinite())
        throw UsageError("tangle: no finite expansion for inf");
    out << "fraction: " << r << "\n";
    out << "continued fraction: " << to_string(rational_to_cf(r)) << "\n";
    return 0;
}

int cmd_ttk(const std::vector<std::string>& args, std::ostream& out) {
    std::vector<std::string> positional;
    RecordOutput output;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--format")
            output.format = parse_format(take_value(args, i, "--format"));
        else if (args[i] == "--output")
            output.path = take_value(args, i, "--output");
        else if (is_flag(args[i]))
            throw UsageError("ttk: unknown flag '" + args[i] + "'");
        else positional.push_back(args[i]);
    }
    if (positional.size() != 3)
        throw UsageError("ttk: expected exactly 3 arguments P Q N");
    TtkParams params{parse_int_arg(positional[0], "p"),
                     parse_int_arg(positional[1], "q"),
                     parse_int_arg(positional[2], "n")};
    SurgeryRecord record = finalize(make_record(params));
    emit_record(record, output.format, output.open(out), true);
    return 0;
}

int cmd_emk(const std::vector<std::string>& args, std::ostream& out) {
    std::vector<std::string> positional;
    RecordOutput output;
    std::optional<SlopeTag> slope;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--format")
            output.format = parse_format(take_value(args, i, "--format"));
        else if (args[i] == "--output")
            output.path = take_value(args, i, "--output");
        else if (args[i] == "--slope")
            slope = parse_slope_tag(take_value(args, i, "--slope"));
        else if (is_flag(args[i]))
            throw UsageError("emk: unknown flag '" + args[i] + "'");
        else positional.push_back(args[i]);
    }
    if (positional.size() != 4)
        throw UsageError("emk: expected exactly 4 arguments CASE L M X");
    if (!slope) throw UsageError("emk: --slope 0|1 is required");
    TangleKnotParams params{parse_case(positional[0]),
                            parse_int_arg(positional[1], "l"),
                            parse_int_arg(positional[2], "m"),
                            parse_int_arg(positional[3], "n/p"), *slope};
    SurgeryRecord record = finalize(make_record(params));
    emit_record(record, output.format, output.open(out), true);
    return 0;
}

int cmd_enumerate(const std::vector<std::string>& args, std::ostream& out,
                  std::ostream& err) {
    if (args.empty())
        throw UsageError("enumerate: expected family 'ttk' or 'emk'");
    const std::string family = args[0];

    RecordOutput output;
    std::optional<IntRange> p_range, q_range, n_range, l_range, m_range;
    std::optional<TangleCase> tangle_case;
    std::optional<std::string> slope_text;

    auto parse_range_flag = [&](const std::vector<std::string>& a,
                                std::size_t& i) -> IntRange {
        std::string flag = a[i];
        std::string value = take_value(a, i, flag);
        try {
            return parse_range(value);
        } catch (const std::invalid_argument& e) {
            throw UsageError("enumerate: " + std::string(e.what()));
        }
    };

    for (std::size_t i = 1; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--format")
            output.format = parse_format(take_value(args, i, "--format"));
        else if (a == "--output") output.path = take_value(args, i, "--output");
        else if (a == "--p") p_range = parse_range_flag(args, i);
        else if (a == "--q") q_range = parse_range_flag(args, i);
        else if (a == "--n") n_range = parse_range_flag(args, i);
        else if (a == "--l") l_range = parse_range_flag(args, i);
        else if (a == "--m") m_range = parse_range_flag(args, i);
        else if (a == "--case") tangle_case = parse_case(take_value(args, i, "--case"));
        else if (a == "--slope") slope_text = take_value(args, i, "--slope");
        else throw UsageError("enumerate: unknown argument '" + a + "'");
    }

    std::ostream& os = output.open(out);
    bool first = true;
    std::size_t emitted = 0;
    RecordSink sink = [&](const SurgeryRecord& record) {
        if (output.format == ReportFormat::HumanText && !first) os << "\n";
        emit_record(record, output.format, os, first);
        first = false;
        ++emitted;
    };

    EnumerationSummary summary;
    if (family == "ttk") {
        if (!p_range || !q_range || !n_range)
            throw UsageError("enumerate ttk: --p, --q and --n ranges are required");
        summary = enumerate_ttk(TtkSweep{*p_range, *q_range, *n_range}, sink);
    } else if (family == "emk") {
        if (!tangle_case) throw UsageError("enumerate emk: --case is required");
        if (!l_range || !m_range)
            throw UsageError("enumerate emk: --l and --m ranges are required");
        // the third parameter keeps its per-case name on the command line
        std::optional<IntRange> third =
            *tangle_case == TangleCase::Case1 ? n_range : p_range;
        if (!third)
            throw UsageError(*tangle_case == TangleCase::Case1
                                 ? "enumerate emk case1: --n range is required"
                                 : "enumerate emk case2: --p range is required");
        std::vector<SlopeTag> slopes;
        if (!slope_text) throw UsageError("enumerate emk: --slope is required");
        if (*slope_text == "0..1" || *slope_text == "both")
            slopes = {SlopeTag::Gamma0, SlopeTag::Gamma1};
        else
            slopes = {parse_slope_tag(*slope_text)};
        summary = enumerate_tangle_knots(
            TangleKnotSweep{*tangle_case, *l_range, *m_range, *third, slopes},
            sink);
    } else {
        throw UsageError("enumerate: unknown family '" + family + "'");
    }

    // Keep jsonl/csv record streams machine-pure: their summary footer
    // goes to the diagnostic stream, not into the records.
    if (output.format == ReportFormat::HumanText) {
        if (emitted) os << "\n";
        os << "--- summary ---\n" << to_string(summary);
    } else {
        err << "--- summary ---\n" << to_string(summary);
    }
    return 0;
}

int cmd_compare_sfs(const std::vector<std::string>& args, std::ostream& out) {
    std::vector<std::string> positional;
    std::optional<std::string> base_text;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--base") base_text = take_value(args, i, "--base");
        else if (is_flag(args[i]))
            throw UsageError("compare-sfs: unknown flag '" + args[i] + "'");
        else positional.push_back(args[i]);
    }
    if (!base_text) throw UsageError("compare-sfs: --base disk|sphere is required");
    SfsBase base;
    if (*base_text == "disk") base = SfsBase::DiskD2;
    else if (*base_text == "sphere") base = SfsBase::SphereS2;
    else throw UsageError("compare-sfs: --base must be disk or sphere");
    if (positional.size() != 2)
        throw UsageError("compare-sfs: expected exactly 2 invariant lists");

    auto parse_descriptor = [&](const std::string& text, const char* side) {
        std::vector<ExtRational> invariants;
        for (const auto& part : split(text, ',')) {
            ExtRational r = parse_rational(part);
            if (r.is_infinite())
                throw UsageError(std::string("compare-sfs: ") + side +
                                 " invariant must be finite");
            invariants.push_back(std::move(r));
        }
        return SfsDescriptor(base, std::move(invariants), side);
    };

    SfsDescriptor d1 = parse_descriptor(positional[0], "left");
    SfsDescriptor d2 = parse_descriptor(positional[1], "right");

    auto print_side = [&](const char* side, const SfsDescriptor& d) {
        SfsDescriptor n = sfs_normalize(d);
        out << side << "  {";
        for (std::size_t i = 0; i < d.invariants.size(); ++i) {
            if (i) out << ", ";
            out << d.invariants[i];
        }
        out << "}  mod 1: {";
        for (std::size_t i = 0; i < n.invariants.size(); ++i) {
            if (i) out << ", ";
            out << n.invariants[i];
        }
        out << "}";
        if (n.invariant_sum) out << "  sum: " << *n.invariant_sum;
        out << "\n";
    };
    print_side("left: ", d1);
    print_side("right:", d2);

    bool homeo = sfs_homeomorphic(d1, d2);
    out << "verdict: "
        << (homeo ? "homeomorphic" : "NOT homeomorphic")
        << " (orientation-preserving, fiber-preserving)\n";
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    try {
        if (args.empty()) {
            err << kUsage;
            return 2;
        }
        const std::string& command = args[0];
        std::vector<std::string> rest(args.begin() + 1, args.end());
        if (command == "help" || command == "--help" || command == "-h") {
            out << kUsage;
            return 0;
        }
        if (command == "tangle") return cmd_tangle(rest, out);
        if (command == "ttk") return cmd_ttk(rest, out);
        if (command == "emk") return cmd_emk(rest, out);
        if (command == "enumerate") return cmd_enumerate(rest, out, err);
        if (command == "compare-sfs") return cmd_compare_sfs(rest, out);
        throw UsageError("unknown command '" + command + "'");
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        err << "run 'pspos help' for usage\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        // parameter validation and parse failures from the library
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace pspos
