#include "pspos/report.hpp"

#include <json.hpp>

#include <sstream>

namespace pspos {

namespace {

using json = nlohmann::ordered_json;

// --- json building blocks -------------------------------------------------

json int_array(const std::vector<Int>& values) {
    json arr = json::array();
    for (const auto& v : values) arr.push_back(v.str());
    return arr;
}

json rational_array(const std::vector<ExtRational>& values) {
    json arr = json::array();
    for (const auto& v : values) arr.push_back(to_fraction_string(v));
    return arr;
}

std::vector<Int> int_vector(const json& arr) {
    std::vector<Int> out;
    for (const auto& v : arr) out.emplace_back(v.get<std::string>());
    return out;
}

std::vector<ExtRational> rational_vector(const json& arr) {
    std::vector<ExtRational> out;
    for (const auto& v : arr) out.push_back(parse_rational(v.get<std::string>()));
    return out;
}

json slope_to_json(const Slope& s) {
    if (const Int* v = std::get_if<Int>(&s.value))
        return json{{"kind", "integer"}, {"value", v->str()}};
    return json{{"kind", "symbolic"}, {"value", to_string(s)}};
}

Slope slope_from_json(const json& j) {
    const auto kind = j.at("kind").get<std::string>();
    const auto value = j.at("value").get<std::string>();
    if (kind == "integer") return Slope::integer(Int(value));
    if (kind != "symbolic" || (value != "gamma0" && value != "gamma1"))
        throw std::invalid_argument("record_from_jsonl: bad slope " + value);
    return Slope::symbolic(value == "gamma0" ? SlopeTag::Gamma0
                                             : SlopeTag::Gamma1);
}

const char* berge_name(BergeType t) {
    switch (t) {
        case BergeType::VII: return "VII";
        case BergeType::VIII: return "VIII";
        case BergeType::Unspecified: return "unspecified";
    }
    return "unspecified";
}

json classification_to_json(const ResultClass& c) {
    switch (c.kind) {
        case ResultKind::SeifertOverS2:
            return json{{"kind", "seifert_over_s2"},
                        {"fiber_indices", int_array(c.fiber_indices)}};
        case ResultKind::LensSpace:
            return json{{"kind", "lens_space"}, {"berge_type", berge_name(c.berge)}};
        case ResultKind::ConnectedSumOfTwoLensSpaces:
            return json{{"kind", "connected_sum_of_two_lens_spaces"}};
        case ResultKind::Degenerate:
            return json{{"kind", "degenerate"}, {"reason", c.reason}};
    }
    throw std::logic_error("classification_to_json: bad kind");
}

ResultClass classification_from_json(const json& j) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "seifert_over_s2")
        return ResultClass{ResultKind::SeifertOverS2,
                           int_vector(j.at("fiber_indices")),
                           BergeType::Unspecified,
                           {}};
    if (kind == "lens_space") {
        const auto berge = j.at("berge_type").get<std::string>();
        BergeType t = berge == "VII"    ? BergeType::VII
                      : berge == "VIII" ? BergeType::VIII
                                        : BergeType::Unspecified;
        return ResultClass{ResultKind::LensSpace, {}, t, {}};
    }
    if (kind == "connected_sum_of_two_lens_spaces")
        return ResultClass{ResultKind::ConnectedSumOfTwoLensSpaces, {}, BergeType::Unspecified, {}};
    if (kind == "degenerate")
        return ResultClass{ResultKind::Degenerate, {}, BergeType::Unspecified,
                           j.at("reason").get<std::string>()};
    throw std::invalid_argument("record_from_jsonl: bad classification " + kind);
}

json position_to_json(const PsPosition& pos) {
    json j{{"surface_label", pos.surface_label},
           {"index_set", int_array(pos.index_set.values())}};
    if (pos.seifert_half)
        j["invariants"] = rational_array(pos.seifert_half->invariants);
    return j;
}

PsPosition position_from_json(const json& j, const Slope& slope) {
    PsPosition pos{j.at("surface_label").get<std::string>(), slope,
                   IndexSet(int_vector(j.at("index_set"))), std::nullopt};
    if (j.contains("invariants"))
        pos.seifert_half = SfsDescriptor(SfsBase::DiskD2,
                                         rational_vector(j.at("invariants")));
    return pos;
}

VerdictKind verdict_kind_from_string(const std::string& s) {
    if (s == "distinct_by_index_set") return VerdictKind::DistinctByIndexSet;
    if (s == "distinct_by_invariants_mod1")
        return VerdictKind::DistinctByInvariantsMod1;
    if (s == "inconclusive") return VerdictKind::Inconclusive;
    if (s == "hypothesis_violated") return VerdictKind::HypothesisViolated;
    throw std::invalid_argument("record_from_jsonl: bad verdict kind " + s);
}

json evidence_to_json(const VerdictEvidence& e) {
    json j = json::object();
    if (e.index_set_1) j["index_set_1"] = int_array(e.index_set_1->values());
    if (e.index_set_2) j["index_set_2"] = int_array(e.index_set_2->values());
    if (e.invariants_mod1_1)
        j["invariants_mod1_1"] = rational_array(*e.invariants_mod1_1);
    if (e.invariants_mod1_2)
        j["invariants_mod1_2"] = rational_array(*e.invariants_mod1_2);
    if (!e.note.empty()) j["note"] = e.note;
    return j;
}

VerdictEvidence evidence_from_json(const json& j) {
    VerdictEvidence e;
    if (j.contains("index_set_1")) e.index_set_1 = IndexSet(int_vector(j.at("index_set_1")));
    if (j.contains("index_set_2")) e.index_set_2 = IndexSet(int_vector(j.at("index_set_2")));
    if (j.contains("invariants_mod1_1"))
        e.invariants_mod1_1 = rational_vector(j.at("invariants_mod1_1"));
    if (j.contains("invariants_mod1_2"))
        e.invariants_mod1_2 = rational_vector(j.at("invariants_mod1_2"));
    if (j.contains("note")) e.note = j.at("note").get<std::string>();
    return e;
}

json params_to_json(const SurgeryRecord& record) {
    if (const TtkParams* t = std::get_if<TtkParams>(&record.params))
        return json{{"p", t->p.str()}, {"q", t->q.str()}, {"n", t->n.str()}};
    const auto& k = std::get<TangleKnotParams>(record.params);
    json j{{"case", k.tangle_case == TangleCase::Case1 ? "case1" : "case2"},
           {"l", k.l.str()},
           {"m", k.m.str()}};
    j[k.tangle_case == TangleCase::Case1 ? "n" : "p"] = k.third.str();
    return j;
}

std::string params_summary(const SurgeryRecord& record) {
    if (const TtkParams* t = std::get_if<TtkParams>(&record.params))
        return "p=" + t->p.str() + " q=" + t->q.str() + " n=" + t->n.str();
    const auto& k = std::get<TangleKnotParams>(record.params);
    std::string third_name = k.tangle_case == TangleCase::Case1 ? "n" : "p";
    return std::string(k.tangle_case == TangleCase::Case1 ? "case=case1"
                                                          : "case=case2") +
           " l=" + k.l.str() + " m=" + k.m.str() + " " + third_name + "=" +
           k.third.str();
}

// --- csv helpers ----------------------------------------------------------

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string joined(const std::vector<std::string>& parts, char sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string int_list(const std::vector<Int>& values, char sep) {
    std::vector<std::string> parts;
    parts.reserve(values.size());
    for (const auto& v : values) parts.push_back(v.str());
    return joined(parts, sep);
}

std::string rational_list(const std::vector<ExtRational>& values, char sep) {
    std::vector<std::string> parts;
    parts.reserve(values.size());
    for (const auto& v : values) parts.push_back(to_fraction_string(v));
    return joined(parts, sep);
}

std::string classification_detail(const ResultClass& c) {
    switch (c.kind) {
        case ResultKind::SeifertOverS2: return int_list(c.fiber_indices, ';');
        case ResultKind::LensSpace: return berge_name(c.berge);
        case ResultKind::ConnectedSumOfTwoLensSpaces: return {};
        case ResultKind::Degenerate: return c.reason;
    }
    return {};
}

const char* classification_slug(ResultKind k) {
    switch (k) {
        case ResultKind::SeifertOverS2: return "seifert_over_s2";
        case ResultKind::LensSpace: return "lens_space";
        case ResultKind::ConnectedSumOfTwoLensSpaces:
            return "connected_sum_of_two_lens_spaces";
        case ResultKind::Degenerate: return "degenerate";
    }
    return "";
}

}  // namespace

ReportFormat parse_format(const std::string& name) {
    if (name == "text") return ReportFormat::HumanText;
    if (name == "jsonl") return ReportFormat::JsonLines;
    if (name == "csv") return ReportFormat::Csv;
    throw std::invalid_argument("unknown format '" + name +
                                "' (expected text, jsonl or csv)");
}

std::string to_jsonl(const SurgeryRecord& record) {
    if (!record.verdict)
        throw std::logic_error("to_jsonl: record has no verdict");
    json j;
    j["family"] = record.family == KnotFamily::TwistedTorus ? "ttk" : "emk";
    j["params"] = params_to_json(record);
    j["slope"] = slope_to_json(record.slope);
    j["classification"] = classification_to_json(record.classification);
    json positions = json::array();
    for (const auto& pos : record.positions) positions.push_back(position_to_json(pos));
    j["positions"] = std::move(positions);
    j["verdict"] = json{{"kind", to_string(record.verdict->kind)},
                        {"reason", record.verdict->reason}};
    j["evidence"] = evidence_to_json(record.verdict->evidence);
    if (record.hyperbolic_certified)
        j["hyperbolic_certified"] = *record.hyperbolic_certified;
    if (record.ab_indices_distinct)
        j["hypothesis_ab_distinct"] = *record.ab_indices_distinct;
    if (record.family == KnotFamily::TangleKnot)
        j["braid_index"] = record.braid_index
                               ? json(record.braid_index->str())
                               : json(nullptr);
    return j.dump();
}

SurgeryRecord record_from_jsonl(const std::string& line) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("record_from_jsonl: ") + e.what());
    }
    try {
        SurgeryRecord rec{};
        const auto family = j.at("family").get<std::string>();
        Slope slope = slope_from_json(j.at("slope"));
        const json& params = j.at("params");
        if (family == "ttk") {
            rec.family = KnotFamily::TwistedTorus;
            rec.params = TtkParams{Int(params.at("p").get<std::string>()),
                                   Int(params.at("q").get<std::string>()),
                                   Int(params.at("n").get<std::string>())};
        } else if (family == "emk") {
            rec.family = KnotFamily::TangleKnot;
            TangleCase tc = params.at("case").get<std::string>() == "case1"
                                ? TangleCase::Case1
                                : TangleCase::Case2;
            rec.params = TangleKnotParams{
                tc, Int(params.at("l").get<std::string>()),
                Int(params.at("m").get<std::string>()),
                Int(params.at(tc == TangleCase::Case1 ? "n" : "p").get<std::string>()),
                std::get<SlopeTag>(slope.value)};
        } else {
            throw std::invalid_argument("record_from_jsonl: bad family " + family);
        }
        rec.slope = slope;
        rec.classification = classification_from_json(j.at("classification"));
        for (const auto& pos : j.at("positions"))
            rec.positions.push_back(position_from_json(pos, slope));
        rec.verdict = Verdict{
            verdict_kind_from_string(j.at("verdict").at("kind").get<std::string>()),
            j.at("verdict").at("reason").get<std::string>(),
            evidence_from_json(j.at("evidence"))};
        if (j.contains("hyperbolic_certified"))
            rec.hyperbolic_certified = j.at("hyperbolic_certified").get<bool>();
        if (j.contains("hypothesis_ab_distinct"))
            rec.ab_indices_distinct = j.at("hypothesis_ab_distinct").get<bool>();
        if (j.contains("braid_index") && !j.at("braid_index").is_null())
            rec.braid_index = Int(j.at("braid_index").get<std::string>());
        return rec;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("record_from_jsonl: ") + e.what());
    }
}

std::string csv_header() {
    return "family,params,slope,classification,classification_detail,"
           "pos1_label,pos1_index_set,pos1_invariants,"
           "pos2_label,pos2_index_set,pos2_invariants,"
           "verdict,verdict_reason,hypothesis_ab_distinct,braid_index,"
           "hyperbolic_certified";
}

std::string to_csv_row(const SurgeryRecord& record) {
    if (!record.verdict)
        throw std::logic_error("to_csv_row: record has no verdict");
    auto opt_bool = [](const std::optional<bool>& b) -> std::string {
        if (!b) return {};
        return *b ? "true" : "false";
    };
    std::vector<std::string> cells;
    cells.push_back(record.family == KnotFamily::TwistedTorus ? "ttk" : "emk");
    cells.push_back(params_summary(record));
    cells.push_back(to_string(record.slope));
    cells.push_back(classification_slug(record.classification.kind));
    cells.push_back(classification_detail(record.classification));
    for (std::size_t i = 0; i < 2; ++i) {
        if (i < record.positions.size()) {
            const auto& pos = record.positions[i];
            cells.push_back(pos.surface_label);
            cells.push_back(int_list(pos.index_set.values(), ';'));
            cells.push_back(pos.seifert_half
                                ? rational_list(pos.seifert_half->invariants, ';')
                                : std::string{});
        } else {
            cells.insert(cells.end(), 3, std::string{});
        }
    }
    cells.push_back(to_string(record.verdict->kind));
    cells.push_back(record.verdict->reason);
    cells.push_back(opt_bool(record.ab_indices_distinct));
    cells.push_back(record.braid_index ? record.braid_index->str() : std::string{});
    cells.push_back(opt_bool(record.hyperbolic_certified));

    std::vector<std::string> escaped;
    escaped.reserve(cells.size());
    for (const auto& c : cells) escaped.push_back(csv_escape(c));
    return joined(escaped, ',');
}

std::string to_text(const SurgeryRecord& record) {
    std::ostringstream os;
    if (const TtkParams* t = std::get_if<TtkParams>(&record.params)) {
        os << "knot: twisted torus knot K(p=" << t->p << ", q=" << t->q
           << ", p+q=" << (t->p + t->q) << ", n=" << t->n << ")\n";
    } else {
        const auto& k = std::get<TangleKnotParams>(record.params);
        if (k.tangle_case == TangleCase::Case1)
            os << "knot: tangle-constructed knot k(l=" << k.l << ", m=" << k.m
               << ", n=" << k.third << ", 0)\n";
        else
            os << "knot: tangle-constructed knot k(l=" << k.l << ", m=" << k.m
               << ", 0, p=" << k.third << ")\n";
        TangleTriple triple = make_tangle_triple(k.tangle_case, k.l, k.m, k.third);
        os << "tangles: A = " << to_string(triple.a) << ", B = " << to_string(triple.b)
           << ", C = " << to_string(triple.c) << "\n";
    }
    os << "surgery slope: " << to_string(record.slope) << "\n";
    os << "surgery result: " << to_string(record.classification) << "\n";
    if (record.hyperbolic_certified)
        os << "hyperbolic: " << (*record.hyperbolic_certified
                                     ? "certified (|n| > 3)"
                                     : "not certified")
           << "\n";
    if (record.ab_indices_distinct)
        os << "A/B fiber indices distinct: "
           << (*record.ab_indices_distinct ? "yes" : "no") << "\n";
    if (record.braid_index) os << "braid index: " << *record.braid_index << "\n";
    if (record.positions.empty()) {
        os << "positions: none\n";
    } else {
        os << "positions:\n";
        for (const auto& pos : record.positions) {
            os << "  " << pos.surface_label << "\tindex set "
               << to_string(pos.index_set);
            if (pos.seifert_half) {
                os << "\tinvariants {";
                const auto& invs = pos.seifert_half->invariants;
                for (std::size_t i = 0; i < invs.size(); ++i) {
                    if (i) os << ", ";
                    os << invs[i];
                }
                os << "}";
            }
            os << "\n";
        }
    }
    if (record.verdict) {
        os << "verdict: " << to_string(record.verdict->kind);
        if (!record.verdict->reason.empty())
            os << " -- " << record.verdict->reason;
        os << "\n";
        if (!record.verdict->evidence.note.empty())
            os << "  note: " << record.verdict->evidence.note << "\n";
    }
    return os.str();
}

}  // namespace pspos
