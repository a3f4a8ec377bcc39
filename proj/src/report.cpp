#include "logtan/report.hpp"

#include <sstream>
#include <utility>

#include "logtan/error.hpp"
#include "logtan/projective_point.hpp"

namespace logtan::report {

namespace {

Report header(const char* subcommand) {
    Report r;
    r["schema"] = kSchemaVersion;
    r["subcommand"] = subcommand;
    return r;
}

Report points_to_json(const std::vector<ProjectivePoint>& points) {
    Report out = Report::array();
    for (const auto& p : points) out.push_back(p.str());
    return out;
}

Report fixed_points_to_json(const FixedPoints& fp) {
    Report out;
    switch (fp.kind) {
        case FixedPoints::Kind::Identity: out["kind"] = "identity"; break;
        case FixedPoints::Kind::Irrational: out["kind"] = "irrational"; break;
        case FixedPoints::Kind::Points: out["kind"] = "points"; break;
    }
    out["points"] = points_to_json(fp.points);
    return out;
}

template <typename Json>
BigInt integer_field(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return BigInt(std::to_string(j.template get<std::int64_t>()));
    if (j.is_string()) {
        try {
            return parse_bigint(j.template get<std::string>());
        } catch (const InputError&) {
        }
    }
    throw InputError(where + ": expected an integer");
}

template <typename Json>
const Json& require(const Json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key))
        throw InputError(where + "." + key + ": missing required field");
    return obj.at(key);
}

void render_value(std::ostringstream& os, const std::string& path, const Report& value) {
    if (value.is_object()) {
        for (const auto& [key, child] : value.items())
            render_value(os, path.empty() ? key : path + "." + key, child);
        return;
    }
    if (value.is_array() && !value.empty() && value.front().is_object()) {
        for (std::size_t i = 0; i < value.size(); ++i)
            render_value(os, path + "[" + std::to_string(i) + "]", value[i]);
        return;
    }
    os << path << ": ";
    if (value.is_string()) {
        os << value.get<std::string>();
    } else {
        os << value.dump();
    }
    os << '\n';
}

}  // namespace

Format parse_format(const std::string& name) {
    if (name == "text") return Format::Text;
    if (name == "json" || name == "structured") return Format::Structured;
    throw InputError("unknown format '" + name + "' (expected text or json)");
}

Report to_json(const BigInt& n) {
    if (fits_int64(n)) return to_int64(n);
    return to_string(n);
}

Report to_json(const StepSequence& e) {
    Report out = Report::array();
    for (const auto& s : e.steps()) out.push_back(to_json(s));
    return out;
}

Report to_json(const MoebiusMap& f) {
    return Report::array({to_json(f.a()), to_json(f.b()), to_json(f.c()), to_json(f.d())});
}

Report to_json(const ObstructionVerdict& v) {
    Report out;
    out["permutation_identity"] = v.permutation_identity;
    out["negative_definite_cycle"] = v.negative_definite_cycle;
    out["obstructed"] = v.obstructed;
    return out;
}

Report to_json(const RemarkRow& row) {
    Report out;
    out["r"] = row.r;
    out["zeros"] = row.zeros;
    out["ones"] = row.ones;
    out["minus_ones"] = row.minus_ones;
    return out;
}

BigInt bigint_from_json(const Report& j) { return integer_field(j, "value"); }

StepSequence steps_from_json(const Report& j) {
    if (!j.is_array()) throw InputError("steps: expected an integer array");
    std::vector<BigInt> steps;
    for (std::size_t i = 0; i < j.size(); ++i)
        steps.push_back(integer_field(j[i], "steps[" + std::to_string(i) + "]"));
    return StepSequence(std::move(steps));
}

MoebiusMap moebius_from_json(const Report& j) {
    if (!j.is_array() || j.size() != 4) throw InputError("map: expected [a, b, c, d]");
    return {integer_field(j[0], "map[0]"), integer_field(j[1], "map[1]"),
            integer_field(j[2], "map[2]"), integer_field(j[3], "map[3]")};
}

ObstructionVerdict verdict_from_json(const Report& j) {
    return {require(j, "permutation_identity", "verdict").get<bool>(),
            require(j, "negative_definite_cycle", "verdict").get<bool>(),
            require(j, "obstructed", "verdict").get<bool>()};
}

RemarkRow remark_row_from_json(const Report& j) {
    return {require(j, "r", "row").get<std::size_t>(), require(j, "zeros", "row").get<bool>(),
            require(j, "ones", "row").get<bool>(), require(j, "minus_ones", "row").get<bool>()};
}

CurveConfiguration configuration_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw InputError("document: expected an object with vertices and edges");
    const auto& vs = require(doc, "vertices", "document");
    if (!vs.is_array()) throw InputError("vertices: expected an array");

    std::vector<CurveVertex> vertices;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const std::string where = "vertices[" + std::to_string(i) + "]";
        const auto& v = vs[i];
        if (!v.is_object()) throw InputError(where + ": expected an object");
        const auto& id = require(v, "id", where);
        if (!id.is_string()) throw InputError(where + ".id: expected a string");
        const BigInt genus = integer_field(require(v, "genus", where), where + ".genus");
        if (!fits_int64(genus)) throw InputError(where + ".genus: out of range");
        vertices.push_back({id.get<std::string>(), to_int64(genus),
                            integer_field(require(v, "e", where), where + ".e")});
    }

    std::vector<CurveEdge> edges;
    if (doc.contains("edges")) {
        const auto& es = doc.at("edges");
        if (!es.is_array()) throw InputError("edges: expected an array");
        for (std::size_t i = 0; i < es.size(); ++i) {
            const std::string where = "edges[" + std::to_string(i) + "]";
            const auto& e = es[i];
            if (!e.is_object()) throw InputError(where + ": expected an object");
            const auto& a = require(e, "a", where);
            const auto& b = require(e, "b", where);
            if (!a.is_string()) throw InputError(where + ".a: expected a string");
            if (!b.is_string()) throw InputError(where + ".b: expected a string");
            BigInt mult(1);
            if (e.contains("mult")) mult = integer_field(e.at("mult"), where + ".mult");
            if (!fits_int64(mult)) throw InputError(where + ".mult: out of range");
            edges.push_back({a.get<std::string>(), b.get<std::string>(), to_int64(mult)});
        }
    }
    return {std::move(vertices), std::move(edges)};
}

Report to_json(const CurveConfiguration& config) {
    Report out;
    out["vertices"] = Report::array();
    for (const auto& v : config.vertices()) {
        Report vj;
        vj["id"] = v.id;
        vj["genus"] = v.genus;
        vj["e"] = to_json(v.self_intersection);
        out["vertices"].push_back(std::move(vj));
    }
    out["edges"] = Report::array();
    for (const auto& e : config.edges()) {
        Report ej;
        ej["a"] = e.a;
        ej["b"] = e.b;
        ej["mult"] = e.multiplicity;
        out["edges"].push_back(std::move(ej));
    }
    return out;
}

Report run_phi(const std::vector<BigInt>& steps, const std::optional<std::string>& x) {
    if (steps.empty()) throw InputError("phi: at least one step is required");
    const StepSequence e(steps);
    std::optional<ProjectivePoint> point;
    if (x) point = parse_projective_point(*x);

    Report r = header("phi");
    r["inputs"]["steps"] = to_json(e);
    if (x) r["inputs"]["x"] = *x;

    const MoebiusMap f = phi_map(e);
    auto& res = r["results"];
    res["map"] = to_json(f);
    res["identity"] = is_identity(f);
    res["fixed_points"] = fixed_points_to_json(fixed_points(f));
    if (point) {
        const ProjectivePoint image = apply(f, *point);
        res["image"] = image.value_str();
        res["image_point"] = image.str();
    }
    return r;
}

Report run_lemma_scan(long r, long bound, const ScanLimits& limits) {
    if (r < 1) throw InputError("lemma-scan: r must be >= 1");
    const auto survivors = lemma_scan(static_cast<std::size_t>(r), bound, limits);
    Report out = header("lemma-scan");
    out["inputs"]["r"] = r;
    out["inputs"]["bound"] = bound;
    auto& res = out["results"];
    res["survivors"] = Report::array();
    for (const auto& s : survivors) res["survivors"].push_back(to_json(s));
    res["survivor_count"] = survivors.size();
    res["conformance"] = survivors_conform(survivors);
    return out;
}

Report run_remark(long r_max) {
    if (r_max < 1) throw InputError("remark: r-max must be >= 1");
    const auto table = remark_table(static_cast<std::size_t>(r_max));
    Report out = header("remark");
    out["inputs"]["r_max"] = r_max;
    auto& res = out["results"];
    res["table"] = Report::array();
    for (const auto& row : table) res["table"].push_back(to_json(row));
    res["conformance"] = remark_table_conforms(table);
    return out;
}

Report run_graph(const nlohmann::json& doc) {
    const CurveConfiguration config = configuration_from_json(doc);
    Report out = header("graph");
    out["inputs"] = to_json(config);
    auto& components = out["results"]["components"];
    components = Report::array();
    for (const auto& component : connected_components(config)) {
        Report c;
        c["vertices"] = Report::array();
        for (const auto& v : component.vertices()) c["vertices"].push_back(v.id);
        const auto m = intersection_matrix(component);
        c["intersection_matrix"] = Report::array();
        for (const auto& row : m.rows()) {
            Report jr = Report::array();
            for (const auto& x : row) jr.push_back(to_json(x));
            c["intersection_matrix"].push_back(std::move(jr));
        }
        c["definiteness"] = std::string(to_string(definiteness(m)));
        c["adjunction_defects"] = adjunction_residues(component);
        c["class"] = std::string(to_string(classify(component)));
        components.push_back(std::move(c));
    }
    return out;
}

Report run_cycle(const std::vector<BigInt>& steps, const std::optional<std::string>& x0) {
    if (steps.size() < 2) throw InputError("cycle: a cycle needs at least two steps");
    const StepSequence e(steps);
    std::optional<ProjectivePoint> start;
    if (x0) start = parse_projective_point(*x0);

    Report out = header("cycle");
    out["inputs"]["mode"] = "single";
    out["inputs"]["steps"] = to_json(e);
    if (x0) out["inputs"]["x0"] = *x0;
    auto& res = out["results"];
    if (start) {
        const auto prop = propagate_cycle(e, *start);
        Report trace = Report::array();
        for (const auto& p : prop.trace) trace.push_back(p.value_str());
        res["trace"] = std::move(trace);
        res["closure"] = prop.final_point() == *start;
    }
    res["obstruction"] = to_json(trivial_log_tangent_obstruction(e));
    return out;
}

Report run_cycle_scan(const ObstructionScanBounds& bounds, const ScanLimits& limits) {
    const auto result = obstruction_scan(bounds, limits);
    Report out = header("cycle");
    out["inputs"]["mode"] = "scan";
    out["inputs"]["r_min"] = bounds.r_min;
    out["inputs"]["r_max"] = bounds.r_max;
    out["inputs"]["e_min"] = bounds.e_min;
    out["inputs"]["e_max"] = bounds.e_max;
    auto& res = out["results"];
    res["tuples_checked"] = result.tuples_checked;
    res["permutation_identity_count"] = result.permutation_identity_count;
    res["negative_definite_count"] = result.negative_definite_count;
    res["counterexamples"] = Report::array();
    for (const auto& c : result.counterexamples) res["counterexamples"].push_back(to_json(c));
    res["conformance"] = result.counterexamples.empty();
    return out;
}

std::string render_structured(const Report& report) { return report.dump(2) + "\n"; }

std::string render_text(const Report& report) {
    std::ostringstream os;
    os << "logtan report, schema " << report.value("schema", "?") << '\n';
    const auto& results = report.contains("results") ? report.at("results") : Report();
    if (results.is_object() && results.contains("conformance") && !results.at("conformance").get<bool>())
        os << "WARNING: conformance check FAILED; the result contradicts the expected classification\n";
    for (const auto& [key, value] : report.items()) {
        if (key == "schema") continue;
        render_value(os, key, value);
    }
    return os.str();
}

std::string render(const Report& report, Format format) {
    return format == Format::Text ? render_text(report) : render_structured(report);
}

Report parse_report(const std::string& text) {
    try {
        return Report::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("report: ") + e.what());
    }
}

}  // namespace logtan::report
