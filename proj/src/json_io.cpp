#include "degseq/json_io.hpp"

#include "degseq/errors.hpp"

namespace degseq {

namespace {

int get_int(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) {
        throw DomainError(std::string("missing or non-integer field: ") + key);
    }
    return j[key].get<int>();
}

WeightVector parse_row(const Json& row) {
    if (!row.is_array() || row.empty()) {
        throw DomainError("objective table rows must be non-empty arrays");
    }
    WeightVector out;
    out.reserve(row.size());
    for (const auto& cell : row) {
        if (cell.is_number_integer()) {
            out.push_back(Rational(cell.get<long long>()));
        } else if (cell.is_string()) {
            out.push_back(parse_rational(cell.get<std::string>()));
        } else {
            throw DomainError("table entries must be integers or rational strings");
        }
    }
    return out;
}

} // namespace

InstanceFile parse_instance(const Json& j) {
    InstanceFile inst;
    inst.n = get_int(j, "n");
    inst.k = get_int(j, "k");
    inst.m = get_int(j, "m");
    if (!j.contains("objective") || !j["objective"].is_object()) {
        throw DomainError("missing objective object");
    }
    const Json& obj = j["objective"];
    if (!obj.contains("kind") || !obj["kind"].is_string()) {
        throw DomainError("objective needs a kind string");
    }
    std::string kind = obj["kind"].get<std::string>();

    if (kind == "identical") {
        if (!obj.contains("tables")) throw DomainError("identical objective needs tables");
        const Json& t = obj["tables"];
        // accept a bare row or a one-row array of rows
        if (t.is_array() && t.size() == 1 && t[0].is_array()) {
            inst.objective = make_identical_objective(parse_row(t[0]));
        } else {
            inst.objective = make_identical_objective(parse_row(t));
        }
    } else if (kind == "per-vertex") {
        if (!obj.contains("tables") || !obj["tables"].is_array()) {
            throw DomainError("per-vertex objective needs an array of tables");
        }
        std::vector<WeightVector> rows;
        for (const auto& r : obj["tables"]) rows.push_back(parse_row(r));
        inst.objective = make_per_vertex_objective(rows);
    } else if (kind == "squares") {
        inst.objective = squares_objective(inst.m);
    } else if (kind == "neg-squares-at") {
        if (!obj.contains("centers") || !obj["centers"].is_array()) {
            throw DomainError("neg-squares-at needs a centers array");
        }
        std::vector<int> centers;
        for (const auto& c : obj["centers"]) {
            if (!c.is_number_integer()) throw DomainError("centers must be integers");
            centers.push_back(c.get<int>());
        }
        inst.objective = neg_squares_objective(centers, inst.m);
    } else if (kind == "linear") {
        if (!obj.contains("weights") || !obj["weights"].is_array()) {
            throw DomainError("linear objective needs a weights array");
        }
        WeightVector w = parse_row(obj["weights"]);
        inst.objective = linear_objective(w, inst.m);
        inst.weights = std::move(w);
    } else {
        throw DomainError("unknown objective kind: " + kind);
    }

    validate(inst.objective);
    if (inst.objective.kind == ObjectiveKind::per_vertex &&
        static_cast<int>(inst.objective.tables.size()) != inst.n) {
        throw DomainError("per-vertex objective must have one table per vertex");
    }
    return inst;
}

InstanceFile parse_instance_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw DomainError("instance is not valid JSON");
    return parse_instance(j);
}

Json hypergraph_json(const Hypergraph& g) {
    Json out;
    out["type"] = "hypergraph";
    out["n"] = g.n;
    out["k"] = g.k;
    out["edges"] = g.edges;
    return out;
}

Json multihypergraph_json(const Multihypergraph& g) {
    Json out;
    out["type"] = "multihypergraph";
    out["n"] = g.n;
    out["k"] = g.k;
    Json edges = Json::array();
    for (const auto& [e, count] : g.edges) {
        Json entry;
        entry["edge"] = e;
        entry["count"] = count;
        edges.push_back(std::move(entry));
    }
    out["edges"] = std::move(edges);
    return out;
}

Json threshold_json(const ThresholdGraph& g) {
    Json out;
    out["type"] = "threshold";
    out["n"] = g.n;
    Json labels = Json::array();
    for (VertexLabel l : g.labels) {
        labels.push_back(l == VertexLabel::dominating ? "dominating" : "isolating");
    }
    out["labels"] = std::move(labels);
    return out;
}

Json witness_json(const Witness& w) {
    if (const auto* g = std::get_if<Hypergraph>(&w)) return hypergraph_json(*g);
    if (const auto* g = std::get_if<Multihypergraph>(&w)) return multihypergraph_json(*g);
    return threshold_json(std::get<ThresholdGraph>(w));
}

Json point_set_json(const PointSet& ps) {
    Json out;
    out["dimension"] = ps.dimension;
    out["count"] = ps.points.size();
    out["points"] = ps.points;
    return out;
}

Json reduction_json(const ReductionOutput& r) {
    Json out;
    out["w"] = r.w;
    out["s_plus_size"] = r.s_plus.edges.size();
    out["d"] = r.d;
    out["degenerate"] = r.degenerate;
    return out;
}

Json threshold_report_json(const ThresholdVertexReport& r) {
    Json out;
    out["equal"] = r.equal;
    out["vertices"] = point_set_json(r.vertices);
    out["threshold_degrees"] = point_set_json(r.threshold_degrees);
    out["only_vertices"] = r.only_vertices;
    out["only_threshold"] = r.only_threshold;
    return out;
}

} // namespace degseq
