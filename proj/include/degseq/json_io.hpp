#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "degseq/objective.hpp"
#include "degseq/optimize.hpp"
#include "degseq/polytope.hpp"
#include "degseq/reduction.hpp"

namespace degseq {

// Insertion-ordered JSON so identical inputs serialize byte-identically.
using Json = nlohmann::ordered_json;

// A parsed optimization instance: the shape, the objective, and (for the
// "linear" shorthand) the raw weight vector the linear algorithms consume.
struct InstanceFile {
    int n = 0;
    int k = 0;
    int m = 0;
    ObjectiveSpec objective;
    std::optional<WeightVector> weights;
};

// Accepts kinds "identical", "per-vertex", "squares", "neg-squares-at" and
// "linear"; the shorthands expand to tables over 0..m at parse time. Throws
// DomainError on malformed input.
InstanceFile parse_instance(const Json& j);
InstanceFile parse_instance_text(const std::string& text);

Json hypergraph_json(const Hypergraph& g);
Json multihypergraph_json(const Multihypergraph& g);
Json threshold_json(const ThresholdGraph& g);
Json witness_json(const Witness& w);
Json point_set_json(const PointSet& ps);
Json reduction_json(const ReductionOutput& r);
Json threshold_report_json(const ThresholdVertexReport& r);

} // namespace degseq
