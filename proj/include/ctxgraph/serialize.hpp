#pragma once

#include "ctxgraph/census.hpp"
#include "ctxgraph/eprinciple.hpp"
#include "ctxgraph/events.hpp"
#include "ctxgraph/graph.hpp"
#include "ctxgraph/orthorep.hpp"
#include "ctxgraph/report.hpp"
#include "ctxgraph/theta.hpp"

#include <json.hpp>

namespace ctxgraph {

using Json = nlohmann::ordered_json;

// Every *_from_json raises InvalidInput on a malformed document.

Json to_json(const Graph &g); ///< {"label","vertices","edges":[[u,v],...]}, 0-based
Graph graph_from_json(const Json &j);

Json to_json(const ThetaValue &t); ///< {"value","method","gap"}
ThetaValue theta_from_json(const Json &j);

Json to_json(const HoleWitness &w);
HoleWitness witness_from_json(const Json &j);

Json to_json(const CensusReport &r);
CensusReport census_from_json(const Json &j);

/// {"dimension","handle","vectors","graph"}, plus "relabel" when present.
Json to_json(const OrthonormalRepresentation &rep);
OrthonormalRepresentation orthorep_from_json(const Json &j);

Json to_json(const FaithfulnessReport &f);

Json to_json(const Event &e);
Event event_from_json(const Json &j);

Json to_json(const InequalityInstance &inst);
InequalityInstance inequality_from_json(const Json &j);

/// {"graph","nchv","quantum","e":[{"m","value","p"}],"skipped":[{"m","reason"}]}
Json to_json(const EChain &chain);
EChain echain_from_json(const Json &j);

Json to_json(const AnalysisReport &r);
AnalysisReport analysis_from_json(const Json &j);

} // namespace ctxgraph
