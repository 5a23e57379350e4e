#include "ctxgraph/serialize.hpp"

#include "ctxgraph/error.hpp"

#include <initializer_list>
#include <string>

namespace ctxgraph {

namespace {

template <typename E> E enum_from(const Json &j, std::initializer_list<E> values) {
  const std::string text = j.get<std::string>();
  for (E v : values)
    if (text == to_string(v)) return v;
  throw InvalidInput("unknown value '" + text + "'");
}

// Wraps nlohmann's exceptions so every parse failure is an input error.
template <typename F> auto parsing(const char *what, F &&f) {
  try {
    return f();
  } catch (const nlohmann::json::exception &e) {
    throw InvalidInput(std::string("bad ") + what + " JSON: " + e.what());
  }
}

template <typename T> Json optional_json(const std::optional<T> &v) {
  return v ? Json(*v) : Json(nullptr);
}

template <typename T> std::optional<T> optional_from(const Json &j, const char *key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

} // namespace

Json to_json(const Graph &g) {
  Json edges = Json::array();
  for (const auto &[u, v] : g.edges()) edges.push_back({u, v});
  return {{"label", g.label()},
          {"vertices", g.order()},
          {"vertex_transitive", to_string(g.vertex_transitive())},
          {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json &j) {
  return parsing("graph", [&] {
    std::vector<Edge> edges;
    for (const auto &e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    Transitivity vt = Transitivity::unknown;
    if (j.contains("vertex_transitive"))
      vt = enum_from(j.at("vertex_transitive"), {Transitivity::unknown, Transitivity::yes, Transitivity::no});
    return Graph::from_edges(j.at("vertices").get<std::size_t>(), edges,
                             j.value("label", std::string{}), vt);
  });
}

Json to_json(const ThetaValue &t) {
  return {{"value", t.value}, {"method", to_string(t.method)}, {"gap", t.gap}};
}

ThetaValue theta_from_json(const Json &j) {
  return parsing("theta", [&] {
    ThetaValue t;
    t.value = j.at("value").get<double>();
    t.method = enum_from(j.at("method"), {ThetaMethod::closed_form, ThetaMethod::sdp});
    t.gap = j.at("gap").get<double>();
    t.lower = t.value - t.gap / 2;
    t.upper = t.value + t.gap / 2;
    return t;
  });
}

Json to_json(const HoleWitness &w) {
  return {{"kind", to_string(w.kind)}, {"length", w.length()}, {"vertices", w.vertices}};
}

HoleWitness witness_from_json(const Json &j) {
  return parsing("witness", [&] {
    return HoleWitness{enum_from(j.at("kind"), {HoleKind::hole, HoleKind::antihole}),
                       j.at("vertices").get<std::vector<int>>()};
  });
}

Json to_json(const CensusReport &r) {
  Json counts = Json::object();
  for (const auto &c : r.counts) counts[c.target] = c.count;
  Json out = Json::object();
  if (!r.name.empty()) out["name"] = r.name;
  out["graph"] = r.graph;
  out["counts"] = std::move(counts);
  return out;
}

CensusReport census_from_json(const Json &j) {
  return parsing("census", [&] {
    CensusReport r;
    r.name = j.value("name", std::string{});
    r.graph = j.at("graph").get<std::string>();
    for (const auto &[target, count] : j.at("counts").items())
      r.counts.push_back({target, count.get<std::uint64_t>(), 0.0});
    return r;
  });
}

Json to_json(const OrthonormalRepresentation &rep) {
  Json out = {{"dimension", rep.dimension()},
              {"handle", rep.handle},
              {"vectors", rep.vectors},
              {"graph", to_json(rep.target)}};
  if (!rep.relabel.empty()) out["relabel"] = rep.relabel;
  return out;
}

OrthonormalRepresentation orthorep_from_json(const Json &j) {
  return parsing("orthonormal representation", [&] {
    OrthonormalRepresentation rep;
    rep.handle = j.at("handle").get<std::vector<double>>();
    rep.vectors = j.at("vectors").get<std::vector<std::vector<double>>>();
    rep.target = graph_from_json(j.at("graph"));
    if (j.contains("relabel")) rep.relabel = j.at("relabel").get<std::vector<int>>();
    if (j.at("dimension").get<std::size_t>() != rep.dimension())
      throw InvalidInput("orthonormal representation: dimension does not match the handle");
    for (const auto &v : rep.vectors)
      if (v.size() != rep.dimension())
        throw InvalidInput("orthonormal representation: vector of the wrong dimension");
    return rep;
  });
}

Json to_json(const FaithfulnessReport &f) {
  return {{"pass", f.pass},
          {"pattern_matches", f.pattern_matches},
          {"max_orthogonal_residual", f.max_orthogonal_residual},
          {"min_non_orthogonal", f.min_non_orthogonal},
          {"max_norm_error", f.max_norm_error},
          {"min_distance", f.min_distance},
          {"failure", f.failure}};
}

Json to_json(const Event &e) {
  return {{"measurements", e.measurements}, {"outcomes", e.outcomes}, {"text", to_string(e)}};
}

Event event_from_json(const Json &j) {
  return parsing("event", [&] {
    Event e{j.at("measurements").get<std::vector<int>>(), j.at("outcomes").get<std::vector<int>>()};
    e.validate();
    return e;
  });
}

Json to_json(const InequalityInstance &inst) {
  Json events = Json::array();
  for (const auto &e : inst.events) events.push_back(to_json(e));
  return {{"family", to_string(inst.family)},
          {"n", inst.n},
          {"name", inst.name()},
          {"events", std::move(events)},
          {"graph", to_json(inst.exclusivity)},
          {"nchv", inst.nchv_bound},
          {"quantum", to_json(inst.quantum_bound)}};
}

InequalityInstance inequality_from_json(const Json &j) {
  return parsing("inequality", [&] {
    InequalityInstance inst;
    inst.family = enum_from(j.at("family"), {InequalityFamily::chsh, InequalityFamily::s_cycle,
                                             InequalityFamily::s_anticycle});
    inst.n = j.at("n").get<int>();
    for (const auto &e : j.at("events")) inst.events.push_back(event_from_json(e));
    inst.exclusivity = graph_from_json(j.at("graph"));
    inst.nchv_bound = j.at("nchv").get<int>();
    inst.quantum_bound = theta_from_json(j.at("quantum"));
    return inst;
  });
}

Json to_json(const EChain &chain) {
  Json e = Json::array();
  for (const auto &v : chain.e) {
    Json item = {{"m", v.m}, {"value", v.value}, {"p", v.p.str()}};
    item["omega"] = v.omega > 0 ? Json(v.omega) : Json(nullptr);
    e.push_back(std::move(item));
  }
  Json skipped = Json::array();
  for (const auto &s : chain.skipped) skipped.push_back({{"m", s.m}, {"reason", s.reason}});
  return {{"graph", chain.graph},
          {"nchv", chain.nchv},
          {"quantum", chain.quantum},
          {"e", std::move(e)},
          {"skipped", std::move(skipped)}};
}

EChain echain_from_json(const Json &j) {
  return parsing("E chain", [&] {
    EChain chain;
    chain.graph = j.at("graph").get<std::string>();
    chain.nchv = j.at("nchv").get<int>();
    chain.quantum = j.at("quantum").get<double>();
    for (const auto &item : j.at("e")) {
      EValue v;
      v.m = item.at("m").get<int>();
      v.value = item.at("value").get<double>();
      v.p = Rational::parse(item.at("p").get<std::string>());
      v.omega = optional_from<int>(item, "omega").value_or(0);
      chain.e.push_back(std::move(v));
    }
    for (const auto &s : j.at("skipped"))
      chain.skipped.push_back({s.at("m").get<int>(), s.at("reason").get<std::string>()});
    return chain;
  });
}

Json to_json(const AnalysisReport &r) {
  Json out = {{"graph", r.graph}, {"vertices", r.vertices}, {"edges", r.edges}};
  out["alpha"] = optional_json(r.alpha);
  out["omega"] = optional_json(r.omega);
  out["chi"] = optional_json(r.chi);
  out["theta"] = r.theta ? to_json(*r.theta) : Json(nullptr);
  out["perfect"] = optional_json(r.perfect);
  out["minimal_imperfect"] = optional_json(r.minimal_imperfect);
  out["witnesses"] = {{"hole", r.hole ? to_json(*r.hole) : Json(nullptr)},
                      {"antihole", r.antihole ? to_json(*r.antihole) : Json(nullptr)}};
  out["classification"] = r.verdict ? Json{{"verdict", to_string(*r.verdict)}, {"margin", *r.margin}}
                                    : Json(nullptr);
  out["dimension"] =
      r.dimension ? Json{{"bound", r.dimension->bound}, {"source", r.dimension->source}} : Json(nullptr);
  Json timings = Json::object();
  for (const auto &[name, ms] : r.timings_ms) timings[name] = ms;
  out["timings_ms"] = std::move(timings);
  if (!r.incomplete.empty()) out["incomplete"] = r.incomplete;
  return out;
}

AnalysisReport analysis_from_json(const Json &j) {
  return parsing("analysis", [&] {
    AnalysisReport r;
    r.graph = j.at("graph").get<std::string>();
    r.vertices = j.at("vertices").get<std::size_t>();
    r.edges = j.at("edges").get<std::size_t>();
    r.alpha = optional_from<int>(j, "alpha");
    r.omega = optional_from<int>(j, "omega");
    r.chi = optional_from<int>(j, "chi");
    if (!j.at("theta").is_null()) r.theta = theta_from_json(j.at("theta"));
    r.perfect = optional_from<bool>(j, "perfect");
    r.minimal_imperfect = optional_from<bool>(j, "minimal_imperfect");
    const Json &w = j.at("witnesses");
    if (!w.at("hole").is_null()) r.hole = witness_from_json(w.at("hole"));
    if (!w.at("antihole").is_null()) r.antihole = witness_from_json(w.at("antihole"));
    if (!j.at("classification").is_null()) {
      const Json &c = j.at("classification");
      r.verdict = enum_from(c.at("verdict"), {Verdict::qcg, Verdict::qncg, Verdict::undecided});
      r.margin = c.at("margin").get<double>();
    }
    if (!j.at("dimension").is_null())
      r.dimension = DimensionSummary{j.at("dimension").at("bound").get<int>(),
                                     j.at("dimension").at("source").get<std::string>()};
    for (const auto &[name, ms] : j.at("timings_ms").items())
      r.timings_ms.emplace_back(name, ms.get<double>());
    r.incomplete = j.value("incomplete", std::string{});
    return r;
  });
}

} // namespace ctxgraph
