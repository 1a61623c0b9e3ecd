#include "bergelab/json_io.hpp"

#include <limits>

namespace bergelab {

namespace {

int require_int(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer())
    throw ValidationError(std::string("missing or non-integer field '") +
                          key + "'");
  long long v = j[key].get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw ValidationError(std::string("field '") + key + "' out of range");
  return static_cast<int>(v);
}

EdgeList edge_list_from_json(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_array())
    throw ValidationError(std::string("missing or non-array field '") + key +
                          "'");
  EdgeList edges;
  for (const auto& item : j[key]) {
    if (!item.is_array())
      throw ValidationError(std::string("entries of '") + key +
                            "' must be arrays of vertices");
    Edge e;
    for (const auto& v : item) {
      if (!v.is_number_integer())
        throw ValidationError("vertex labels must be integers");
      e.push_back(v.get<int>());
    }
    edges.push_back(std::move(e));
  }
  return edges;
}

Json edges_to_json(const EdgeList& edges) {
  Json arr = Json::array();
  for (const auto& e : edges) arr.push_back(e);
  return arr;
}

}  // namespace

Json to_json(const Hypergraph& h) {
  return Json{{"n", h.n}, {"r", h.r}, {"edges", edges_to_json(h.edges)}};
}

Hypergraph hypergraph_from_json(const Json& j) {
  int n = require_int(j, "n");
  int r = require_int(j, "r");
  return validate(edge_list_from_json(j, "edges"), n, r);
}

Json to_json(const KGraph& s) {
  return Json{{"n", s.n}, {"k", s.k}, {"sets", edges_to_json(s.sets)}};
}

Json to_json(const EncodedTuple& t) {
  Json graphs = Json::array();
  for (const auto& g : t.graphs) graphs.push_back(edges_to_json(g.edges));
  return Json{{"r", t.r}, {"l", t.l}, {"n", t.n}, {"graphs", graphs}};
}

EncodedTuple tuple_from_json(const Json& j) {
  EncodedTuple t;
  t.r = require_int(j, "r");
  t.l = require_int(j, "l");
  t.n = require_int(j, "n");
  if (!j.contains("graphs") || !j["graphs"].is_array())
    throw ValidationError("missing or non-array field 'graphs'");
  for (const auto& item : j["graphs"]) {
    Json wrapper = Json{{"g", item}};
    t.graphs.push_back(validate(edge_list_from_json(wrapper, "g"), t.n, 2));
  }
  return t;
}

Json to_json(const ShadowRecord& rec) {
  Json layers = Json::array();
  for (const auto& layer : rec.layers) layers.push_back(edges_to_json(layer.sets));
  return Json{{"r", rec.r},
              {"n", rec.n},
              {"layers", layers},
              {"edge_set", edges_to_json(rec.edge_set)}};
}

ShadowRecord shadow_record_from_json(const Json& j) {
  ShadowRecord rec;
  rec.r = require_int(j, "r");
  rec.n = require_int(j, "n");
  if (rec.r < 2) throw ValidationError("shadow record needs r >= 2");
  if (!j.contains("layers") || !j["layers"].is_array())
    throw ValidationError("missing or non-array field 'layers'");
  for (const auto& item : j["layers"]) {
    Json wrapper = Json{{"g", item}};
    rec.layers.push_back(
        validate_kgraph(edge_list_from_json(wrapper, "g"), rec.n, rec.r - 1));
  }
  Hypergraph edges = validate(edge_list_from_json(j, "edge_set"), rec.n, rec.r);
  rec.edge_set = std::move(edges.edges);
  return rec;
}

Json to_json(const BergeCycleWitness& w) {
  return Json{{"length", w.length},
              {"vertices", w.vertices},
              {"edge_indices", w.edge_indices}};
}

Json to_json(const Fraction& f) {
  return Json{{"num", f.num},
              {"den", f.den},
              {"value", f.value()},
              {"display", f.str()}};
}

Json to_json(const ExponentTable& t) {
  return Json{{"l", t.l},
              {"r", t.r},
              {"k", t.k},
              {"lambda", t.lambda},
              {"upper_p", to_json(t.upper_p)},
              {"lower_p", to_json(t.lower_p)},
              {"dense_n", to_json(t.dense_n)},
              {"flat_n", to_json(t.flat_n)},
              {"p_min", to_json(t.p_min)},
              {"upper_flat_end", to_json(t.upper_flat_end)},
              {"upper_dense_start", to_json(t.upper_dense_start)},
              {"lower_dense_start", to_json(t.lower_dense_start)},
              {"gamma_lower", t.gamma_lower},
              {"gamma_upper", t.gamma_upper},
              {"conjectured_gamma", to_json(t.conjectured_gamma)}};
}

Json bigint_to_json(const BigInt& x) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (x >= lo && x <= hi) return x.convert_to<std::int64_t>();
  return x.str();
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace bergelab
