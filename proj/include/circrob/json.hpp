#pragma once

// JSON views of the result types. Kept out of the umbrella header so the core
// library does not pull in the JSON dependency.

#include "circrob/gen.hpp"
#include "circrob/oracle.hpp"
#include "circrob/recognize.hpp"
#include "circrob/verify.hpp"

#include <json.hpp>

namespace circrob {

using Json = nlohmann::json;

inline Json order_json(const CircularOrder& o) {
  const auto c = o.canonical();
  return Json(std::vector<Index>(c.sequence().begin(), c.sequence().end()));
}

inline Json orders_json(const std::vector<CircularOrder>& orders) {
  Json out = Json::array();
  for (const auto& o : orders) out.push_back(order_json(o));
  return out;
}

inline std::string_view to_string(CrossingPattern p) {
  return p == CrossingPattern::FarthestFirst ? "x<x'<y<y'" : "x<y'<y<x'";
}

inline Json unimodality_json(const UnimodalityReport& r) {
  Json w = {{"kind", "unimodality"}};
  if (r.violating_row) w["row"] = *r.violating_row;
  if (r.violating_positions) {
    w["positions"] = {r.violating_positions->first, r.violating_positions->second};
  }
  return w;
}

inline Json crossing_json(const CrossingWitness& c) {
  return {{"kind", "crossing"}, {"x", c.x},
          {"y", c.y},           {"x_prime", c.x_prime},
          {"y_prime", c.y_prime}, {"pattern", to_string(c.pattern)}};
}

/// {"quasi", "strict_quasi", "circular", "strict_circular", "witness"}; the
/// witness is null when every flag holds, otherwise an object keyed by each
/// failing flag.
inline Json to_json(const ClassificationReport& r) {
  Json witness = Json::object();
  if (!r.quasi) witness["quasi"] = unimodality_json(r.unimodality);
  if (!r.strict_quasi) witness["strict_quasi"] = unimodality_json(r.strict_unimodality);
  if (!r.circular) {
    witness["circular"] = r.crossing ? crossing_json(*r.crossing) : unimodality_json(r.unimodality);
  }
  if (!r.strict_circular) {
    witness["strict_circular"] = r.strict_crossing ? crossing_json(*r.strict_crossing)
                                                   : unimodality_json(r.strict_unimodality);
  }
  return {{"quasi", r.quasi},
          {"strict_quasi", r.strict_quasi},
          {"circular", r.circular},
          {"strict_circular", r.strict_circular},
          {"witness", witness.empty() ? Json(nullptr) : witness}};
}

template <typename Scalar>
Json to_json(const OrderSet<Scalar>& s) {
  Json b = nullptr;
  if (s.bipartition) {
    b = {{"N", s.bipartition->near}, {"F", s.bipartition->far}, {"delta", s.bipartition->delta}};
  }
  return {{"orders", orders_json(s.orders)}, {"bipartition", b}};
}

template <typename Scalar = double>
OrderSet<Scalar> order_set_from_json(const Json& j) {
  OrderSet<Scalar> s;
  for (const auto& o : j.at("orders")) {
    s.orders.push_back(CircularOrder::from_sequence(o.get<std::vector<Index>>()));
  }
  if (!j.at("bipartition").is_null()) {
    const auto& b = j.at("bipartition");
    s.bipartition = Bipartition<Scalar>{b.at("N").get<std::vector<Index>>(),
                                        b.at("F").get<std::vector<Index>>(),
                                        b.at("delta").get<Scalar>()};
  }
  return s;
}

inline Json to_json(const oracle::Classification& c) {
  return {{"pre_circular", orders_json(c.pre_circular)},
          {"strict_pre_circular", orders_json(c.strict_pre_circular)},
          {"quasi", orders_json(c.quasi)},
          {"strict_quasi", orders_json(c.strict_quasi)},
          {"circular", orders_json(c.circular)},
          {"strict_circular", orders_json(c.strict_circular)}};
}

inline Json to_json(const GeneratorSpec& g) {
  return {{"kind", g.kind}, {"n", g.n}, {"seed", g.seed}, {"epsilon", g.epsilon},
          {"params", g.params}};
}

inline GeneratorSpec generator_spec_from_json(const Json& j) {
  GeneratorSpec g;
  g.kind = j.at("kind").get<std::string>();
  g.n = j.at("n").get<Index>();
  g.seed = j.at("seed").get<std::uint64_t>();
  g.epsilon = j.at("epsilon").get<double>();
  if (j.contains("params")) g.params = j.at("params").get<std::map<std::string, double>>();
  return g;
}

}  // namespace circrob
