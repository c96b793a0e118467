#pragma once

// JSON documents:
//
//   FlowSpec          {"n":4,"counts":[1,1,0,1,1],"no_heteroclinic":true,
//                      "connections":[{"from":"s1","to":"a1"}],"indices":{"s1":1,"a1":0}}
//   ValidationReport  {"genus":1,"k":0,"admissible":true,
//                      "checks":[{"name":"genus","pass":true,"detail":"..."}]}
//   GradedGroup       {"ranks":{"0":1,"1":2},"torsion":{"1":[2]}}   (torsion only if nonempty)
//   SimplicialComplex {"vertices":["a","b"],"facets":[["a","b"]]}
//   EnumeratedFlow    {"c":[1,0,0,0,1],"k":0}

#include "morseflow/errors.hpp"
#include "morseflow/flow_model.hpp"
#include "morseflow/graded_group.hpp"
#include "morseflow/integer.hpp"
#include "morseflow/simplicial_complex.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace morseflow {

using Json = nlohmann::ordered_json;

inline Json integer_to_json(const Integer& x) {
  if (fits_int64(x)) return Json(static_cast<std::int64_t>(x));
  return Json(x.str());
}

inline Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer");
}

inline Json to_json(const GradedGroup& h) {
  Json ranks = Json::object();
  for (const auto& [d, r] : h.ranks()) ranks[std::to_string(d)] = integer_to_json(r);
  Json out{{"ranks", ranks}};
  if (!h.torsion_free()) {
    Json torsion = Json::object();
    for (const auto& [d, fs] : h.torsion()) {
      Json list = Json::array();
      for (const auto& f : fs) list.push_back(integer_to_json(f));
      torsion[std::to_string(d)] = list;
    }
    out["torsion"] = torsion;
  }
  return out;
}

inline GradedGroup graded_group_from_json(const Json& j) {
  GradedGroup h;
  for (const auto& [d, r] : j.at("ranks").items()) h.set_rank(std::stoi(d), integer_from_json(r));
  if (j.contains("torsion"))
    for (const auto& [d, fs] : j.at("torsion").items()) {
      std::vector<Integer> factors;
      for (const auto& f : fs) factors.push_back(integer_from_json(f));
      h.set_torsion(std::stoi(d), std::move(factors));
    }
  return h;
}

inline Json to_json(const PoincarePolynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(integer_to_json(c));
  return Json{{"coefficients", coeffs}, {"polynomial", p.to_string()}};
}

namespace detail {

inline const Json& require(const Json& j, const char* field, const char* context) {
  if (!j.is_object()) throw MalformedSpec(std::string(context) + " must be a JSON object");
  if (!j.contains(field))
    throw MalformedSpec(std::string(context) + ": missing field '" + field + "'");
  return j.at(field);
}

inline std::int64_t require_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw MalformedSpec(where + " must be an integer");
  return j.get<std::int64_t>();
}

inline std::string require_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw MalformedSpec(where + " must be a string");
  return j.get<std::string>();
}

} // namespace detail

/// Parses and structurally validates a FlowSpec document. Throws
/// MalformedSpec naming the offending field.
inline FlowSpec flow_spec_from_json(const Json& j) {
  FlowSpec spec;
  const auto n = detail::require_int(detail::require(j, "n", "flow spec"), "n");
  if (n < 2 || n > 1000) throw MalformedSpec("n must be in 2..1000");
  spec.n = static_cast<int>(n);
  const auto& counts = detail::require(j, "counts", "flow spec");
  if (!counts.is_array()) throw MalformedSpec("counts must be an array");
  for (std::size_t i = 0; i < counts.size(); ++i)
    spec.counts.push_back(detail::require_int(counts[i], "counts[" + std::to_string(i) + "]"));
  if (j.contains("no_heteroclinic")) {
    if (!j["no_heteroclinic"].is_boolean()) throw MalformedSpec("no_heteroclinic must be a boolean");
    spec.no_heteroclinic = j["no_heteroclinic"].get<bool>();
  }
  const bool has_connections = j.contains("connections");
  if (has_connections != j.contains("indices"))
    throw MalformedSpec("connections and indices must be given together");
  if (has_connections) {
    const auto& conns = j["connections"];
    if (!conns.is_array()) throw MalformedSpec("connections must be an array");
    std::vector<Connection> edges;
    for (std::size_t e = 0; e < conns.size(); ++e) {
      const std::string where = "connections[" + std::to_string(e) + "]";
      edges.push_back({detail::require_string(detail::require(conns[e], "from", where.c_str()), where + ".from"),
                       detail::require_string(detail::require(conns[e], "to", where.c_str()), where + ".to")});
    }
    spec.connections = std::move(edges);
    const auto& indices = j["indices"];
    if (!indices.is_object()) throw MalformedSpec("indices must be an object");
    for (const auto& [id, idx] : indices.items()) {
      const auto v = detail::require_int(idx, "indices." + id);
      if (v < 0 || v > spec.n) throw MalformedSpec("indices." + id + " is outside 0..n");
      spec.indices[id] = static_cast<int>(v);
    }
  }
  check_well_formed(spec);
  return spec;
}

inline Json to_json(const FlowSpec& spec) {
  Json out{{"n", spec.n}, {"counts", spec.counts}, {"no_heteroclinic", spec.no_heteroclinic}};
  if (spec.connections) {
    Json conns = Json::array();
    for (const auto& c : *spec.connections) conns.push_back(Json{{"from", c.from}, {"to", c.to}});
    out["connections"] = conns;
    Json indices = Json::object();
    for (const auto& [id, idx] : spec.indices) indices[id] = idx;
    out["indices"] = indices;
  }
  return out;
}

inline const char* genus_error_tag(GenusErrorKind kind) {
  return kind == GenusErrorKind::Parity ? "parity_error" : "negative_genus";
}

inline Json to_json(const ValidationReport& r) {
  Json out;
  if (r.genus)
    out["genus"] = *r.genus;
  else
    out["genus"] = genus_error_tag(r.genus_error.value_or(GenusErrorKind::Parity));
  out["k"] = r.k;
  out["admissible"] = r.admissible;
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  out["checks"] = checks;
  return out;
}

inline ValidationReport validation_report_from_json(const Json& j) {
  ValidationReport r;
  const auto& g = j.at("genus");
  if (g.is_number_integer()) {
    r.genus = g.get<std::int64_t>();
  } else {
    const auto tag = g.get<std::string>();
    if (tag == "parity_error")
      r.genus_error = GenusErrorKind::Parity;
    else if (tag == "negative_genus")
      r.genus_error = GenusErrorKind::Negative;
    else
      throw std::invalid_argument("unknown genus tag '" + tag + "'");
  }
  r.k = j.at("k").get<std::int64_t>();
  r.admissible = j.at("admissible").get<bool>();
  for (const auto& c : j.at("checks"))
    r.checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(),
                        c.at("detail").get<std::string>()});
  return r;
}

inline Json to_json(const EnumeratedFlow& f) { return Json{{"c", f.counts}, {"k", f.k}}; }

inline Json to_json(const SimplicialComplex& k) {
  Json facets = Json::array();
  for (const auto& f : k.facets()) facets.push_back(k.labels(f));
  return Json{{"vertices", k.vertices()}, {"facets", facets}};
}

/// Vertex labels may be strings or integers; integers are used by their
/// decimal text.
inline SimplicialComplex simplicial_complex_from_json(const Json& j) {
  auto label = [](const Json& v, const std::string& where) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
    throw ComplexError(where + " must be a string or integer vertex label");
  };
  if (!j.is_object() || !j.contains("vertices") || !j.contains("facets"))
    throw ComplexError("complex must be an object with 'vertices' and 'facets'");
  if (!j["vertices"].is_array() || !j["facets"].is_array())
    throw ComplexError("'vertices' and 'facets' must be arrays");
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < j["vertices"].size(); ++i)
    vertices.push_back(label(j["vertices"][i], "vertices[" + std::to_string(i) + "]"));
  std::vector<std::vector<std::string>> facets;
  for (std::size_t f = 0; f < j["facets"].size(); ++f) {
    const auto& arr = j["facets"][f];
    if (!arr.is_array()) throw ComplexError("facets[" + std::to_string(f) + "] must be an array");
    std::vector<std::string> facet;
    for (std::size_t v = 0; v < arr.size(); ++v)
      facet.push_back(label(arr[v], "facets[" + std::to_string(f) + "][" + std::to_string(v) + "]"));
    facets.push_back(std::move(facet));
  }
  return SimplicialComplex(std::move(vertices), facets);
}

} // namespace morseflow
