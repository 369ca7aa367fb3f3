#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "ramlift/errors.hpp"
#include "ramlift/graph.hpp"
#include "ramlift/perm.hpp"
#include "ramlift/poly.hpp"
#include "ramlift/search.hpp"

namespace ramlift {

using json = nlohmann::json;

inline json rational_to_json(const Rational& q) { return to_string(q); }

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected a rational as \"num/den\" or an integer, got " + j.dump());
}

inline json poly_to_json(const RatPoly& p) {
  json c = json::array();
  for (const auto& q : p.coeffs()) c.push_back(rational_to_json(q));
  return {{"coeffs", c}};
}

inline RatPoly poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw ParseError("polynomial: expected {\"coeffs\": [...]}");
  std::vector<Rational> c;
  for (const auto& x : j["coeffs"]) c.push_back(rational_from_json(x));
  return RatPoly(std::move(c));
}

inline json bracket_to_json(const RootBracket& b) {
  return {{"lower", rational_to_json(b.lower)},
          {"upper", rational_to_json(b.upper)},
          {"multiplicity_count", b.multiplicity_count}};
}

inline json rho_to_json(const RhoBracket& r) {
  json j{{"lower", rational_to_json(r.lower)}, {"upper", rational_to_json(r.upper)}, {"method", r.method}};
  if (r.poly) j["poly"] = poly_to_json(*r.poly);
  return j;
}

inline json graph_to_json(const OrientedMultigraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.head, e.tail});
  return {{"n", g.vertex_count()}, {"edges", edges}};
}

inline OrientedMultigraph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw ParseError("graph: expected {\"n\": int, \"edges\": [[head, tail], ...]}");
  if (!j["n"].is_number_integer()) throw ParseError("graph: n must be an integer");
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw ParseError("graph: each edge must be [head, tail]");
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return OrientedMultigraph(j["n"].get<int>(), std::move(edges));
}

/// Leading vertex count, then one "head tail" pair per line.
inline OrientedMultigraph graph_from_text(const std::string& text) {
  std::istringstream in(text);
  long long n;
  if (!(in >> n)) throw ParseError("graph text: missing vertex count");
  std::vector<Edge> edges;
  long long h, t;
  while (in >> h) {
    if (!(in >> t)) throw ParseError("graph text: edge with a head but no tail");
    edges.push_back({static_cast<int>(h), static_cast<int>(t)});
  }
  if (!in.eof()) throw ParseError("graph text: unexpected token");
  return OrientedMultigraph(static_cast<int>(n), std::move(edges));
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(what + ": " + e.what());
  }
}

/// JSON when the first non-blank character is '{', flat text otherwise.
inline OrientedMultigraph load_graph(const std::string& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return graph_from_json(parse_json(text, path));
  return graph_from_text(text);
}

inline json perm_to_json(const Permutation& p) { return p.images(); }

inline Permutation perm_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("permutation: expected an image list");
  std::vector<int> v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError("permutation: images must be integers");
    v.push_back(x.get<int>());
  }
  return Permutation(std::move(v));
}

template <class E, class Enc>
json factorization_to_json(const EdgeFactorization<E>& f, Enc&& encode) {
  json out = json::array();
  for (const auto& factor : f.factors) {
    json support = json::array();
    for (const auto& [e, w] : factor.support) support.push_back({encode(e), rational_to_json(w)});
    out.push_back({{"support", support}});
  }
  return out;
}

/// Group elements on the wire: image lists for std, the exponent k for
/// cyclic, and one [column, k] pair per row (entry z_m^k) for gm1d.
inline json element_to_json(const LiftGroup& lg, int id) {
  switch (lg.kind) {
    case LiftGroup::Kind::Symmetric:
      return perm_to_json(lg.perm(id));
    case LiftGroup::Kind::Cyclic:
      return id;
    case LiftGroup::Kind::Monomial: {
      const CycloMatrix& m = lg.pi.group->element(id);
      json rows = json::array();
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
          if (is_zero(m(i, j))) continue;
          int k = 0;
          while (!(CycloInt::zeta_power(k * (12 / lg.m)) == m(i, j))) ++k;
          rows.push_back({j, k});
        }
      return rows;
    }
  }
  throw PreconditionError("unknown group kind");
}

inline int element_from_json(const LiftGroup& lg, const json& j) {
  switch (lg.kind) {
    case LiftGroup::Kind::Symmetric: {
      const Permutation p = perm_from_json(j);
      if (p.size() != lg.r) throw ParseError("permutation of the wrong size for " + lg.descriptor);
      return lg.sym->id_of(p);
    }
    case LiftGroup::Kind::Cyclic: {
      if (!j.is_number_integer()) throw ParseError("cyclic label must be an integer");
      const int k = j.get<int>();
      if (k < 0 || k >= lg.m) throw ParseError("cyclic label out of range for " + lg.descriptor);
      return k;
    }
    case LiftGroup::Kind::Monomial: {
      if (!j.is_array() || j.size() != static_cast<std::size_t>(lg.d)) throw ParseError("gm1d label: one [column, k] per row");
      CycloMatrix m(static_cast<std::size_t>(lg.d), static_cast<std::size_t>(lg.d));
      for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& row = j[i];
        if (!row.is_array() || row.size() != 2) throw ParseError("gm1d label: rows are [column, k]");
        const int col = row[0].get<int>(), k = row[1].get<int>();
        if (col < 0 || col >= lg.d) throw ParseError("gm1d label: column out of range");
        m(i, static_cast<std::size_t>(col)) = CycloInt::zeta_power(k * (12 / lg.m));
      }
      const auto id = lg.pi.group->index_of(m);
      if (!id) throw ParseError("gm1d label is not a group element");
      return *id;
    }
  }
  throw PreconditionError("unknown group kind");
}

inline json certificate_to_json(const LiftCertificate& c, const Rational& tol) {
  const LiftGroup lg = make_lift_group(c.group);
  json labels = json::array();
  for (int x : c.labels) labels.push_back(element_to_json(lg, x));
  json j{{"graph", graph_to_json(c.graph)},
         {"group", c.group},
         {"route", c.route},
         {"labels", labels},
         {"new_poly", poly_to_json(c.new_poly)},
         {"d", c.d},
         {"matching_poly", poly_to_json(c.matching_poly)},
         {"matching_root", bracket_to_json(c.matching_root)},
         {"rho", rho_to_json(c.rho)},
         {"epsilon", rational_to_json(c.epsilon)},
         {"tol", rational_to_json(tol)},
         {"verdict", c.verdict}};
  if (lg.kind == LiftGroup::Kind::Symmetric) j["r"] = lg.r;
  j["new_root"] = c.new_root ? bracket_to_json(*c.new_root) : json(nullptr);
  if (c.new_smallest_root) j["new_smallest_root"] = bracket_to_json(*c.new_smallest_root);
  return j;
}

/// The certificate's inputs: graph, group, route, labeling, epsilon and tol.
struct CertificateInputs {
  LiftCertificate cert;
  Rational tol;
};

inline CertificateInputs certificate_inputs_from_json(const json& j) {
  for (const char* key : {"graph", "group", "route", "labels", "epsilon", "tol"})
    if (!j.contains(key)) throw ParseError(std::string("certificate: missing field '") + key + "'");
  CertificateInputs in;
  in.cert.graph = graph_from_json(j["graph"]);
  in.cert.group = j["group"].get<std::string>();
  in.cert.route = j["route"].get<std::string>();
  in.cert.epsilon = rational_from_json(j["epsilon"]);
  in.tol = rational_from_json(j["tol"]);
  if (in.tol <= 0) throw ParseError("certificate: tol must be positive");
  const LiftGroup lg = make_lift_group(in.cert.group);
  if (!j["labels"].is_array() || j["labels"].size() != in.cert.graph.edge_count())
    throw ParseError("certificate: one label per edge required");
  for (const auto& x : j["labels"]) in.cert.labels.push_back(element_from_json(lg, x));
  return in;
}

/// Recomputes a certificate from its inputs and compares every field.
/// Returns the recomputed JSON; throws VerificationMismatch naming the
/// fields that differ.
inline json verify_certificate(const json& claimed) {
  const CertificateInputs in = certificate_inputs_from_json(claimed);
  const json fresh = certificate_to_json(recertify(in.cert, in.tol), in.tol);
  std::string diff;
  for (auto it = fresh.begin(); it != fresh.end(); ++it)
    if (!claimed.contains(it.key()) || claimed[it.key()] != it.value()) diff += (diff.empty() ? "" : ", ") + it.key();
  for (auto it = claimed.begin(); it != claimed.end(); ++it)
    if (!fresh.contains(it.key())) diff += (diff.empty() ? "" : ", ") + it.key();
  if (!diff.empty()) throw VerificationMismatch("certificate fields do not match recomputation: " + diff);
  return fresh;
}

}  // namespace ramlift
