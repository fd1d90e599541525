#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "metriclie/lie_algebra.hpp"

namespace metriclie {

/// A parsed algebra file: the metric Lie algebra plus its declared name.
struct AlgebraFile {
  std::string name;
  MetricLieAlgebra mla;
};

namespace detail {

inline bool is_rational_string(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && s[i] == '-') ++i;
  std::size_t digits = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++digits;
  if (digits == 0) return false;
  if (i == s.size()) return true;
  if (s[i] != '/') return false;
  ++i;
  if (i == s.size() || s[i] < '1' || s[i] > '9') return false;
  ++i;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
  return i == s.size();
}

inline Rational parse_rational(const std::string& s, const std::string& where) {
  if (!is_rational_string(s))
    throw MalformedInputError(where + ": '" + s + "' does not match -?[0-9]+(/[1-9][0-9]*)?");
  return Rational::from_string(s);
}

}  // namespace detail

/// Parses and validates an algebra file. All defects (syntax, unknown or
/// duplicate labels, Jacobi violations, degenerate metric) surface as
/// MalformedInputError with a precise message.
inline AlgebraFile parse_algebra(const std::string& bytes) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedInputError(std::string("syntax error: ") + e.what());
  }
  if (!doc.is_object()) throw MalformedInputError("top level must be an object");
  for (const auto& [key, _] : doc.items())
    if (key != "name" && key != "dim" && key != "basis" && key != "brackets" && key != "metric")
      throw MalformedInputError("unknown top-level key '" + key + "'");
  if (!doc.contains("name") || !doc["name"].is_string())
    throw MalformedInputError("missing or non-string 'name'");
  if (!doc.contains("dim") || !doc["dim"].is_number_unsigned())
    throw MalformedInputError("missing or invalid 'dim'");
  if (!doc.contains("basis") || !doc["basis"].is_array())
    throw MalformedInputError("missing or invalid 'basis'");
  const std::size_t dim = doc["dim"].get<std::size_t>();
  if (dim == 0) throw MalformedInputError("'dim' must be positive");
  std::vector<std::string> basis;
  std::set<std::string> seen_labels;
  for (const auto& b : doc["basis"]) {
    if (!b.is_string()) throw MalformedInputError("basis labels must be strings");
    std::string label = b.get<std::string>();
    if (!seen_labels.insert(label).second)
      throw MalformedInputError("duplicate basis label '" + label + "'");
    basis.push_back(std::move(label));
  }
  if (basis.size() != dim)
    throw MalformedInputError("'basis' has " + std::to_string(basis.size()) +
                              " labels but dim = " + std::to_string(dim));
  LieAlgebra alg(dim, basis);
  auto index_of = [&](const std::string& label, const std::string& where) {
    auto idx = alg.basis_index(label);
    if (!idx) throw MalformedInputError(where + ": unknown label '" + label + "'");
    return *idx;
  };

  std::set<std::pair<std::size_t, std::size_t>> seen_brackets;
  if (doc.contains("brackets")) {
    if (!doc["brackets"].is_array()) throw MalformedInputError("'brackets' must be an array");
    for (const auto& entry : doc["brackets"]) {
      if (!entry.is_object() || !entry.contains("x") || !entry.contains("y") ||
          !entry.contains("value"))
        throw MalformedInputError("bracket entries need keys x, y, value");
      std::size_t i = index_of(entry["x"].get<std::string>(), "bracket");
      std::size_t j = index_of(entry["y"].get<std::string>(), "bracket");
      if (i >= j)
        throw MalformedInputError("bracket [" + basis[i] + "," + basis[j > i ? j : i] +
                                  "]: x must precede y in basis order");
      if (!seen_brackets.insert({i, j}).second)
        throw MalformedInputError("duplicate bracket entry [" + basis[i] + "," + basis[j] + "]");
      if (!entry["value"].is_array())
        throw MalformedInputError("bracket value must be an array of [label, rational] pairs");
      Vec v = zero_vec(dim);
      std::set<std::size_t> seen_terms;
      for (const auto& term : entry["value"]) {
        if (!term.is_array() || term.size() != 2 || !term[0].is_string() || !term[1].is_string())
          throw MalformedInputError("bracket terms must be [label, rational-string] pairs");
        std::size_t k = index_of(term[0].get<std::string>(), "bracket value");
        if (!seen_terms.insert(k).second)
          throw MalformedInputError("duplicate term for label '" + basis[k] + "'");
        v[k] = detail::parse_rational(term[1].get<std::string>(), "bracket coefficient");
      }
      alg.set_bracket(i, j, std::move(v));
    }
  }

  Matrix gram(dim, dim);
  std::set<std::pair<std::size_t, std::size_t>> seen_metric;
  if (doc.contains("metric")) {
    if (!doc["metric"].is_array()) throw MalformedInputError("'metric' must be an array");
    for (const auto& entry : doc["metric"]) {
      if (!entry.is_object() || !entry.contains("x") || !entry.contains("y") ||
          !entry.contains("value") || !entry["value"].is_string())
        throw MalformedInputError("metric entries need keys x, y and a rational-string value");
      std::size_t i = index_of(entry["x"].get<std::string>(), "metric");
      std::size_t j = index_of(entry["y"].get<std::string>(), "metric");
      auto key = std::minmax(i, j);
      if (!seen_metric.insert({key.first, key.second}).second)
        throw MalformedInputError("duplicate metric entry <" + basis[i] + "," + basis[j] + ">");
      Rational val = detail::parse_rational(entry["value"].get<std::string>(), "metric value");
      gram(i, j) = val;
      gram(j, i) = val;
    }
  }

  JacobiReport jac = check_jacobi(alg);
  if (!jac.holds) {
    const auto& w = *jac.witness;
    throw MalformedInputError("Jacobi identity fails on (" + basis[w[0]] + ", " + basis[w[1]] +
                              ", " + basis[w[2]] + ")");
  }
  if (determinant(gram).is_zero()) throw MalformedInputError("metric is degenerate");
  return AlgebraFile{doc["name"].get<std::string>(),
                     MetricLieAlgebra(std::move(alg), PseudoMetric(std::move(gram)))};
}

/// Canonical serialization: entries in basis order, i before j, zeros
/// omitted, alphabetical keys, two-space indent. parse . emit = identity.
inline std::string emit_algebra(const AlgebraFile& file) {
  const MetricLieAlgebra& mla = file.mla;
  const std::size_t n = mla.dim();
  const auto& names = mla.algebra.basis_names();
  nlohmann::json doc;
  doc["name"] = file.name;
  doc["dim"] = n;
  doc["basis"] = names;
  nlohmann::json brackets = nlohmann::json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec v = mla.algebra.bracket_basis(i, j);
      if (is_zero_vec(v)) continue;
      nlohmann::json terms = nlohmann::json::array();
      for (std::size_t k = 0; k < n; ++k)
        if (!v[k].is_zero()) terms.push_back({names[k], v[k].to_string()});
      brackets.push_back({{"x", names[i]}, {"y", names[j]}, {"value", terms}});
    }
  doc["brackets"] = brackets;
  nlohmann::json metric = nlohmann::json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (mla.metric.gram(i, j).is_zero()) continue;
      metric.push_back(
          {{"x", names[i]}, {"y", names[j]}, {"value", mla.metric.gram(i, j).to_string()}});
    }
  doc["metric"] = metric;
  return doc.dump(2) + "\n";
}

}  // namespace metriclie
