#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "metriclie/classify.hpp"
#include "metriclie/geodesics.hpp"
#include "metriclie/io.hpp"

namespace metriclie {

struct AnalysisReport {
  std::string name;
  MetricLieAlgebra mla;
  Signature sig;
  SymmetricProduct u;
  bool partial_symmetry = false;
  bool cyclic = false;
  bool trace_identity = false;
  bool random_spot_checks = false;
  AssociativityReport associativity;
  bool unimodular_lie_flag = false;
  bool unimodular_product_flag = false;
  bool class_w0 = false;
  std::optional<std::size_t> nilpotency;
  std::vector<Vec> annihilator_basis;
  CompletenessVerdict completeness;
  std::optional<nlohmann::json> classification;  // filled by classify/twostep commands
};

/// Full structural analysis of a metric Lie algebra. The seed drives the
/// randomized spot checks (cyclic identity and theta(X,X,X) = 0 on sampled
/// vectors); results are deterministic for a fixed seed.
inline AnalysisReport analyze(const AlgebraFile& file, unsigned seed = 0) {
  AnalysisReport rep;
  rep.name = file.name;
  rep.mla = file.mla;
  rep.sig = signature(file.mla.space());
  rep.u = u_tensor(file.mla);
  Tensor3 th = theta_tensor(rep.u, file.mla.space());
  rep.partial_symmetry = th.is_partially_symmetric();
  rep.cyclic = check_cyclic(th).holds;
  Vec t12 = trace_12(th, file.mla.space());
  Vec t23 = trace_23(th, file.mla.space());
  rep.trace_identity = is_zero_vec(Rational(2) * t23 + t12);
  rep.class_w0 = is_zero_vec(t12);
  rep.associativity = is_associative(rep.u);
  rep.unimodular_lie_flag = is_unimodular_lie(file.mla.algebra);
  rep.unimodular_product_flag = is_unimodular_product(rep.u);
  if (rep.associativity.associative) rep.nilpotency = product_nilpotency(rep.u);
  rep.annihilator_basis = annihilator(rep.u);
  rep.completeness = completeness_report(file.mla);

  const std::size_t n = file.mla.dim();
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  rep.random_spot_checks = true;
  for (int s = 0; s < 20; ++s) {
    Vec x(n), y(n), z(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = Rational(num(rng), den(rng));
      y[i] = Rational(num(rng), den(rng));
      z[i] = Rational(num(rng), den(rng));
    }
    Rational cyc = file.mla.inner(rep.u.apply(x, y), z) + file.mla.inner(rep.u.apply(y, z), x) +
                   file.mla.inner(rep.u.apply(z, x), y);
    Rational diag = file.mla.inner(rep.u.apply(x, x), x);
    if (!cyc.is_zero() || !diag.is_zero()) rep.random_spot_checks = false;
  }
  return rep;
}

namespace detail {

/// Renders a coefficient vector as an expression over basis labels: "0",
/// "e3", "-1/2 e1 + 2 e2".
inline std::string vec_expression(const Vec& v, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    Rational c = v[k];
    if (out.empty()) {
      if (c == Rational(-1))
        out += "-";
      else if (c != Rational(1))
        out += c.to_string() + " ";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      Rational a = c.abs();
      if (a != Rational(1)) out += a.to_string() + " ";
    }
    out += names[k];
  }
  return out.empty() ? "0" : out;
}

inline nlohmann::json vec_json(const Vec& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& x : v) arr.push_back(x.to_string());
  return arr;
}

inline nlohmann::json witness_json(const AssociativityReport& a,
                                   const std::vector<std::string>& names) {
  if (!a.witness) return nullptr;
  nlohmann::json w;
  w["triple"] = {names[(*a.witness)[0]], names[(*a.witness)[1]], names[(*a.witness)[2]]};
  w["left"] = vec_json(a.left_value);
  w["right"] = vec_json(a.right_value);
  return w;
}

}  // namespace detail

inline nlohmann::json report_to_json(const AnalysisReport& rep) {
  const auto& names = rep.mla.algebra.basis_names();
  const std::size_t n = rep.mla.dim();
  nlohmann::json j;
  j["meta"] = {{"name", rep.name},
               {"dim", n},
               {"basis", names},
               {"signature", {rep.sig.positive, rep.sig.negative, rep.sig.radical}}};
  nlohmann::json table = nlohmann::json::array();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      if (is_zero_vec(rep.u.coeff(a, b))) continue;
      nlohmann::json terms = nlohmann::json::array();
      for (std::size_t k = 0; k < n; ++k)
        if (!rep.u.coeff(a, b)[k].is_zero())
          terms.push_back({names[k], rep.u.coeff(a, b)[k].to_string()});
      table.push_back({{"x", names[a]}, {"y", names[b]}, {"value", terms}});
    }
  j["u_table"] = table;
  j["theta_checks"] = {{"partial_symmetry", rep.partial_symmetry},
                       {"cyclic", rep.cyclic},
                       {"trace_identity", rep.trace_identity},
                       {"random_spot_checks", rep.random_spot_checks}};
  j["associativity"] = {{"associative", rep.associativity.associative},
                        {"witness", detail::witness_json(rep.associativity, names)}};
  j["unimodular"] = {{"lie", rep.unimodular_lie_flag}, {"product", rep.unimodular_product_flag}};
  j["class_w0"] = rep.class_w0;
  j["nilpotency"] = rep.nilpotency ? nlohmann::json(*rep.nilpotency) : nlohmann::json(nullptr);
  nlohmann::json ann = nlohmann::json::array();
  for (const auto& v : rep.annihilator_basis) ann.push_back(detail::vec_json(v));
  j["annihilator"] = ann;
  j["completeness"] = {{"status", to_string(rep.completeness.status)},
                       {"detail", rep.completeness.detail}};
  j["classification"] = rep.classification ? *rep.classification : nlohmann::json(nullptr);
  return j;
}

inline std::string report_to_text(const AnalysisReport& rep) {
  const auto& names = rep.mla.algebra.basis_names();
  const std::size_t n = rep.mla.dim();
  std::string out;
  out += "algebra " + rep.name + "  (dim " + std::to_string(n) + ", signature (" +
         std::to_string(rep.sig.positive) + "," + std::to_string(rep.sig.negative) + "," +
         std::to_string(rep.sig.radical) + "))\n";

  // U-table as an n x n grid of coefficient expressions
  std::vector<std::vector<std::string>> cells(n + 1, std::vector<std::string>(n + 1));
  cells[0][0] = "U";
  for (std::size_t a = 0; a < n; ++a) {
    cells[0][a + 1] = names[a];
    cells[a + 1][0] = names[a];
    for (std::size_t b = 0; b < n; ++b)
      cells[a + 1][b + 1] = detail::vec_expression(rep.u.coeff(a, b), names);
  }
  std::vector<std::size_t> width(n + 1, 0);
  for (std::size_t r = 0; r <= n; ++r)
    for (std::size_t c = 0; c <= n; ++c) width[c] = std::max(width[c], cells[r][c].size());
  out += "U-table:\n";
  for (std::size_t r = 0; r <= n; ++r) {
    out += "  ";
    for (std::size_t c = 0; c <= n; ++c) {
      std::string cell = cells[r][c];
      cell.resize(width[c], ' ');
      out += cell + (c == n ? "" : "  ");
    }
    out += "\n";
  }

  auto yn = [](bool b) { return b ? "yes" : "no"; };
  out += std::string("theta: partial symmetry ") + yn(rep.partial_symmetry) + ", cyclic " +
         yn(rep.cyclic) + ", trace identity " + yn(rep.trace_identity) + ", spot checks " +
         yn(rep.random_spot_checks) + "\n";
  out += std::string("associative: ") + yn(rep.associativity.associative);
  if (rep.associativity.witness) {
    const auto& w = *rep.associativity.witness;
    out += "  [witness (" + names[w[0]] + "," + names[w[1]] + "," + names[w[2]] + "): (" +
           detail::vec_expression(rep.associativity.left_value, names) + ") vs (" +
           detail::vec_expression(rep.associativity.right_value, names) + ")]";
  }
  out += "\n";
  out += std::string("unimodular: lie ") + yn(rep.unimodular_lie_flag) + ", product " +
         yn(rep.unimodular_product_flag) + "\n";
  out += std::string("class W0: ") + yn(rep.class_w0) + "\n";
  out += "nilpotency index: " +
         (rep.nilpotency ? std::to_string(*rep.nilpotency) : std::string("n/a")) + "\n";
  out += "annihilator: ";
  if (rep.annihilator_basis.empty()) {
    out += "{0}";
  } else {
    for (std::size_t i = 0; i < rep.annihilator_basis.size(); ++i) {
      if (i) out += ", ";
      out += detail::vec_expression(rep.annihilator_basis[i], names);
    }
  }
  out += "\n";
  out += "completeness: " + std::string(to_string(rep.completeness.status)) + " (" +
         rep.completeness.detail + ")\n";
  if (rep.classification) out += "classification: " + rep.classification->dump() + "\n";
  return out;
}

}  // namespace metriclie
