// mlie: analysis tool for metric Lie algebras and their U-tensor structure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "metriclie/io.hpp"
#include "metriclie/report.hpp"

namespace fs = std::filesystem;
using namespace metriclie;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInputError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + out_path);
  out << content;
}

Vec parse_vector_spec(const std::string& spec, std::size_t dim) {
  Vec v;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) v.push_back(detail::parse_rational(tok, "vector entry"));
  if (v.size() != dim)
    throw MalformedInputError("vector spec has " + std::to_string(v.size()) +
                              " entries, expected " + std::to_string(dim));
  return v;
}

Matrix parse_matrix_spec(const std::string& spec) {
  std::vector<Vec> rows;
  std::stringstream ss(spec);
  std::string row;
  while (std::getline(ss, row, ';')) {
    Vec r;
    std::stringstream rs(row);
    std::string tok;
    while (std::getline(rs, tok, ',')) r.push_back(detail::parse_rational(tok, "matrix entry"));
    rows.push_back(std::move(r));
  }
  if (rows.empty()) throw MalformedInputError("empty matrix spec");
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw MalformedInputError("ragged matrix spec");
  return Matrix::from_rows(rows);
}

/// `--ideal`/`--subspace` spec: comma-separated basis labels, or
/// semicolon-separated coordinate vectors.
std::vector<Vec> parse_subspace_spec(const std::string& spec, const MetricLieAlgebra& mla) {
  const std::size_t n = mla.dim();
  if (spec.find(';') == std::string::npos && spec.find_first_of("0123456789-") != 0) {
    std::vector<Vec> vecs;
    std::stringstream ss(spec);
    std::string label;
    while (std::getline(ss, label, ',')) {
      auto idx = mla.algebra.basis_index(label);
      if (!idx) throw MalformedInputError("unknown basis label '" + label + "'");
      Vec v = zero_vec(n);
      v[*idx] = Rational(1);
      vecs.push_back(std::move(v));
    }
    if (vecs.empty()) throw MalformedInputError("empty subspace spec");
    return vecs;
  }
  std::vector<Vec> vecs;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ';')) vecs.push_back(parse_vector_spec(part, n));
  return vecs;
}

json labels_json(const Vec& v) { return metriclie::detail::vec_json(v); }

json basis_list_json(const std::vector<Vec>& basis) {
  json arr = json::array();
  for (const auto& v : basis) arr.push_back(labels_json(v));
  return arr;
}

json matrix_json(const Matrix& m) {
  json arr = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    arr.push_back(row);
  }
  return arr;
}

std::string format_vec(const Vec& v, const std::vector<std::string>& names) {
  return metriclie::detail::vec_expression(v, names);
}

/// Integrates over [t0, t1], allowing t0 < 0 via the X(-t; x0) = -X(t; -x0)
/// symmetry of the quadratic flow.
NumericTrajectory numeric_window(const SymmetricProduct& u, const std::vector<double>& x0,
                                 double t0, double t1, double dt) {
  if (t0 >= 0.0) return numeric_flow(u, x0, t0, t1, dt);
  NumericTrajectory merged;
  merged.step = dt;
  std::vector<double> neg = x0;
  for (auto& c : neg) c = -c;
  NumericTrajectory back = numeric_flow(u, neg, 0.0, -t0, dt);
  for (std::size_t s = back.times.size(); s-- > 1;) {
    merged.times.push_back(-back.times[s]);
    std::vector<double> st = back.states[s];
    for (auto& c : st) c = -c;
    merged.states.push_back(std::move(st));
  }
  if (t1 > 0.0) {
    NumericTrajectory fwd = numeric_flow(u, x0, 0.0, t1, dt);
    for (std::size_t s = 0; s < fwd.times.size(); ++s) {
      merged.times.push_back(fwd.times[s]);
      merged.states.push_back(fwd.states[s]);
    }
  } else {
    merged.times.push_back(0.0);
    merged.states.push_back(x0);
  }
  return merged;
}

struct GlobalOpts {
  std::string format = "text";
  std::string output;
  unsigned seed = 0;
};

int run_validate(const std::string& path, const GlobalOpts& g) {
  AlgebraFile file = parse_algebra(read_file(path));
  Signature sig = signature(file.mla.space());
  if (g.format == "json") {
    json j = {{"name", file.name},
              {"dim", file.mla.dim()},
              {"signature", {sig.positive, sig.negative, sig.radical}},
              {"valid", true}};
    write_output(g.output, j.dump(2) + "\n");
  } else {
    write_output(g.output, "OK: " + file.name + " (dim " + std::to_string(file.mla.dim()) +
                               ", signature (" + std::to_string(sig.positive) + "," +
                               std::to_string(sig.negative) + "," + std::to_string(sig.radical) +
                               "))\n");
  }
  return 0;
}

std::string render_report(const AnalysisReport& rep, const GlobalOpts& g) {
  if (g.format == "json") return report_to_json(rep).dump(2) + "\n";
  return report_to_text(rep);
}

int run_analyze(const std::string& path, const std::string& batch_dir, const GlobalOpts& g) {
  if (!batch_dir.empty()) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(batch_dir))
      if (entry.is_regular_file() && entry.path().extension() == ".alg")
        files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    std::string all;
    for (const auto& f : files) {
      AnalysisReport rep = analyze(parse_algebra(read_file(f.string())), g.seed);
      if (g.format == "json")
        all += render_report(rep, g);
      else
        all += "==> " + f.filename().string() + "\n" + render_report(rep, g) + "\n";
    }
    write_output(g.output, all);
    return 0;
  }
  AnalysisReport rep = analyze(parse_algebra(read_file(path)), g.seed);
  write_output(g.output, render_report(rep, g));
  return 0;
}

int run_decompose(const std::string& path, const GlobalOpts& g) {
  AlgebraFile file = parse_algebra(read_file(path));
  QuadraticSpace space = file.mla.space();
  Tensor3 th = theta_tensor(file.mla);
  WeylComponents wc = weyl_decompose(th, space);
  const auto& names = file.mla.algebra.basis_names();
  bool traceless_ok = is_zero_vec(trace_12(wc.traceless, space));
  bool reconstructed = (wc.traceless + iota(wc.vector_part, space)) == th;
  if (g.format == "json") {
    json j = {{"name", file.name},
              {"vector_part", labels_json(wc.vector_part)},
              {"dim_w", wc.dim_w_formula},
              {"traceless_trace_zero", traceless_ok},
              {"reconstruction_exact", reconstructed}};
    json entries = json::array();
    const std::size_t n = file.mla.dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j2 = i; j2 < n; ++j2)
        for (std::size_t k = 0; k < n; ++k)
          if (!wc.traceless.at(i, j2, k).is_zero())
            entries.push_back({{"i", names[i]},
                               {"j", names[j2]},
                               {"k", names[k]},
                               {"value", wc.traceless.at(i, j2, k).to_string()}});
    j["traceless_entries"] = entries;
    write_output(g.output, j.dump(2) + "\n");
  } else {
    std::string out = "Weyl decomposition of theta for " + file.name + "\n";
    out += "  vector part alpha = " + format_vec(wc.vector_part, names) +
           "  (as covector components)\n";
    out += "  dim W(" + std::to_string(file.mla.dim()) + ") = " +
           std::to_string(wc.dim_w_formula) + "\n";
    out += std::string("  Tr_12(theta_0) = 0: ") + (traceless_ok ? "yes" : "no") + "\n";
    out += std::string("  theta = theta_0 + iota(alpha): ") + (reconstructed ? "yes" : "no") + "\n";
    write_output(g.output, out);
  }
  return 0;
}

int run_geodesic(const std::string& path, const std::string& x0_spec, double t0, double t1,
                 double dt, bool oracle, const std::string& csv_path, const GlobalOpts& g) {
  AlgebraFile file = parse_algebra(read_file(path));
  const std::size_t n = file.mla.dim();
  Vec x0 = parse_vector_spec(x0_spec, n);
  SymmetricProduct u = u_tensor(file.mla);
  GeodesicPolynomial p = polynomial_geodesic(u, x0);
  bool verified = verify_polynomial_solution(p, u);
  const auto& names = file.mla.algebra.basis_names();

  double deviation = 0.0;
  bool have_deviation = false;
  NumericTrajectory traj;
  bool have_traj = false;
  if (oracle || !csv_path.empty()) {
    std::vector<double> x0d(n);
    for (std::size_t i = 0; i < n; ++i) x0d[i] = x0[i].to_double();
    traj = numeric_window(u, x0d, oracle ? std::min(t0, -t1) : t0, t1, dt);
    have_traj = true;
    if (oracle) {
      for (std::size_t s = 0; s < traj.times.size(); ++s) {
        std::vector<double> exact = p.evaluate_double(traj.times[s]);
        for (std::size_t i = 0; i < n; ++i)
          deviation = std::max(deviation, std::fabs(traj.states[s][i] - exact[i]));
      }
      have_deviation = true;
    }
    if (!csv_path.empty()) write_output(csv_path, trajectory_csv(traj));
  }

  if (g.format == "json") {
    json coeffs = json::array();
    for (const auto& a : p.coefficients) coeffs.push_back(labels_json(a));
    json j = {{"name", file.name},
              {"x0", labels_json(x0)},
              {"coefficients", coeffs},
              {"degree", p.coefficients.size() - 1},
              {"verified", verified}};
    if (have_deviation) j["oracle_max_deviation"] = deviation;
    if (have_traj) j["trajectory_points"] = traj.times.size();
    write_output(g.output, j.dump(2) + "\n");
  } else {
    std::string out = "geodesic with X(0) = " + format_vec(x0, names) + "\n";
    out += "  X(t) = sum_k t^k A_k with\n";
    for (std::size_t k = 0; k < p.coefficients.size(); ++k)
      out += "    A_" + std::to_string(k) + " = " + format_vec(p.coefficients[k], names) + "\n";
    out += std::string("  exact solution check: ") + (verified ? "pass" : "FAIL") + "\n";
    if (have_deviation) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3g", deviation);
      out += std::string("  oracle max deviation: ") + buf + "\n";
    }
    write_output(g.output, out);
  }
  return verified ? 0 : 1;
}

json classification_json(const ClassificationReport& rep) {
  json j;
  j["branch"] = to_string(rep.branch);
  j["eps"] = rep.data.eps;
  j["unit_normal"] = labels_json(rep.data.unit_normal);
  j["t_matrix"] = matrix_json(rep.data.t_map);
  if (rep.violation) {
    json v;
    v["condition"] = to_string(rep.violation->condition);
    v["triple"] = {labels_json(rep.violation->triple[0]), labels_json(rep.violation->triple[1]),
                   labels_json(rep.violation->triple[2])};
    v["left"] = labels_json(rep.violation->left_value);
    v["right"] = labels_json(rep.violation->right_value);
    j["violation"] = v;
  } else {
    j["violation"] = nullptr;
  }
  if (rep.heisenberg) {
    const auto& nf = *rep.heisenberg;
    j["heisenberg"] = {{"e", labels_json(nf.e_vec)},
                       {"f", labels_json(nf.f_vec)},
                       {"z", labels_json(nf.z_vec)},
                       {"u", labels_json(nf.u)},
                       {"t", nf.t_scalar.to_string()},
                       {"complement", basis_list_json(nf.central_complement)}};
  }
  if (rep.beta) {
    const auto& nf = *rep.beta;
    j["beta"] = {{"w_basis", basis_list_json(nf.w_basis)},
                 {"w_dual_basis", basis_list_json(nf.w_dual_basis)},
                 {"beta_matrix", matrix_json(nf.beta)},
                 {"complement", basis_list_json(nf.complement)}};
  }
  if (rep.isomorphism) {
    bool ok = verify_isometric_isomorphism(*rep.isomorphism).valid;
    j["isomorphism"] = {{"matrix", matrix_json(rep.isomorphism->matrix)}, {"verified", ok}};
  }
  return j;
}

int run_classify(const std::string& path, const std::string& ideal_spec, const GlobalOpts& g) {
  AlgebraFile file = parse_algebra(read_file(path));
  std::vector<Vec> ideal;
  if (!ideal_spec.empty()) {
    ideal = parse_subspace_spec(ideal_spec, file.mla);
  } else {
    auto detected = detect_abelian_hyperplane(file.mla);
    if (detected.candidates.empty())
      throw PreconditionError(
          "no nondegenerate abelian hyperplane ideal found; pass one with --ideal");
    ideal = detected.candidates.front();
  }
  ClassificationReport rep = classify_almost_abelian(file.mla, ideal);
  json cls = classification_json(rep);
  if (g.format == "json") {
    json j = {{"name", file.name}, {"classification", cls}};
    write_output(g.output, j.dump(2) + "\n");
  } else {
    const auto& names = file.mla.algebra.basis_names();
    std::string out = "classification of " + file.name + ": " + to_string(rep.branch) + "\n";
    out += "  e = " + format_vec(rep.data.unit_normal, names) +
           ", eps = " + std::to_string(rep.data.eps) + "\n";
    if (rep.violation) {
      out += std::string("  violated condition: ") + to_string(rep.violation->condition) + "\n";
      out += "  witness: (" + format_vec(rep.violation->triple[0], names) + " | " +
             format_vec(rep.violation->triple[1], names) + " | " +
             format_vec(rep.violation->triple[2], names) + ")\n";
      out += "  associator values: " + format_vec(rep.violation->left_value, names) + " vs " +
             format_vec(rep.violation->right_value, names) + "\n";
    }
    if (rep.heisenberg) {
      out += "  u = " + format_vec(rep.heisenberg->u, names) +
             ", z = " + format_vec(rep.heisenberg->z, names) +
             ", t = " + rep.heisenberg->t_scalar.to_string() + "\n";
      out += "  f = " + format_vec(rep.heisenberg->f_vec, names) + "\n";
      out += "  abelian complement of dim " +
             std::to_string(rep.heisenberg->central_complement.size()) + "\n";
    }
    if (rep.beta) {
      out += "  dim Im(T) = " + std::to_string(rep.beta->w_basis.size()) + "\n";
      out += "  beta =\n";
      for (std::size_t i = 0; i < rep.beta->beta.rows(); ++i) {
        out += "    ";
        for (std::size_t j2 = 0; j2 < rep.beta->beta.cols(); ++j2)
          out += rep.beta->beta(i, j2).to_string() + (j2 + 1 < rep.beta->beta.cols() ? " " : "");
        out += "\n";
      }
    }
    if (rep.isomorphism)
      out += std::string("  isometric isomorphism verified: ") +
             (verify_isometric_isomorphism(*rep.isomorphism).valid ? "yes" : "NO") + "\n";
    write_output(g.output, out);
  }
  return 0;
}

int run_twostep(const std::string& path, const GlobalOpts& g) {
  AlgebraFile file = parse_algebra(read_file(path));
  TwoStepReport rep = two_step_analysis(file.mla);
  const auto& names = file.mla.algebra.basis_names();
  if (g.format == "json") {
    json j;
    j["name"] = file.name;
    j["center"] = basis_list_json(rep.center_basis);
    j["center_metric"] = to_string(rep.center_metric_status);
    j["associative"] = rep.associative;
    j["j_compositions_vanish"] = rep.j_compositions_vanish;
    json jops = json::array();
    for (const auto& m : rep.j_operators) jops.push_back(matrix_json(m));
    j["j_operators"] = jops;
    if (rep.witness)
      j["witness"] = {labels_json((*rep.witness)[0]), labels_json((*rep.witness)[1]),
                      labels_json((*rep.witness)[2])};
    else
      j["witness"] = nullptr;
    j["verdict"] = rep.verdict;
    write_output(g.output, j.dump(2) + "\n");
  } else {
    std::string out = "two-step analysis of " + file.name + "\n";
    out += "  center dim " + std::to_string(rep.center_basis.size()) + ", metric " +
           to_string(rep.center_metric_status) + "\n";
    out += std::string("  associative: ") + (rep.associative ? "yes" : "no") + "\n";
    if (rep.witness)
      out += "  witness: (" + format_vec((*rep.witness)[0], names) + " | " +
             format_vec((*rep.witness)[1], names) + " | " + format_vec((*rep.witness)[2], names) +
             ")\n";
    out += "  verdict: " + rep.verdict + "\n";
    write_output(g.output, out);
  }
  return 0;
}

int run_family(const std::string& which, int eps, std::size_t k, const std::string& beta_spec,
               const std::string& extra_spec, const GlobalOpts& g) {
  AlgebraFile file;
  if (which == "heisenberg") {
    file = {std::string("heisenberg_lorentzian_eps") + (eps > 0 ? "p1" : "m1"),
            heisenberg_lorentzian(eps)};
  } else if (which == "sl2") {
    file = {"sl2", sl2_example()};
  } else if (which == "twostep-split") {
    file = {"twostep_split", two_step_split_example()};
  } else if (which == "beta") {
    Matrix beta =
        beta_spec.empty() ? Matrix::from_nested({{0, 1}, {-1, 0}}) : parse_matrix_spec(beta_spec);
    if (beta.rows() != 2 * k)
      throw MalformedInputError("beta matrix must be 2k x 2k for k = " + std::to_string(k));
    QuadraticSpace extra;
    if (!extra_spec.empty()) extra = QuadraticSpace(parse_matrix_spec(extra_spec));
    file = {"beta_semidirect_k" + std::to_string(k), beta_semidirect(k, beta, eps, extra)};
  } else {
    throw MalformedInputError("unknown family '" + which +
                              "' (expected heisenberg|beta|sl2|twostep-split)");
  }
  write_output(g.output, emit_algebra(file));
  return 0;
}

int run_witt(const std::string& path, const std::string& subspace_spec, const GlobalOpts& g) {
  AlgebraFile file = parse_algebra(read_file(path));
  std::vector<Vec> iso = parse_subspace_spec(subspace_spec, file.mla);
  WittData w = witt_decomposition(file.mla.space(), iso);
  const auto& names = file.mla.algebra.basis_names();
  if (g.format == "json") {
    json j = {{"name", file.name},
              {"isotropic_basis", basis_list_json(w.isotropic_basis)},
              {"dual_isotropic_basis", basis_list_json(w.dual_isotropic_basis)},
              {"orthogonal_complement", basis_list_json(w.orthogonal_complement)}};
    write_output(g.output, j.dump(2) + "\n");
  } else {
    auto fmt_list = [&](const std::vector<Vec>& vs) {
      std::string s;
      for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ", ";
        s += format_vec(vs[i], names);
      }
      return s.empty() ? "{0}" : s;
    };
    std::string out = "Witt decomposition for " + file.name + "\n";
    out += "  W  = " + fmt_list(w.isotropic_basis) + "\n";
    out += "  W~ = " + fmt_list(w.dual_isotropic_basis) + "\n";
    out += "  U  = " + fmt_list(w.orthogonal_complement) + "\n";
    write_output(g.output, out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"metric Lie algebra analyzer: U-tensor structure, classification, geodesics"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may appear after the subcommand
  GlobalOpts g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("-o,--output", g.output, "write output to this path");
  app.add_option("--seed", g.seed, "seed for randomized spot checks");

  std::string path, batch_dir, ideal_spec, subspace_spec, x0_spec, csv_path;
  std::string family_name, beta_spec, extra_spec;
  double t0 = 0.0, t1 = 10.0, dt = 1e-3;
  bool oracle = false;
  int eps = 1;
  std::size_t k = 1;

  auto* validate = app.add_subcommand("validate", "parse and validate an algebra file");
  validate->add_option("file", path)->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "full structural analysis");
  analyze_cmd->add_option("file", path);
  analyze_cmd->add_option("--batch", batch_dir, "analyze every .alg file in a directory");

  auto* decompose = app.add_subcommand("decompose", "Weyl decomposition of theta");
  decompose->add_option("file", path)->required();

  auto* geodesic = app.add_subcommand("geodesic", "polynomial geodesic and numeric oracle");
  geodesic->add_option("file", path)->required();
  geodesic->add_option("--x0", x0_spec, "initial condition, comma-separated rationals")
      ->required();
  geodesic->add_option("--t0", t0);
  geodesic->add_option("--t1", t1);
  geodesic->add_option("--dt", dt);
  geodesic->add_flag("--oracle", oracle, "compare against the RK4 integration");
  geodesic->add_option("--csv", csv_path, "export the numeric trajectory as CSV");

  auto* classify = app.add_subcommand("classify", "almost-abelian classification");
  classify->add_option("file", path)->required();
  classify->add_option("--ideal", ideal_spec,
                       "abelian hyperplane: labels 'F,Z' or vectors '0,1,0;0,0,1'");

  auto* twostep = app.add_subcommand("twostep", "two-step nilpotent analysis");
  twostep->add_option("file", path)->required();

  auto* family = app.add_subcommand("family", "emit a built-in family as an algebra file");
  family->add_option("which", family_name, "heisenberg|beta|sl2|twostep-split")->required();
  family->add_option("--eps", eps, "+1 or -1");
  family->add_option("--k", k, "half the rank of beta");
  family->add_option("--beta", beta_spec, "2k x 2k skew matrix, rows ';'-separated");
  family->add_option("--extra-gram", extra_spec, "gram of the extra abelian factor");

  auto* witt = app.add_subcommand("witt", "Witt decomposition of an isotropic subspace");
  witt->add_option("file", path)->required();
  witt->add_option("--subspace", subspace_spec)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) return run_validate(path, g);
    if (*analyze_cmd) {
      if (path.empty() && batch_dir.empty())
        throw MalformedInputError("analyze needs a file or --batch <dir>");
      return run_analyze(path, batch_dir, g);
    }
    if (*decompose) return run_decompose(path, g);
    if (*geodesic) return run_geodesic(path, x0_spec, t0, t1, dt, oracle, csv_path, g);
    if (*classify) return run_classify(path, ideal_spec, g);
    if (*twostep) return run_twostep(path, g);
    if (*family) return run_family(family_name, eps, k, beta_spec, extra_spec, g);
    if (*witt) return run_witt(path, subspace_spec, g);
  } catch (const MalformedInputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
