#include "relcalc/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "relcalc/debranges.hpp"
#include "relcalc/errors.hpp"
#include "relcalc/extensions.hpp"
#include "relcalc/io.hpp"
#include "relcalc/jacobi.hpp"
#include "relcalc/spectra.hpp"
#include "relcalc/transforms.hpp"

namespace relcalc {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<double> parse_csv_reals(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &pos);
    } catch (...) {
      throw SchemaError("malformed real literal '" + item + "'");
    }
    while (pos < item.size() &&
           std::isspace(static_cast<unsigned char>(item[pos])))
      ++pos;
    if (pos != item.size())
      throw SchemaError("malformed real literal '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw SchemaError("empty list of reals");
  return out;
}

std::vector<Complex> parse_csv_complex(const std::string& text) {
  std::vector<Complex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_complex(item));
  if (out.empty()) throw SchemaError("empty list of complex numbers");
  return out;
}

/// Matrix file: JSON array of rows, each row an array of [re, im] pairs.
Matrix parse_matrix_file(const std::string& path) {
  Json doc;
  try {
    doc = Json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("malformed matrix file: ") + e.what());
  }
  if (!doc.is_array() || doc.empty())
    throw SchemaError("matrix file must be a nonempty array of rows");
  const size_t cols = doc[0].is_array() ? doc[0].size() : 0;
  if (cols == 0) throw SchemaError("matrix rows must be nonempty arrays");
  Matrix M(static_cast<Eigen::Index>(doc.size()),
           static_cast<Eigen::Index>(cols));
  for (size_t i = 0; i < doc.size(); ++i) {
    const Json& row = doc[i];
    if (!row.is_array() || row.size() != cols)
      throw SchemaError("matrix rows must all have the same length");
    for (size_t j = 0; j < cols; ++j) {
      const Json& entry = row[j];
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
          !entry[1].is_number())
        throw SchemaError("matrix entries must be [re, im] number pairs");
      M(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          Complex(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  return M;
}

Json spectrum_json(const SpectrumReport& rep) {
  Json out;
  Json eigs = Json::array();
  for (const PencilEigenvalue& ev : rep.finite_eigenvalues)
    eigs.push_back({{"value", format_complex(ev.value)},
                    {"geometric", ev.geometric},
                    {"algebraic", ev.algebraic}});
  out["finite_eigenvalues"] = eigs;
  out["infinite_multiplicity"] = rep.infinite_multiplicity;
  out["infinite_algebraic"] = rep.infinite_algebraic;
  return out;
}

Json classification_json(const ClassificationReport& c) {
  Json out;
  out["operator"] = c.is_operator;
  out["bounded"] = c.is_bounded;
  out["symmetric"] = c.is_symmetric;
  out["selfadjoint"] = c.is_selfadjoint;
  out["dissipative"] = c.is_dissipative;
  out["positive"] = c.is_positive;
  out["contraction"] = c.is_contraction;
  out["isometry"] = c.is_isometry;
  out["unitary"] = c.is_unitary;
  out["maximal_dissipative"] = c.is_maximal_dissipative;
  return out;
}

struct CliOptions {
  std::optional<double> rank_rel, psd_abs, eq_tol;

  ToleranceProfile resolve() const {
    ToleranceProfile tol;
    if (const char* env = std::getenv("RELCALC_TOL_EQ")) {
      try {
        tol.eq_tol = std::stod(env);
      } catch (...) {
        throw SchemaError("malformed RELCALC_TOL_EQ value");
      }
      if (tol.eq_tol <= 0.0)
        throw SchemaError("RELCALC_TOL_EQ must be positive");
    }
    if (rank_rel) tol.rank_rel = *rank_rel;
    if (psd_abs) tol.psd_abs = *psd_abs;
    if (eq_tol) tol.eq_tol = *eq_tol;
    return tol;
  }
};

int dispatch(int argc, const char* const* argv, std::ostream& out) {
  CLI::App app{"Calculator for linear relations (multivalued operators)"};
  app.require_subcommand(1);

  CliOptions opts;
  app.add_option("--tol-rank-rel", opts.rank_rel,
                 "Relative rank cutoff for subspace computations");
  app.add_option("--tol-psd-abs", opts.psd_abs,
                 "Absolute slack for semidefiniteness checks");
  app.add_option("--tol-eq", opts.eq_tol, "Subspace equality tolerance");

  std::string file, k_file, zeta_str = "i", tau_str, w_str = "i", report = "eig";
  std::string b_csv, q_csv, roots_csv;
  Eigen::Index n_trunc = 0;

  CLI::App* analyze = app.add_subcommand("analyze", "Classify a relation");
  analyze->add_option("file", file)->required();

  CLI::App* adj = app.add_subcommand("adjoint", "Adjoint relation");
  adj->add_option("file", file)->required();

  CLI::App* zt = app.add_subcommand("ztransform", "Z transform at zeta");
  zt->add_option("file", file)->required();
  zt->add_option("--zeta", zeta_str)->required();

  CLI::App* ext = app.add_subcommand(
      "extend", "Dissipative extension from a contraction parameter");
  ext->add_option("file", file)->required();
  ext->add_option("--k", k_file)->required();
  ext->add_option("--zeta", zeta_str);

  CLI::App* spec = app.add_subcommand("spectrum", "Pencil eigenvalues");
  spec->add_option("file", file)->required();

  CLI::App* jac = app.add_subcommand("jacobi", "Truncated Jacobi extensions");
  jac->add_option("--b", b_csv)->required();
  jac->add_option("--q", q_csv)->required();
  jac->add_option("--n", n_trunc)->required();
  jac->add_option("--tau", tau_str)->required();
  jac->add_option("--report", report)
      ->check(CLI::IsMember({"eig", "validate"}));

  CLI::App* db = app.add_subcommand(
      "debranges", "Polynomial reproducing-kernel space extensions");
  db->add_option("--roots", roots_csv)->required();
  db->add_option("--tau", tau_str)->required();
  db->add_option("--w", w_str);
  db->add_option("--report", report)
      ->check(CLI::IsMember({"eig", "phi", "validate"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    throw SchemaError(e.what());
  }

  const ToleranceProfile tol = opts.resolve();
  Json rep;

  if (analyze->parsed()) {
    const LinearRelation T = parse_relation(read_file(file), tol);
    const RelationParts p = parts(T);
    rep["command"] = "analyze";
    rep["ambient_dim"] = T.ambient_dim();
    rep["dim"] = T.dim();
    rep["parts"] = {{"dom", p.dom.dim()},
                    {"ran", p.ran.dim()},
                    {"ker", p.ker.dim()},
                    {"mul", p.mul.dim()}};
    rep["classification"] = classification_json(classify(T));
    rep["deficiency"] = {
        {"at_i", deficiency_index(T, Complex(0.0, 1.0))},
        {"at_minus_i", deficiency_index(T, Complex(0.0, -1.0))}};
  } else if (adj->parsed()) {
    const LinearRelation T = parse_relation(read_file(file), tol);
    rep["command"] = "adjoint";
    rep["relation"] = relation_document(adjoint(T));
  } else if (zt->parsed()) {
    const LinearRelation T = parse_relation(read_file(file), tol);
    const Complex zeta = parse_complex(zeta_str);
    rep["command"] = "ztransform";
    rep["zeta"] = format_complex(zeta);
    rep["relation"] = relation_document(z_transform(T, zeta));
  } else if (ext->parsed()) {
    const LinearRelation A = parse_relation(read_file(file), tol);
    ExtensionParameter P;
    P.zeta = parse_complex(zeta_str);
    P.K = parse_matrix_file(k_file);
    P.D_basis = kernel_basis(adjoint(A), P.zeta).basis();
    if (P.D_basis.cols() != P.K.cols())
      throw DimensionMismatch(
          "extend: K columns must match the deficiency dimension at zeta");
    const LinearRelation ext_rel = extend_by_contraction(A, P);
    rep["command"] = "extend";
    rep["zeta"] = format_complex(P.zeta);
    rep["relation"] = relation_document(ext_rel);
  } else if (spec->parsed()) {
    const LinearRelation T = parse_relation(read_file(file), tol);
    rep["command"] = "spectrum";
    rep.update(spectrum_json(eigenvalues(T)));
  } else if (jac->parsed()) {
    JacobiModel m;
    const std::vector<double> b = parse_csv_reals(b_csv);
    const std::vector<double> q = parse_csv_reals(q_csv);
    m.b = Eigen::Map<const Eigen::VectorXd>(b.data(),
                                            static_cast<Eigen::Index>(b.size()));
    m.q = Eigen::Map<const Eigen::VectorXd>(q.data(),
                                            static_cast<Eigen::Index>(q.size()));
    m.N = n_trunc;
    m.tol = tol;
    m.validate();
    const Tau tau = (tau_str == "inf") ? Tau::inf() : Tau(parse_complex(tau_str));
    rep["command"] = "jacobi";
    rep["n"] = m.N;
    rep["tau"] = tau.infinite ? std::string("inf") : format_complex(tau.value);
    if (report == "validate") {
      rep["valid"] = cross_validate_extension(m, tau);
    } else {
      const LinearRelation J =
          tau.infinite ? j_infinity(m) : j_tau(m, tau.value);
      rep.update(spectrum_json(eigenvalues(J)));
    }
  } else if (db->parsed()) {
    const std::vector<Complex> roots = parse_csv_complex(roots_csv);
    const Complex tau = parse_complex(tau_str);
    const Complex w = parse_complex(w_str);
    const DeBrangesModel model = build_model(roots, 1.0, tol);
    rep["command"] = "debranges";
    rep["tau"] = format_complex(tau);
    if (report == "phi") {
      Json phi = Json::array();
      for (const Complex& r : spectrum_via_phi(model, tau))
        phi.push_back(format_complex(r));
      rep["phi_roots"] = phi;
    } else if (report == "validate") {
      const SpectrumReport sp = eigenvalues(s_tau(model, tau, w));
      const std::vector<Complex> phi = spectrum_via_phi(model, tau);
      std::vector<Complex> pencil;
      for (const PencilEigenvalue& ev : sp.finite_eigenvalues)
        for (Eigen::Index k = 0; k < ev.algebraic; ++k)
          if (ev.value.imag() >= -tol.psd_abs) pencil.push_back(ev.value);
      bool valid = pencil.size() == phi.size();
      for (size_t i = 0; valid && i < phi.size(); ++i)
        valid = std::abs(pencil[i] - phi[i]) <=
                1e-6 * std::max(1.0, std::abs(phi[i]));
      rep["w"] = format_complex(w);
      rep["valid"] = valid;
    } else {
      rep["w"] = format_complex(w);
      rep.update(spectrum_json(eigenvalues(s_tau(model, tau, w))));
    }
  }

  out << emit_report(rep);
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  try {
    return dispatch(argc, argv, out);
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace relcalc
