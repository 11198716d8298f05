#include "relcalc/io.hpp"

#include <cmath>
#include <cstdio>

#include "relcalc/errors.hpp"

namespace relcalc {

namespace {

Vector parse_component(const Json& arr, Eigen::Index n, const char* name) {
  if (!arr.is_array() || static_cast<Eigen::Index>(arr.size()) != n)
    throw SchemaError(std::string("field '") + name +
                      "' must be an array of length ambient_dim");
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Json& entry = arr[static_cast<size_t>(i)];
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
        !entry[1].is_number())
      throw SchemaError(std::string("entries of '") + name +
                        "' must be [re, im] number pairs");
    const double re = entry[0].get<double>(), im = entry[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im))
      throw SchemaError("complex entries must be finite");
    v(i) = Complex(re, im);
  }
  return v;
}

}  // namespace

LinearRelation parse_relation(const std::string& text,
                              ToleranceProfile default_tol) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("document must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "ambient_dim" && key != "spanning_pairs" && key != "tol")
      throw SchemaError("unknown field '" + key + "'");
  }
  if (!doc.contains("ambient_dim") || !doc["ambient_dim"].is_number_integer())
    throw SchemaError("missing integer field 'ambient_dim'");
  const Eigen::Index n = doc["ambient_dim"].get<Eigen::Index>();
  if (n < 1) throw SchemaError("'ambient_dim' must be positive");
  if (!doc.contains("spanning_pairs") || !doc["spanning_pairs"].is_array() ||
      doc["spanning_pairs"].empty())
    throw SchemaError("'spanning_pairs' must be a nonempty array");

  ToleranceProfile tol = default_tol;
  if (doc.contains("tol")) {
    const Json& jt = doc["tol"];
    if (!jt.is_object()) throw SchemaError("'tol' must be an object");
    for (const auto& [key, value] : jt.items()) {
      if (!value.is_number() || value.get<double>() <= 0.0)
        throw SchemaError("tolerance '" + key + "' must be a positive number");
      if (key == "rank_rel")
        tol.rank_rel = value.get<double>();
      else if (key == "psd_abs")
        tol.psd_abs = value.get<double>();
      else if (key == "eq_tol")
        tol.eq_tol = value.get<double>();
      else
        throw SchemaError("unknown tolerance field '" + key + "'");
    }
  }

  std::vector<std::pair<Vector, Vector>> pairs;
  for (const Json& p : doc["spanning_pairs"]) {
    if (!p.is_object() || !p.contains("f") || !p.contains("g"))
      throw SchemaError("each spanning pair needs fields 'f' and 'g'");
    for (const auto& [key, value] : p.items())
      if (key != "f" && key != "g")
        throw SchemaError("unknown pair field '" + key + "'");
    pairs.emplace_back(parse_component(p["f"], n, "f"),
                       parse_component(p["g"], n, "g"));
  }
  return LinearRelation::from_pairs(pairs, tol);
}

Json relation_document(const LinearRelation& T) {
  Json doc;
  doc["ambient_dim"] = T.ambient_dim();
  Json pairs = Json::array();
  const Matrix F = T.f_block(), G = T.g_block();
  for (Eigen::Index j = 0; j < T.dim(); ++j) {
    Json f = Json::array(), g = Json::array();
    for (Eigen::Index i = 0; i < T.ambient_dim(); ++i) {
      f.push_back({F(i, j).real(), F(i, j).imag()});
      g.push_back({G(i, j).real(), G(i, j).imag()});
    }
    pairs.push_back({{"f", f}, {"g", g}});
  }
  doc["spanning_pairs"] = pairs;
  return doc;
}

std::string emit_report(const Json& report) { return report.dump(2) + "\n"; }

Complex parse_complex(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw SchemaError("empty complex literal");

  auto parse_real = [](const std::string& t, double& out) -> bool {
    if (t.empty()) return false;
    size_t pos = 0;
    try {
      out = std::stod(t, &pos);
    } catch (...) {
      return false;
    }
    return pos == t.size();
  };

  // Split at the last +/- that is not part of an exponent and not leading.
  size_t split = std::string::npos;
  for (size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }

  double re = 0.0, im = 0.0;
  if (s.back() == 'i' || s.back() == 'I') {
    std::string im_part = s.substr(0, s.size() - 1);
    std::string re_part;
    if (split != std::string::npos && split < im_part.size()) {
      re_part = s.substr(0, split);
      im_part = s.substr(split, s.size() - 1 - split);
    }
    if (im_part.empty() || im_part == "+")
      im = 1.0;
    else if (im_part == "-")
      im = -1.0;
    else if (!parse_real(im_part, im))
      throw SchemaError("malformed complex literal '" + text + "'");
    if (!re_part.empty() && !parse_real(re_part, re))
      throw SchemaError("malformed complex literal '" + text + "'");
  } else {
    if (!parse_real(s, re))
      throw SchemaError("malformed complex literal '" + text + "'");
  }
  return Complex(re, im);
}

std::string format_complex(Complex z) {
  // Snap anything that rounds to zero at 8 decimals, so the sign of a
  // residual -1e-17 never leaks into the printed report.
  double re = z.real(), im = z.imag();
  if (std::abs(re) < 5e-9) re = 0.0;
  if (std::abs(im) < 5e-9) im = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.8f%+.8fi", re, im);
  return buf;
}

}  // namespace relcalc
