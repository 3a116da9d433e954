#pragma once

// Text renderings used by the command-line tool: JSON Lines, TSV and a
// human-readable layout. Rationals are always written as "p/q" strings.

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kostka/cone.hpp"
#include "kostka/rootsys.hpp"

namespace kostka::format {

using nlohmann::json;

inline json rationals(std::span<const Rational> v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(q.str());
  return a;
}

inline json nodes(const NodeSet& s) {
  json a = json::array();
  for (int i : s) a.push_back(i);
  return a;
}

inline RatVector parse_rationals(const json& a) {
  RatVector v;
  for (const auto& x : a) v.push_back(Rational::parse(x.get<std::string>()));
  return v;
}

inline std::string csv(std::span<const Rational> v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + v[k].str();
  return s;
}

inline std::string csv(const NodeSet& s) {
  std::string out;
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k]);
  return out;
}

/// Linear combination such as "2ϖ1 + ϖ4" or "ϖ3 - α2 - 2α3"; "0" when empty.
inline std::string combination(std::span<const Rational> coeffs, const std::string& symbol) {
  std::string s;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Rational& q = coeffs[k];
    if (q.is_zero()) continue;
    const Rational mag = abs(q);
    if (s.empty()) s += q.sign() < 0 ? "-" : "";
    else s += q.sign() < 0 ? " - " : " + ";
    if (mag != Rational(1)) s += mag.is_integer() ? mag.str() : "(" + mag.str() + ")";
    s += symbol + std::to_string(k + 1);
  }
  return s.empty() ? "0" : s;
}

inline std::string weight(const WeightFW& w) { return combination(w.coords, "ϖ"); }

inline json ray_json(const RootDatum& d, const RayRecord& r) {
  return json{{"type", std::string(1, to_char(d.letter()))},
              {"rank", d.rank()},
              {"node", r.node},
              {"levi", nodes(r.levi)},
              {"k_primitive", r.k_primitive},
              {"k_det", r.k_det},
              {"lambda_fw", rationals(r.lambda_fw.coords)},
              {"mu_fw", rationals(r.mu_fw.coords)},
              {"c_alpha", rationals(r.c_alpha.coords)}};
}

inline const char* ray_tsv_header() {
  return "type\trank\tnode\tlevi\tk_primitive\tk_det\tlambda_fw\tmu_fw\tc_alpha\n";
}

inline std::string ray_tsv(const RootDatum& d, const RayRecord& r) {
  std::ostringstream os;
  os << to_char(d.letter()) << '\t' << d.rank() << '\t' << r.node << '\t' << csv(r.levi) << '\t' << r.k_primitive
     << '\t' << r.k_det << '\t' << csv(r.lambda_fw.coords) << '\t' << csv(r.mu_fw.coords) << '\t'
     << csv(r.c_alpha.coords) << '\n';
  return os.str();
}

/// Levi nodes, det(C_L) (C_L^T)^{-1} with its scalar, and the det-scaled ray.
inline std::string ray_pretty(const RootDatum& d, const RayRecord& r) {
  std::ostringstream os;
  const std::int64_t k = r.k_det;
  os << "Levi " << (r.levi.empty() ? std::string("{} (trivial)") : r.levi.str()) << '\n';
  if (!r.levi.empty()) {
    const RatMatrix inv_t = inverse(d.cartan().principal_submatrix(r.levi.zero_based()).transpose());
    os << "  (C_L^T)^-1 = 1/" << k << " [";
    for (std::size_t i = 0; i < inv_t.rows(); ++i) {
      os << (i ? "; " : "");
      for (std::size_t j = 0; j < inv_t.cols(); ++j) os << (j ? " " : "") << (Rational(k) * inv_t(i, j)).str();
    }
    os << "]\n";
  }
  const WeightFW lam = r.scaled_lambda(k);
  const RootCoords kc = Rational(k) * r.c_alpha;
  os << "  (" << weight(lam) << ", " << weight(lam);
  for (std::size_t j = 0; j < kc.size(); ++j) {
    if (kc[j].is_zero()) continue;
    os << " - " << (kc[j] == Rational(1) ? std::string() : kc[j].str()) << "α" << j + 1;
  }
  os << ") = (" << weight(lam) << ", " << weight(r.scaled_mu(k)) << ")";
  if (r.k_primitive != k) os << "   primitive: (" << weight(r.scaled_lambda(r.k_primitive)) << ", "
                             << weight(r.scaled_mu(r.k_primitive)) << ")";
  os << '\n';
  return os.str();
}

inline json vertex_json(const RootDatum& d, const WeightFW& lambda, const Vertex& v) {
  return json{{"type", std::string(1, to_char(d.letter()))},
              {"rank", d.rank()},
              {"lambda_fw", rationals(lambda.coords)},
              {"point_fw", rationals(v.point.coords)},
              {"levi", nodes(v.defining_I)},
              {"c_alpha", rationals(fw_to_alpha(d, lambda - v.point).coords)}};
}

inline const char* vertex_tsv_header() { return "type\trank\tlambda_fw\tpoint_fw\tlevi\tc_alpha\n"; }

inline std::string vertex_tsv(const RootDatum& d, const WeightFW& lambda, const Vertex& v) {
  std::ostringstream os;
  os << to_char(d.letter()) << '\t' << d.rank() << '\t' << csv(lambda.coords) << '\t' << csv(v.point.coords) << '\t'
     << csv(v.defining_I) << '\t' << csv(fw_to_alpha(d, lambda - v.point).coords) << '\n';
  return os.str();
}

inline std::string vertex_pretty(const RootDatum& d, const WeightFW& lambda, const Vertex& v) {
  std::ostringstream os;
  os << weight(v.point) << "   Levi " << v.defining_I.str() << "   = " << weight(lambda);
  const RootCoords c = fw_to_alpha(d, lambda - v.point);
  for (std::size_t j = 0; j < c.size(); ++j)
    if (!c[j].is_zero()) os << " - " << (c[j] == Rational(1) ? std::string() : "(" + c[j].str() + ")") << "α" << j + 1;
  os << '\n';
  return os.str();
}

}  // namespace kostka::format
