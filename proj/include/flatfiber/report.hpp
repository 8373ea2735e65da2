// JSON reports. Keys are sorted (nlohmann::json objects are ordered maps) and
// rationals are written as canonical "p/q" strings.
#pragma once

#include <json.hpp>

#include "flatfiber/classify.hpp"

namespace flatfiber {

using Json = nlohmann::json;

inline Json to_json(const Rat& q) { return q.get_str(); }

inline Json to_json(const Vec& v) {
  Json a = Json::array();
  for (auto& x : v) a.push_back(to_json(x));
  return a;
}

inline Json to_json(const std::vector<Vec>& vs) {
  Json a = Json::array();
  for (auto& v : vs) a.push_back(to_json(v));
  return a;
}

inline Json to_json(const Mat& m) {
  Json a = Json::array();
  for (int i = 0; i < m.r; ++i) a.push_back(to_json(m.row(i)));
  return a;
}

inline Json to_json(const AffineIso& g) { return Json{{"linear", to_json(g.A)}, {"translation", to_json(g.t)}}; }

inline Json to_json(const std::vector<AffineIso>& gs) {
  Json a = Json::array();
  for (auto& g : gs) a.push_back(to_json(g));
  return a;
}

inline Json to_json(const MapInvariant& m) {
  Json j{{"label", m.label()}, {"coarse", m.coarse()}, {"orientation", m.orientation}, {"fixdim", m.fixdim}};
  if (m.circle && m.orientation) j["turn"] = to_json(m.turn);
  return j;
}

inline Json group_report(const SpaceGroup& G) {
  Json j;
  j["dim"] = G.n;
  j["point_group_order"] = G.order();
  j["lattice"] = to_json(G.lattice.rows());
  j["generators"] = to_json(G.generators);
  j["betti"] = first_betti(G);
  j["center"] = to_json(center_generators(G));
  j["center_trivial"] = center_span(G).dim() == 0;
  j["orientation_preserving"] = orientation_preserving(G);
  if (G.n <= 2) j["orbifold"] = orbifold_type(G).name();
  if (G.n == 2) j["wallpaper"] = wallpaper_type(G).hm;
  return j;
}

inline Json fiber_report(const NormalAnalysis& A) {
  Json j;
  j["group"] = group_report(A.parent);
  j["normal"] = to_json(standard_generators(A.N));
  j["span"] = to_json(A.V.vectors());
  j["complete"] = A.complete;
  j["kernel"] = to_json(standard_generators(A.K));
  j["dual"] = A.dual_exists;
  Json s{{"finite", A.structure.finite}, {"order", A.structure.order}};
  s["kind"] = A.structure.finite ? kind_name(A.structure.kind) : "infinite";
  s["label"] = A.structure.label();
  j["structure"] = s;
  j["fibration"] = nullptr;
  if (A.dual_exists && A.k() <= 2 && A.m() <= 2) {
    FibrationReport R = fibration_report(A);
    Json f{{"fiber", R.fiber.name()}, {"base", R.base.name()}, {"quotient_fiber", R.quotient_fiber.name()},
           {"quotient_base", R.quotient_base.name()}};
    Json acts = Json::array();
    for (auto& a : R.actions)
      acts.push_back(Json{{"element", to_json(A.structure.reps[a.index])}, {"order", a.order}, {"fiber", to_json(a.fiber)}, {"base", to_json(a.base)}});
    f["actions"] = acts;
    f["generators"] = R.generators;
    j["fibration"] = f;
  }
  Json sp{{"orthogonal", nullptr}, {"obstruction", nullptr}, {"line_criterion", nullptr}, {"center_split", nullptr}, {"witness", nullptr}};
  SplitVerdict v = split_verdict(A);
  if (v.splits_orthogonally) sp["orthogonal"] = *v.splits_orthogonally;
  if (v.witness) sp["witness"] = Json{{"v0", to_json(v.witness->v0)}, {"sigma", to_json(v.witness->sigma)}};
  if (v.obstruction) sp["obstruction"] = to_json(*v.obstruction);
  if (v.line_criterion) sp["line_criterion"] = *v.line_criterion;
  if (v.center_split) sp["center_split"] = *v.center_split;
  j["splitting"] = sp;
  j["classifying"] = nullptr;
  if (A.parent.n == 3 && A.k() == 2 && A.complete) {
    ClassifyingPair cp = classifying_pair(A);
    Json inv{{"fiber", cp.fiber.name()}, {"pair", to_json(cp.pair)}};
    inv["label"] = cp.label ? Json(*cp.label) : Json(nullptr);
    j["classifying"] = Json{{"kind", delta_kind_name(cp.kind)}, {"invariants", inv}, {"e_dim", cp.e_dim()}, {"descriptor", descriptor(cp)}};
  }
  return j;
}

// Indented text rendering of a report.
inline void render_text(std::ostream& os, const Json& j, int indent = 0) {
  std::string pad(indent, ' ');
  auto scalar = [](const Json& x) {
    if (x.is_string()) return x.get<std::string>();
    return x.dump();
  };
  auto flat = [&](const Json& x) {
    if (!x.is_array()) return false;
    for (auto& e : x)
      if (e.is_object() || (e.is_array() && !e.empty() && e[0].is_object())) return false;
    return true;
  };
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (v.is_object()) {
      os << pad << it.key() << ":\n";
      render_text(os, v, indent + 2);
    } else if (v.is_array() && !flat(v)) {
      os << pad << it.key() << ":\n";
      for (auto& e : v) {
        if (e.is_object()) {
          os << pad << "  -\n";
          render_text(os, e, indent + 4);
        } else {
          os << pad << "  - " << e.dump() << "\n";
        }
      }
    } else {
      os << pad << it.key() << ": " << (v.is_array() ? v.dump() : scalar(v)) << "\n";
    }
  }
}

}  // namespace flatfiber
