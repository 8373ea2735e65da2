// Table fixtures and the row verifier.
#pragma once

#include "flatfiber/catalog.hpp"
#include "flatfiber/classify.hpp"
#include "flatfiber/table_data.hpp"

namespace flatfiber {

struct TableFixture {
  int table = 0, row = 0, it = 0;
  std::string fiber, base, group, quotient_fiber, quotient_base;
  std::vector<std::pair<std::string, std::string>> actions;  // generator actions (fiber, base)
  std::string pair;                                          // classifying pair, tables 2-18
  std::optional<bool> split, dual_split;                     // table 1
  std::string key() const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "T%02d/%03d/%02d", table, it, row);
    return buf;
  }
};

namespace detail {

inline std::vector<std::pair<std::string, std::string>> parse_actions(const std::string& s) {
  std::vector<std::pair<std::string, std::string>> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) {
    auto c = item.find(',');
    out.push_back({item.substr(0, c), item.substr(c + 1)});
  }
  return out;
}

inline std::vector<TableFixture> table1() {
  struct R {
    int it;
    const char *f, *qb, *b, *qf;
    bool s, ds;
    const char *g, *acts;
  };
  static const R rows[] = {
      {1, "O", "O", "O", "O", true, true, "C1", "idt.,idt."},
      {2, "O", "I", "O", "I", true, true, "C2", "ref.,ref."},
      {3, "O", "I", "I", "O", true, true, "C1", "idt.,idt."},
      {4, "O", "I", "O", "O", false, true, "C2", "2-rot.,ref."},
      {5, "O", "I", "I", "O", false, true, "C2", "2-rot,ref."},
      {6, "I", "I", "I", "I", true, true, "C1", "idt.,idt."},
      {7, "O", "I", "I", "I", true, true, "C2", "ref.,ref."},
      {8, "O", "I", "O", "I", false, false, "D2", "ref.,ref.;ref.′,2-rot."},
      {9, "I", "I", "I", "I", true, true, "C2", "ref.,ref."},
  };
  std::vector<TableFixture> out;
  for (auto& r : rows) {
    TableFixture t;
    t.table = 1;
    t.row = r.it;
    t.it = r.it;
    t.fiber = r.f;
    t.base = r.b;
    t.quotient_fiber = r.qf;
    t.quotient_base = r.qb;
    t.group = r.g;
    t.actions = parse_actions(r.acts);
    t.split = r.s;
    t.dual_split = r.ds;
    out.push_back(t);
  }
  return out;
}

}  // namespace detail

inline std::vector<TableFixture> fixtures(int table) {
  if (table < 1 || table > 18) throw std::invalid_argument("unknown table " + std::to_string(table));
  if (table == 1) return detail::table1();
  std::vector<TableFixture> out;
  for (auto& r : table_data::rows) {
    if (r.table != table) continue;
    TableFixture t;
    t.table = r.table;
    t.row = r.row;
    t.it = r.it;
    t.fiber = r.fiber;
    t.base = r.fiber_line;
    t.group = r.group;
    t.quotient_fiber = r.quotient;
    t.quotient_base = r.quotient_line;
    t.actions = detail::parse_actions(r.actions);
    t.pair = r.pair;
    out.push_back(t);
  }
  return out;
}

// Fiber wallpaper number for tables 2-18.
inline int table_fiber_it(int table) { return 19 - table; }

// ---- action labels as invariants ----

// Coarse invariant (see MapInvariant::coarse) of a printed action label.
// dim is the dimension of the space acted on; circle tells whether a 1D
// quotient is a circle.
inline std::string label_invariant(std::string label, int dim, bool circle) {
  label = detail::strip_label(label);
  for (;;) {
    if (label.size() >= 3 && (label.substr(label.size() - 3) == "′" || label.substr(label.size() - 3) == "″"))
      label.resize(label.size() - 3);
    else if (!label.empty() && (label.back() == '\'' || label.back() == '.'))
      label.pop_back();
    else if (label.size() > 3 && label.substr(label.size() - 3) == "^-1")
      label.resize(label.size() - 3);
    else
      break;
  }
  if (label == "idt") return "idt";
  auto ends = [&](const std::string& s) { return label.size() >= s.size() && label.substr(label.size() - s.size()) == s; };
  int k = std::isdigit(static_cast<unsigned char>(label[0])) ? label[0] - '0' : 0;
  if (dim == 1) {
    if (label == "ref") return "fix0";
    if (ends("-rot") && k > 0) return circle ? "rot" + std::to_string(k) : "fix0";
    throw std::invalid_argument("unknown 1D action label " + label);
  }
  if (label == "ref" || ends("-ref")) return "fix1";
  if (ends("-grf") || ends("-sym")) return "free";
  if (label == "h-rot" || label == "v-rot") return "free";
  if (ends("-rot")) return "fix0";
  if (label == "3-aff" || label == "6-aff") return "fix0";
  if (ends("-aff")) return "fix1";
  throw std::invalid_argument("unknown action label " + label);
}

// Search generators of the structure group whose coarse actions match the
// printed ones.
inline std::optional<std::vector<int>> match_actions(const NormalAnalysis& A, const FibrationReport& R,
                                                     const std::vector<std::pair<std::string, std::string>>& expected) {
  const auto& S = A.structure;
  int r = int(expected.size());
  bool fcircle = R.fiber.dim == 1 && R.fiber.one == 'O';
  bool bcircle = R.base.dim == 1 && R.base.one == 'O';
  std::vector<std::pair<std::string, std::string>> want;
  for (auto& [f, b] : expected) want.push_back({label_invariant(f, R.fiber.dim, fcircle), label_invariant(b, R.base.dim, bcircle)});
  std::vector<int> idx(r, 0);
  for (;;) {
    bool ok = true;
    for (int i = 0; i < r && ok; ++i) {
      auto& a = R.actions[idx[i]];
      ok = fits_coarse(a.fiber, want[i].first) && fits_coarse(a.base, want[i].second);
    }
    if (ok && int(S.generated(idx).size()) == S.order) return idx;
    int p = 0;
    while (p < r && ++idx[p] == S.order) idx[p++] = 0;
    if (p == r) return std::nullopt;
  }
}

// ---- rows ----

struct RowResult {
  std::string key;
  std::string status;  // pass, fail, skipped
  std::string source;  // builtin name, "pair", or empty
  std::vector<std::string> mismatches;
};

// builtin presentations standing for a table row
inline const std::map<std::string, std::pair<int, int>>& builtin_rows() {
  static const std::map<std::string, std::pair<int, int>> m{
      {"p1", {1, 1}},     {"p2", {1, 2}},     {"pm", {1, 3}},      {"pg", {1, 4}},      {"cm", {1, 5}},
      {"pmm", {1, 6}},    {"pmg", {1, 7}},    {"pgg", {1, 8}},     {"cmm", {1, 9}},
      {"it163", {6, 11}}, {"it126", {9, 12}}, {"it113", {10, 9}},  {"it134", {10, 12}}, {"it68", {11, 8}},
      {"it64a", {12, 10}}, {"it63", {13, 7}}, {"it64b", {14, 8}},  {"it5", {18, 7}},    {"it7", {18, 10}},
  };
  return m;
}

namespace detail {

inline void compare(RowResult& res, const std::string& what, const std::string& got, const std::string& want) {
  if (got != want) res.mismatches.push_back(what + ": got " + got + ", expected " + want);
}

inline void compare_analysis(RowResult& res, const TableFixture& fx, const NormalAnalysis& A0) {
  // tables 2-18 list co-Seifert fibrations; a 1D normal subgroup is read through its dual
  NormalAnalysis A = A0;
  if (fx.table > 1 && A0.k() == 1 && A0.parent.n == 3) {
    if (!A0.dual_exists) {
      res.mismatches.push_back("orthogonal dual missing");
      return;
    }
    A = analyze_normal(A0.parent, standard_generators(A0.K));
  }
  if (!A.dual_exists) {
    res.mismatches.push_back("orthogonal dual missing");
    return;
  }
  FibrationReport R = fibration_report(A);
  compare(res, "fiber", R.fiber.name(), fx.fiber);
  compare(res, "base", R.base.name(), fx.base);
  compare(res, "group", A.structure.label(), fx.group);
  compare(res, "quotient fiber", R.quotient_fiber.name(), fx.quotient_fiber);
  compare(res, "quotient base", R.quotient_base.name(), fx.quotient_base);
  if (!match_actions(A, R, fx.actions)) res.mismatches.push_back("no generators with the printed actions");
  if (fx.split) {
    auto yn = [](std::optional<bool> b) { return b ? (*b ? "Yes" : "No") : "undecided"; };
    compare(res, "split", yn(split_verdict(A).splits_orthogonally), yn(fx.split));
    auto D = analyze_normal(A.parent, standard_generators(A.K));
    compare(res, "dual split", yn(split_verdict(D).splits_orthogonally), yn(fx.dual_split));
  }
}

}  // namespace detail

// The affinities of a classifying pair as fed to the extension builder.
inline std::vector<AffineIso> pair_affinities(FiberKind f, DeltaKind d, const std::string& pair) {
  auto p = pair_from_label(f, pair);
  if (d == DeltaKind::Cyclic) return {p.first};
  return {p.first, p.second};
}

inline Extension extension_for_row(const TableFixture& fx) {
  if (fx.table != 17 && fx.table != 18) throw PreconditionError("only torus and pillow fibers are constructed");
  FiberKind f = fx.table == 18 ? FiberKind::Torus : FiberKind::Pillow;
  DeltaKind d = fx.quotient_base == "O" ? DeltaKind::Cyclic : DeltaKind::Dihedral;
  return build_extension(fiber_model(f), d, pair_affinities(f, d, fx.pair));
}

inline RowResult verify_row(const TableFixture& fx) {
  RowResult res;
  res.key = fx.key();
  std::string name;
  for (auto& [b, tr] : builtin_rows())
    if (tr.first == fx.table && tr.second == fx.row) name = b;
  try {
    if (!name.empty()) {
      res.source = name;
      GroupSpec s = builtin_spec(name);
      SpaceGroup G = build(s.dim, s.generators());
      detail::compare_analysis(res, fx, analyze_normal(G, normal_generators(s)));
    } else if (fx.table == 17 || fx.table == 18) {
      res.source = "pair";
      Extension E = extension_for_row(fx);
      NormalAnalysis A = analyze_normal(E.group, E.normal);
      detail::compare_analysis(res, fx, A);
      ClassifyingPair cp = classifying_pair(A);
      FiberKind f = fx.table == 18 ? FiberKind::Torus : FiberKind::Pillow;
      auto want = pair_class_label(f, cp.kind, pair_from_label(f, fx.pair));
      detail::compare(res, "classifying pair", cp.label.value_or("none"), want.value_or("none"));
    } else {
      res.status = "skipped: presentation unavailable";
      return res;
    }
  } catch (const std::exception& e) {
    res.mismatches.push_back(std::string("error: ") + e.what());
  }
  res.status = res.mismatches.empty() ? "pass" : "fail";
  return res;
}

inline std::vector<RowResult> verify_table(int table) {
  auto fx = fixtures(table);
  std::vector<RowResult> out(fx.size());
  for (std::size_t i = 0; i < fx.size(); ++i) out[i] = verify_row(fx[i]);
  std::sort(out.begin(), out.end(), [](const RowResult& a, const RowResult& b) { return a.key < b.key; });
  return out;
}

}  // namespace flatfiber
