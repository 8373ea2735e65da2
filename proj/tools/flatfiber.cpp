// flatfiber command line: analyze, fiber, verify-tables, conjclass.
// Exit codes: 0 ok, 1 verification failure, 2 I/O, parse or usage error,
// 3 precondition violation.
#include <CLI11.hpp>
#include <iostream>

#include "flatfiber/report.hpp"
#include "flatfiber/tables.hpp"

using namespace flatfiber;

namespace {

enum Exit { kOk = 0, kFail = 1, kIo = 2, kPre = 3 };

void emit(const Json& j, bool json) {
  if (json)
    std::cout << j.dump(2) << "\n";
  else
    render_text(std::cout, j);
}

std::vector<std::string> split_list(const std::vector<std::string>& xs) {
  std::vector<std::string> out;
  for (auto& x : xs) {
    std::stringstream ss(x);
    std::string part;
    while (std::getline(ss, part, ',')) {
      part = detail::trim(part);
      if (!part.empty()) out.push_back(part);
    }
  }
  return out;
}

Mat parse_matrix(const std::string& text) {
  std::vector<std::vector<Rat>> rows;
  std::stringstream rs(text);
  std::string row;
  int line = 1;
  while (std::getline(rs, row, ';')) {
    std::vector<Rat> r;
    std::stringstream cs(row);
    std::string cell;
    while (std::getline(cs, cell, ',')) r.push_back(detail::parse_rat(detail::trim(cell), line, int(r.size()) + 1));
    rows.push_back(r);
    ++line;
  }
  if (rows.empty()) throw ParseError("empty matrix", 1, 1);
  for (auto& r : rows)
    if (r.size() != rows.size()) throw ParseError("matrix must be square", 1, 1);
  return Mat::from_rows(rows);
}

int cmd_analyze(const std::string& group, bool json) {
  GroupSpec s = load_group(group);
  SpaceGroup G = build(s.dim, s.generators());
  Json j = group_report(G);
  j["name"] = s.name;
  emit(j, json);
  return kOk;
}

int cmd_fiber(const std::string& group, const std::vector<std::string>& normal, bool json) {
  GroupSpec s = load_group(group);
  SpaceGroup G = build(s.dim, s.generators());
  std::vector<std::string> words = split_list(normal);
  if (words.empty()) throw PreconditionError("no normal subgroup given");
  if (!(words.size() == 1 && words[0] == "builtin")) {
    s.normal_words = words;
    s.normal_elements.clear();
  } else if (!s.has_normal()) {
    throw PreconditionError("group '" + s.name + "' has no recorded normal subgroup");
  }
  NormalAnalysis A = analyze_normal(G, normal_generators(s));
  Json j = fiber_report(A);
  j["name"] = s.name;
  emit(j, json);
  return kOk;
}

int cmd_verify(const std::string& which, bool json) {
  std::vector<int> tables;
  if (which == "all") {
    for (int t = 1; t <= 18; ++t) tables.push_back(t);
  } else {
    tables.push_back(std::stoi(which));
  }
  int pass = 0, fail = 0, skip = 0;
  Json rows = Json::array();
  for (int t : tables)
    for (auto& r : verify_table(t)) {
      if (r.status == "pass") ++pass;
      else if (r.status == "fail") ++fail;
      else ++skip;
      if (json) {
        rows.push_back(Json{{"key", r.key}, {"status", r.status}, {"source", r.source}, {"mismatches", r.mismatches}});
      } else {
        std::cout << r.key << "  " << r.status;
        if (!r.source.empty()) std::cout << "  [" << r.source << "]";
        for (auto& m : r.mismatches) std::cout << "\n    " << m;
        std::cout << "\n";
      }
    }
  if (json)
    std::cout << Json{{"rows", rows}, {"summary", {{"pass", pass}, {"fail", fail}, {"skipped", skip}}}}.dump(2) << "\n";
  else
    std::cout << "pass " << pass << "  fail " << fail << "  skipped " << skip << "\n";
  return fail ? kFail : kOk;
}

int cmd_conjclass(const std::string& text, bool json) {
  Mat K = parse_matrix(text);
  ConjClass c = gl2z_finite_order_class(K);
  if (json)
    std::cout << Json{{"class", class_name(c)}, {"order", class_order(c)}, {"det", class_det(c)}}.dump(2) << "\n";
  else
    std::cout << class_name(c) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seifert and co-Seifert fibrations of flat orbifolds"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  std::string group, table = "all", matrix;
  std::vector<std::string> normal;

  auto* analyze = app.add_subcommand("analyze", "point group, lattice, center and Betti number of a group");
  analyze->add_option("group", group, "builtin name or group file")->required();
  analyze->add_flag("--json", json);

  auto* fiber = app.add_subcommand("fiber", "full analysis of a normal subgroup");
  fiber->add_option("group", group, "builtin name or group file")->required();
  fiber->add_option("--normal", normal, "generator words (comma separated) or 'builtin'")->required();
  fiber->add_flag("--json", json);

  auto* verify = app.add_subcommand("verify-tables", "check the table fixtures");
  verify->add_option("--table", table, "table number 1-18 or 'all'")->check([](const std::string& s) -> std::string {
    if (s == "all") return {};
    try {
      std::size_t pos = 0;
      int t = std::stoi(s, &pos);
      if (pos == s.size() && t >= 1 && t <= 18) return {};
    } catch (const std::exception&) {
    }
    return "table must be 1-18 or 'all'";
  });
  verify->add_flag("--json", json);

  auto* conj = app.add_subcommand("conjclass", "GL(2,Z) conjugacy class of a finite-order matrix");
  conj->add_option("matrix", matrix, "rows separated by ';', entries by ','")->required();
  conj->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kIo;
  }

  try {
    if (*analyze) return cmd_analyze(group, json);
    if (*fiber) return cmd_fiber(group, normal, json);
    if (*verify) return cmd_verify(table, json);
    if (*conj) return cmd_conjclass(matrix, json);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kIo;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kIo;
  } catch (const ClassError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPre;
  } catch (const GroupError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPre;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPre;
  }
  return kOk;
}
