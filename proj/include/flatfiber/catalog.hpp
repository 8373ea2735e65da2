// Built-in presentations and the plain-text group file format.
#pragma once

#include <cctype>
#include <fstream>
#include <sstream>

#include "flatfiber/spacegroup.hpp"

namespace flatfiber {

struct NamedGen {
  std::string name;
  AffineIso g;
};

struct GroupSpec {
  std::string name;
  int dim = 0;
  std::vector<NamedGen> gens;
  std::vector<std::string> normal_words;   // each word gives one generator of N
  std::vector<AffineIso> normal_elements;  // explicit generators of N
  std::string note;

  bool has_normal() const { return !normal_words.empty() || !normal_elements.empty(); }
  std::vector<AffineIso> generators() const {
    std::vector<AffineIso> out;
    for (auto& g : gens) out.push_back(g.g);
    return out;
  }
};

struct ParseError : std::runtime_error {
  int line, column;
  ParseError(const std::string& msg, int l, int c)
      : std::runtime_error("line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + msg), line(l), column(c) {}
};

// "g1 g2^-1 g3^2" over generator names
inline AffineIso eval_word(const GroupSpec& s, const std::string& word) {
  AffineIso r = AffineIso::identity(s.dim);
  std::istringstream in(word);
  std::string tok;
  while (in >> tok) {
    std::string nm = tok;
    long e = 1;
    auto p = tok.find('^');
    if (p != std::string::npos) {
      nm = tok.substr(0, p);
      try {
        std::size_t used = 0;
        e = std::stol(tok.substr(p + 1), &used);
        if (used != tok.size() - p - 1) throw std::invalid_argument("exponent");
      } catch (const std::exception&) {
        throw std::invalid_argument("bad exponent in word token '" + tok + "'");
      }
    }
    const AffineIso* g = nullptr;
    for (auto& ng : s.gens)
      if (ng.name == nm) g = &ng.g;
    if (!g) throw std::invalid_argument("unknown generator '" + nm + "'");
    r = r * power(*g, e);
  }
  return r;
}

inline std::vector<AffineIso> normal_generators(const GroupSpec& s) {
  std::vector<AffineIso> out = s.normal_elements;
  for (auto& w : s.normal_words) out.push_back(eval_word(s, w));
  return out;
}

namespace build_helpers {
inline Mat m2(int a, int b, int c, int d) { return Mat::from_rows({{a, b}, {c, d}}); }
inline Mat m3(std::vector<std::vector<Rat>> r) { return Mat::from_rows(r); }
inline NamedGen gen(std::string n, Vec t, Mat A) { return {std::move(n), AffineIso(std::move(t), std::move(A))}; }
inline std::vector<NamedGen> translations(int d) {
  std::vector<NamedGen> out;
  for (int i = 0; i < d; ++i) {
    Vec e = zero_vec(d);
    e[i] = 1;
    out.push_back({"t" + std::to_string(i + 1), AffineIso::translation(e)});
  }
  return out;
}
inline GroupSpec spec(std::string name, int d, std::vector<NamedGen> extra, std::vector<std::string> normal, std::string note) {
  GroupSpec s;
  s.name = std::move(name);
  s.dim = d;
  s.gens = translations(d);
  for (auto& g : extra) s.gens.push_back(std::move(g));
  s.normal_words = std::move(normal);
  s.note = std::move(note);
  return s;
}
}  // namespace build_helpers

inline const std::vector<GroupSpec>& builtin_specs() {
  using namespace build_helpers;
  static const std::vector<GroupSpec> all = [] {
    const Rat h(1, 2);
    std::vector<GroupSpec> v;
    Mat R3 = m2(0, -1, 1, -1), R6 = m2(1, -1, 1, 0), A = m2(0, -1, 1, 0), C = m2(0, 1, 1, 0);
    Mat H = m2(1, 0, 0, -1), Hp = m2(-1, 0, 0, 1), mI = m2(-1, 0, 0, -1);
    // normal subgroups below are the 1-dimensional ones of the Seifert table
    v.push_back(spec("p1", 2, {}, {"t1"}, "∘"));
    v.push_back(spec("p2", 2, {gen("r", {0, 0}, mI)}, {"t1"}, "2222"));
    v.push_back(spec("pm", 2, {gen("m", {0, 0}, H)}, {"t1"}, "∗∗"));
    v.push_back(spec("pg", 2, {gen("g", {h, 0}, H)}, {"t1"}, "××"));
    v.push_back(spec("cm", 2, {gen("m", {0, 0}, C)}, {"t1 t2"}, "∗×"));
    v.push_back(spec("pmm", 2, {gen("m1", {0, 0}, H), gen("m2", {0, 0}, Hp)}, {"t1", "m2"}, "∗2222"));
    v.push_back(spec("pmg", 2, {gen("r", {0, 0}, mI), gen("g", {h, 0}, H)}, {"t2"}, "22∗"));
    v.push_back(spec("pgg", 2, {gen("r", {0, 0}, mI), gen("g", {h, h}, H)}, {"t1"}, "22×"));
    v.push_back(spec("cmm", 2, {gen("r", {0, 0}, mI), gen("m", {0, 0}, C)}, {"t1 t2", "r m"}, "2∗22"));
    v.push_back(spec("p4", 2, {gen("a", {0, 0}, A)}, {}, "442"));
    v.push_back(spec("p4m", 2, {gen("a", {0, 0}, A), gen("m", {0, 0}, H)}, {}, "∗442"));
    v.push_back(spec("p4g", 2, {gen("a", {0, 0}, A), gen("g", {h, h}, H)}, {}, "4∗2"));
    v.push_back(spec("p3", 2, {gen("a", {0, 0}, R3)}, {}, "333"));
    v.push_back(spec("p3m1", 2, {gen("a", {0, 0}, R3), gen("m", {0, 0}, -C)}, {}, "∗333"));
    v.push_back(spec("p31m", 2, {gen("a", {0, 0}, R3), gen("m", {0, 0}, C)}, {}, "3∗3"));
    v.push_back(spec("p6", 2, {gen("a", {0, 0}, R6)}, {}, "632"));
    v.push_back(spec("p6m", 2, {gen("a", {0, 0}, R6), gen("m", {0, 0}, C)}, {}, "∗632"));

    Mat A3 = m3({{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}});
    Mat Bs = m3({{0, -1, 0}, {-1, 0, 0}, {0, 0, -1}});
    Mat C3 = m3({{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}});
    v.push_back(spec("it5", 3, {gen("A", {0, 0, 0}, Bs)}, {"t1 t2"}, "IT 5"));
    v.push_back(spec("it7", 3, {gen("alpha", {0, 0, h}, m3({{1, 0, 0}, {0, -1, 0}, {0, 0, 1}}))}, {"t3"}, "IT 7"));
    v.push_back(spec("it113", 3,
                     {gen("alpha", {h, h, 0}, A3), gen("beta", {h, 0, 0}, m3({{0, 1, 0}, {-1, 0, 0}, {0, 0, -1}})),
                      gen("gamma", {0, h, 0}, m3({{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}}))},
                     {"t1", "t2", "alpha", "beta gamma"}, "IT 113"));
    Mat B4 = m3({{0, -1, 0}, {1, 0, 0}, {0, 0, 1}});
    Mat Cy = m3({{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}});
    v.push_back(spec("it126", 3, {gen("beta", {h, 0, 0}, B4), gen("gamma", {h, 0, h}, Cy), gen("D", {0, 0, 0}, C3)},
                     {"t1", "t2", "beta"}, "IT 126"));
    v.push_back(spec("it134", 3, {gen("beta", {h, 0, h}, B4), gen("gamma", {h, 0, h}, Cy), gen("D", {0, 0, 0}, C3)},
                     {"t1", "t2", "t3^-1 beta^2", "t3^-1 beta gamma D"}, "IT 134"));
    v.push_back(spec("it163", 3,
                     {gen("A", {0, 0, 0}, m3({{0, -1, 0}, {1, -1, 0}, {0, 0, 1}})), gen("beta", {0, 0, h}, Bs), gen("C", {0, 0, 0}, C3)},
                     {"t1", "t2", "A"}, "IT 163"));
    v.push_back(spec("it63", 3, {gen("alpha", {0, 0, h}, A3), gen("B", {0, 0, 0}, Bs), gen("C", {0, 0, 0}, C3)},
                     {"t1 t2^-1", "t3", "alpha C", "B C"}, "IT 63"));
    v.push_back(spec("it64a", 3, {gen("alpha", {h, h, h}, A3), gen("B", {0, 0, 0}, Bs), gen("C", {0, 0, 0}, C3)},
                     {"t1 t2^-1", "t3", "t2^-1 alpha C", "B C"}, "IT 64"));
    v.push_back(spec("it64b", 3, {gen("alpha", {h, h, h}, A3), gen("B", {0, 0, 0}, Bs), gen("C", {0, 0, 0}, C3)},
                     {"t1", "t2", "B C"}, "IT 64"));
    v.push_back(spec("it68", 3, {gen("alpha", {h, h, 0}, A3), gen("beta", {0, 0, h}, Bs), gen("C", {0, 0, 0}, C3)},
                     {"t1 t2", "t3", "beta", "alpha C"}, "IT 68"));
    return v;
  }();
  return all;
}

inline std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (auto& s : builtin_specs()) out.push_back(s.name);
  return out;
}

inline std::optional<GroupSpec> find_builtin(const std::string& name) {
  for (auto& s : builtin_specs())
    if (s.name == name) return s;
  return std::nullopt;
}

inline GroupSpec builtin_spec(const std::string& name) {
  auto s = find_builtin(name);
  if (!s) throw std::invalid_argument("unknown builtin group '" + name + "'");
  return *s;
}

inline SpaceGroup builtin(const std::string& name) {
  auto s = builtin_spec(name);
  return build(s.dim, s.generators());
}

// ---- group files ----

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

inline Rat parse_rat(const std::string& tok, int line, int col) {
  static const std::string ok = "0123456789-+/";
  if (tok.empty()) throw ParseError("empty number", line, col);
  for (char ch : tok)
    if (ok.find(ch) == std::string::npos) throw ParseError("malformed rational '" + tok + "'", line, col);
  auto slash = tok.find('/');
  try {
    Int num(tok.substr(0, slash));
    Int den(1);
    if (slash != std::string::npos) {
      std::string d = tok.substr(slash + 1);
      if (d.empty() || d.find_first_not_of("0123456789") != std::string::npos) throw std::invalid_argument("den");
      den = Int(d);
      if (den == 0) throw ParseError("zero denominator in '" + tok + "'", line, col);
    }
    return make_rat(num, den);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("malformed rational '" + tok + "'", line, col);
  }
}

struct Line {
  int no;
  std::string raw;  // comment stripped, untrimmed
  std::string text;
  int col0;  // 1-based column of first non-blank character
};

inline std::vector<std::pair<Rat, int>> numbers(const Line& L, std::size_t from = 0) {
  std::vector<std::pair<Rat, int>> out;
  std::size_t i = from;
  while (i < L.raw.size()) {
    while (i < L.raw.size() && std::isspace((unsigned char)L.raw[i])) ++i;
    if (i >= L.raw.size()) break;
    std::size_t j = i;
    while (j < L.raw.size() && !std::isspace((unsigned char)L.raw[j])) ++j;
    out.push_back({parse_rat(L.raw.substr(i, j - i), L.no, int(i) + 1), int(i) + 1});
    i = j;
  }
  return out;
}

}  // namespace detail

inline GroupSpec parse_group_file(const std::string& text) {
  using namespace detail;
  std::vector<Line> lines;
  {
    std::istringstream in(text);
    std::string s;
    int no = 0;
    while (std::getline(in, s)) {
      ++no;
      auto h = s.find('#');
      if (h != std::string::npos) s = s.substr(0, h);
      std::string t = trim(s);
      if (t.empty()) continue;
      int col = int(s.find_first_not_of(" \t")) + 1;
      lines.push_back({no, s, t, col});
    }
  }
  GroupSpec spec;
  std::size_t i = 0;
  auto read_element = [&](const Line& head) -> AffineIso {
    int n = spec.dim;
    if (n <= 0) throw ParseError("'dim = n' must precede elements", head.no, head.col0);
    Mat A(n, n);
    for (int r = 0; r < n; ++r) {
      if (i >= lines.size()) throw ParseError("unexpected end of file in matrix", head.no, head.col0);
      const Line& L = lines[i++];
      auto nums = numbers(L);
      if (int(nums.size()) != n)
        throw ParseError("expected " + std::to_string(n) + " entries, found " + std::to_string(nums.size()), L.no, L.col0);
      for (int c = 0; c < n; ++c) A(r, c) = nums[c].first;
    }
    if (i >= lines.size()) throw ParseError("missing 't:' line", head.no, head.col0);
    const Line& T = lines[i++];
    if (T.text.rfind("t:", 0) != 0) throw ParseError("expected 't:' line", T.no, T.col0);
    auto nums = numbers(T, T.raw.find("t:") + 2);
    if (int(nums.size()) != n) throw ParseError("translation has wrong length", T.no, T.col0);
    Vec t(n);
    for (int c = 0; c < n; ++c) t[c] = nums[c].first;
    if (!try_inverse(A)) throw ParseError("linear part not invertible", head.no, head.col0);
    return AffineIso(t, A);
  };
  bool in_normal = false;
  while (i < lines.size()) {
    const Line& L = lines[i++];
    const std::string& t = L.text;
    if (t.rfind("dim", 0) == 0 || t.rfind("name", 0) == 0) {
      auto eq = t.find('=');
      if (eq == std::string::npos) throw ParseError("expected '='", L.no, L.col0);
      std::string key = trim(t.substr(0, eq)), val = trim(t.substr(eq + 1));
      if (key == "name") {
        spec.name = val;
      } else if (key == "dim") {
        if (val.empty() || val.find_first_not_of("0123456789") != std::string::npos)
          throw ParseError("bad dimension '" + val + "'", L.no, L.col0 + int(eq) + 1);
        spec.dim = std::stoi(val);
        if (spec.dim < 1 || spec.dim > 6) throw ParseError("dimension out of range", L.no, L.col0);
      } else {
        throw ParseError("unknown key '" + key + "'", L.no, L.col0);
      }
    } else if (t.rfind("gen:", 0) == 0 || t == "gen") {
      if (in_normal) throw ParseError("'gen:' after 'normal:'", L.no, L.col0);
      std::string nm = trim(t.substr(std::min<std::size_t>(4, t.size())));
      if (nm.empty()) nm = "g" + std::to_string(spec.gens.size() + 1);
      spec.gens.push_back({nm, read_element(L)});
    } else if (t == "normal:" || t == "normal") {
      in_normal = true;
    } else if (t.rfind("word:", 0) == 0) {
      if (!in_normal) throw ParseError("'word:' outside 'normal:' block", L.no, L.col0);
      spec.normal_words.push_back(trim(t.substr(5)));
    } else if (t.rfind("elem:", 0) == 0 || t == "elem") {
      if (!in_normal) throw ParseError("'elem:' outside 'normal:' block", L.no, L.col0);
      spec.normal_elements.push_back(read_element(L));
    } else {
      throw ParseError("unrecognized line '" + t + "'", L.no, L.col0);
    }
  }
  if (spec.dim <= 0) throw ParseError("missing 'dim = n'", 1, 1);
  if (spec.gens.empty()) throw ParseError("no generators", 1, 1);
  for (auto& w : spec.normal_words) {
    try {
      eval_word(spec, w);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), 0, 0);
    }
  }
  return spec;
}

inline std::string serialize_group_file(const GroupSpec& s) {
  std::ostringstream out;
  if (!s.name.empty()) out << "name = " << s.name << "\n";
  out << "dim = " << s.dim << "\n";
  auto elem = [&](const AffineIso& g) {
    for (int r = 0; r < s.dim; ++r) {
      for (int c = 0; c < s.dim; ++c) out << (c ? " " : "") << g.A(r, c).get_str();
      out << "\n";
    }
    out << "t:";
    for (auto& x : g.t) out << " " << x.get_str();
    out << "\n";
  };
  for (auto& g : s.gens) {
    out << "gen: " << g.name << "\n";
    elem(g.g);
  }
  if (s.has_normal()) {
    out << "normal:\n";
    for (auto& w : s.normal_words) out << "word: " << w << "\n";
    for (auto& e : s.normal_elements) {
      out << "elem:\n";
      elem(e);
    }
  }
  return out.str();
}

inline GroupSpec load_group(const std::string& name_or_path) {
  if (auto s = find_builtin(name_or_path)) return *s;
  std::ifstream in(name_or_path);
  if (!in) throw std::ios_base::failure("cannot open '" + name_or_path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  GroupSpec s = parse_group_file(ss.str());
  if (s.name.empty()) s.name = name_or_path;
  return s;
}

}  // namespace flatfiber
