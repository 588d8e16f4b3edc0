#include "colocal/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace colocal {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c); });
}

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

// Accumulates raw parts and produces the normalized algebra.  Validation
// methods return an error message or the empty string so that both the file
// parser (ParseError with position) and the symbolic constructor
// (DomainError) can reuse them.
struct Builder {
  std::vector<std::string> vertices;
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  std::vector<std::vector<std::string>> relations;

  std::string add_vertex(const std::string& id) {
    if (!valid_identifier(id))
      return "invalid vertex identifier '" + id + "'";
    if (std::find(vertices.begin(), vertices.end(), id) != vertices.end())
      return "duplicate vertex '" + id + "'";
    vertices.push_back(id);
    return {};
  }

  std::string add_arrow(const std::string& name, const std::string& src,
                        const std::string& dst) {
    if (!valid_identifier(name))
      return "invalid arrow name '" + name + "'";
    for (const auto& [n, s, d] : arrows)
      if (n == name) return "duplicate arrow name '" + name + "'";
    if (std::find(vertices.begin(), vertices.end(), src) == vertices.end())
      return "unknown vertex '" + src + "'";
    if (std::find(vertices.begin(), vertices.end(), dst) == vertices.end())
      return "unknown vertex '" + dst + "'";
    arrows.emplace_back(name, src, dst);
    return {};
  }

  const std::tuple<std::string, std::string, std::string>* find_arrow(
      const std::string& name) const {
    for (const auto& a : arrows)
      if (std::get<0>(a) == name) return &a;
    return nullptr;
  }

  std::string add_relation(const std::vector<std::string>& names) {
    if (names.size() < 2) return "relation needs at least two arrows";
    for (std::size_t i = 0; i < names.size(); ++i) {
      const auto* a = find_arrow(names[i]);
      if (!a) return "unknown arrow '" + names[i] + "'";
      if (i > 0) {
        const auto* prev = find_arrow(names[i - 1]);
        if (std::get<2>(*prev) != std::get<1>(*a))
          return "relation is not composable: arrow '" + names[i - 1] +
                 "' ends at '" + std::get<2>(*prev) + "' but arrow '" +
                 names[i] + "' starts at '" + std::get<1>(*a) + "'";
      }
    }
    if (std::find(relations.begin(), relations.end(), names) != relations.end())
      return "duplicate relation";
    relations.push_back(names);
    return {};
  }

  QuiverAlgebra finish() const {
    QuiverAlgebra qa;
    qa.vertices = vertices;
    std::sort(qa.vertices.begin(), qa.vertices.end(), vertex_id_less);

    std::vector<std::tuple<std::string, std::string, std::string>> sorted = arrows;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& [name, src, dst] : sorted) {
      Arrow a;
      a.name = name;
      a.src = qa.vertex_index(src);
      a.dst = qa.vertex_index(dst);
      qa.arrows.push_back(a);
    }
    for (const auto& rel : relations) {
      Relation r;
      for (const auto& name : rel) r.push_back(qa.arrow_index(name));
      qa.relations.push_back(r);
    }
    std::sort(qa.relations.begin(), qa.relations.end());
    return qa;
  }
};

}  // namespace

bool vertex_id_less(const std::string& a, const std::string& b) {
  bool na = all_digits(a), nb = all_digits(b);
  if (na != nb) return na;  // numeric ids before names
  if (na) {
    if (a.size() != b.size()) return a.size() < b.size();  // no leading-zero ids longer than value
    return a < b;
  }
  return a < b;
}

QuiverAlgebra QuiverAlgebra::make(
    std::vector<std::string> vertices,
    std::vector<std::tuple<std::string, std::string, std::string>> arrows,
    std::vector<std::vector<std::string>> relations) {
  Builder b;
  for (const auto& v : vertices) {
    auto err = b.add_vertex(v);
    if (!err.empty()) throw DomainError(err);
  }
  for (const auto& [name, src, dst] : arrows) {
    auto err = b.add_arrow(name, src, dst);
    if (!err.empty()) throw DomainError(err);
  }
  for (const auto& r : relations) {
    auto err = b.add_relation(r);
    if (!err.empty()) throw DomainError(err);
  }
  return b.finish();
}

int QuiverAlgebra::vertex_index(const std::string& id) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == id) return static_cast<int>(i);
  return -1;
}

int QuiverAlgebra::arrow_index(const std::string& name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return static_cast<int>(i);
  return -1;
}

int QuiverAlgebra::out_degree(int vertex) const {
  int n = 0;
  for (const auto& a : arrows)
    if (a.src == vertex) ++n;
  return n;
}

int QuiverAlgebra::in_degree(int vertex) const {
  int n = 0;
  for (const auto& a : arrows)
    if (a.dst == vertex) ++n;
  return n;
}

int QuiverAlgebra::max_relation_length() const {
  std::size_t m = 0;
  for (const auto& r : relations) m = std::max(m, r.size());
  return static_cast<int>(m);
}

std::string QuiverAlgebra::to_spec_text() const {
  std::ostringstream out;
  if (!vertices.empty()) {
    out << "vertices:";
    for (const auto& v : vertices) out << ' ' << v;
    out << '\n';
  }
  for (const auto& a : arrows)
    out << "arrow " << a.name << ": " << vertices[a.src] << " -> "
        << vertices[a.dst] << '\n';
  for (const auto& r : relations) {
    out << "relation";
    for (int ai : r) out << ' ' << arrows[ai].name;
    out << '\n';
  }
  return out.str();
}

namespace {

struct Token {
  std::string text;
  int col;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
           line[j] != '#')
      ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

}  // namespace

QuiverAlgebra parse_quiver_spec(const std::string& text) {
  Builder b;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& head = toks[0].text;

    if (head == "vertices:" || head == "vertices") {
      std::size_t first = 1;
      if (head == "vertices") {
        if (toks.size() < 2 || toks[1].text != ":")
          throw ParseError(lineno, toks[0].col, "expected ':' after 'vertices'");
        first = 2;
      }
      for (std::size_t i = first; i < toks.size(); ++i) {
        auto err = b.add_vertex(toks[i].text);
        if (!err.empty()) throw ParseError(lineno, toks[i].col, err);
      }
    } else if (head == "arrow") {
      // arrow NAME: SRC -> DST   (the colon may be attached or separate)
      std::size_t i = 1;
      if (i >= toks.size())
        throw ParseError(lineno, toks[0].col, "expected arrow name");
      std::string name = toks[i].text;
      int name_col = toks[i].col;
      ++i;
      if (!name.empty() && name.back() == ':') {
        name.pop_back();
      } else {
        if (i >= toks.size() || toks[i].text != ":")
          throw ParseError(lineno, name_col, "expected ':' after arrow name");
        ++i;
      }
      if (i + 2 >= toks.size())
        throw ParseError(lineno, toks[0].col,
                         "expected 'SRC -> DST' after arrow name");
      const Token& src = toks[i];
      const Token& sep = toks[i + 1];
      const Token& dst = toks[i + 2];
      if (sep.text != "->")
        throw ParseError(lineno, sep.col, "expected '->'");
      if (i + 3 < toks.size())
        throw ParseError(lineno, toks[i + 3].col, "trailing tokens");
      if (name.empty() || !valid_identifier(name))
        throw ParseError(lineno, name_col, "invalid arrow name '" + name + "'");
      auto err = b.add_arrow(name, src.text, dst.text);
      if (!err.empty()) throw ParseError(lineno, name_col, err);
    } else if (head == "relation") {
      std::vector<std::string> names;
      for (std::size_t i = 1; i < toks.size(); ++i) names.push_back(toks[i].text);
      auto err = b.add_relation(names);
      if (!err.empty())
        throw ParseError(lineno, toks.size() > 1 ? toks[1].col : toks[0].col, err);
    } else {
      throw ParseError(lineno, toks[0].col,
                       "expected 'vertices:', 'arrow' or 'relation'");
    }
  }
  return b.finish();
}

ExtMatrix ext1_matrix(const QuiverAlgebra& qa) {
  ExtMatrix m;
  m.vertices = qa.vertices;
  m.counts.assign(qa.vertices.size(), std::vector<int>(qa.vertices.size(), 0));
  for (const auto& a : qa.arrows) ++m.counts[a.src][a.dst];
  return m;
}

bool has_kronecker_subquiver(const QuiverAlgebra& qa) {
  std::map<std::pair<int, int>, int> count;
  for (const auto& a : qa.arrows)
    if (++count[{a.src, a.dst}] >= 2) return true;
  return false;
}

}  // namespace colocal
