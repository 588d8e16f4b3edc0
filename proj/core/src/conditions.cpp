#include "colocal/conditions.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

namespace colocal {

namespace {

std::vector<std::string> arrow_names(const QuiverAlgebra& qa,
                                     const std::vector<int>& path) {
  std::vector<std::string> out;
  for (int a : path) out.push_back(qa.arrows[a].name);
  return out;
}

// Multi-pattern matcher in the Aho-Corasick style: states are the prefixes
// of the relation paths, transitions follow failure links, and match(s) says
// whether some relation ends at the current position of the scanned walk.
class RelationScanner {
public:
  explicit RelationScanner(const QuiverAlgebra& qa) {
    nodes_.push_back({});
    for (const auto& rel : qa.relations) {
      int s = 0;
      for (int arrow : rel) {
        auto it = nodes_[s].next.find(arrow);
        if (it == nodes_[s].next.end()) {
          nodes_.push_back({});
          nodes_[s].next[arrow] = static_cast<int>(nodes_.size()) - 1;
          s = static_cast<int>(nodes_.size()) - 1;
        } else {
          s = it->second;
        }
      }
      nodes_[s].match = true;
    }
    // breadth-first failure links; match propagates along them
    std::queue<int> bfs;
    for (auto& [arrow, t] : nodes_[0].next) {
      nodes_[t].fail = 0;
      bfs.push(t);
    }
    while (!bfs.empty()) {
      int s = bfs.front();
      bfs.pop();
      for (auto& [arrow, t] : nodes_[s].next) {
        int f = nodes_[s].fail;
        while (f != 0 && !nodes_[f].next.count(arrow)) f = nodes_[f].fail;
        auto it = nodes_[f].next.find(arrow);
        nodes_[t].fail = (it != nodes_[f].next.end() && it->second != t)
                             ? it->second
                             : 0;
        nodes_[t].match = nodes_[t].match || nodes_[nodes_[t].fail].match;
        bfs.push(t);
      }
    }
  }

  int size() const { return static_cast<int>(nodes_.size()); }

  int step(int s, int arrow) const {
    while (true) {
      auto it = nodes_[s].next.find(arrow);
      if (it != nodes_[s].next.end()) return it->second;
      if (s == 0) return 0;
      s = nodes_[s].fail;
    }
  }

  bool match(int s) const { return nodes_[s].match; }

private:
  struct Node {
    std::map<int, int> next;
    int fail = 0;
    bool match = false;
  };
  std::vector<Node> nodes_;
};

}  // namespace

bool path_contains_relation(const QuiverAlgebra& qa,
                            const std::vector<int>& path) {
  for (const auto& rel : qa.relations) {
    if (rel.size() > path.size()) continue;
    for (std::size_t i = 0; i + rel.size() <= path.size(); ++i) {
      if (std::equal(rel.begin(), rel.end(), path.begin() + i)) return true;
    }
  }
  return false;
}

bool composable_relation_free(const QuiverAlgebra& qa, int a, int b) {
  if (qa.arrows[a].dst != qa.arrows[b].src) return false;
  return !path_contains_relation(qa, {a, b});
}

int relation_free_path_bound(const QuiverAlgebra& qa) {
  // states of the (arrow, scanner prefix) product graph
  int total = 1;
  for (const auto& r : qa.relations) total += static_cast<int>(r.size());
  return static_cast<int>(qa.arrows.size()) * total + 1;
}

ConditionReport check_admissible(const QuiverAlgebra& qa) {
  ConditionReport rep;
  rep.condition = "admissible";

  const int n = static_cast<int>(qa.arrows.size());
  if (n == 0) {
    rep.detail = "no arrows, no cycles";
    return rep;
  }

  RelationScanner scanner(qa);
  const int ns = scanner.size();
  auto id = [&](int arrow, int state) { return arrow * ns + state; };

  // reachable product states (arrow just read, scanner state), skipping any
  // state where a relation just matched
  std::vector<char> reached(static_cast<std::size_t>(n) * ns, 0);
  std::vector<int> stack;
  for (int a = 0; a < n; ++a) {
    int s = scanner.step(0, a);
    if (scanner.match(s)) continue;  // cannot happen: relations have length >= 2
    if (!reached[id(a, s)]) {
      reached[id(a, s)] = 1;
      stack.push_back(id(a, s));
    }
  }
  std::vector<int> order;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    int a = v / ns, s = v % ns;
    for (int b = 0; b < n; ++b) {
      if (qa.arrows[a].dst != qa.arrows[b].src) continue;
      int t = scanner.step(s, b);
      if (scanner.match(t)) continue;
      if (!reached[id(b, t)]) {
        reached[id(b, t)] = 1;
        stack.push_back(id(b, t));
      }
    }
  }

  // depth-first cycle search over the reachable subgraph
  std::vector<char> color(static_cast<std::size_t>(n) * ns, 0);  // 0 white 1 gray 2 black
  std::vector<int> path;  // gray stack of state ids
  for (int start : order) {
    if (color[start]) continue;
    // iterative dfs with explicit frames
    struct Frame {
      int v;
      int b;  // next arrow candidate to try
    };
    std::vector<Frame> frames;
    frames.push_back({start, 0});
    color[start] = 1;
    path.push_back(start);
    while (!frames.empty()) {
      const int v = frames.back().v;
      const int a = v / ns, s = v % ns;
      bool descended = false;
      for (int b = frames.back().b; b < n; ++b) {
        if (qa.arrows[a].dst != qa.arrows[b].src) continue;
        int t = scanner.step(s, b);
        if (scanner.match(t)) continue;
        int w = id(b, t);
        if (color[w] == 1) {
          // found a cycle: the segment of the gray path from w onward
          auto it = std::find(path.begin(), path.end(), w);
          std::vector<int> cycle_arrows;
          for (; it != path.end(); ++it) cycle_arrows.push_back(*it / ns);
          rep.pass = false;
          rep.witness_paths.push_back(arrow_names(qa, cycle_arrows));
          std::ostringstream d;
          d << "relation-free cyclic walk of length " << cycle_arrows.size();
          rep.detail = d.str();
          return rep;
        }
        if (color[w] == 0) {
          frames.back().b = b + 1;
          color[w] = 1;
          path.push_back(w);
          frames.push_back({w, 0});
          descended = true;
          break;
        }
      }
      if (!descended) {
        color[v] = 2;
        path.pop_back();
        frames.pop_back();
      }
    }
  }

  rep.detail = "every long enough path contains a relation";
  return rep;
}

namespace {

ConditionReport degree_report(const QuiverAlgebra& qa, const std::string& tag,
                              bool outgoing, int limit) {
  ConditionReport rep;
  rep.condition = tag;
  for (std::size_t v = 0; v < qa.vertices.size(); ++v) {
    int deg = outgoing ? qa.out_degree(static_cast<int>(v))
                       : qa.in_degree(static_cast<int>(v));
    if (deg > limit) {
      rep.pass = false;
      rep.witness_vertices.push_back(qa.vertices[v]);
      for (const auto& a : qa.arrows) {
        int end = outgoing ? a.src : a.dst;
        if (end == static_cast<int>(v)) rep.witness_arrows.push_back(a.name);
      }
    }
  }
  if (!rep.pass) {
    std::ostringstream d;
    d << (outgoing ? "out" : "in") << "-degree exceeds " << limit << " at";
    for (const auto& v : rep.witness_vertices) d << ' ' << v;
    rep.detail = d.str();
  }
  return rep;
}

}  // namespace

std::vector<ConditionReport> string_axiom_reports(const QuiverAlgebra& qa) {
  std::vector<ConditionReport> reps;
  reps.push_back(degree_report(qa, "string-axiom-1", true, 2));
  reps.push_back(degree_report(qa, "string-axiom-2", false, 2));

  const int n = static_cast<int>(qa.arrows.size());

  ConditionReport ax3;
  ax3.condition = "string-axiom-3";
  for (int b = 0; b < n; ++b) {
    std::vector<int> preds;
    for (int a = 0; a < n; ++a)
      if (composable_relation_free(qa, a, b)) preds.push_back(a);
    if (preds.size() > 1) {
      ax3.pass = false;
      ax3.witness_arrows.push_back(qa.arrows[b].name);
      for (int a : preds) ax3.witness_paths.push_back(arrow_names(qa, {a, b}));
    }
  }
  if (!ax3.pass)
    ax3.detail = "an arrow has several relation-free compositions from the left";
  reps.push_back(ax3);

  ConditionReport ax4;
  ax4.condition = "string-axiom-4";
  for (int a = 0; a < n; ++a) {
    std::vector<int> succs;
    for (int b = 0; b < n; ++b)
      if (composable_relation_free(qa, a, b)) succs.push_back(b);
    if (succs.size() > 1) {
      ax4.pass = false;
      ax4.witness_arrows.push_back(qa.arrows[a].name);
      for (int b : succs) ax4.witness_paths.push_back(arrow_names(qa, {a, b}));
    }
  }
  if (!ax4.pass)
    ax4.detail = "an arrow has several relation-free compositions to the right";
  reps.push_back(ax4);

  return reps;
}

ConditionReport is_string_algebra(const QuiverAlgebra& qa) {
  ConditionReport rep;
  rep.condition = "string-algebra";
  for (const auto& ax : string_axiom_reports(qa)) {
    if (ax.pass) continue;
    rep.pass = false;
    if (!rep.detail.empty()) rep.detail += "; ";
    rep.detail += ax.condition + " fails";
    rep.witness_vertices.insert(rep.witness_vertices.end(),
                                ax.witness_vertices.begin(),
                                ax.witness_vertices.end());
    rep.witness_arrows.insert(rep.witness_arrows.end(),
                              ax.witness_arrows.begin(),
                              ax.witness_arrows.end());
    rep.witness_paths.insert(rep.witness_paths.end(), ax.witness_paths.begin(),
                             ax.witness_paths.end());
  }
  return rep;
}

ConditionReport check_C1(const QuiverAlgebra& qa) {
  return degree_report(qa, "C1", true, 1);
}

ConditionReport check_C2(const QuiverAlgebra& qa) {
  return degree_report(qa, "C2", false, 2);
}

ConditionReport check_C3(const QuiverAlgebra& qa) {
  if (!check_C1(qa).pass)
    throw DomainError("check_C3 requires C1 (out-degree <= 1)");
  ConditionReport rep;
  rep.condition = "C3";
  const int n = static_cast<int>(qa.arrows.size());
  for (int b = 0; b < n; ++b) {
    // b is the unique arrow leaving its source vertex
    std::vector<int> free_preds;
    for (int a = 0; a < n; ++a)
      if (composable_relation_free(qa, a, b)) free_preds.push_back(a);
    if (free_preds.size() > 1) {
      rep.pass = false;
      rep.witness_vertices.push_back(qa.vertices[qa.arrows[b].src]);
      for (int a : free_preds)
        rep.witness_paths.push_back(arrow_names(qa, {a, b}));
    }
  }
  if (!rep.pass)
    rep.detail =
        "several relation-free length-2 composites pass through a vertex";
  return rep;
}

ConditionReport is_colocal_type_structural(const QuiverAlgebra& qa) {
  ConditionReport rep;
  rep.condition = "colocal-structural";

  auto adopt = [&rep](const ConditionReport& sub, const std::string& why) {
    rep.pass = false;
    rep.witness_vertices = sub.witness_vertices;
    rep.witness_arrows = sub.witness_arrows;
    rep.witness_paths = sub.witness_paths;
    rep.detail = why + (sub.detail.empty() ? "" : ": " + sub.detail);
  };

  auto adm = check_admissible(qa);
  if (!adm.pass) {
    adopt(adm, "not admissible");
    return rep;
  }
  auto alg = is_string_algebra(qa);
  if (!alg.pass) {
    adopt(alg, "not a string algebra");
    return rep;
  }
  auto c1 = check_C1(qa);
  if (!c1.pass) {
    adopt(c1, "a vertex starts more than one arrow");
    return rep;
  }
  rep.detail = "admissible string algebra with out-degree <= 1";
  return rep;
}

VertexPathProfile vertex_path_profile(const QuiverAlgebra& qa, int vertex) {
  auto ok = is_colocal_type_structural(qa);
  if (!ok.pass)
    throw DomainError("vertex_path_profile requires colocal type: " + ok.detail);

  std::vector<int> ending;  // arrows ending at the vertex, name order
  for (std::size_t a = 0; a < qa.arrows.size(); ++a)
    if (qa.arrows[a].dst == vertex) ending.push_back(static_cast<int>(a));

  const int bound = relation_free_path_bound(qa);
  std::vector<std::vector<int>> paths;
  for (int last : ending) {
    std::vector<int> path{last};
    while (static_cast<int>(path.size()) <= bound) {
      int front = path.front();
      int found = -1;
      for (std::size_t c = 0; c < qa.arrows.size(); ++c) {
        if (!composable_relation_free(qa, static_cast<int>(c), front)) continue;
        if (found >= 0)
          throw InternalError("two relation-free backward extensions under "
                              "string axioms");
        found = static_cast<int>(c);
      }
      if (found < 0) break;
      std::vector<int> longer;
      longer.push_back(found);
      longer.insert(longer.end(), path.begin(), path.end());
      if (path_contains_relation(qa, longer)) break;  // a longer relation blocks
      path = std::move(longer);
    }
    if (static_cast<int>(path.size()) > bound)
      throw InternalError("relation-free path exceeds the admissibility bound");
    paths.push_back(std::move(path));
  }

  VertexPathProfile prof;
  prof.vertex = vertex;
  if (paths.size() == 1) {
    prof.k = static_cast<int>(paths[0].size());
    prof.path_k = paths[0];
  } else if (paths.size() == 2) {
    bool first_is_k = paths[0].size() != paths[1].size()
                          ? paths[0].size() > paths[1].size()
                          : qa.arrows[paths[0].back()].name <
                                qa.arrows[paths[1].back()].name;
    const auto& pk = first_is_k ? paths[0] : paths[1];
    const auto& pl = first_is_k ? paths[1] : paths[0];
    prof.k = static_cast<int>(pk.size());
    prof.l = static_cast<int>(pl.size());
    prof.path_k = pk;
    prof.path_l = pl;
  }
  return prof;
}

}  // namespace colocal
