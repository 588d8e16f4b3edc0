#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "colocal/errors.hpp"

namespace colocal {

// An arrow of the quiver.  src and dst index into QuiverAlgebra::vertices.
// Loops (src == dst) and parallel arrows are allowed.
struct Arrow {
  std::string name;
  int src = 0;
  int dst = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

// A relation is a composable path of length >= 2, stored as arrow indices in
// traversal order: for consecutive entries (a, b) the dst of a equals the
// src of b.
using Relation = std::vector<int>;

// A finite quiver together with a set of monomial relations.  The data is
// kept normalized: vertices sorted (numeric ids numerically, then names
// lexicographically), arrows sorted by name, relations sorted and distinct.
struct QuiverAlgebra {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;

  // Builds a normalized algebra from raw parts.  Arrow endpoints and
  // relation entries are given symbolically; throws DomainError on unknown
  // names, duplicate arrow names, non-composable or too-short relations.
  static QuiverAlgebra make(std::vector<std::string> vertices,
                            std::vector<std::tuple<std::string, std::string, std::string>> arrows,
                            std::vector<std::vector<std::string>> relations);

  int vertex_index(const std::string& id) const;  // -1 if absent
  int arrow_index(const std::string& name) const; // -1 if absent

  int out_degree(int vertex) const;
  int in_degree(int vertex) const;
  int max_relation_length() const;

  // Serializes to the quiver description format understood by
  // parse_quiver_spec; parse(to_spec_text()) reproduces the algebra.
  std::string to_spec_text() const;

  friend bool operator==(const QuiverAlgebra&, const QuiverAlgebra&) = default;
};

// Orders vertex identifiers: all-digit ids numerically first, then names
// lexicographically.
bool vertex_id_less(const std::string& a, const std::string& b);

// Parses the quiver description format:
//
//   # comment
//   vertices: 1 2 3
//   arrow a: 1 -> 2
//   relation a b
//
// Blank lines are ignored, '#' starts a comment.  Throws ParseError with a
// 1-based line and column on malformed input.  An empty file is the empty
// quiver.
QuiverAlgebra parse_quiver_spec(const std::string& text);

// Counts of arrows between ordered vertex pairs; entry (i, j) is the number
// of arrows from vertex i to vertex j.  Row sums are out-degrees, column
// sums in-degrees.
struct ExtMatrix {
  std::vector<std::string> vertices;
  std::vector<std::vector<int>> counts;
};

ExtMatrix ext1_matrix(const QuiverAlgebra& qa);

// True iff some ordered vertex pair carries >= 2 parallel arrows (two loops
// at one vertex count).
bool has_kronecker_subquiver(const QuiverAlgebra& qa);

}  // namespace colocal
