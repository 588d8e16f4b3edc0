#pragma once

#include <optional>
#include <string>
#include <vector>

#include "colocal/quiver.hpp"

namespace colocal {

// Result of a single yes/no check.  A report fails exactly when it carries
// witnesses (offending vertices, arrows, or paths).
struct ConditionReport {
  std::string condition;
  bool pass = true;
  std::vector<std::string> witness_vertices;
  std::vector<std::string> witness_arrows;
  std::vector<std::vector<std::string>> witness_paths;  // arrow names, traversal order
  std::string detail;

  bool consistent() const {
    bool has_witness = !witness_vertices.empty() || !witness_arrows.empty() ||
                       !witness_paths.empty();
    return pass != has_witness;
  }
};

// True iff the traversal-order arrow sequence contains some relation as a
// contiguous subsequence.
bool path_contains_relation(const QuiverAlgebra& qa, const std::vector<int>& path);

// True iff the two-arrow composite (a then b) is defined and relation-free.
bool composable_relation_free(const QuiverAlgebra& qa, int a, int b);

// Upper bound on the length of any relation-free path; exceeding it proves a
// relation-free cycle exists.
int relation_free_path_bound(const QuiverAlgebra& qa);

// Passes iff there is no relation-free cycle, i.e. every long enough path
// contains a relation.  On failure the witness path is a relation-free
// cyclic walk.
ConditionReport check_admissible(const QuiverAlgebra& qa);

// The four string-algebra axioms, reported one by one:
//   1. every vertex starts at most two arrows
//   2. every vertex ends at most two arrows
//   3. for each arrow b, at most one arrow a with (a then b) relation-free
//   4. for each arrow a, at most one arrow b with (a then b) relation-free
// Meaningful alongside check_admissible; the axioms themselves do not test
// admissibility.
std::vector<ConditionReport> string_axiom_reports(const QuiverAlgebra& qa);

// Conjunction of the four axioms above.
ConditionReport is_string_algebra(const QuiverAlgebra& qa);

// Every vertex starts at most one arrow.
ConditionReport check_C1(const QuiverAlgebra& qa);

// Every vertex ends at most two arrows.
ConditionReport check_C2(const QuiverAlgebra& qa);

// For each vertex v with an outgoing arrow b, at most one arrow ending at v
// composes with b relation-free.  Only meaningful under check_C1; throws
// DomainError when C1 fails.
ConditionReport check_C3(const QuiverAlgebra& qa);

// Admissible, string algebra, and out-degree <= 1 everywhere.
ConditionReport is_colocal_type_structural(const QuiverAlgebra& qa);

// The maximal relation-free paths ending at a vertex.  At most two arrows
// end at the vertex; each contributes one maximal path, and k >= l are the
// two lengths (l = 0 when fewer than two arrows end there).
struct VertexPathProfile {
  int vertex = 0;
  int k = 0;
  int l = 0;
  std::vector<int> path_k;  // arrow indices, traversal order, ends at vertex
  std::vector<int> path_l;
};

// Computes the profile of one vertex; requires is_colocal_type_structural.
VertexPathProfile vertex_path_profile(const QuiverAlgebra& qa, int vertex);

}  // namespace colocal
