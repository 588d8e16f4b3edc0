#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "colocal/bigint.hpp"
#include "colocal/conditions.hpp"
#include "colocal/lattice.hpp"
#include "colocal/quiver.hpp"
#include "colocal/string_module.hpp"
#include "colocal/strings.hpp"

namespace colocal {

struct AnalysisReport {
  ConditionReport admissible;
  std::vector<ConditionReport> string_axioms;
  ConditionReport string_algebra;
  ConditionReport c1;
  ConditionReport c2;
  std::optional<ConditionReport> c3;  // only defined when C1 passes
  bool kronecker = false;             // two parallel arrows present
  ConditionReport structural;
  bool colocal = false;
  std::vector<VertexPathProfile> profiles;  // per vertex, when colocal
  BigInt lattice_size = 0;                  // product formula, when colocal
};

// Runs every check on both routes.  The condition route (admissible, C1,
// C2, C3) and the structural route must agree; a mismatch is a bug, not a
// reportable outcome, and raises InternalError.
AnalysisReport analyze(const QuiverAlgebra& qa);

struct TauSets {
  int base = -1;       // S
  int successor = -1;  // S', target of the unique arrow out of S
  std::vector<int> tau;               // from path combinatorics
  std::vector<int> tau_prime;         // witness modules of length >= 3
  std::vector<int> tau_double_prime;  // witness modules of any length
};

// Needs admissibility, C1, and an arrow out of `vertex`.
TauSets tau_sets(const QuiverAlgebra& qa, int vertex);

struct TauVerification {
  struct Entry {
    TauSets sets;
    bool prime_ok = false;
    bool double_checked = false;  // S and S' sit at distinct vertices
    bool double_ok = true;
  };
  std::vector<Entry> entries;  // one per vertex with an out-arrow
  bool ok = true;
};

TauVerification verify_tau_equivalences(const QuiverAlgebra& qa);

// Down-sets of the submodule poset over all strings.  Requires a colocal
// algebra; refuses above the guard.
Lattice brute_force_lattice(const QuiverAlgebra& qa,
                            std::size_t guard = kDefaultSizeGuard);

// One box-bounded Young factor per vertex, ascending vertex order.
FactoredLattice structural_lattice(const QuiverAlgebra& qa);

struct MainTheoremCheck {
  bool ok = false;
  BigInt brute_size = 0;
  BigInt structural_size = 0;
  std::vector<std::pair<std::string, YoungShape>> factors;  // vertex, shape
  std::optional<IsoWitness> witness;
  std::string note;
};

// Computes the lattice both ways and matches them.  A failed match raises
// InternalError: the two routes are theorems of each other.
MainTheoremCheck verify_main_theorem(const QuiverAlgebra& qa,
                                     std::size_t guard = kDefaultSizeGuard);

struct PartitionCheck {
  bool cover_ok = false;     // socle classes cover every string
  bool disjoint_ok = false;  // pairwise disjoint
  bool closed_ok = false;    // closed under submodules of members
  std::vector<std::pair<std::string, std::size_t>> class_sizes;  // per vertex
  std::vector<std::string> problems;
  bool ok() const { return cover_ok && disjoint_ok && closed_ok; }
};

PartitionCheck verify_partition_M(const QuiverAlgebra& qa);

// The order join of two down-sets must carry exactly the union of their
// member sets.  Exhaustive while size*size stays within max_pairs, sampled
// with the seed beyond that.  Requires a down-set form lattice.
bool check_union_property(const Lattice& l, std::size_t max_pairs = 1000000,
                          unsigned seed = 12345);

}  // namespace colocal
