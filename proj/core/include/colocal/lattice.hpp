#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "colocal/bigint.hpp"
#include "colocal/errors.hpp"
#include "colocal/poset.hpp"

namespace colocal {

// Materialization refuses above this many elements unless told otherwise.
inline constexpr std::size_t kDefaultSizeGuard = 100000;

// Finite lattice, materialized.  Two internal forms:
//   - down-set form: elements are down-closed subsets of a base poset,
//     meet = intersection, join = union (scales to the size guard)
//   - table form: explicit meet/join tables (small inputs only)
class Lattice {
 public:
  // labeler(base, mask) -> element label; default lists the minimal
  // generators, i.e. the maximal elements of the down-set, as "{a,b}"
  using Labeler = std::function<std::string(const Poset&, const Bits&)>;

  static Lattice downsets(Poset base, std::size_t guard = kDefaultSizeGuard,
                          const Labeler& labeler = {});
  // validates the lattice axioms; meant for small hand-built inputs
  static Lattice from_leq(std::vector<std::string> labels,
                          const std::vector<std::vector<bool>>& leq);
  static Lattice product(const std::vector<Lattice>& factors,
                         std::size_t guard = kDefaultSizeGuard);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  bool leq(std::size_t a, std::size_t b) const;
  std::size_t meet(std::size_t a, std::size_t b) const;
  std::size_t join(std::size_t a, std::size_t b) const;
  std::size_t bottom() const;
  std::size_t top() const;

  // cover pairs (lower, upper), sorted
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;
  std::vector<int> element_heights() const;
  Poset order_poset() const;  // every element; refuses large lattices
  // elements with exactly one lower cover, as a poset carrying the element
  // labels; checks distributivity first
  Poset join_irreducible_poset() const;

  bool is_downset_form() const;
  const Poset& downset_base() const;
  const Bits& downset_mask(std::size_t i) const;
  std::size_t index_of_downset(const Bits& mask) const;

 private:
  Lattice() = default;
  struct DownForm {
    Poset base;
    std::vector<Bits> elems;  // sorted by (popcount, numeric value)
  };
  struct TableForm {
    std::vector<Bits> up;  // up[i] = set of elements above i
    std::vector<std::vector<std::uint32_t>> meet, join;
  };
  const DownForm* down() const { return std::get_if<DownForm>(&form_); }
  const TableForm* table() const { return std::get_if<TableForm>(&form_); }

  std::vector<std::string> labels_;
  std::variant<DownForm, TableForm> form_;
};

struct DistributivityReport {
  bool ok = true;
  // labels (a, b, c) with (a ∨ b) ∧ c != (a ∧ c) ∨ (b ∧ c)
  std::array<std::string, 3> witness{};
  std::string note;
};

// Exhaustive triple check up to check_guard elements.  Larger down-set
// lattices are distributive outright; larger table lattices are refused.
DistributivityReport is_distributive(const Lattice& l,
                                     std::size_t check_guard = 512);

// Frame identity a ∧ (⋁B) = ⋁(a ∧ b) over all B with |B| ≤ 3 plus the full
// set.  With exhaustive set, every subset B is tried (lattices ≤ 12 only).
bool is_frame(const Lattice& l, bool exhaustive = false,
              std::size_t check_guard = 96);

// Partitions with at most max_rows parts, each part at most max_cols,
// ordered by diagram inclusion.  Labels are partition texts like "(2,1)".
Lattice young_box_lattice(int max_rows, int max_cols,
                          std::size_t guard = kDefaultSizeGuard);

struct YoungShape {
  int rows = 0;
  int cols = 0;
};

// Cartesian product kept as a factor list; exact size without
// materialization.  Young factors stay symbolic until materialized.
class FactoredLattice {
 public:
  using Factor = std::variant<YoungShape, Lattice>;

  static FactoredLattice of(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  BigInt size() const;
  std::string shape_text() const;  // "Y^{2,1} × Y^{1,1}" style
  Lattice materialize(std::size_t guard = kDefaultSizeGuard) const;
  // disjoint union of the factors' join-irreducible posets, labels
  // prefixed "f<i>:"; computed without materializing
  Poset join_irreducible_poset() const;

 private:
  std::vector<Factor> factors_;
};

struct IsoWitness {
  std::string via;  // route that decided: "join-irreducibles" or "elements"
  std::vector<std::pair<std::string, std::string>> mapping;
};

std::optional<IsoWitness> are_isomorphic(const Lattice& a, const Lattice& b);
std::optional<IsoWitness> are_isomorphic(const Lattice& a,
                                         const FactoredLattice& b);
std::optional<IsoWitness> are_isomorphic(const FactoredLattice& a,
                                         const FactoredLattice& b);

// Graphviz digraph, edges lower cover -> upper cover, nodes ranked by
// height and sorted by label.  Deterministic byte-for-byte.
std::string to_dot(const Lattice& l, const std::string& name = "lattice");

}  // namespace colocal
