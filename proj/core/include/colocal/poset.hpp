#pragma once

#include <boost/dynamic_bitset.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "colocal/errors.hpp"

namespace colocal {

using Bits = boost::dynamic_bitset<>;

// A finite partially ordered set.  The order is stored closed (reflexive and
// transitive) as bit rows in both directions.  Labels are decoration; they
// are not required to be unique.
class Poset {
public:
  Poset() = default;

  // Validates reflexivity, antisymmetry and transitivity; throws DomainError.
  static Poset from_leq(std::vector<std::string> labels,
                        const std::vector<std::vector<bool>>& leq);

  // Builds the reflexive-transitive closure of the given strict pairs
  // (first < second); throws DomainError if a cycle makes that impossible.
  static Poset from_pairs(std::vector<std::string> labels,
                          const std::vector<std::pair<int, int>>& less_pairs);

  static Poset antichain(std::vector<std::string> labels);

  // The rows x cols grid: (r, c) <= (r', c') componentwise; element index is
  // row-major, labels "(r,c)" with 1-based coordinates.
  static Poset grid(int rows, int cols);

  // Concatenates the parts with no order between them.  Labels are kept; use
  // prefixes to disambiguate if needed.
  static Poset disjoint_union(const std::vector<Poset>& parts);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool leq(std::size_t i, std::size_t j) const { return up_[i].test(j); }
  const Bits& up_set(std::size_t i) const { return up_[i]; }
  const Bits& down_set(std::size_t i) const { return down_[i]; }

  // True iff the element set is closed downward.
  bool is_downset(const Bits& subset) const;

  // Transitive reduction, sorted pairs (lower, upper).
  std::vector<std::pair<std::size_t, std::size_t>> cover_pairs() const;

  // Length of a longest chain below each element.
  std::vector<std::size_t> heights() const;

  // Connected component id per element (components of the comparability
  // graph), numbered by least member.
  std::vector<int> component_ids() const;

private:
  std::vector<std::string> labels_;
  std::vector<Bits> up_;    // up_[i] = { j : i <= j }
  std::vector<Bits> down_;  // down_[i] = { j : j <= i }
};

// Order isomorphism search by signature-refined backtracking; returns the
// index mapping a -> b or nullopt.  Deterministic.
std::optional<std::vector<std::size_t>> poset_isomorphism(const Poset& a,
                                                          const Poset& b);

}  // namespace colocal
