#pragma once

#include <string>
#include <vector>

#include "colocal/bigint.hpp"
#include "colocal/errors.hpp"

namespace colocal {

// Integer partition, weakly decreasing positive parts.  The empty partition
// is {}.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int rows() const { return static_cast<int>(parts.size()); }
  int weight() const;
  bool fits_in_box(int max_rows, int max_cols) const;
  std::string text() const;  // "(3,2,1)", empty as "(0)"

  bool operator==(const Partition&) const = default;
};

bool partition_leq(const Partition& a, const Partition& b);  // containment
Partition partition_meet(const Partition& a, const Partition& b);
Partition partition_join(const Partition& a, const Partition& b);

// All partitions with at most max_rows parts, each at most max_cols,
// sorted by (weight, parts).  Both bounds must be at least 1.
std::vector<Partition> partitions_in_box(int max_rows, int max_cols);

BigInt young_box_count(int max_rows, int max_cols);

}  // namespace colocal
