#include "colocal/young.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace colocal {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw DomainError("partition parts must be positive");
    if (i && parts[i] > parts[i - 1])
      throw DomainError("partition parts must be weakly decreasing");
  }
}

int Partition::weight() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

bool Partition::fits_in_box(int max_rows, int max_cols) const {
  if (rows() > max_rows) return false;
  return parts.empty() || parts.front() <= max_cols;
}

std::string Partition::text() const {
  if (parts.empty()) return "(0)";
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out << ',';
    out << parts[i];
  }
  out << ')';
  return out.str();
}

bool partition_leq(const Partition& a, const Partition& b) {
  if (a.rows() > b.rows()) return false;
  for (std::size_t i = 0; i < a.parts.size(); ++i)
    if (a.parts[i] > b.parts[i]) return false;
  return true;
}

Partition partition_meet(const Partition& a, const Partition& b) {
  std::vector<int> out(std::min(a.parts.size(), b.parts.size()));
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = std::min(a.parts[i], b.parts[i]);
  return Partition(std::move(out));
}

Partition partition_join(const Partition& a, const Partition& b) {
  std::vector<int> out(std::max(a.parts.size(), b.parts.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    int x = i < a.parts.size() ? a.parts[i] : 0;
    int y = i < b.parts.size() ? b.parts[i] : 0;
    out[i] = std::max(x, y);
  }
  return Partition(std::move(out));
}

std::vector<Partition> partitions_in_box(int max_rows, int max_cols) {
  if (max_rows < 1 || max_cols < 1)
    throw DomainError("partition box needs at least one row and one column");
  std::vector<Partition> out;
  std::vector<int> cur;
  // depth-first over weakly decreasing rows
  auto rec = [&](auto&& self, int bound) -> void {
    out.emplace_back(Partition(cur));
    if (static_cast<int>(cur.size()) == max_rows) return;
    for (int v = 1; v <= bound; ++v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, max_cols);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    int wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb;
    return a.parts < b.parts;
  });
  return out;
}

BigInt young_box_count(int max_rows, int max_cols) {
  if (max_rows < 1 || max_cols < 1)
    throw DomainError("partition box needs at least one row and one column");
  return binomial(max_rows + max_cols, max_rows);
}

}  // namespace colocal
