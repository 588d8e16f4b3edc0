#include "colocal/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace colocal {

Poset Poset::from_leq(std::vector<std::string> labels,
                      const std::vector<std::vector<bool>>& leq) {
  const std::size_t n = labels.size();
  if (leq.size() != n)
    throw DomainError("order table size does not match the label count");
  for (const auto& row : leq)
    if (row.size() != n) throw DomainError("order table is not square");
  for (std::size_t i = 0; i < n; ++i)
    if (!leq[i][i]) throw DomainError("order is not reflexive");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && leq[i][j] && leq[j][i])
        throw DomainError("order is not antisymmetric: " + labels[i] + " / " +
                          labels[j]);
      if (!leq[i][j]) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (leq[j][k] && !leq[i][k])
          throw DomainError("order is not transitive at " + labels[i]);
    }
  Poset p;
  p.labels_ = std::move(labels);
  p.up_.assign(n, Bits(n));
  p.down_.assign(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (leq[i][j]) {
        p.up_[i].set(j);
        p.down_[j].set(i);
      }
  return p;
}

Poset Poset::from_pairs(std::vector<std::string> labels,
                        const std::vector<std::pair<int, int>>& less_pairs) {
  const std::size_t n = labels.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
  for (auto [a, b] : less_pairs) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n ||
        static_cast<std::size_t>(b) >= n)
      throw DomainError("order pair out of range");
    leq[a][b] = true;
  }
  // Warshall closure, then detect cycles as antisymmetry failures
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq[k][j]) leq[i][j] = true;
  return from_leq(std::move(labels), leq);
}

Poset Poset::antichain(std::vector<std::string> labels) {
  return from_pairs(std::move(labels), {});
}

Poset Poset::grid(int rows, int cols) {
  if (rows <= 0 || cols <= 0) throw DomainError("grid needs positive sides");
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> pairs;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      std::ostringstream l;
      l << '(' << r + 1 << ',' << c + 1 << ')';
      labels.push_back(l.str());
      int id = r * cols + c;
      if (r + 1 < rows) pairs.emplace_back(id, id + cols);
      if (c + 1 < cols) pairs.emplace_back(id, id + 1);
    }
  return from_pairs(std::move(labels), pairs);
}

Poset Poset::disjoint_union(const std::vector<Poset>& parts) {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> pairs;
  std::size_t off = 0;
  for (const auto& part : parts) {
    for (std::size_t i = 0; i < part.size(); ++i) {
      labels.push_back(part.label(i));
      for (std::size_t j = 0; j < part.size(); ++j)
        if (i != j && part.leq(i, j))
          pairs.emplace_back(static_cast<int>(off + i),
                             static_cast<int>(off + j));
    }
    off += part.size();
  }
  return from_pairs(std::move(labels), pairs);
}

bool Poset::is_downset(const Bits& s) const {
  for (std::size_t i = s.find_first(); i != Bits::npos; i = s.find_next(i))
    if (!down_[i].is_subset_of(s)) return false;
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::cover_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = up_[i].find_first(); j != Bits::npos;
         j = up_[i].find_next(j)) {
      if (i == j) continue;
      // strict interval between i and j must be empty
      Bits mid = up_[i] & down_[j];
      if (mid.count() == 2) covers.emplace_back(i, j);
    }
  std::sort(covers.begin(), covers.end());
  return covers;
}

std::vector<std::size_t> Poset::heights() const {
  const std::size_t n = size();
  std::vector<std::size_t> h(n, 0);
  // down_[i].count() is monotone along the order, so process by that key
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return down_[a].count() < down_[b].count();
  });
  for (std::size_t i : order) {
    std::size_t best = 0;
    for (std::size_t j = down_[i].find_first(); j != Bits::npos;
         j = down_[i].find_next(j))
      if (j != i) best = std::max(best, h[j] + 1);
    h[i] = best;
  }
  return h;
}

std::vector<int> Poset::component_ids() const {
  const std::size_t n = size();
  std::vector<int> comp(n, -1);
  int next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      Bits nbr = up_[v] | down_[v];
      for (std::size_t w = nbr.find_first(); w != Bits::npos;
           w = nbr.find_next(w))
        if (comp[w] < 0) {
          comp[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return comp;
}

namespace {

// invariant used to cut the search
std::vector<long> node_signature(const Poset& p, std::size_t i) {
  std::vector<long> sig{static_cast<long>(p.down_set(i).count()),
                       static_cast<long>(p.up_set(i).count())};
  return sig;
}

}  // namespace

std::optional<std::vector<std::size_t>> poset_isomorphism(const Poset& a,
                                                          const Poset& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return std::nullopt;
  std::vector<std::vector<long>> siga(n), sigb(n);
  for (std::size_t i = 0; i < n; ++i) {
    siga[i] = node_signature(a, i);
    sigb[i] = node_signature(b, i);
  }
  {
    auto sa = siga;
    auto sb = sigb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  // map elements of a in a fixed order, most constrained first
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a.down_set(x).count() < a.down_set(y).count();
  });
  std::vector<std::size_t> image(n, n);
  std::vector<char> used(n, 0);
  std::vector<std::size_t> choice(n, 0);
  std::size_t depth = 0;
  while (true) {
    if (depth == n) return image;
    std::size_t v = order[depth];
    bool advanced = false;
    for (std::size_t cand = choice[depth]; cand < n; ++cand) {
      if (used[cand] || siga[v] != sigb[cand]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        std::size_t u = order[d];
        if (a.leq(u, v) != b.leq(image[u], cand)) ok = false;
        if (ok && a.leq(v, u) != b.leq(cand, image[u])) ok = false;
      }
      if (!ok) continue;
      image[v] = cand;
      used[cand] = 1;
      choice[depth] = cand + 1;
      ++depth;
      if (depth < n) choice[depth] = 0;
      advanced = true;
      break;
    }
    if (advanced) continue;
    if (depth == 0) return std::nullopt;
    --depth;
    std::size_t prev = order[depth];
    used[image[prev]] = 0;
    image[prev] = n;
  }
}

}  // namespace colocal
