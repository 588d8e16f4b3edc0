#include "colocal/lattice.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "colocal/young.hpp"

namespace colocal {

namespace {

bool mask_less(const Bits& a, const Bits& b) {
  if (a.count() != b.count()) return a.count() < b.count();
  return a < b;
}

std::string minimal_generator_label(const Poset& base, const Bits& m) {
  std::string out = "{";
  bool first = true;
  for (std::size_t x = m.find_first(); x != Bits::npos; x = m.find_next(x)) {
    Bits above = base.up_set(x);
    above &= m;
    if (above.count() != 1) continue;  // not maximal in m
    if (!first) out += ',';
    out += base.label(x);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace

Lattice Lattice::downsets(Poset base, std::size_t guard,
                          const Labeler& labeler) {
  const std::size_t n = base.size();
  std::vector<Bits> needs;  // strict predecessors of each base element
  needs.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    needs.push_back(base.down_set(x));
    needs.back().reset(x);
  }
  auto cmp = [](const Bits& a, const Bits& b) { return mask_less(a, b); };
  std::set<Bits, decltype(cmp)> seen(cmp);
  std::deque<Bits> queue;
  Bits empty(n);
  seen.insert(empty);
  queue.push_back(empty);
  while (!queue.empty()) {
    Bits m = queue.front();
    queue.pop_front();
    for (std::size_t x = 0; x < n; ++x) {
      if (m.test(x) || !needs[x].is_subset_of(m)) continue;
      Bits ext = m;
      ext.set(x);
      if (seen.insert(ext).second) {
        if (seen.size() > guard)
          throw GuardError("down-set lattice grows past " +
                           std::to_string(guard) + " elements");
        queue.push_back(ext);
      }
    }
  }
  Lattice l;
  DownForm form;
  form.base = std::move(base);
  form.elems.assign(seen.begin(), seen.end());
  l.labels_.reserve(form.elems.size());
  for (const Bits& m : form.elems)
    l.labels_.push_back(labeler ? labeler(form.base, m)
                                : minimal_generator_label(form.base, m));
  l.form_ = std::move(form);
  return l;
}

Lattice Lattice::from_leq(std::vector<std::string> labels,
                          const std::vector<std::vector<bool>>& leq) {
  {
    auto sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw DomainError("lattice labels must be distinct");
  }
  Poset p = Poset::from_leq(labels, leq);
  const std::size_t n = p.size();
  TableForm t;
  t.up.reserve(n);
  for (std::size_t i = 0; i < n; ++i) t.up.push_back(p.up_set(i));
  t.meet.assign(n, std::vector<std::uint32_t>(n, 0));
  t.join.assign(n, std::vector<std::uint32_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Bits lower = p.down_set(i);
      lower &= p.down_set(j);
      std::size_t m = Bits::npos;
      for (std::size_t c = lower.find_first(); c != Bits::npos;
           c = lower.find_next(c))
        if (lower.is_subset_of(p.down_set(c))) {
          if (m != Bits::npos)
            throw DomainError("no unique meet for " + labels[i] + ", " +
                              labels[j]);
          m = c;
        }
      if (m == Bits::npos)
        throw DomainError("no meet for " + labels[i] + ", " + labels[j]);
      t.meet[i][j] = static_cast<std::uint32_t>(m);
      Bits upper = p.up_set(i);
      upper &= p.up_set(j);
      std::size_t jn = Bits::npos;
      for (std::size_t c = upper.find_first(); c != Bits::npos;
           c = upper.find_next(c))
        if (upper.is_subset_of(p.up_set(c))) {
          if (jn != Bits::npos)
            throw DomainError("no unique join for " + labels[i] + ", " +
                              labels[j]);
          jn = c;
        }
      if (jn == Bits::npos)
        throw DomainError("no join for " + labels[i] + ", " + labels[j]);
      t.join[i][j] = static_cast<std::uint32_t>(jn);
    }
  Lattice l;
  l.labels_ = std::move(labels);
  l.form_ = std::move(t);
  return l;
}

bool Lattice::leq(std::size_t a, std::size_t b) const {
  if (const DownForm* d = down()) return d->elems[a].is_subset_of(d->elems[b]);
  return table()->up[a].test(b);
}

std::size_t Lattice::meet(std::size_t a, std::size_t b) const {
  if (const DownForm* d = down()) {
    Bits m = d->elems[a];
    m &= d->elems[b];
    return index_of_downset(m);
  }
  return table()->meet[a][b];
}

std::size_t Lattice::join(std::size_t a, std::size_t b) const {
  if (const DownForm* d = down()) {
    Bits m = d->elems[a];
    m |= d->elems[b];
    return index_of_downset(m);
  }
  return table()->join[a][b];
}

std::size_t Lattice::bottom() const {
  if (down()) return 0;  // sorted by popcount, the empty set comes first
  const TableForm& t = *table();
  for (std::size_t i = 0; i < size(); ++i)
    if (t.up[i].count() == size()) return i;
  throw InternalError("lattice has no bottom");
}

std::size_t Lattice::top() const {
  if (down()) return size() - 1;
  const TableForm& t = *table();
  for (std::size_t i = 0; i < size(); ++i)
    if (t.up[i].count() == 1) return i;
  throw InternalError("lattice has no top");
}

bool Lattice::is_downset_form() const { return down() != nullptr; }

const Poset& Lattice::downset_base() const {
  const DownForm* d = down();
  if (!d) throw InternalError("lattice is not in down-set form");
  return d->base;
}

const Bits& Lattice::downset_mask(std::size_t i) const {
  const DownForm* d = down();
  if (!d) throw InternalError("lattice is not in down-set form");
  return d->elems[i];
}

std::size_t Lattice::index_of_downset(const Bits& mask) const {
  const DownForm* d = down();
  if (!d) throw InternalError("lattice is not in down-set form");
  auto it = std::lower_bound(d->elems.begin(), d->elems.end(), mask, mask_less);
  if (it == d->elems.end() || *it != mask)
    throw InternalError("set is not an element of the down-set lattice");
  return static_cast<std::size_t>(it - d->elems.begin());
}

namespace {

// down[i] bitsets for a table form, derived from the up sets
std::vector<Bits> table_down_sets(const std::vector<Bits>& up) {
  const std::size_t n = up.size();
  std::vector<Bits> down(n, Bits(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t j = up[x].find_first(); j != Bits::npos;
         j = up[x].find_next(j))
      down[j].set(x);
  return down;
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> Lattice::hasse_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  if (const DownForm* d = down()) {
    const std::size_t nb = d->base.size();
    std::vector<Bits> ups;
    ups.reserve(nb);
    for (std::size_t x = 0; x < nb; ++x) ups.push_back(d->base.up_set(x));
    for (std::size_t e = 0; e < d->elems.size(); ++e) {
      const Bits& m = d->elems[e];
      for (std::size_t x = m.find_first(); x != Bits::npos;
           x = m.find_next(x)) {
        Bits above = ups[x];
        above &= m;
        if (above.count() != 1) continue;  // x not maximal, not removable
        Bits lower = m;
        lower.reset(x);
        edges.emplace_back(index_of_downset(lower), e);
      }
    }
  } else {
    const TableForm& t = *table();
    const std::size_t n = size();
    std::vector<Bits> downs = table_down_sets(t.up);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = t.up[i].find_first(); j != Bits::npos;
           j = t.up[i].find_next(j)) {
        if (i == j) continue;
        Bits between = t.up[i];
        between &= downs[j];
        if (between.count() == 2) edges.emplace_back(i, j);
      }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::vector<int> Lattice::element_heights() const {
  if (const DownForm* d = down()) {
    std::vector<int> h;
    h.reserve(d->elems.size());
    for (const Bits& m : d->elems) h.push_back(static_cast<int>(m.count()));
    return h;
  }
  const TableForm& t = *table();
  const std::size_t n = size();
  std::vector<Bits> downs = table_down_sets(t.up);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return downs[a].count() < downs[b].count();
  });
  std::vector<int> h(n, 0);
  for (std::size_t i : order)
    for (std::size_t j = downs[i].find_first(); j != Bits::npos;
         j = downs[i].find_next(j))
      if (j != i) h[i] = std::max(h[i], h[j] + 1);
  return h;
}

Poset Lattice::order_poset() const {
  const std::size_t n = size();
  if (n > 512)
    throw GuardError("refusing to build the full order poset of " +
                     std::to_string(n) + " elements");
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = leq(i, j);
  return Poset::from_leq(labels_, m);
}

Poset Lattice::join_irreducible_poset() const {
  if (const DownForm* d = down()) {
    // principal down-sets; the base poset carries over with element labels
    const std::size_t nb = d->base.size();
    std::vector<std::string> labels;
    labels.reserve(nb);
    for (std::size_t x = 0; x < nb; ++x)
      labels.push_back(labels_[index_of_downset(d->base.down_set(x))]);
    std::vector<std::vector<bool>> m(nb, std::vector<bool>(nb, false));
    for (std::size_t i = 0; i < nb; ++i)
      for (std::size_t j = 0; j < nb; ++j) m[i][j] = d->base.leq(i, j);
    return Poset::from_leq(std::move(labels), m);
  }
  auto rep = is_distributive(*this);
  if (!rep.ok)
    throw DomainError("join-irreducible duality needs a distributive lattice");
  std::vector<int> lower_covers(size(), 0);
  for (auto [a, b] : hasse_edges()) {
    (void)a;
    ++lower_covers[b];
  }
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < size(); ++i)
    if (lower_covers[i] == 1) keep.push_back(i);
  std::vector<std::string> labels;
  for (std::size_t i : keep) labels.push_back(labels_[i]);
  std::vector<std::vector<bool>> m(keep.size(),
                                   std::vector<bool>(keep.size(), false));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j)
      m[i][j] = leq(keep[i], keep[j]);
  return Poset::from_leq(std::move(labels), m);
}

// ---------------------------------------------------------------- checks --

namespace {

// meet/join lookup tables for a small lattice
struct OpTables {
  std::vector<std::vector<std::uint32_t>> meet, join;
};

OpTables build_tables(const Lattice& l) {
  const std::size_t n = l.size();
  OpTables t;
  t.meet.assign(n, std::vector<std::uint32_t>(n, 0));
  t.join.assign(n, std::vector<std::uint32_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      std::uint32_t m = static_cast<std::uint32_t>(l.meet(i, j));
      std::uint32_t jn = static_cast<std::uint32_t>(l.join(i, j));
      t.meet[i][j] = t.meet[j][i] = m;
      t.join[i][j] = t.join[j][i] = jn;
    }
  return t;
}

}  // namespace

DistributivityReport is_distributive(const Lattice& l,
                                     std::size_t check_guard) {
  DistributivityReport rep;
  const std::size_t n = l.size();
  if (n > check_guard) {
    if (l.is_downset_form()) {
      rep.note = "down-set lattice, distributive by construction";
      return rep;
    }
    throw GuardError("distributivity check refused above " +
                     std::to_string(check_guard) + " elements");
  }
  OpTables t = build_tables(l);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        std::uint32_t lhs = t.meet[t.join[a][b]][c];
        std::uint32_t rhs = t.join[t.meet[a][c]][t.meet[b][c]];
        if (lhs != rhs) {
          rep.ok = false;
          rep.witness = {l.label(a), l.label(b), l.label(c)};
          rep.note = "triple violates (a v b) ^ c = (a ^ c) v (b ^ c)";
          return rep;
        }
      }
  rep.note = "exhaustive triple check over " + std::to_string(n) + " elements";
  return rep;
}

bool is_frame(const Lattice& l, bool exhaustive, std::size_t check_guard) {
  const std::size_t n = l.size();
  if (n > check_guard) {
    if (l.is_downset_form()) return true;  // meets distribute over unions
    throw GuardError("frame check refused above " +
                     std::to_string(check_guard) + " elements");
  }
  OpTables t = build_tables(l);
  const std::size_t bot = l.bottom();
  if (exhaustive) {
    if (n > 12)
      throw GuardError("exhaustive frame check limited to 12 elements");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t set = 0; set < (1u << n); ++set) {
        std::size_t big = bot, rhs = bot;
        for (std::size_t b = 0; b < n; ++b)
          if (set & (1u << b)) {
            big = t.join[big][b];
            rhs = t.join[rhs][t.meet[a][b]];
          }
        if (t.meet[a][big] != rhs) return false;
      }
    return true;
  }
  for (std::size_t a = 0; a < n; ++a) {
    // pairs
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        if (t.meet[a][t.join[i][j]] != t.join[t.meet[a][i]][t.meet[a][j]])
          return false;
    // triples
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          std::uint32_t big = t.join[t.join[i][j]][k];
          std::uint32_t rhs =
              t.join[t.join[t.meet[a][i]][t.meet[a][j]]][t.meet[a][k]];
          if (t.meet[a][big] != rhs) return false;
        }
    // the whole lattice at once
    std::size_t big = bot, rhs = bot;
    for (std::size_t b = 0; b < n; ++b) {
      big = t.join[big][b];
      rhs = t.join[rhs][t.meet[a][b]];
    }
    if (t.meet[a][big] != rhs) return false;
  }
  return true;
}

// ----------------------------------------------------------------- young --

Lattice young_box_lattice(int max_rows, int max_cols, std::size_t guard) {
  BigInt expect = young_box_count(max_rows, max_cols);
  if (expect > guard)
    throw GuardError("Y^{" + std::to_string(max_rows) + "," +
                     std::to_string(max_cols) + "} has " + expect.str() +
                     " elements, past the guard");
  auto labeler = [cols = max_cols](const Poset& base, const Bits& m) {
    const int rows = static_cast<int>(base.size()) / cols;
    std::vector<int> parts;
    for (int r = 0; r < rows; ++r) {
      int cnt = 0;
      for (int c = 0; c < cols; ++c)
        if (m.test(static_cast<std::size_t>(r) * cols + c)) ++cnt;
      if (cnt == 0) break;
      parts.push_back(cnt);
    }
    return Partition(std::move(parts)).text();
  };
  Lattice l = Lattice::downsets(Poset::grid(max_rows, max_cols), guard, labeler);
  if (BigInt(l.size()) != expect)
    throw InternalError("box partition count disagrees with the binomial");
  return l;
}

// --------------------------------------------------------------- product --

Lattice Lattice::product(const std::vector<Lattice>& factors,
                         std::size_t guard) {
  if (factors.empty()) return from_leq({"()"}, {{true}});
  BigInt total = 1;
  for (const Lattice& f : factors) total *= f.size();
  if (total > guard)
    throw GuardError("product lattice has " + total.str() +
                     " elements, past the guard");
  const std::size_t n = static_cast<std::size_t>(total);

  bool alldown = std::all_of(factors.begin(), factors.end(),
                             [](const Lattice& f) { return f.is_downset_form(); });
  std::vector<std::size_t> radix(factors.size());
  for (std::size_t f = 0; f < factors.size(); ++f) radix[f] = factors[f].size();
  auto decode = [&](std::size_t id) {
    std::vector<std::size_t> idx(factors.size());
    for (std::size_t f = factors.size(); f-- > 0;) {
      idx[f] = id % radix[f];
      id /= radix[f];
    }
    return idx;
  };
  auto tuple_label = [&](const std::vector<std::size_t>& idx) {
    std::string out;
    for (std::size_t f = 0; f < factors.size(); ++f) {
      if (f) out += "×";
      out += factors[f].label(idx[f]);
    }
    return out;
  };

  if (alldown) {
    std::vector<std::size_t> offset(factors.size(), 0);
    std::vector<Poset> bases;
    for (std::size_t f = 0; f < factors.size(); ++f) {
      bases.push_back(factors[f].downset_base());
      if (f + 1 < factors.size())
        offset[f + 1] = offset[f] + bases[f].size();
    }
    const std::size_t nb = offset.back() + bases.back().size();
    std::vector<std::pair<Bits, std::string>> items;
    items.reserve(n);
    for (std::size_t id = 0; id < n; ++id) {
      auto idx = decode(id);
      Bits mask(nb);
      for (std::size_t f = 0; f < factors.size(); ++f) {
        const Bits& part = factors[f].downset_mask(idx[f]);
        for (std::size_t x = part.find_first(); x != Bits::npos;
             x = part.find_next(x))
          mask.set(offset[f] + x);
      }
      items.emplace_back(std::move(mask), tuple_label(idx));
    }
    std::sort(items.begin(), items.end(),
              [](const auto& a, const auto& b) {
                return mask_less(a.first, b.first);
              });
    Lattice l;
    DownForm form;
    form.base = Poset::disjoint_union(bases);
    form.elems.reserve(n);
    l.labels_.reserve(n);
    for (auto& [mask, label] : items) {
      form.elems.push_back(std::move(mask));
      l.labels_.push_back(std::move(label));
    }
    l.form_ = std::move(form);
    return l;
  }

  if (n > 4096)
    throw GuardError("mixed product too large to materialize as tables");
  TableForm t;
  t.up.assign(n, Bits(n));
  t.meet.assign(n, std::vector<std::uint32_t>(n, 0));
  t.join.assign(n, std::vector<std::uint32_t>(n, 0));
  std::vector<std::vector<std::size_t>> idx_of(n);
  for (std::size_t id = 0; id < n; ++id) idx_of[id] = decode(id);
  auto encode = [&](const std::vector<std::size_t>& idx) {
    std::size_t id = 0;
    for (std::size_t f = 0; f < factors.size(); ++f)
      id = id * radix[f] + idx[f];
    return id;
  };
  Lattice l;
  l.labels_.reserve(n);
  for (std::size_t id = 0; id < n; ++id) l.labels_.push_back(tuple_label(idx_of[id]));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bool le = true;
      std::vector<std::size_t> m(factors.size()), jn(factors.size());
      for (std::size_t f = 0; f < factors.size(); ++f) {
        le = le && factors[f].leq(idx_of[i][f], idx_of[j][f]);
        m[f] = factors[f].meet(idx_of[i][f], idx_of[j][f]);
        jn[f] = factors[f].join(idx_of[i][f], idx_of[j][f]);
      }
      if (le) t.up[i].set(j);
      t.meet[i][j] = static_cast<std::uint32_t>(encode(m));
      t.join[i][j] = static_cast<std::uint32_t>(encode(jn));
    }
  l.form_ = std::move(t);
  return l;
}

// -------------------------------------------------------------- factored --

FactoredLattice FactoredLattice::of(std::vector<Factor> factors) {
  for (const Factor& f : factors)
    if (const YoungShape* y = std::get_if<YoungShape>(&f))
      if (y->rows < 1 || y->cols < 1)
        throw DomainError("Young factor needs at least one row and column");
  FactoredLattice out;
  out.factors_ = std::move(factors);
  return out;
}

BigInt FactoredLattice::size() const {
  BigInt s = 1;
  for (const Factor& f : factors_) {
    if (const YoungShape* y = std::get_if<YoungShape>(&f))
      s *= binomial(y->rows + y->cols, y->rows);
    else
      s *= std::get<Lattice>(f).size();
  }
  return s;
}

std::string FactoredLattice::shape_text() const {
  if (factors_.empty()) return "(empty product)";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += " × ";
    if (const YoungShape* y = std::get_if<YoungShape>(&factors_[i]))
      out += "Y^{" + std::to_string(y->rows) + "," + std::to_string(y->cols) + "}";
    else
      out += "[" + std::to_string(std::get<Lattice>(factors_[i]).size()) +
             " elements]";
  }
  return out;
}

Lattice FactoredLattice::materialize(std::size_t guard) const {
  BigInt total = size();
  if (total > guard)
    throw GuardError("factored lattice has " + total.str() +
                     " elements, past the guard");
  std::vector<Lattice> mats;
  mats.reserve(factors_.size());
  for (const Factor& f : factors_) {
    if (const YoungShape* y = std::get_if<YoungShape>(&f))
      mats.push_back(young_box_lattice(y->rows, y->cols, guard));
    else
      mats.push_back(std::get<Lattice>(f));
  }
  return Lattice::product(mats, guard);
}

Poset FactoredLattice::join_irreducible_poset() const {
  std::vector<Poset> parts;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    Poset j = std::holds_alternative<YoungShape>(factors_[i])
                  ? Poset::grid(std::get<YoungShape>(factors_[i]).rows,
                                std::get<YoungShape>(factors_[i]).cols)
                  : std::get<Lattice>(factors_[i]).join_irreducible_poset();
    std::vector<std::string> labels;
    labels.reserve(j.size());
    for (std::size_t x = 0; x < j.size(); ++x)
      labels.push_back("f" + std::to_string(i + 1) + ":" + j.label(x));
    std::vector<std::vector<bool>> m(j.size(),
                                     std::vector<bool>(j.size(), false));
    for (std::size_t a = 0; a < j.size(); ++a)
      for (std::size_t b = 0; b < j.size(); ++b) m[a][b] = j.leq(a, b);
    parts.push_back(Poset::from_leq(std::move(labels), m));
  }
  return Poset::disjoint_union(parts);
}

// ----------------------------------------------------------- isomorphism --

namespace {

bool distributive_for_iso(const Lattice& l) {
  if (l.is_downset_form()) return true;
  return is_distributive(l).ok;  // table forms stay small
}

bool factored_distributive(const FactoredLattice& f) {
  for (const auto& fac : f.factors())
    if (const Lattice* l = std::get_if<Lattice>(&fac))
      if (!distributive_for_iso(*l)) return false;
  return true;
}

std::optional<IsoWitness> witness_from_posets(const Poset& a, const Poset& b) {
  auto map = poset_isomorphism(a, b);
  if (!map) return std::nullopt;
  IsoWitness w;
  w.via = "join-irreducibles";
  for (std::size_t i = 0; i < a.size(); ++i)
    w.mapping.emplace_back(a.label(i), b.label((*map)[i]));
  return w;
}

// split into connected components, keeping labels
std::vector<Poset> poset_components(const Poset& p) {
  auto comp = p.component_ids();
  int ncomp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<Poset> out;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (comp[i] == c) keep.push_back(i);
    std::vector<std::string> labels;
    for (std::size_t i : keep) labels.push_back(p.label(i));
    std::vector<std::vector<bool>> m(keep.size(),
                                     std::vector<bool>(keep.size(), false));
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = 0; j < keep.size(); ++j)
        m[i][j] = p.leq(keep[i], keep[j]);
    out.push_back(Poset::from_leq(std::move(labels), m));
  }
  return out;
}

}  // namespace

std::optional<IsoWitness> are_isomorphic(const Lattice& a, const Lattice& b) {
  if (a.size() != b.size()) return std::nullopt;
  bool da = distributive_for_iso(a);
  bool db = distributive_for_iso(b);
  if (da != db) return std::nullopt;
  if (da)
    return witness_from_posets(a.join_irreducible_poset(),
                               b.join_irreducible_poset());
  auto map = poset_isomorphism(a.order_poset(), b.order_poset());
  if (!map) return std::nullopt;
  IsoWitness w;
  w.via = "elements";
  for (std::size_t i = 0; i < a.size(); ++i)
    w.mapping.emplace_back(a.label(i), b.label((*map)[i]));
  return w;
}

std::optional<IsoWitness> are_isomorphic(const Lattice& a,
                                         const FactoredLattice& b) {
  if (BigInt(a.size()) != b.size()) return std::nullopt;
  bool da = distributive_for_iso(a);
  bool db = factored_distributive(b);
  if (da && db)
    return witness_from_posets(a.join_irreducible_poset(),
                               b.join_irreducible_poset());
  if (!da && !db) return are_isomorphic(a, b.materialize());
  return std::nullopt;
}

std::optional<IsoWitness> are_isomorphic(const FactoredLattice& a,
                                         const FactoredLattice& b) {
  if (a.size() != b.size()) return std::nullopt;
  if (!factored_distributive(a) || !factored_distributive(b))
    return are_isomorphic(a.materialize(), b);
  std::vector<Poset> ca = poset_components(a.join_irreducible_poset());
  std::vector<Poset> cb = poset_components(b.join_irreducible_poset());
  if (ca.size() != cb.size()) return std::nullopt;
  // isomorphism classes partition the components, so greedy matching works
  std::vector<char> used(cb.size(), 0);
  IsoWitness w;
  w.via = "join-irreducibles";
  for (const Poset& pa : ca) {
    bool matched = false;
    for (std::size_t j = 0; j < cb.size() && !matched; ++j) {
      if (used[j]) continue;
      auto map = poset_isomorphism(pa, cb[j]);
      if (!map) continue;
      used[j] = 1;
      matched = true;
      for (std::size_t i = 0; i < pa.size(); ++i)
        w.mapping.emplace_back(pa.label(i), cb[j].label((*map)[i]));
    }
    if (!matched) return std::nullopt;
  }
  return w;
}

// ------------------------------------------------------------------- dot --

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_dot(const Lattice& l, const std::string& name) {
  const std::size_t n = l.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return l.label(a) < l.label(b);
  });
  std::vector<int> height = l.element_heights();
  int maxh = height.empty() ? 0 : *std::max_element(height.begin(), height.end());

  std::ostringstream out;
  out << "digraph " << dot_quote(name) << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  for (std::size_t i : order) out << "  " << dot_quote(l.label(i)) << ";\n";
  for (int h = 0; h <= maxh; ++h) {
    std::vector<std::string> level;
    for (std::size_t i : order)
      if (height[i] == h) level.push_back(l.label(i));
    if (level.empty()) continue;
    out << "  { rank=same;";
    for (const std::string& s : level) out << ' ' << dot_quote(s) << ';';
    out << " }\n";
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [lo, hi] : l.hasse_edges())
    edges.emplace_back(l.label(lo), l.label(hi));
  std::sort(edges.begin(), edges.end());
  for (const auto& [lo, hi] : edges)
    out << "  " << dot_quote(lo) << " -> " << dot_quote(hi) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace colocal
