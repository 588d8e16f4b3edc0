#include "colocal/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <string>

#include "colocal/conditions.hpp"

namespace colocal {

namespace {

using Cell = std::pair<int, int>;  // (src, dst), zero-based

std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// multiset of arrow cells, kept sorted; identified up to vertex relabeling
std::vector<Cell> apply_perm(const std::vector<Cell>& cells,
                             const std::vector<int>& sigma) {
  std::vector<Cell> out;
  out.reserve(cells.size());
  for (auto [s, d] : cells) out.emplace_back(sigma[s], sigma[d]);
  std::sort(out.begin(), out.end());
  return out;
}

struct Shape {
  int nv = 1;
  std::vector<Cell> cells;
};

std::vector<Shape> quiver_shapes(int max_vertices, int max_arrows) {
  std::vector<Shape> shapes;
  for (int nv = 1; nv <= max_vertices; ++nv) {
    std::vector<Cell> cells;
    for (int s = 0; s < nv; ++s)
      for (int d = 0; d < nv; ++d) cells.emplace_back(s, d);
    auto perms = permutations(nv);
    std::vector<Cell> cur;
    auto rec = [&](auto&& self, std::size_t from) -> void {
      bool canonical = true;
      for (const auto& sigma : perms)
        if (apply_perm(cur, sigma) < cur) {
          canonical = false;
          break;
        }
      if (canonical) shapes.push_back({nv, cur});
      if (static_cast<int>(cur.size()) == max_arrows) return;
      for (std::size_t c = from; c < cells.size(); ++c) {
        cur.push_back(cells[c]);
        self(self, c);
        cur.pop_back();
      }
    };
    rec(rec, 0);
  }
  return shapes;
}

QuiverAlgebra shape_algebra(int nv, const std::vector<Cell>& cells,
                            const std::vector<std::vector<int>>& rels) {
  std::vector<std::string> vertices;
  for (int v = 1; v <= nv; ++v) vertices.push_back(std::to_string(v));
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  for (std::size_t i = 0; i < cells.size(); ++i)
    arrows.emplace_back(std::string(1, static_cast<char>('a' + i)),
                        std::to_string(cells[i].first + 1),
                        std::to_string(cells[i].second + 1));
  std::vector<std::vector<std::string>> relations;
  for (const auto& r : rels) {
    std::vector<std::string> names;
    for (int idx : r) names.push_back(std::string(1, static_cast<char>('a' + idx)));
    relations.push_back(std::move(names));
  }
  return QuiverAlgebra::make(vertices, arrows, relations);
}

// composable arrow index sequences of length 2..maxlen, traversal order
std::vector<std::vector<int>> relation_candidates(const std::vector<Cell>& cells,
                                                  int maxlen) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self) -> void {
    if (cur.size() >= 2) out.push_back(cur);
    if (static_cast<int>(cur.size()) == maxlen) return;
    for (std::size_t a = 0; a < cells.size(); ++a) {
      if (!cur.empty() && cells[cur.back()].second != cells[a].first) continue;
      cur.push_back(static_cast<int>(a));
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  return out;
}

bool contains_factor(const std::vector<int>& longer,
                     const std::vector<int>& shorter) {
  if (shorter.size() > longer.size()) return false;
  for (std::size_t p = 0; p + shorter.size() <= longer.size(); ++p)
    if (std::equal(shorter.begin(), shorter.end(), longer.begin() + p))
      return true;
  return false;
}

bool antichain(const std::vector<std::vector<int>>& rels) {
  for (std::size_t i = 0; i < rels.size(); ++i)
    for (std::size_t j = 0; j < rels.size(); ++j)
      if (i != j && contains_factor(rels[i], rels[j])) return false;
  return true;
}

// arrow bijections induced by vertex permutations fixing the shape,
// combined with every way of permuting parallel arrows
std::vector<std::vector<int>> shape_automorphisms(int nv,
                                                  const std::vector<Cell>& cells) {
  const std::size_t na = cells.size();
  std::set<std::vector<int>> maps;
  for (const auto& sigma : permutations(nv)) {
    if (apply_perm(cells, sigma) != cells) continue;
    // assign each arrow an image with the permuted cell, all ways
    std::vector<int> img(na, -1);
    std::vector<char> used(na, 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == na) {
        maps.insert(img);
        return;
      }
      Cell want{sigma[cells[i].first], sigma[cells[i].second]};
      for (std::size_t j = 0; j < na; ++j) {
        if (used[j] || cells[j] != want) continue;
        img[i] = static_cast<int>(j);
        used[j] = 1;
        self(self, i + 1);
        used[j] = 0;
        img[i] = -1;
      }
    };
    rec(rec, 0);
  }
  return {maps.begin(), maps.end()};
}

std::vector<std::vector<int>> canonical_relation_set(
    std::vector<std::vector<int>> rels,
    const std::vector<std::vector<int>>& autos) {
  std::sort(rels.begin(), rels.end());
  std::vector<std::vector<int>> best = rels;
  for (const auto& map : autos) {
    std::vector<std::vector<int>> mapped;
    mapped.reserve(rels.size());
    for (const auto& r : rels) {
      std::vector<int> m;
      m.reserve(r.size());
      for (int idx : r) m.push_back(map[idx]);
      mapped.push_back(std::move(m));
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped < best) best = mapped;
  }
  return best;
}

}  // namespace

std::vector<QuiverAlgebra> generate_corpus(const CorpusOptions& opts) {
  std::vector<QuiverAlgebra> out;
  std::set<std::string> seen;

  auto emit = [&](const QuiverAlgebra& qa) {
    if (opts.admissible_only && !check_admissible(qa).pass) return;
    std::string key = qa.to_spec_text();
    if (seen.insert(key).second) out.push_back(qa);
  };

  for (const auto& [nv, cells] : quiver_shapes(opts.max_vertices, opts.max_arrows)) {
    auto autos = shape_automorphisms(nv, cells);
    auto cands = relation_candidates(cells, opts.max_relation_length);
    std::set<std::vector<std::vector<int>>> chosen;

    auto consider = [&](const std::vector<std::vector<int>>& rels) {
      if (!antichain(rels)) return;
      auto canon = canonical_relation_set(rels, autos);
      if (!chosen.insert(canon).second) return;
      emit(shape_algebra(nv, cells, canon));
    };

    consider({});
    const std::size_t nc = cands.size();
    for (std::size_t i = 0; i < nc; ++i) {
      if (opts.max_relations < 1) break;
      consider({cands[i]});
      for (std::size_t j = i + 1; j < nc && opts.max_relations >= 2; ++j) {
        consider({cands[i], cands[j]});
        for (std::size_t k = j + 1; k < nc && opts.max_relations >= 3; ++k)
          consider({cands[i], cands[j], cands[k]});
      }
    }
  }

  // seeded supplement of larger instances, leaning toward single out-arrows
  std::mt19937 rng(opts.seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  int made = 0;
  for (int attempt = 0; made < opts.random_supplement && attempt < opts.random_supplement * 300;
       ++attempt) {
    std::uniform_int_distribution<int> nv_pick(opts.max_vertices + 1,
                                               opts.max_vertices + 3);
    int nv = nv_pick(rng);
    std::uniform_int_distribution<int> v_pick(0, nv - 1);
    std::vector<Cell> cells;
    for (int v = 0; v < nv; ++v) {
      double r = coin(rng);
      int outs = r < 0.15 ? 0 : r < 0.9 ? 1 : 2;
      for (int k = 0; k < outs; ++k) cells.emplace_back(v, v_pick(rng));
    }
    if (cells.size() > 8) cells.resize(8);
    std::sort(cells.begin(), cells.end());
    auto cands = relation_candidates(cells, opts.max_relation_length);
    std::shuffle(cands.begin(), cands.end(), rng);
    std::uniform_int_distribution<int> k_pick(
        0, std::min<int>(4, static_cast<int>(cands.size())));
    std::vector<std::vector<int>> rels;
    for (int want = k_pick(rng); static_cast<int>(rels.size()) < want &&
                                 !cands.empty();) {
      bool grew = false;
      for (auto it = cands.begin(); it != cands.end(); ++it) {
        auto trial = rels;
        trial.push_back(*it);
        if (antichain(trial)) {
          rels = std::move(trial);
          cands.erase(it);
          grew = true;
          break;
        }
        }
      if (!grew) break;
    }
    std::sort(rels.begin(), rels.end());
    QuiverAlgebra qa = shape_algebra(nv, cells, rels);
    std::size_t before = out.size();
    emit(qa);
    if (out.size() > before) ++made;
  }
  return out;
}

void write_corpus_manifest(const std::string& path,
                           const std::vector<QuiverAlgebra>& corpus) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot write manifest: " + path);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (i) f << "---\n";
    f << corpus[i].to_spec_text();
  }
}

}  // namespace colocal
