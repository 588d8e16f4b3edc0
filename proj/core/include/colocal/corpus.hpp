#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "colocal/quiver.hpp"

namespace colocal {

struct CorpusOptions {
  int max_vertices = 3;
  int max_arrows = 4;
  int max_relation_length = 3;  // relations use paths of length 2..this
  int max_relations = 3;        // per presentation
  int random_supplement = 150;  // extra larger instances
  std::uint32_t seed = 12345;
  bool admissible_only = true;
};

// Every quiver within the bounds up to vertex relabeling, crossed with the
// antichain relation sets over its short paths, deduplicated up to quiver
// automorphism, then admissibility-filtered; plus a seeded random batch of
// larger presentations.  Deterministic for fixed options.
std::vector<QuiverAlgebra> generate_corpus(const CorpusOptions& opts = {});

// One spec-format block per member, separated by "---" lines.
void write_corpus_manifest(const std::string& path,
                           const std::vector<QuiverAlgebra>& corpus);

}  // namespace colocal
