#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "colocal/conditions.hpp"
#include "colocal/corpus.hpp"

using namespace colocal;

TEST_CASE("corpus size, admissibility, and dedup") {
  auto corpus = generate_corpus();
  CHECK(corpus.size() >= 2000);

  std::set<std::string> texts;
  int larger = 0;
  for (const auto& qa : corpus) {
    CHECK(check_admissible(qa).pass);
    texts.insert(qa.to_spec_text());
    if (static_cast<int>(qa.vertices.size()) > 3) ++larger;
  }
  CHECK(texts.size() == corpus.size());  // no duplicate presentations
  CHECK(larger >= 100);                  // the random supplement is present
}

TEST_CASE("corpus is deterministic for a fixed seed") {
  CorpusOptions small;
  small.max_vertices = 2;
  small.max_arrows = 2;
  small.random_supplement = 10;
  auto a = generate_corpus(small);
  auto b = generate_corpus(small);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);

  small.seed = 999;
  auto c = generate_corpus(small);
  REQUIRE(c.size() >= 1);
  bool differs = c.size() != a.size();
  for (std::size_t i = 0; !differs && i < a.size(); ++i)
    differs = !(a[i] == c[i]);
  CHECK(differs);
}

TEST_CASE("corpus contains the expected small members") {
  auto corpus = generate_corpus();
  bool has_single_arrow = false, has_killed_two_cycle = false;
  for (const auto& qa : corpus) {
    if (qa.vertices.size() == 2 && qa.arrows.size() == 1 &&
        qa.relations.empty() && qa.arrows[0].src != qa.arrows[0].dst)
      has_single_arrow = true;
    if (qa.vertices.size() == 2 && qa.arrows.size() == 2 &&
        qa.relations.size() == 2 && qa.arrows[0].src != qa.arrows[0].dst &&
        qa.arrows[0].src == qa.arrows[1].dst &&
        qa.arrows[0].dst == qa.arrows[1].src)
      has_killed_two_cycle = true;
  }
  CHECK(has_single_arrow);
  CHECK(has_killed_two_cycle);
}

TEST_CASE("manifest round trip") {
  CorpusOptions small;
  small.max_vertices = 2;
  small.max_arrows = 2;
  small.random_supplement = 5;
  auto corpus = generate_corpus(small);
  REQUIRE(!corpus.empty());

  const std::string path = "corpus_roundtrip.tmp";
  write_corpus_manifest(path, corpus);

  std::ifstream in(path);
  REQUIRE(in.good());
  std::vector<QuiverAlgebra> back;
  std::string line, block;
  while (std::getline(in, line)) {
    if (line == "---") {
      back.push_back(parse_quiver_spec(block));
      block.clear();
    } else {
      block += line;
      block += '\n';
    }
  }
  if (!block.empty()) back.push_back(parse_quiver_spec(block));
  in.close();
  std::remove(path.c_str());

  REQUIRE(back.size() == corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) CHECK(back[i] == corpus[i]);
}
