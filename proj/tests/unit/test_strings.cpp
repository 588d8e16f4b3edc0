#include "doctest.h"

#include <algorithm>
#include <set>

#include "colocal/string_module.hpp"
#include "colocal/strings.hpp"

using namespace colocal;

namespace {

const char* kLoopTail =
    "vertices: 1 2\n"
    "arrow a: 2 -> 2\n"
    "arrow b: 1 -> 2\n"
    "relation a a\n";

std::vector<std::string> texts(const QuiverAlgebra& qa,
                               const std::vector<StringWord>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(word_text(qa, w));
  return out;
}

}  // namespace

TEST_CASE("letter endpoints") {
  auto qa = parse_quiver_spec("vertices: 1 2\narrow a: 1 -> 2\n");
  Letter direct{qa.arrow_index("a"), false};
  Letter inv{qa.arrow_index("a"), true};
  CHECK(letter_source(qa, direct) == qa.vertex_index("1"));
  CHECK(letter_target(qa, direct) == qa.vertex_index("2"));
  // the inverse letter runs the arrow backwards
  CHECK(letter_source(qa, inv) == qa.vertex_index("2"));
  CHECK(letter_target(qa, inv) == qa.vertex_index("1"));
}

TEST_CASE("trivial words and serialization") {
  auto qa = parse_quiver_spec(kLoopTail);
  auto e1 = trivial_word(0);
  CHECK(e1.trivial());
  CHECK(word_text(qa, e1) == "e1");
  CHECK(position_vertex(qa, e1, 0) == 0);

  StringWord w{{{qa.arrow_index("b"), true},
                {qa.arrow_index("a"), false},
                {qa.arrow_index("b"), false}},
               -1};
  CHECK(word_text(qa, w) == "b~ a b");
}

TEST_CASE("inverse_word is an involution that flips and reverses") {
  auto qa = parse_quiver_spec(kLoopTail);
  StringWord w{{{qa.arrow_index("a"), false}, {qa.arrow_index("b"), false}},
               -1};
  auto wi = inverse_word(w);
  REQUIRE(wi.letters.size() == 2);
  CHECK(wi.letters[0].arrow == qa.arrow_index("b"));
  CHECK(wi.letters[0].inverse);
  CHECK(inverse_word(wi) == w);

  auto e = trivial_word(1);
  CHECK(inverse_word(e) == e);
}

TEST_CASE("validate_string rejects broken walks") {
  auto qa = parse_quiver_spec(kLoopTail);
  int a = qa.arrow_index("a"), b = qa.arrow_index("b");

  CHECK(!validate_string(qa, StringWord{{{a, false}, {b, false}}, -1}));

  // chaining violation: b then b does not compose
  CHECK(validate_string(qa, StringWord{{{b, false}, {b, false}}, -1}));
  // immediate backtracking a a~ is not reduced
  CHECK(validate_string(qa, StringWord{{{a, false}, {a, true}}, -1}));
  // a run containing the relation a a
  CHECK(validate_string(qa, StringWord{{{a, false}, {a, false}}, -1}));
  CHECK(validate_string(qa, StringWord{{{a, true}, {a, true}}, -1}));
  // out-of-range pieces
  CHECK(validate_string(qa, StringWord{{{7, false}}, -1}));
  CHECK(validate_string(qa, trivial_word(9)));
}

TEST_CASE("canonical form picks the smaller of the two orientations") {
  auto qa = parse_quiver_spec(kLoopTail);
  int a = qa.arrow_index("a"), b = qa.arrow_index("b");
  StringWord w{{{b, true}, {a, true}, {b, false}}, -1};
  auto c = canonical_string(w);
  CHECK(word_text(qa, c) == "b~ a b");
  CHECK(canonical_string(c) == c);
  CHECK(canonical_string(inverse_word(w)) == c);
}

TEST_CASE("word_less orders by length first") {
  int a = 0;
  StringWord one{{{a, false}}, -1};
  StringWord two{{{a, false}, {a, false}}, -1};
  CHECK(word_less(one, two));
  CHECK(!word_less(two, one));
  CHECK(word_less(trivial_word(0), one));
  CHECK(word_less(trivial_word(0), trivial_word(1)));
  // direct before inverse on the same arrow
  StringWord inv{{{a, true}}, -1};
  CHECK(word_less(one, inv));
}

TEST_CASE("enumerate_strings on the running examples") {
  auto a2 = parse_quiver_spec("vertices: 1 2\narrow a: 1 -> 2\n");
  CHECK(texts(a2, enumerate_strings(a2)) ==
        std::vector<std::string>{"e1", "e2", "a"});

  auto pullback = parse_quiver_spec(
      "vertices: 1 2 3\narrow a: 1 -> 3\narrow b: 2 -> 3\n");
  CHECK(texts(pullback, enumerate_strings(pullback)) ==
        std::vector<std::string>{"e1", "e2", "e3", "a", "b", "a~ b"});

  auto lt = parse_quiver_spec(kLoopTail);
  CHECK(texts(lt, enumerate_strings(lt)) ==
        std::vector<std::string>{"e1", "e2", "a", "b", "a b", "a~ b",
                                 "b~ a b"});
}

TEST_CASE("enumeration output is canonical, sorted, and valid") {
  auto lt = parse_quiver_spec(kLoopTail);
  auto ws = enumerate_strings(lt);
  for (std::size_t i = 0; i < ws.size(); ++i) {
    CHECK(!validate_string(lt, ws[i]));
    CHECK(canonical_string(ws[i]) == ws[i]);
    if (i + 1 < ws.size()) CHECK(word_less(ws[i], ws[i + 1]));
  }
}

TEST_CASE("unbounded presentations are refused without an explicit cap") {
  // two parallel arrows admit arbitrarily long zigzags
  auto kron = parse_quiver_spec("vertices: 1 2\narrow a: 1 -> 2\narrow b: 1 -> 2\n");
  CHECK_THROWS_AS(enumerate_strings(kron), DomainError);

  auto bounded = enumerate_strings(kron, 4);
  CHECK(bounded.size() == 10);
  for (const auto& w : bounded) CHECK(w.length() <= 4);
  // the zigzag of full length is present
  auto t = texts(kron, bounded);
  CHECK(std::find(t.begin(), t.end(), "a~ b a~ b") != t.end());
}

TEST_CASE("explicit caps also restrict finite enumerations") {
  auto lt = parse_quiver_spec(kLoopTail);
  CHECK(enumerate_strings(lt, 0).size() == 2);  // just the trivial words
  CHECK(enumerate_strings(lt, 1).size() == 4);
  CHECK(enumerate_strings(lt, 3).size() == 7);
}

TEST_CASE("detect_bands finds relation-free cycles") {
  auto bare_loop = parse_quiver_spec("vertices: 1\narrow a: 1 -> 1\n");
  auto bands = detect_bands(bare_loop);
  REQUIRE(bands.size() == 1);
  CHECK(word_text(bare_loop, bands[0]) == "a");

  CHECK(detect_bands(parse_quiver_spec(
            "vertices: 1\narrow a: 1 -> 1\nrelation a a\n"))
            .empty());
  CHECK(detect_bands(parse_quiver_spec("vertices: 1 2\narrow a: 1 -> 2\n"))
            .empty());
  // no directed cycle at all, despite infinitely many strings
  CHECK(detect_bands(parse_quiver_spec(
            "vertices: 1 2\narrow a: 1 -> 2\narrow b: 1 -> 2\n"))
            .empty());

  auto two_cycle = parse_quiver_spec(
      "vertices: 1 2\narrow a: 1 -> 2\narrow b: 2 -> 1\n");
  CHECK(detect_bands(two_cycle).size() == 1);
  // a single cut relation is enough to break the cycle
  CHECK(detect_bands(parse_quiver_spec(
            "vertices: 1 2\narrow a: 1 -> 2\narrow b: 2 -> 1\nrelation a b\n"))
            .empty());
}

TEST_CASE("detect_bands matches check_admissible on small presentations") {
  const char* cases[] = {
      "vertices: 1\narrow a: 1 -> 1\n",
      "vertices: 1\narrow a: 1 -> 1\nrelation a a\n",
      "vertices: 1 2\narrow a: 1 -> 2\narrow b: 2 -> 1\n",
      "vertices: 1 2\narrow a: 1 -> 2\narrow b: 2 -> 1\nrelation b a\n",
      "vertices: 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 3 -> 1\n"
      "relation a b c\n",
  };
  for (const char* text : cases) {
    auto qa = parse_quiver_spec(text);
    CHECK(detect_bands(qa).empty() == check_admissible(qa).pass);
  }
}

TEST_CASE("maximal_colocal_module realizes the profile") {
  auto lt = parse_quiver_spec(kLoopTail);
  auto w = maximal_colocal_module(lt, lt.vertex_index("2"));
  CHECK(!validate_string(lt, w));
  CHECK(word_text(lt, canonical_string(w)) == "b~ a b");

  auto m = string_module(lt, w);
  CHECK(m.total_dim() == 4);  // k + l + 1
  CHECK(m.socle_vertices(lt) == std::vector<int>{lt.vertex_index("2")});

  // every member of the socle class embeds into it
  for (const auto& s : socle_class(lt, lt.vertex_index("2")))
    CHECK(is_submodule(lt, s, w));

  // a vertex with empty profile yields its trivial string
  auto w1 = maximal_colocal_module(lt, lt.vertex_index("1"));
  CHECK(w1.trivial());

  auto a2 = parse_quiver_spec("vertices: 1 2\narrow a: 1 -> 2\n");
  auto wa = maximal_colocal_module(a2, 1);
  CHECK(word_text(a2, canonical_string(wa)) == "a");
}
