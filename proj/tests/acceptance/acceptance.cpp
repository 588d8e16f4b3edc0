// End-to-end acceptance gate.  Runs the eight release criteria and prints
// one PASS/FAIL line per criterion; the exit code is the failure count.
//
//   acceptance <path-to-cli> <path-to-stored-y33-dot>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "colocal/analysis.hpp"
#include "colocal/conditions.hpp"
#include "colocal/corpus.hpp"
#include "colocal/lattice.hpp"
#include "colocal/quiver.hpp"
#include "colocal/string_module.hpp"
#include "colocal/strings.hpp"
#include "colocal/young.hpp"

using namespace colocal;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) throw std::runtime_error("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

const char* kA2 = "vertices: 1 2\narrow a: 1 -> 2\n";
const char* kTwoIn =
    "vertices: 1 2 3\narrow a: 1 -> 3\narrow b: 2 -> 3\n";
const char* kLoopTail =
    "vertices: 1 2\narrow a: 2 -> 2\narrow b: 1 -> 2\nrelation a a\n";

// ------------------------------------------------------------ criterion 1 --
// The CLI renders the 3x3 box lattice to dot, byte-identical to the stored
// page, with 20 elements and 30 cover edges, in under a second.

std::string criterion_young_dot(const std::string& cli,
                                const std::string& golden_path) {
  const std::string out_path = "acceptance_y33.out";
  const std::string dot_path = "acceptance_y33.dot";
  const std::string cmd = "\"" + cli + "\" young 3 3 --dot " + dot_path +
                          " > " + out_path + " 2>&1";
  auto t0 = Clock::now();
  int rc = std::system(cmd.c_str());
  double secs = seconds_since(t0);
  std::string console = read_file(out_path);
  std::remove(out_path.c_str());
  if (rc != 0) throw std::runtime_error("cli exited with status " +
                                        std::to_string(rc));
  std::string got = read_file(dot_path);
  std::remove(dot_path.c_str());
  if (console.find("size 20") == std::string::npos ||
      console.find("cover edges 30") == std::string::npos)
    throw std::runtime_error("summary lines missing from the cli output");
  std::string want = read_file(golden_path);
  if (got != want) throw std::runtime_error("dot output differs from " +
                                            golden_path);
  // count the structure straight off the stored text
  int nodes = 0, edges = 0;
  std::istringstream lines(want);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find(" -> ") != std::string::npos) ++edges;
    else if (line.rfind("  \"", 0) == 0) ++nodes;
  }
  if (nodes != 20) throw std::runtime_error("expected 20 node lines, got " +
                                            std::to_string(nodes));
  if (edges != 30) throw std::runtime_error("expected 30 cover edges, got " +
                                            std::to_string(edges));
  if (secs >= 1.0) throw std::runtime_error("took " + fmt(secs) + "s");
  return "young 3 3 --dot matches the stored page, 20 elements, 30 edges, " +
         fmt(secs) + "s";
}

// ------------------------------------------------------------ criterion 2 --
// Across the whole corpus the condition route and the structural route give
// the same verdict, within a minute.

std::string criterion_route_agreement(const std::vector<QuiverAlgebra>& corpus,
                                      double gen_secs,
                                      std::vector<const QuiverAlgebra*>& colocal) {
  auto t0 = Clock::now();
  int disagree = 0;
  for (const auto& qa : corpus) {
    bool adm = check_admissible(qa).pass;
    bool str = is_string_algebra(qa).pass;
    bool c1 = check_C1(qa).pass;
    bool c2 = check_C2(qa).pass;
    bool c3 = adm && c1 && check_C3(qa).pass;
    bool conditions = adm && str && c1 && c2 && c3;
    bool structural = is_colocal_type_structural(qa).pass;
    if (conditions != structural) ++disagree;
    if (structural) colocal.push_back(&qa);
  }
  double secs = gen_secs + seconds_since(t0);
  if (corpus.size() < 2000)
    throw std::runtime_error("corpus has only " +
                             std::to_string(corpus.size()) + " members");
  if (disagree != 0)
    throw std::runtime_error(std::to_string(disagree) + " verdicts disagree");
  if (secs >= 60.0) throw std::runtime_error("took " + fmt(secs) + "s");
  return std::to_string(corpus.size()) + " presentations, " +
         std::to_string(colocal.size()) +
         " colocal, both routes agree on every verdict, " + fmt(secs) + "s";
}

// ------------------------------------------------------------ criterion 3 --
// Both lattice constructions match on every tractable colocal member, and
// the three worked presentations land on their known sizes.

std::string criterion_main_theorem(
    const std::vector<const QuiverAlgebra*>& colocal,
    std::vector<std::pair<const QuiverAlgebra*, Lattice>>& brute_cache) {
  struct Known {
    const char* text;
    int size;
  } known[] = {{kA2, 6}, {kTwoIn, 24}, {kLoopTail, 20}};
  for (const auto& k : known) {
    auto check = verify_main_theorem(parse_quiver_spec(k.text));
    if (!check.ok || check.brute_size != k.size)
      throw std::runtime_error("known presentation missed size " +
                               std::to_string(k.size));
  }

  int matched = 0, skipped = 0;
  for (const QuiverAlgebra* qa : colocal) {
    if (structural_lattice(*qa).size() > kDefaultSizeGuard) {
      ++skipped;
      continue;
    }
    auto check = verify_main_theorem(*qa);
    if (!check.ok || !check.witness.has_value())
      throw std::runtime_error("lattice mismatch on:\n" + qa->to_spec_text());
    brute_cache.emplace_back(qa, brute_force_lattice(*qa));
    ++matched;
  }
  if (matched == 0) throw std::runtime_error("no colocal member checked");
  return std::to_string(matched) + " colocal members matched brute against "
         "structural (" + std::to_string(skipped) +
         " past the size guard), 6 = 2*3, 24 = 2*2*6, 20 = 2*10 confirmed";
}

// ------------------------------------------------------------ criterion 4 --
// Box-bounded partition counts equal binomial coefficients, with the count
// and the coefficient each computed from scratch here.

int count_partitions_rec(int rows_left, int col_cap, int prev) {
  // weakly decreasing parts, each <= prev, at most rows_left more rows
  int total = 1;  // stop here
  if (rows_left == 0) return total;
  for (int part = 1; part <= std::min(col_cap, prev); ++part)
    total += count_partitions_rec(rows_left - 1, col_cap, part);
  return total;
}

std::string criterion_young_counts() {
  // Pascal triangle, no library calls
  long long pascal[13][13] = {};
  for (int n = 0; n <= 12; ++n) {
    pascal[n][0] = 1;
    for (int k = 1; k <= n; ++k)
      pascal[n][k] = pascal[n - 1][k - 1] + (k <= n - 1 ? pascal[n - 1][k] : 0);
  }
  int checked = 0;
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 6; ++n) {
      long long want = pascal[m + n][m];
      long long direct = count_partitions_rec(m, n, n);
      auto listed = partitions_in_box(m, n);
      std::set<std::string> distinct;
      for (const auto& p : listed) distinct.insert(p.text());
      if (direct != want)
        throw std::runtime_error("direct count disagrees at " +
                                 std::to_string(m) + "," + std::to_string(n));
      if (static_cast<long long>(listed.size()) != want ||
          static_cast<long long>(distinct.size()) != want ||
          young_box_count(m, n) != want ||
          BigInt(young_box_lattice(m, n).size()) != want)
        throw std::runtime_error("library count disagrees at " +
                                 std::to_string(m) + "," + std::to_string(n));
      ++checked;
    }
  return "all " + std::to_string(checked) +
         " boxes up to 6x6 count C(m+n,m), against a local recursion and a "
         "local Pascal triangle";
}

// ------------------------------------------------------------ criterion 5 --
// Rebuilding each small lattice from its join-irreducibles recovers it, and
// the distributivity and frame verdicts agree everywhere they both run.

std::string criterion_birkhoff(
    const std::vector<std::pair<const QuiverAlgebra*, Lattice>>& brute_cache) {
  int round_tripped = 0;
  for (const auto& [qa, l] : brute_cache) {
    (void)qa;
    if (l.size() > 96) continue;  // keep the triple checks honest
    // strip the down-set structure: rebuild as a bare order table
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < l.size(); ++i) labels.push_back(l.label(i));
    std::vector<std::vector<bool>> leq(l.size(),
                                       std::vector<bool>(l.size(), false));
    for (std::size_t i = 0; i < l.size(); ++i)
      for (std::size_t j = 0; j < l.size(); ++j) leq[i][j] = l.leq(i, j);
    Lattice bare = Lattice::from_leq(std::move(labels), leq);

    auto rep = is_distributive(bare);
    bool frame = is_frame(bare);
    if (!rep.ok || !frame)
      throw std::runtime_error("subobject lattice judged non-distributive");
    Lattice rebuilt = Lattice::downsets(bare.join_irreducible_poset());
    if (!are_isomorphic(rebuilt, bare).has_value())
      throw std::runtime_error("round trip through join-irreducibles failed");
    ++round_tripped;
  }
  if (round_tripped < 50)
    throw std::runtime_error("only " + std::to_string(round_tripped) +
                             " lattices small enough to round-trip");

  // the classic non-distributive five-element lattices must be rejected
  std::vector<std::vector<bool>> m3(5, std::vector<bool>(5, false));
  for (int i = 0; i < 5; ++i) m3[i][i] = true;
  for (int i = 1; i <= 3; ++i) m3[0][i] = m3[i][4] = true;
  m3[0][4] = true;
  Lattice diamond = Lattice::from_leq({"0", "a", "b", "c", "1"}, m3);
  std::vector<std::vector<bool>> n5(5, std::vector<bool>(5, false));
  for (int i = 0; i < 5; ++i) n5[i][i] = true;
  n5[0][1] = n5[0][2] = n5[0][3] = n5[0][4] = true;
  n5[1][3] = n5[1][4] = n5[2][4] = n5[3][4] = true;
  Lattice pentagon = Lattice::from_leq({"0", "a", "b", "c", "1"}, n5);
  if (is_distributive(diamond).ok || is_frame(diamond) ||
      is_distributive(pentagon).ok || is_frame(pentagon))
    throw std::runtime_error("a non-distributive classic slipped through");

  return std::to_string(round_tripped) +
         " subobject lattices survive the join-irreducible round trip; "
         "distributive and frame verdicts agree, diamond and pentagon refused";
}

// ------------------------------------------------------------ criterion 6 --
// Module-theoretic shape of the colocal members: simple socles, two-element
// tops on mixed strings, class sizes (k+1)(l+1), and the socle partition.

std::string criterion_module_shape(
    const std::vector<const QuiverAlgebra*>& colocal) {
  std::size_t modules = 0, mixed = 0;
  for (const QuiverAlgebra* qa : colocal) {
    for (const auto& w : enumerate_strings(*qa)) {
      StringModule m = string_module(*qa, w);
      ++modules;
      if (m.socle_positions.size() != 1)
        throw std::runtime_error("socle not simple on " + word_text(*qa, w));
      bool has_dir = false, has_inv = false;
      for (const auto& letter : w.letters)
        (letter.inverse ? has_inv : has_dir) = true;
      if (has_dir && has_inv) {
        ++mixed;
        if (m.top_positions.size() != 2)
          throw std::runtime_error("mixed string without a length-2 top: " +
                                   word_text(*qa, w));
      }
    }
    for (std::size_t v = 0; v < qa->vertices.size(); ++v) {
      auto profile = vertex_path_profile(*qa, static_cast<int>(v));
      auto cls = socle_class(*qa, static_cast<int>(v));
      std::size_t want = static_cast<std::size_t>(profile.k + 1) *
                         static_cast<std::size_t>(profile.l + 1);
      if (cls.size() != want)
        throw std::runtime_error("socle class at " + qa->vertices[v] +
                                 " has " + std::to_string(cls.size()) +
                                 " members, wanted " + std::to_string(want));
    }
    auto part = verify_partition_M(*qa);
    if (!part.ok())
      throw std::runtime_error("socle classes fail to partition:\n" +
                               qa->to_spec_text());
  }
  return std::to_string(modules) + " string modules all have simple socle; " +
         std::to_string(mixed) +
         " mixed strings all have two-element top; every class has "
         "(k+1)(l+1) members and the classes partition the strings";
}

// ------------------------------------------------------------ criterion 7 --
// The three descriptions of the tau set coincide wherever they should.

std::string criterion_tau(const std::vector<QuiverAlgebra>& corpus) {
  int members = 0, entries = 0, long_checked = 0;
  for (const auto& qa : corpus) {
    if (!check_C1(qa).pass) continue;
    auto v = verify_tau_equivalences(qa);
    if (v.entries.empty()) continue;
    ++members;
    for (const auto& e : v.entries) {
      ++entries;
      if (!e.prime_ok)
        throw std::runtime_error("path and module routes disagree on:\n" +
                                 qa.to_spec_text());
      if (e.double_checked) {
        ++long_checked;
        if (!e.double_ok)
          throw std::runtime_error("unbounded witness route disagrees on:\n" +
                                   qa.to_spec_text());
      }
    }
    if (!v.ok) throw std::runtime_error("verification flag disagrees");
  }
  if (members < 100)
    throw std::runtime_error("only " + std::to_string(members) +
                             " members were applicable");
  return std::to_string(entries) + " vertex checks across " +
         std::to_string(members) + " presentations: module enumeration "
         "matches path combinatorics, " + std::to_string(long_checked) +
         " of them against unbounded witnesses";
}

// ------------------------------------------------------------ criterion 8 --
// Joins in every computed subobject lattice carry exactly the union of the
// two member sets.

std::string criterion_union(
    const std::vector<std::pair<const QuiverAlgebra*, Lattice>>& brute_cache) {
  int exhaustive = 0, sampled = 0;
  for (const auto& [qa, l] : brute_cache) {
    if (!check_union_property(l))
      throw std::runtime_error("a join dropped or invented a member on:\n" +
                               qa->to_spec_text());
    (l.size() <= 1000 ? exhaustive : sampled) += 1;
  }
  if (exhaustive < 50)
    throw std::runtime_error("only " + std::to_string(exhaustive) +
                             " lattices checked exhaustively");
  return std::to_string(exhaustive) +
         " lattices checked over every pair, " + std::to_string(sampled) +
         " larger ones sampled: joins always carry exactly the union";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: %s <cli-binary> <stored-y33-dot>\n", argv[0]);
    return 3;
  }
  const std::string cli = argv[1];
  const std::string golden = argv[2];

  int failures = 0;
  auto run = [&](int num, const std::function<std::string()>& body) {
    try {
      std::string detail = body();
      std::printf("PASS %d: %s\n", num, detail.c_str());
    } catch (const std::exception& e) {
      std::printf("FAIL %d: %s\n", num, e.what());
      ++failures;
    }
    std::fflush(stdout);
  };

  auto gen0 = Clock::now();
  std::vector<QuiverAlgebra> corpus = generate_corpus();
  double gen_secs = seconds_since(gen0);
  std::vector<const QuiverAlgebra*> colocal;
  std::vector<std::pair<const QuiverAlgebra*, Lattice>> brute_cache;

  run(1, [&] { return criterion_young_dot(cli, golden); });
  run(2, [&] { return criterion_route_agreement(corpus, gen_secs, colocal); });
  run(3, [&] { return criterion_main_theorem(colocal, brute_cache); });
  run(4, [&] { return criterion_young_counts(); });
  run(5, [&] { return criterion_birkhoff(brute_cache); });
  run(6, [&] { return criterion_module_shape(colocal); });
  run(7, [&] { return criterion_tau(corpus); });
  run(8, [&] { return criterion_union(brute_cache); });

  return failures;
}
