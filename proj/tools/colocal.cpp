// Command line front end: analyze | lattice | verify | strings | young.
// Exit codes: 0 pass/colocal, 1 not colocal or domain refusal, 2 bad
// input/flags, 3 verification mismatch.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "colocal/analysis.hpp"
#include "colocal/json_io.hpp"

namespace {

colocal::QuiverAlgebra load_quiver(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw colocal::ParseError(0, 0, "cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return colocal::parse_quiver_spec(ss.str());
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw colocal::DomainError("cannot write " + path);
  f << content;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void condition_line(std::ostream& out, const std::string& name,
                    const colocal::ConditionReport& r) {
  out << name << ": " << yes_no(r.pass);
  if (!r.pass && !r.detail.empty()) out << " (" << r.detail << ")";
  out << "\n";
}

std::string shape_name(const colocal::YoungShape& s) {
  return "Y^{" + std::to_string(s.rows) + "," + std::to_string(s.cols) + "}";
}

int run_analyze(const std::string& file, bool json) {
  colocal::QuiverAlgebra qa = load_quiver(file);
  colocal::AnalysisReport r = colocal::analyze(qa);
  if (json) {
    std::cout << colocal::analysis_json(qa, r).dump(2) << "\n";
  } else {
    std::cout << "quiver: " << qa.vertices.size() << " vertices, "
              << qa.arrows.size() << " arrows, " << qa.relations.size()
              << " relations\n";
    condition_line(std::cout, "admissible", r.admissible);
    for (std::size_t i = 0; i < r.string_axioms.size(); ++i)
      condition_line(std::cout, "string axiom " + std::to_string(i + 1),
                     r.string_axioms[i]);
    condition_line(std::cout, "string algebra", r.string_algebra);
    condition_line(std::cout, "C1 out-degree at most one", r.c1);
    condition_line(std::cout, "C2 in-degree at most two", r.c2);
    if (r.c3)
      condition_line(std::cout, "C3 unique relation-free composite", *r.c3);
    else
      std::cout << "C3 unique relation-free composite: skipped (needs C1)\n";
    std::cout << "kronecker pair: " << yes_no(r.kronecker) << "\n";
    std::cout << "colocal: " << yes_no(r.colocal) << "\n";
    if (r.colocal) {
      for (const auto& p : r.profiles)
        std::cout << "vertex " << qa.vertices[p.vertex] << ": k=" << p.k
                  << " l=" << p.l << " factor "
                  << shape_name({p.k + 1, p.l + 1}) << "\n";
      std::cout << "lattice size: " << r.lattice_size << "\n";
    }
  }
  return r.colocal ? 0 : 1;
}

int run_lattice(const std::string& file, const std::string& dot_path,
                std::size_t max_size) {
  colocal::QuiverAlgebra qa = load_quiver(file);
  auto verdict = colocal::is_colocal_type_structural(qa);
  if (!verdict.pass) {
    std::cout << "colocal: no (" << verdict.detail << ")\n";
    return 1;
  }
  std::cout << "colocal: yes\n";
  colocal::FactoredLattice fl = colocal::structural_lattice(qa);
  for (std::size_t v = 0; v < qa.vertices.size(); ++v) {
    colocal::VertexPathProfile p =
        colocal::vertex_path_profile(qa, static_cast<int>(v));
    std::cout << "vertex " << qa.vertices[v] << ": "
              << shape_name({p.k + 1, p.l + 1}) << "\n";
  }
  colocal::BigInt size = fl.size();
  std::cout << "lattice size: " << size << "\n";
  if (size > max_size) {
    std::cout << "materialized: no (size past --max-size "
              << max_size << ")\n";
    if (!dot_path.empty())
      std::cout << "dot skipped: lattice not materialized\n";
    return 0;
  }
  colocal::Lattice lat = fl.materialize(max_size);
  std::cout << "materialized: " << lat.size() << " elements, "
            << lat.hasse_edges().size() << " cover edges\n";
  if (!dot_path.empty()) {
    write_file(dot_path, colocal::to_dot(lat, "lattice"));
    std::cout << "dot written: " << dot_path << "\n";
  }
  return 0;
}

int run_verify(const std::string& file, bool json, std::size_t max_size,
               unsigned seed) {
  colocal::QuiverAlgebra qa = load_quiver(file);
  colocal::MainTheoremCheck mt = colocal::verify_main_theorem(qa, max_size);
  colocal::PartitionCheck pm = colocal::verify_partition_M(qa);
  colocal::TauVerification tv = colocal::verify_tau_equivalences(qa);
  colocal::Lattice brute = colocal::brute_force_lattice(qa, max_size);
  bool union_ok = colocal::check_union_property(brute, 1000000, seed);
  bool all = mt.ok && pm.ok() && tv.ok && union_ok;

  if (json) {
    colocal::Json j;
    j["main_theorem"] = colocal::main_theorem_json(qa, mt);
    j["socle_partition"] = colocal::partition_json(qa, pm);
    j["tau"] = colocal::tau_json(qa, tv);
    j["union_ok"] = union_ok;
    j["ok"] = all;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "main theorem: " << (mt.ok ? "ok" : "FAIL") << " (brute "
              << mt.brute_size << " = structural " << mt.structural_size
              << ", " << mt.note << ")\n";
    std::cout << "socle partition: " << (pm.ok() ? "ok" : "FAIL");
    std::cout << " (classes:";
    for (const auto& [vertex, n] : pm.class_sizes)
      std::cout << " " << vertex << "=" << n;
    std::cout << ")\n";
    for (const auto& p : pm.problems) std::cout << "  problem: " << p << "\n";
    std::cout << "tau equivalences: " << (tv.ok ? "ok" : "FAIL") << " ("
              << tv.entries.size() << " vertices checked)\n";
    std::cout << "union property: " << (union_ok ? "ok" : "FAIL") << "\n";
    std::cout << "verify: " << (all ? "all checks passed" : "FAILED") << "\n";
  }
  return all ? 0 : 3;
}

int run_strings(const std::string& file, bool json,
                std::optional<std::size_t> max_len) {
  colocal::QuiverAlgebra qa = load_quiver(file);
  auto words = colocal::enumerate_strings(qa, max_len);
  if (json) {
    colocal::Json arr = colocal::Json::array();
    for (const auto& w : words)
      arr.push_back(colocal::module_json(qa, colocal::string_module(qa, w)));
    std::cout << arr.dump(2) << "\n";
    return 0;
  }
  for (const auto& w : words) {
    colocal::StringModule m = colocal::string_module(qa, w);
    std::cout << colocal::word_text(qa, w) << " | dim";
    for (std::size_t v = 0; v < qa.vertices.size(); ++v)
      std::cout << ' ' << m.dim[v];
    std::cout << " | socle";
    for (int v : m.socle_vertices(qa)) std::cout << ' ' << qa.vertices[v];
    std::cout << " | top";
    for (int v : m.top_vertices(qa)) std::cout << ' ' << qa.vertices[v];
    std::cout << "\n";
  }
  std::cout << words.size() << " strings\n";
  return 0;
}

int run_young(int rows, int cols, const std::string& dot_path,
              std::size_t max_size) {
  colocal::Lattice l = colocal::young_box_lattice(rows, cols, max_size);
  std::cout << "Y^{" << rows << "," << cols << "} size " << l.size() << "\n";
  std::cout << "cover edges " << l.hasse_edges().size() << "\n";
  if (!dot_path.empty()) {
    std::string name =
        "Y_" + std::to_string(rows) + "_" + std::to_string(cols);
    write_file(dot_path, colocal::to_dot(l, name));
    std::cout << "dot written: " << dot_path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"colocal type and subobject-closed subcategory lattices of "
               "monomial quiver algebras"};
  app.require_subcommand(1);

  std::string file, dot_path;
  bool json = false;
  std::size_t max_size = colocal::kDefaultSizeGuard;
  long long max_len = -1;
  unsigned seed = 12345;
  int young_rows = 1, young_cols = 1;

  CLI::App* analyze = app.add_subcommand("analyze", "run every check");
  analyze->add_option("file", file, "quiver description file")->required();
  analyze->add_flag("--json", json, "emit JSON");

  CLI::App* lattice =
      app.add_subcommand("lattice", "factored and materialized lattice");
  lattice->add_option("file", file, "quiver description file")->required();
  lattice->add_option("--dot", dot_path, "write the Hasse diagram here");
  lattice->add_option("--max-size", max_size, "materialization bound");

  CLI::App* verify =
      app.add_subcommand("verify", "cross-check every theorem route");
  verify->add_option("file", file, "quiver description file")->required();
  verify->add_flag("--json", json, "emit JSON");
  verify->add_option("--max-size", max_size, "lattice size bound");
  verify->add_option("--seed", seed, "sampling seed for the union check");

  CLI::App* strings =
      app.add_subcommand("strings", "list canonical string modules");
  strings->add_option("file", file, "quiver description file")->required();
  strings->add_flag("--json", json, "emit JSON");
  strings->add_option("--max-len", max_len, "truncate enumeration length");

  CLI::App* young = app.add_subcommand("young", "box-bounded Young lattice");
  young->add_option("rows", young_rows, "box rows")->required();
  young->add_option("cols", young_cols, "box columns")->required();
  young->add_option("--dot", dot_path, "write the Hasse diagram here");
  young->add_option("--max-size", max_size, "materialization bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(analyze)) return run_analyze(file, json);
    if (app.got_subcommand(lattice))
      return run_lattice(file, dot_path, max_size);
    if (app.got_subcommand(verify))
      return run_verify(file, json, max_size, seed);
    if (app.got_subcommand(strings))
      return run_strings(file, json,
                         max_len < 0 ? std::nullopt
                                     : std::optional<std::size_t>(
                                           static_cast<std::size_t>(max_len)));
    if (app.got_subcommand(young))
      return run_young(young_rows, young_cols, dot_path, max_size);
  } catch (const colocal::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const colocal::InternalError& e) {
    std::cerr << "verification mismatch: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
