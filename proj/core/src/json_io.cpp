#include "colocal/json_io.hpp"

namespace colocal {

Json quiver_json(const QuiverAlgebra& qa) {
  Json j;
  j["vertices"] = qa.vertices;
  Json arrows = Json::array();
  for (const auto& a : qa.arrows)
    arrows.push_back({{"name", a.name},
                      {"src", qa.vertices[a.src]},
                      {"dst", qa.vertices[a.dst]}});
  j["arrows"] = std::move(arrows);
  Json rels = Json::array();
  for (const auto& r : qa.relations) {
    Json names = Json::array();
    for (int idx : r) names.push_back(qa.arrows[idx].name);
    rels.push_back(std::move(names));
  }
  j["relations"] = std::move(rels);
  return j;
}

Json condition_json(const ConditionReport& r) {
  Json j;
  j["condition"] = r.condition;
  j["pass"] = r.pass;
  if (!r.witness_vertices.empty()) j["witness_vertices"] = r.witness_vertices;
  if (!r.witness_arrows.empty()) j["witness_arrows"] = r.witness_arrows;
  if (!r.witness_paths.empty()) j["witness_paths"] = r.witness_paths;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

Json profile_json(const QuiverAlgebra& qa, const VertexPathProfile& p) {
  Json j;
  j["vertex"] = qa.vertices[p.vertex];
  j["k"] = p.k;
  j["l"] = p.l;
  Json pk = Json::array(), pl = Json::array();
  for (int a : p.path_k) pk.push_back(qa.arrows[a].name);
  for (int a : p.path_l) pl.push_back(qa.arrows[a].name);
  j["path_k"] = std::move(pk);
  j["path_l"] = std::move(pl);
  return j;
}

Json analysis_json(const QuiverAlgebra& qa, const AnalysisReport& r) {
  Json j;
  j["quiver"] = quiver_json(qa);
  j["admissible"] = condition_json(r.admissible);
  Json axioms = Json::array();
  for (const auto& a : r.string_axioms) axioms.push_back(condition_json(a));
  j["string_axioms"] = std::move(axioms);
  j["string_algebra"] = condition_json(r.string_algebra);
  j["c1"] = condition_json(r.c1);
  j["c2"] = condition_json(r.c2);
  if (r.c3) j["c3"] = condition_json(*r.c3);
  j["kronecker"] = r.kronecker;
  j["structural"] = condition_json(r.structural);
  j["colocal"] = r.colocal;
  if (r.colocal) {
    Json profs = Json::array();
    for (const auto& p : r.profiles) profs.push_back(profile_json(qa, p));
    j["profiles"] = std::move(profs);
    j["lattice_size"] = r.lattice_size.str();
  }
  return j;
}

Json string_json(const QuiverAlgebra& qa, const StringWord& w) {
  Json j;
  j["word"] = word_text(qa, w);
  j["length"] = w.length();
  return j;
}

Json module_json(const QuiverAlgebra& qa, const StringModule& m) {
  Json j = string_json(qa, m.word);
  Json dim = Json::object();
  for (std::size_t v = 0; v < qa.vertices.size(); ++v)
    if (m.dim[v]) dim[qa.vertices[v]] = m.dim[v];
  j["dim"] = std::move(dim);
  j["total_dim"] = m.total_dim();
  Json soc = Json::array(), top = Json::array();
  for (int v : m.socle_vertices(qa)) soc.push_back(qa.vertices[v]);
  for (int v : m.top_vertices(qa)) top.push_back(qa.vertices[v]);
  j["socle"] = std::move(soc);
  j["top"] = std::move(top);
  return j;
}

Json poset_json(const Poset& p) {
  Json j;
  Json labels = Json::array();
  for (std::size_t i = 0; i < p.size(); ++i) labels.push_back(p.label(i));
  j["elements"] = std::move(labels);
  Json covers = Json::array();
  for (auto [lo, hi] : p.cover_pairs())
    covers.push_back({p.label(lo), p.label(hi)});
  j["covers"] = std::move(covers);
  return j;
}

Json tau_json(const QuiverAlgebra& qa, const TauVerification& v) {
  Json j;
  j["ok"] = v.ok;
  Json entries = Json::array();
  for (const auto& e : v.entries) {
    Json je;
    je["base"] = qa.vertices[e.sets.base];
    je["successor"] = qa.vertices[e.sets.successor];
    auto verts = [&](const std::vector<int>& vs) {
      Json out = Json::array();
      for (int x : vs) out.push_back(qa.vertices[x]);
      return out;
    };
    je["tau"] = verts(e.sets.tau);
    je["tau_prime"] = verts(e.sets.tau_prime);
    je["tau_double_prime"] = verts(e.sets.tau_double_prime);
    je["prime_ok"] = e.prime_ok;
    je["double_checked"] = e.double_checked;
    je["double_ok"] = e.double_ok;
    entries.push_back(std::move(je));
  }
  j["entries"] = std::move(entries);
  return j;
}

Json main_theorem_json(const QuiverAlgebra& qa, const MainTheoremCheck& c) {
  Json j;
  j["ok"] = c.ok;
  j["brute_size"] = c.brute_size.str();
  j["structural_size"] = c.structural_size.str();
  Json factors = Json::array();
  for (const auto& [vertex, shape] : c.factors)
    factors.push_back({{"vertex", vertex},
                       {"young_rows", shape.rows},
                       {"young_cols", shape.cols}});
  j["factors"] = std::move(factors);
  if (c.witness) {
    Json w;
    w["via"] = c.witness->via;
    Json pairs = Json::array();
    for (const auto& [from, to] : c.witness->mapping)
      pairs.push_back({from, to});
    w["mapping"] = std::move(pairs);
    j["witness"] = std::move(w);
  }
  j["note"] = c.note;
  (void)qa;
  return j;
}

Json partition_json(const QuiverAlgebra& qa, const PartitionCheck& c) {
  Json j;
  j["ok"] = c.ok();
  j["cover_ok"] = c.cover_ok;
  j["disjoint_ok"] = c.disjoint_ok;
  j["closed_ok"] = c.closed_ok;
  Json sizes = Json::object();
  for (const auto& [vertex, n] : c.class_sizes) sizes[vertex] = n;
  j["class_sizes"] = std::move(sizes);
  if (!c.problems.empty()) j["problems"] = c.problems;
  (void)qa;
  return j;
}

}  // namespace colocal
