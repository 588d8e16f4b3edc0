#include "colocal/string_module.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace colocal {

StringModule string_module(const QuiverAlgebra& qa, const StringWord& w) {
  if (auto defect = validate_string(qa, w))
    throw DomainError("not a string: " + *defect);
  StringModule m;
  m.word = w;
  const std::size_t n = w.length();
  m.position_vertex.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    m.position_vertex[i] = position_vertex(qa, w, i);
  m.dim.assign(qa.vertices.size(), 0);
  for (int v : m.position_vertex) ++m.dim[v];

  // letter i sits between positions i and i+1; a direct letter maps the
  // deeper position onto the shallower one, an inverse letter the reverse
  std::vector<char> has_out(n + 1, 0), has_in(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Letter& l = w.letters[i];
    int from = l.inverse ? static_cast<int>(i) : static_cast<int>(i) + 1;
    int to = l.inverse ? static_cast<int>(i) + 1 : static_cast<int>(i);
    m.actions.push_back({l.arrow, from, to});
    has_out[from] = 1;
    has_in[to] = 1;
  }
  std::sort(m.actions.begin(), m.actions.end(),
            [](const StringModule::Action& x, const StringModule::Action& y) {
              return std::tie(x.arrow, x.from) < std::tie(y.arrow, y.from);
            });
  for (std::size_t i = 0; i <= n; ++i) {
    if (!has_out[i]) m.socle_positions.push_back(static_cast<int>(i));
    if (!has_in[i]) m.top_positions.push_back(static_cast<int>(i));
  }
  return m;
}

std::vector<int> StringModule::socle_vertices(const QuiverAlgebra&) const {
  std::vector<int> out;
  for (int p : socle_positions) out.push_back(position_vertex[p]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> StringModule::top_vertices(const QuiverAlgebra&) const {
  std::vector<int> out;
  for (int p : top_positions) out.push_back(position_vertex[p]);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Does `sub` embed into `sup` as a submodule at offset p?  The matched
// segment must be closed under the action: nothing may map out of it, which
// pins the boundary letters' orientations.
bool occurs_as_submodule(const QuiverAlgebra& qa, const StringWord& sub,
                         const StringWord& sup, std::size_t p) {
  const std::size_t n = sub.length();
  const std::size_t big = sup.length();
  if (p + n > big) return false;
  if (sub.trivial()) {
    if (position_vertex(qa, sup, p) != sub.base) return false;
  } else {
    for (std::size_t i = 0; i < n; ++i)
      if (!(sup.letters[p + i] == sub.letters[i])) return false;
  }
  // positions p..p+n of sup host the copy; the flanking letters (if any)
  // must point into the segment, not out of it
  if (p > 0 && !sup.letters[p - 1].inverse) return false;
  if (p + n < big && sup.letters[p + n].inverse) return false;
  return true;
}

}  // namespace

bool is_submodule(const QuiverAlgebra& qa, const StringWord& sub,
                  const StringWord& sup) {
  StringWord subs[2] = {sub, inverse_word(sub)};
  StringWord sups[2] = {sup, inverse_word(sup)};
  for (const auto& s : subs)
    for (const auto& big : sups)
      for (std::size_t p = 0; p + s.length() <= big.length(); ++p)
        if (occurs_as_submodule(qa, s, big, p)) return true;
  return false;
}

Poset submodule_poset(const QuiverAlgebra& qa,
                      const std::vector<StringWord>& words) {
  std::set<StringWord, decltype(&word_less)> canon(&word_less);
  for (const auto& w : words) {
    if (auto defect = validate_string(qa, w))
      throw DomainError("not a string: " + *defect);
    canon.insert(canonical_string(w));
  }
  std::vector<StringWord> ws(canon.begin(), canon.end());
  const std::size_t n = ws.size();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& w : ws) labels.push_back(word_text(qa, w));
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      leq[i][j] = is_submodule(qa, ws[i], ws[j]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (leq[i][j] && leq[j][i])
        throw InternalError("distinct strings mutually embed: " + labels[i] +
                            " / " + labels[j]);
  return Poset::from_leq(labels, leq);
}

std::vector<StringWord> socle_class(const QuiverAlgebra& qa, int vertex) {
  std::vector<StringWord> out;
  for (const auto& w : enumerate_strings(qa)) {
    StringModule m = string_module(qa, w);
    auto soc = m.socle_vertices(qa);
    if (soc.size() == 1 && soc[0] == vertex) out.push_back(w);
  }
  return out;
}

}  // namespace colocal
