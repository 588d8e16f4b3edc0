#pragma once

#include <string>
#include <vector>

#include "colocal/poset.hpp"
#include "colocal/strings.hpp"

namespace colocal {

// The representation attached to a string: one basis point per position,
// each arrow acting by partial shifts.  An action moves the basis point at
// the arrow's source vertex side to the one at its target vertex side.
struct StringModule {
  StringWord word;
  std::vector<int> position_vertex;  // vertex of each basis position
  std::vector<int> dim;              // dimension vector, indexed by vertex
  struct Action {
    int arrow;
    int from;  // basis position index
    int to;

    friend bool operator==(const Action&, const Action&) = default;
  };
  std::vector<Action> actions;       // sorted by (arrow, from)
  std::vector<int> socle_positions;  // no outgoing action
  std::vector<int> top_positions;    // not in the image of any action

  std::size_t total_dim() const { return position_vertex.size(); }
  std::vector<int> socle_vertices(const QuiverAlgebra& qa) const;
  std::vector<int> top_vertices(const QuiverAlgebra& qa) const;
};

// Builds the module of a valid string; throws DomainError on an invalid
// word.
StringModule string_module(const QuiverAlgebra& qa, const StringWord& w);

// Whether M(sub) embeds as a submodule of M(sup): some orientation of sup
// contains an occurrence of sub (either orientation) that is preceded by an
// inverse letter or the word start, and followed by a direct letter or the
// word end.
bool is_submodule(const QuiverAlgebra& qa, const StringWord& sub,
                  const StringWord& sup);

// The poset of the given strings under is_submodule.  Words are
// canonicalized and sorted; labels are their serializations.  Throws
// InternalError if the relation fails antisymmetry (a canonicalization bug).
Poset submodule_poset(const QuiverAlgebra& qa,
                      const std::vector<StringWord>& words);

// All strings whose module embeds into the maximal module with socle at
// `vertex`; canonical and sorted.  Requires colocal type.
std::vector<StringWord> socle_class(const QuiverAlgebra& qa, int vertex);

}  // namespace colocal
