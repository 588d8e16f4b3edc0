#pragma once

#include <optional>
#include <string>
#include <vector>

#include "colocal/conditions.hpp"
#include "colocal/quiver.hpp"

namespace colocal {

// One letter of a walk: an arrow traversed forward (direct) or backward
// (inverse).
struct Letter {
  int arrow = -1;
  bool inverse = false;

  friend bool operator==(const Letter&, const Letter&) = default;
};

// s/e of a letter, with the usual extension to inverses: the inverse letter
// starts where the arrow ends.
int letter_source(const QuiverAlgebra& qa, const Letter& l);
int letter_target(const QuiverAlgebra& qa, const Letter& l);

// A reduced walk.  Letters are stored left to right with the chaining
// condition s(letter[i]) == e(letter[i+1]); the rightmost letter is
// traversed first.  The empty walk is the trivial string at `base`.
struct StringWord {
  std::vector<Letter> letters;
  int base = -1;  // used only when letters is empty

  bool trivial() const { return letters.empty(); }
  std::size_t length() const { return letters.size(); }

  friend bool operator==(const StringWord&, const StringWord&) = default;
};

StringWord trivial_word(int vertex);
StringWord inverse_word(const StringWord& w);

// Vertex under basis position i (0 <= i <= length).
int position_vertex(const QuiverAlgebra& qa, const StringWord& w, std::size_t i);

// Total order used for canonical forms and deterministic listings: shorter
// words first, then letters compared by (arrow name rank, direct < inverse),
// trivial words by base vertex.
bool word_less(const StringWord& a, const StringWord& b);

// Returns a defect description, or nullopt when w is a string: the letters
// chain, no letter is immediately undone by its inverse, and no maximal
// run of equally oriented letters contains a relation.
std::optional<std::string> validate_string(const QuiverAlgebra& qa,
                                           const StringWord& w);

// The smaller of w and its inverse under word_less.
StringWord canonical_string(const StringWord& w);

// Serialization: letters whitespace-separated, inverse marked by a trailing
// '~' (e.g. "b~ a~ b"); the trivial string at vertex v prints as "e<v>".
std::string word_text(const QuiverAlgebra& qa, const StringWord& w);

// All strings up to inversion, canonical and sorted; includes the trivial
// string of every vertex.  Requires an admissible presentation.  Without an
// explicit max_len the enumeration is capped by the admissibility bound and
// throws DomainError if the cap is hit (the presentation then admits
// arbitrarily long strings).
std::vector<StringWord> enumerate_strings(
    const QuiverAlgebra& qa, std::optional<std::size_t> max_len = std::nullopt);

// One relation-free cyclic walk per strongly connected component of the
// relation-free walk graph, as direct words; empty iff the presentation is
// admissible.
std::vector<StringWord> detect_bands(const QuiverAlgebra& qa);

// The word whose string module has simple socle at `vertex` and contains
// every string module with that socle: inverse letters along the longer
// maximal relation-free path into the vertex, then the other path as direct
// letters.  Requires colocal type.
StringWord maximal_colocal_module(const QuiverAlgebra& qa, int vertex);

}  // namespace colocal
