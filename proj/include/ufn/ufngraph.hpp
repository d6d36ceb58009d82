#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ufn/presentation.hpp"
#include "ufn/quiver.hpp"

namespace ufn {

// The Ufnarovskii graph of a monomial presentation: vertices are the legal
// words of length ell, and there is one arrow for each legal word w of length
// ell + 1, running from the length-ell prefix of w to its length-ell suffix
// and labelled by the first letter of w. Between any ordered pair of vertices
// there is at most one arrow. Paths of length n correspond bijectively to
// legal words of length n + ell.
//
// With no forbidden words this is the complete de Bruijn graph on |G|^ell
// vertices (ell == 1, one vertex per generator, all |G|^2 arrows).
class UfnGraph {
 public:
  explicit UfnGraph(const Presentation& p);

  const Presentation& presentation() const { return pres_; }
  const Quiver& quiver() const { return quiver_; }
  int ell() const { return ell_; }

  std::optional<int> vertex_of_word(const Word& w) const;
  std::optional<int> arrow_of_word(const Word& w) const;
  std::optional<int> arrow_between(int source, int target) const;

  // Every arrow out of a vertex carries the same label: the first letter of
  // the vertex's defining word.
  Letter vertex_first_letter(int v) const;

  // Arrows labelled by the letter x, in arrow order.
  const std::vector<int>& arrows_with_label(Letter x) const;

  // The path whose consecutive length-(ell+1) windows spell w. Requires w
  // legal and of length >= ell; a word of length exactly ell yields the
  // trivial path at its vertex.
  Path word_to_path(const Word& w) const;

  // Inverse of word_to_path: overlap-merge of the arrow words (the vertex
  // word followed by the last letter of each arrow word). Always legal.
  Word path_to_word(const Path& p) const;

  // All paths whose arrow labels spell out u (nonempty), found by walking
  // forward from every vertex. Sorted; empty when no such path exists.
  std::vector<Path> paths_with_label(const Word& u) const;

  // True when some path is labelled by u (nonempty), decided on the language
  // side: u extends to a legal word u.v for some vertex word v. Cross-checked
  // against paths_with_label by the verification suite.
  bool path_exists_labeled(const Word& u) const;

 private:
  Presentation pres_;
  Quiver quiver_;
  int ell_;
  std::map<Word, int> vertex_by_word_;
  std::map<Word, int> arrow_by_word_;
  std::map<std::pair<int, int>, int> arrow_by_ends_;
  std::vector<std::vector<int>> arrows_by_label_;
};

inline UfnGraph build_ufnarovskii(const Presentation& p) { return UfnGraph(p); }

}  // namespace ufn
