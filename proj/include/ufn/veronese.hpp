#pragma once

#include <utility>
#include <vector>

#include "ufn/presentation.hpp"
#include "ufn/quiver.hpp"
#include "ufn/ufngraph.hpp"

namespace ufn {

// The n-th Veronese subalgebra of a monomial algebra, presented on one block
// generator per legal word of length n with purely quadratic relations: the
// pairs of blocks whose concatenation is illegal. Valid for n >= ell, where
// any forbidden factor of a block concatenation must straddle at most one
// block boundary.
struct VeronesePresentation {
  Presentation base;
  int n = 1;
  std::vector<Word> blocks;  // legal base words of length n, in lex order
  std::vector<std::pair<int, int>> relations;  // block-index pairs

  // The block presentation itself. Generator names default to the rendered
  // block words; `aliases`, when nonempty, must supply one distinct name per
  // block.
  Presentation to_presentation(
      const std::vector<std::string>& aliases = {}) const;
};

// Throws input_error when n < ell (the quadratic presentation would be
// wrong) or n < 1.
VeronesePresentation veronese_presentation(const Presentation& p, int n);

UfnGraph veronese_ufn_graph(const VeronesePresentation& vp,
                            const std::vector<std::string>& aliases = {});

// A quiver with relations, as read from input: forbidden paths are composable
// arrow sequences of length >= 2.
struct QuiverInput {
  Quiver quiver;
  std::vector<std::vector<int>> forbidden_paths;  // arrow-id sequences
};

// The path algebra of a quiver modulo its forbidden paths, as a monomial
// presentation: one generator per arrow, with the non-composable arrow pairs
// and the forbidden paths as forbidden words. Legal words then correspond to
// the surviving composable paths.
Presentation quiver_to_presentation(const QuiverInput& qi);

}  // namespace ufn
