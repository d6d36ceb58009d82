#pragma once

#include <cstdint>
#include <vector>

#include "ufn/pathalg.hpp"
#include "ufn/presentation.hpp"
#include "ufn/ufngraph.hpp"
#include "ufn/verify.hpp"

namespace ufn {

// Image of a generator: the sum of all arrows labelled x (zero when none).
PathSum f_letter(Letter x, const UfnGraph& g);

// Image of a word: the product of the letter images, which works out to the
// sum, with coefficient one, of all paths labelled w. The empty word maps to
// the unit.
PathSum f_word(const Word& w, const UfnGraph& g);

// Generators of the kernel beyond the forbidden words: the words of length
// 1..ell that label no path. Members may themselves be illegal (then they lie
// in the ideal of the forbidden words already); the flag records which.
struct KernelData {
  int ell = 1;
  std::vector<Word> words;  // sorted by length, then lexicographically
  std::vector<bool> word_is_legal;

  // True when some suffix of w of length 1..ell is a member.
  bool kills(const Word& w) const;
};

KernelData kernel_generators(const Presentation& p, const UfnGraph& g);

// Whether a legal word w lies in the kernel of f, decided by the suffix
// criterion. Equivalent to f_word(w, g).is_zero(); the verification suite
// tests the equivalence exhaustively. Throws input_error when w is illegal
// (illegal words lie in the kernel trivially).
bool kernel_membership(const Word& w, const KernelData& k,
                       const Presentation& p, const UfnGraph& g);

struct DimensionRow {
  int degree = 0;
  std::uint64_t algebra = 0;  // legal words of this length
  std::uint64_t kernel = 0;   // of these, killed by f
  std::uint64_t image = 0;
};

std::vector<DimensionRow> kernel_dimension_table(const Presentation& p,
                                                 const UfnGraph& g,
                                                 const KernelData& k,
                                                 int max_degree);

// Every kernel generator times every vertex word is illegal, so the kernel
// ideal needs no generators past degree ell.
CheckResult verify_kernel_annihilation(const KernelData& k,
                                       const Presentation& p);

// Degree-zero and degree-one stability of the image: e . f(w) is 0 or f(w)
// for every trivial path e and vertex word w, and a . f(w) is 0 or
// f(label(a) . w) for every arrow a.
CheckResult verify_cokernel_stability(const Presentation& p,
                                      const UfnGraph& g);

// Distinct legal words of one degree have disjoint path supports (their
// images are linearly independent). Runs the kernel_image_sweep.
CheckResult verify_independence(const Presentation& p, const UfnGraph& g,
                                int max_degree);

}  // namespace ufn
