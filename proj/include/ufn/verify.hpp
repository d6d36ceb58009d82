#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ufn/pathalg.hpp"
#include "ufn/presentation.hpp"
#include "ufn/ufngraph.hpp"

namespace ufn {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  int degree_lo = 0;
  int degree_hi = 0;
  std::string counterexample;  // empty when none
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

// One walk over the legal words of length 1..max_degree carrying the product
// f(x1)...f(xr) along the word tree. Verifies, per word:
//   kernel_criterion   f(w) == 0 exactly when a suffix of length <= ell of w
//                      admits no labelled path,
//   independence       every path in f(w) is labelled by w itself, and per
//                      degree the supports together exhaust the path count,
//                      so distinct words have disjoint supports,
//   unit_coefficients  every surviving coefficient equals one.
struct KernelSweepOutcome {
  CheckResult kernel_criterion;
  CheckResult independence;
  CheckResult unit_coefficients;
};
KernelSweepOutcome kernel_image_sweep(const UfnGraph& g, int max_degree);

// One walk over *all* words of length 1..max_degree carrying the set of
// vertices reachable by a path with that label. Verifies, per word u:
//   illegal_no_paths   u illegal implies no path is labelled u,
//   reachability       a path labelled u exists exactly when u.v is legal
//                      for some vertex word v (graph walk vs. factor scan),
//   suffix_reduction   for legal u of length >= ell, a path labelled u
//                      exists exactly when one labelled by its length-ell
//                      suffix does.
struct LabelSweepOutcome {
  CheckResult illegal_no_paths;
  CheckResult reachability;
  CheckResult suffix_reduction;
};
LabelSweepOutcome label_lemma_sweep(const UfnGraph& g, int max_degree);

// Walks every path of length 1..max_degree and checks that the word it
// spells is legal, and that the number of paths per length matches the
// incidence-matrix count.
CheckResult check_paths_yield_legal_words(const UfnGraph& g, int max_degree);

// word_to_path followed by path_to_word is the identity on legal words of
// length ell..max_degree+ell, and the counts agree degreewise.
CheckResult check_word_path_bijection(const UfnGraph& g, int max_degree);

// Prefix and suffix of every legal word are legal (all factors for short
// words).
CheckResult check_factor_closure(const Presentation& p, int max_degree);

// Legality agrees under the given and the normalized forbidden set, for
// every word up to max_degree.
CheckResult check_normalization_invariance(const Presentation& p,
                                           int max_degree);

// f(uv) == f(u) f(v) for every legal word and its midpoint split.
CheckResult check_hom_product(const UfnGraph& g, int max_degree);

// Every forbidden word maps to zero.
CheckResult check_relations_vanish(const UfnGraph& g);

// hilbert_tail_check wrapped as a named check.
CheckResult check_hilbert_tail(const Presentation& p, const UfnGraph& g,
                               int max_degree);

// The full battery, including the kernel annihilation and image stability
// checks from hom.hpp. The homomorphism product check runs up to
// min(max_degree, 8); everything else runs to max_degree.
VerifyReport run_checks(const Presentation& p, const UfnGraph& g,
                        int max_degree);

}  // namespace ufn
