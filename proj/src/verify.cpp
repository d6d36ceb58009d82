#include "ufn/verify.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>

#include "ufn/errors.hpp"
#include "ufn/hom.hpp"

namespace ufn {

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

namespace {

// Small dynamic bit set over vertex ids.
struct Bits {
  std::vector<std::uint64_t> blocks;
  explicit Bits(std::size_t nbits) : blocks((nbits + 63) / 64, 0) {}
  void set(std::size_t i) { blocks[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void clear() { std::fill(blocks.begin(), blocks.end(), 0); }
  bool any() const {
    for (auto b : blocks)
      if (b) return true;
    return false;
  }
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      std::uint64_t x = blocks[b];
      while (x) {
        f(b * 64 + static_cast<std::size_t>(std::countr_zero(x)));
        x &= x - 1;
      }
    }
  }
};

struct GraphTables {
  int nv = 0;
  int ell = 1;
  std::vector<Letter> first;            // first letter of each vertex word
  std::vector<std::vector<int>> succ;   // out-neighbour targets

  explicit GraphTables(const UfnGraph& g)
      : nv(g.quiver().vertex_count()), ell(g.ell()) {
    first.resize(static_cast<std::size_t>(nv));
    succ.resize(static_cast<std::size_t>(nv));
    for (int v = 0; v < nv; ++v) {
      first[static_cast<std::size_t>(v)] = g.vertex_first_letter(v);
      for (int a : g.quiver().out_arrows(v)) {
        succ[static_cast<std::size_t>(v)].push_back(g.quiver().arrow(a).target);
      }
    }
  }

  // End vertices of paths labelled by `cur`'s history followed by x. Every
  // arrow out of v carries first[v], so v contributes exactly when they match.
  void step(const Bits& cur, Letter x, Bits& out) const {
    out.clear();
    cur.for_each([&](std::size_t v) {
      if (first[v] != x) return;
      for (int t : succ[v]) out.set(static_cast<std::size_t>(t));
    });
  }

  Bits walk(const Word& u) const {
    Bits cur(static_cast<std::size_t>(nv));
    for (int v = 0; v < nv; ++v) cur.set(static_cast<std::size_t>(v));
    Bits next(static_cast<std::size_t>(nv));
    for (Letter x : u) {
      step(cur, x, next);
      std::swap(cur, next);
      if (!cur.any()) break;
    }
    return cur;
  }
};

std::vector<BigInt> path_totals(const UfnGraph& g, int max_degree) {
  std::vector<BigInt> totals(static_cast<std::size_t>(max_degree) + 1);
  const NatMatrix m = incidence(g.quiver());
  NatMatrix power = NatMatrix::identity(m.rows());
  for (int n = 0; n <= max_degree; ++n) {
    totals[static_cast<std::size_t>(n)] = power.total();
    if (n < max_degree) power = multiply(power, m);
  }
  return totals;
}

}  // namespace

LabelSweepOutcome label_lemma_sweep(const UfnGraph& g, int max_degree) {
  const Presentation& p = g.presentation();
  p.check_enumeration_guard(max_degree);
  const GraphTables tab(g);
  const int nv = tab.nv;
  const int ell = tab.ell;
  const int gsize = p.alphabet_size();

  LabelSweepOutcome out;
  out.illegal_no_paths = {"illegal-words-label-no-path", true, 0, 1,
                          max_degree, ""};
  out.reachability = {"label-reachability", true, 0, 1, max_degree, ""};
  out.suffix_reduction = {"label-suffix-reduction", true, 0, ell, max_degree,
                          ""};

  // Route B of the reachability lemma, precomputed per suffix state: does
  // some vertex word extend the state to a legal word? For a legal word of
  // length >= ell this depends only on its length-ell suffix, because any
  // forbidden factor that crosses into the extension starts within the last
  // ell letters.
  std::vector<char> state_extends(static_cast<std::size_t>(nv), 0);
  for (int v = 0; v < nv; ++v) {
    const Word& s = *g.quiver().vertex(v).word;
    for (int u = 0; u < nv; ++u) {
      if (p.is_legal(concat(s, *g.quiver().vertex(u).word))) {
        state_extends[static_cast<std::size_t>(v)] = 1;
        break;
      }
    }
  }
  // Whether a path labelled by the vertex word itself exists (graph walk).
  std::vector<char> state_has_path(static_cast<std::size_t>(nv), 0);
  for (int v = 0; v < nv; ++v) {
    state_has_path[static_cast<std::size_t>(v)] =
        tab.walk(*g.quiver().vertex(v).word).any() ? 1 : 0;
  }
  // Suffix transition: vertex of suffix_ell(word(v) + x), -1 when illegal.
  std::vector<std::vector<int>> trans(
      static_cast<std::size_t>(nv),
      std::vector<int>(static_cast<std::size_t>(gsize), -1));
  for (int v = 0; v < nv; ++v) {
    Word s = *g.quiver().vertex(v).word;
    s.erase(s.begin());
    s.push_back(0);
    for (Letter x = 0; x < gsize; ++x) {
      s.back() = x;
      if (auto t = g.vertex_of_word(s)) {
        trans[static_cast<std::size_t>(v)][static_cast<std::size_t>(x)] = *t;
      }
    }
  }

  auto fail = [&](CheckResult& c, const Word& w) {
    if (c.passed) {
      c.passed = false;
      c.counterexample = p.word_string(w);
    }
  };

  Word w;
  std::vector<Bits> mask;
  mask.reserve(static_cast<std::size_t>(max_degree) + 1);
  for (int d = 0; d <= max_degree; ++d)
    mask.emplace_back(static_cast<std::size_t>(nv));
  for (int v = 0; v < nv; ++v) mask[0].set(static_cast<std::size_t>(v));

  // Direct scan for legal words shorter than ell (few of them).
  auto short_extends = [&](const Word& u) {
    for (int v = 0; v < nv; ++v) {
      if (p.is_legal(concat(u, *g.quiver().vertex(v).word))) return true;
    }
    return false;
  };

  std::function<void(int, bool, int)> visit = [&](int depth, bool legal,
                                                  int sid) {
    if (depth > 0) {
      const bool has_path = mask[static_cast<std::size_t>(depth)].any();
      bool route_b = false;
      if (legal) {
        route_b = depth < ell ? short_extends(w)
                              : state_extends[static_cast<std::size_t>(sid)];
      }
      if (!legal) {
        ++out.illegal_no_paths.cases;
        if (has_path) fail(out.illegal_no_paths, w);
      }
      ++out.reachability.cases;
      if (has_path != route_b) fail(out.reachability, w);
      if (legal && depth >= ell) {
        ++out.suffix_reduction.cases;
        if (has_path !=
            (state_has_path[static_cast<std::size_t>(sid)] != 0)) {
          fail(out.suffix_reduction, w);
        }
      }
    }
    if (depth == max_degree) return;
    w.push_back(0);
    for (Letter x = 0; x < gsize; ++x) {
      w.back() = x;
      const bool child_legal = legal && !p.has_forbidden_suffix(w);
      int child_sid = -1;
      if (child_legal) {
        if (depth + 1 == ell) {
          child_sid = *g.vertex_of_word(w);
        } else if (depth + 1 > ell) {
          child_sid =
              trans[static_cast<std::size_t>(sid)][static_cast<std::size_t>(x)];
        }
      }
      tab.step(mask[static_cast<std::size_t>(depth)], x,
               mask[static_cast<std::size_t>(depth) + 1]);
      visit(depth + 1, child_legal, child_sid);
    }
    w.pop_back();
  };
  visit(0, true, -1);
  return out;
}

KernelSweepOutcome kernel_image_sweep(const UfnGraph& g, int max_degree) {
  if (max_degree < 0) throw input_error("degree bound must be nonnegative");
  const Presentation& p = g.presentation();
  NodeBudget budget(p.enumeration_guard());
  const Quiver& q = g.quiver();
  const int gsize = p.alphabet_size();

  KernelSweepOutcome out;
  out.kernel_criterion = {"kernel-suffix-criterion", true, 0, 1, max_degree,
                          ""};
  out.independence = {"disjoint-path-supports", true, 0, 1, max_degree, ""};
  out.unit_coefficients = {"unit-coefficients", true, 0, 1, max_degree, ""};

  const KernelData kd = kernel_generators(p, g);
  std::vector<PathSum> letter_images;
  for (Letter x = 0; x < gsize; ++x) letter_images.push_back(f_letter(x, g));

  const auto totals = path_totals(g, max_degree);
  std::vector<BigInt> support(static_cast<std::size_t>(max_degree) + 1, 0);

  auto fail = [&](CheckResult& c, const std::string& what) {
    if (c.passed) {
      c.passed = false;
      c.counterexample = what;
    }
  };

  Word w;
  std::vector<PathSum> sums(static_cast<std::size_t>(max_degree) + 1);
  sums[0] = PathSum::unit(q);

  std::function<void(int)> visit = [&](int depth) {
    budget.spend();
    if (depth > 0) {
      const PathSum& fw = sums[static_cast<std::size_t>(depth)];
      ++out.unit_coefficients.cases;
      if (!fw.unit_coefficients()) fail(out.unit_coefficients, p.word_string(w));
      ++out.kernel_criterion.cases;
      if (fw.is_zero() != kd.kills(w)) {
        fail(out.kernel_criterion, p.word_string(w));
      }
      support[static_cast<std::size_t>(depth)] += fw.term_count();
      for (const auto& [path, coeff] : fw.terms()) {
        ++out.independence.cases;
        bool label_matches = path.length() == depth;
        for (std::size_t i = 0; label_matches && i < path.arrows().size();
             ++i) {
          label_matches = q.arrow(path.arrows()[i]).label == w[i];
        }
        if (!label_matches) fail(out.independence, p.word_string(w));
      }
    }
    if (depth == max_degree) return;
    w.push_back(0);
    for (Letter x = 0; x < gsize; ++x) {
      w.back() = x;
      if (!p.has_forbidden_suffix(w)) {
        sums[static_cast<std::size_t>(depth) + 1] =
            multiply(sums[static_cast<std::size_t>(depth)],
                     letter_images[static_cast<std::size_t>(x)]);
        visit(depth + 1);
      }
    }
    w.pop_back();
  };
  visit(0);

  // Every path is labelled by one legal word, so the per-degree supports must
  // together exhaust the path count; with the per-path label check above this
  // forces the supports of distinct words to be disjoint.
  for (int r = 1; r <= max_degree; ++r) {
    if (support[static_cast<std::size_t>(r)] !=
        totals[static_cast<std::size_t>(r)]) {
      fail(out.independence,
           "degree " + std::to_string(r) + " support total " +
               support[static_cast<std::size_t>(r)].str() + " != path count " +
               totals[static_cast<std::size_t>(r)].str());
    }
  }
  return out;
}

CheckResult check_paths_yield_legal_words(const UfnGraph& g, int max_degree) {
  if (max_degree < 0) throw input_error("degree bound must be nonnegative");
  const Presentation& p = g.presentation();
  NodeBudget budget(p.enumeration_guard());
  CheckResult res{"paths-spell-legal-words", true, 0, 1, max_degree, ""};
  const Quiver& q = g.quiver();
  std::vector<BigInt> counts(static_cast<std::size_t>(max_degree) + 1, 0);

  Word w;
  std::function<void(int, int)> visit = [&](int end_vertex, int depth) {
    budget.spend();
    if (depth > 0) ++counts[static_cast<std::size_t>(depth)];
    if (depth == max_degree) return;
    for (int a : q.out_arrows(end_vertex)) {
      w.push_back(q.arrow(a).word->back());
      ++res.cases;
      if (p.has_forbidden_suffix(w)) {
        if (res.passed) {
          res.passed = false;
          res.counterexample = p.word_string(w);
        }
      } else {
        visit(q.arrow(a).target, depth + 1);
      }
      w.pop_back();
    }
  };
  for (int v = 0; v < q.vertex_count(); ++v) {
    w = *q.vertex(v).word;
    visit(v, 0);
  }
  counts[0] = q.vertex_count();

  const auto totals = path_totals(g, max_degree);
  for (int n = 0; n <= max_degree; ++n) {
    if (counts[static_cast<std::size_t>(n)] !=
        totals[static_cast<std::size_t>(n)]) {
      res.passed = false;
      if (res.counterexample.empty()) {
        res.counterexample = "length-" + std::to_string(n) +
                             " path count mismatch: walked " +
                             counts[static_cast<std::size_t>(n)].str() +
                             ", matrix " +
                             totals[static_cast<std::size_t>(n)].str();
      }
    }
  }
  return res;
}

CheckResult check_word_path_bijection(const UfnGraph& g, int max_degree) {
  if (max_degree < 0) throw input_error("degree bound must be nonnegative");
  const Presentation& p = g.presentation();
  const int ell = g.ell();
  NodeBudget budget(p.enumeration_guard());
  CheckResult res{"word-path-bijection", true, 0, ell, max_degree + ell, ""};
  std::vector<BigInt> counts(static_cast<std::size_t>(max_degree) + 1, 0);
  const int gsize = p.alphabet_size();

  Word w;
  std::function<void(int)> visit = [&](int depth) {
    budget.spend();
    if (depth >= ell) {
      ++res.cases;
      ++counts[static_cast<std::size_t>(depth - ell)];
      const Path path = g.word_to_path(w);
      if (path.length() != depth - ell || g.path_to_word(path) != w) {
        if (res.passed) {
          res.passed = false;
          res.counterexample = p.word_string(w);
        }
      }
    }
    if (depth == max_degree + ell) return;
    w.push_back(0);
    for (Letter x = 0; x < gsize; ++x) {
      w.back() = x;
      if (!p.has_forbidden_suffix(w)) visit(depth + 1);
    }
    w.pop_back();
  };
  visit(0);

  const auto totals = path_totals(g, max_degree);
  for (int n = 0; n <= max_degree; ++n) {
    if (counts[static_cast<std::size_t>(n)] !=
        totals[static_cast<std::size_t>(n)]) {
      res.passed = false;
      if (res.counterexample.empty()) {
        res.counterexample =
            "degree " + std::to_string(n + ell) + " word count " +
            counts[static_cast<std::size_t>(n)].str() + " != path count " +
            totals[static_cast<std::size_t>(n)].str();
      }
    }
  }
  return res;
}

CheckResult check_factor_closure(const Presentation& p, int max_degree) {
  if (max_degree < 0) throw input_error("degree bound must be nonnegative");
  NodeBudget budget(p.enumeration_guard());
  CheckResult res{"factor-closure", true, 0, 1, max_degree, ""};
  const int gsize = p.alphabet_size();
  constexpr int kFullFactorDegree = 6;

  Word w;
  std::function<void(int)> visit = [&](int depth) {
    budget.spend();
    if (depth > 0) {
      ++res.cases;
      bool ok = p.is_legal(prefix(w, static_cast<std::size_t>(depth) - 1)) &&
                p.is_legal(suffix(w, static_cast<std::size_t>(depth) - 1));
      if (ok && depth <= kFullFactorDegree) {
        for (std::size_t i = 0; ok && i < w.size(); ++i) {
          for (std::size_t len = 1; ok && i + len <= w.size(); ++len) {
            ok = p.is_legal(Word(w.begin() + static_cast<std::ptrdiff_t>(i),
                                 w.begin() +
                                     static_cast<std::ptrdiff_t>(i + len)));
          }
        }
      }
      if (!ok && res.passed) {
        res.passed = false;
        res.counterexample = p.word_string(w);
      }
    }
    if (depth == max_degree) return;
    w.push_back(0);
    for (Letter x = 0; x < gsize; ++x) {
      w.back() = x;
      if (!p.has_forbidden_suffix(w)) visit(depth + 1);
    }
    w.pop_back();
  };
  visit(0);
  return res;
}

CheckResult check_normalization_invariance(const Presentation& p,
                                           int max_degree) {
  p.check_enumeration_guard(max_degree);
  CheckResult res{"normalization-invariance", true, 0, 0, max_degree, ""};
  const int gsize = p.alphabet_size();
  Word w;
  std::function<void(int)> visit = [&](int depth) {
    ++res.cases;
    if (Presentation::scan_legal(w, p.forbidden()) !=
        Presentation::scan_legal(w, p.normalized_forbidden())) {
      if (res.passed) {
        res.passed = false;
        res.counterexample = p.word_string(w);
      }
    }
    if (depth == max_degree) return;
    w.push_back(0);
    for (Letter x = 0; x < gsize; ++x) {
      w.back() = x;
      visit(depth + 1);
    }
    w.pop_back();
  };
  visit(0);
  return res;
}

CheckResult check_hom_product(const UfnGraph& g, int max_degree) {
  if (max_degree < 0) throw input_error("degree bound must be nonnegative");
  const Presentation& p = g.presentation();
  const int bound = std::min(max_degree, 8);
  NodeBudget budget(p.enumeration_guard());
  CheckResult res{"homomorphism-product", true, 0, 2, bound, ""};
  const int gsize = p.alphabet_size();
  std::vector<PathSum> letter_images;
  for (Letter x = 0; x < gsize; ++x) letter_images.push_back(f_letter(x, g));

  Word w;
  std::vector<PathSum> sums(static_cast<std::size_t>(bound) + 1);
  sums[0] = PathSum::unit(g.quiver());
  std::function<void(int)> visit = [&](int depth) {
    budget.spend();
    if (depth >= 2) {
      ++res.cases;
      const std::size_t k = static_cast<std::size_t>(depth) / 2;
      const PathSum rhs =
          multiply(sums[k], f_word(suffix(w, w.size() - k), g));
      if (!(sums[static_cast<std::size_t>(depth)] == rhs) && res.passed) {
        res.passed = false;
        res.counterexample = p.word_string(w);
      }
    }
    if (depth == bound) return;
    w.push_back(0);
    for (Letter x = 0; x < gsize; ++x) {
      w.back() = x;
      if (!p.has_forbidden_suffix(w)) {
        sums[static_cast<std::size_t>(depth) + 1] =
            multiply(sums[static_cast<std::size_t>(depth)],
                     letter_images[static_cast<std::size_t>(x)]);
        visit(depth + 1);
      }
    }
    w.pop_back();
  };
  visit(0);
  return res;
}

CheckResult check_relations_vanish(const UfnGraph& g) {
  const Presentation& p = g.presentation();
  CheckResult res{"relations-vanish", true, 0, 2, 2, ""};
  for (const Word& f : p.forbidden()) {
    ++res.cases;
    res.degree_hi = std::max(res.degree_hi, static_cast<int>(f.size()));
    if (!f_word(f, g).is_zero() && res.passed) {
      res.passed = false;
      res.counterexample = p.word_string(f);
    }
  }
  return res;
}

CheckResult check_hilbert_tail(const Presentation& p, const UfnGraph& g,
                               int max_degree) {
  const HilbertReport rep = hilbert_tail_check(p, g, max_degree);
  CheckResult res{"hilbert-tail-agreement", rep.passed, rep.rows.size(),
                  g.ell(), max_degree + g.ell(), ""};
  if (!rep.passed) {
    for (const HilbertRow& row : rep.rows) {
      if (row.legal_words != row.paths) {
        res.counterexample = "n=" + std::to_string(row.n) + ": " +
                             row.legal_words.str() + " words vs " +
                             row.paths.str() + " paths";
        break;
      }
    }
  }
  return res;
}

VerifyReport run_checks(const Presentation& p, const UfnGraph& g,
                        int max_degree) {
  if (max_degree < 0) throw input_error("degree bound must be nonnegative");
  VerifyReport report;
  report.checks.push_back(check_factor_closure(p, max_degree));
  report.checks.push_back(check_normalization_invariance(p, max_degree));
  report.checks.push_back(check_word_path_bijection(g, max_degree));
  report.checks.push_back(check_paths_yield_legal_words(g, max_degree));
  const LabelSweepOutcome label = label_lemma_sweep(g, max_degree);
  report.checks.push_back(label.illegal_no_paths);
  report.checks.push_back(label.reachability);
  report.checks.push_back(label.suffix_reduction);
  report.checks.push_back(check_relations_vanish(g));
  report.checks.push_back(check_hom_product(g, max_degree));
  const KernelSweepOutcome kernel = kernel_image_sweep(g, max_degree);
  report.checks.push_back(kernel.kernel_criterion);
  report.checks.push_back(kernel.independence);
  report.checks.push_back(kernel.unit_coefficients);
  const KernelData kd = kernel_generators(p, g);
  report.checks.push_back(verify_kernel_annihilation(kd, p));
  report.checks.push_back(verify_cokernel_stability(p, g));
  report.checks.push_back(check_hilbert_tail(p, g, max_degree));
  return report;
}

}  // namespace ufn
