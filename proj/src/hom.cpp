#include "ufn/hom.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace ufn {

PathSum f_letter(Letter x, const UfnGraph& g) {
  PathSum s;
  for (int a : g.arrows_with_label(x)) {
    const Arrow& arr = g.quiver().arrow(a);
    s.add(Path(arr.source, arr.target, {a}), 1);
  }
  return s;
}

PathSum f_word(const Word& w, const UfnGraph& g) {
  PathSum acc = PathSum::unit(g.quiver());
  for (Letter x : w) {
    acc = multiply(acc, f_letter(x, g));
    if (acc.is_zero()) break;
  }
  return acc;
}

bool KernelData::kills(const Word& w) const {
  const std::size_t top = std::min<std::size_t>(w.size(), ell);
  for (std::size_t len = 1; len <= top; ++len) {
    const Word tail = suffix(w, len);
    if (std::find(words.begin(), words.end(), tail) != words.end())
      return true;
  }
  return false;
}

KernelData kernel_generators(const Presentation& p, const UfnGraph& g) {
  KernelData k;
  k.ell = g.ell();
  p.check_enumeration_guard(k.ell);
  const int gsize = p.alphabet_size();
  Word w;
  std::vector<std::pair<Word, bool>> found;
  std::function<void()> visit = [&] {
    if (!w.empty() && g.paths_with_label(w).empty()) {
      found.emplace_back(w, p.is_legal(w));
    }
    if (static_cast<int>(w.size()) == k.ell) return;
    w.push_back(0);
    for (Letter x = 0; x < gsize; ++x) {
      w.back() = x;
      visit();
    }
    w.pop_back();
  };
  visit();
  // Report by increasing length; lexicographic within a length already.
  std::stable_sort(found.begin(), found.end(),
                   [](const auto& a, const auto& b) {
                     return a.first.size() < b.first.size();
                   });
  for (auto& [word, legal] : found) {
    k.words.push_back(std::move(word));
    k.word_is_legal.push_back(legal);
  }
  return k;
}

bool kernel_membership(const Word& w, const KernelData& k,
                       const Presentation& p, const UfnGraph& g) {
  if (!p.is_legal(w))
    throw input_error(
        "kernel membership by suffix applies to legal words only");
  if (w.empty()) return g.quiver().vertex_count() == 0;  // f(1) = sum e_v
  return k.kills(w);
}

std::vector<DimensionRow> kernel_dimension_table(const Presentation& p,
                                                 const UfnGraph& g,
                                                 const KernelData& k,
                                                 int max_degree) {
  if (max_degree < 0) throw input_error("degree bound must be nonnegative");
  NodeBudget budget(p.enumeration_guard());
  std::vector<DimensionRow> rows(static_cast<std::size_t>(max_degree) + 1);
  for (int r = 0; r <= max_degree; ++r) rows[r].degree = r;
  rows[0].algebra = 1;
  rows[0].kernel = g.quiver().vertex_count() == 0 ? 1 : 0;

  const int gsize = p.alphabet_size();
  Word w;
  std::function<void(int)> visit = [&](int depth) {
    budget.spend();
    if (depth > 0) {
      auto& row = rows[static_cast<std::size_t>(depth)];
      ++row.algebra;
      if (k.kills(w)) ++row.kernel;
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
  for (auto& row : rows) row.image = row.algebra - row.kernel;
  return rows;
}

CheckResult verify_kernel_annihilation(const KernelData& k,
                                       const Presentation& p) {
  CheckResult res;
  res.name = "kernel-annihilation";
  res.degree_lo = 1;
  res.degree_hi = 2 * k.ell;
  for (const Word& s : k.words) {
    for (const Word& v : p.legal_words(k.ell)) {
      ++res.cases;
      if (p.is_legal(concat(s, v))) {
        res.passed = false;
        res.counterexample = p.word_string(concat(s, v));
        return res;
      }
    }
  }
  return res;
}

CheckResult verify_cokernel_stability(const Presentation& p,
                                      const UfnGraph& g) {
  CheckResult res;
  res.name = "image-stability";
  res.degree_lo = g.ell();
  res.degree_hi = g.ell() + 1;

  const auto vertex_words = p.legal_words(g.ell());
  std::vector<PathSum> images;
  images.reserve(vertex_words.size());
  for (const Word& w : vertex_words) images.push_back(f_word(w, g));

  std::map<Word, PathSum> next_images;
  for (const Word& u : p.legal_words(g.ell() + 1)) {
    next_images.emplace(u, f_word(u, g));
  }

  const Quiver& q = g.quiver();
  for (int v = 0; v < q.vertex_count(); ++v) {
    const PathSum e = PathSum::of(Path::trivial(v));
    for (std::size_t i = 0; i < vertex_words.size(); ++i) {
      ++res.cases;
      const PathSum prod = multiply(e, images[i]);
      if (!prod.is_zero() && !(prod == images[i])) {
        res.passed = false;
        res.counterexample =
            "e_" + q.vertex(v).name + " * f(" +
            p.word_string(vertex_words[i]) + ")";
        return res;
      }
    }
  }
  for (int a = 0; a < q.arrow_count(); ++a) {
    const PathSum arrow = PathSum::of(
        Path(q.arrow(a).source, q.arrow(a).target, {a}));
    const Letter label = *q.arrow(a).label;
    for (std::size_t i = 0; i < vertex_words.size(); ++i) {
      ++res.cases;
      const PathSum prod = multiply(arrow, images[i]);
      if (prod.is_zero()) continue;
      Word u = vertex_words[i];
      u.insert(u.begin(), label);
      auto it = next_images.find(u);
      const bool ok = it != next_images.end() && prod == it->second;
      if (!ok) {
        res.passed = false;
        res.counterexample = q.arrow(a).name + " * f(" +
                             p.word_string(vertex_words[i]) + ")";
        return res;
      }
    }
  }
  return res;
}

CheckResult verify_independence(const Presentation& p, const UfnGraph& g,
                                int max_degree) {
  (void)p;
  return kernel_image_sweep(g, max_degree).independence;
}

}  // namespace ufn
