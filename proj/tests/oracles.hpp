// Naive reference implementations used to cross-check the library. Everything
// here is written the slow, obvious way on purpose: enumerate, filter, compare.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "ufn/quiver.hpp"
#include "ufn/word.hpp"

namespace oracle {

// substring scan, independent of Presentation::is_legal
inline bool contains_factor(const ufn::Word& w, const ufn::Word& f) {
  if (f.size() > w.size()) return false;
  for (std::size_t i = 0; i + f.size() <= w.size(); ++i) {
    bool hit = true;
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (w[i + j] != f[j]) {
        hit = false;
        break;
      }
    }
    if (hit) return true;
  }
  return false;
}

inline bool is_legal(const ufn::Word& w, const std::vector<ufn::Word>& forbidden) {
  for (const ufn::Word& f : forbidden) {
    if (contains_factor(w, f)) return false;
  }
  return true;
}

// all |G|^len words via an odometer
inline std::vector<ufn::Word> all_words(int gsize, int len) {
  std::vector<ufn::Word> out;
  ufn::Word w(static_cast<std::size_t>(len), 0);
  if (len == 0) {
    out.push_back(w);
    return out;
  }
  if (gsize == 0) return out;
  while (true) {
    out.push_back(w);
    int i = len - 1;
    while (i >= 0 && w[static_cast<std::size_t>(i)] == gsize - 1) {
      w[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++w[static_cast<std::size_t>(i)];
  }
  return out;
}

inline std::vector<ufn::Word> legal_words(int gsize,
                                          const std::vector<ufn::Word>& forbidden,
                                          int len) {
  std::vector<ufn::Word> out;
  for (const ufn::Word& w : all_words(gsize, len)) {
    if (is_legal(w, forbidden)) out.push_back(w);
  }
  return out;
}

// arrow-sequence DFS; counts every composable sequence of the given length
inline std::uint64_t count_paths(const ufn::Quiver& q, int from, int to, int len) {
  if (len == 0) return from == to ? 1 : 0;
  std::uint64_t total = 0;
  for (int a = 0; a < q.arrow_count(); ++a) {
    if (q.arrow(a).source != from) continue;
    total += count_paths(q, q.arrow(a).target, to, len - 1);
  }
  return total;
}

inline std::uint64_t count_paths_total(const ufn::Quiver& q, int len) {
  std::uint64_t total = 0;
  for (int u = 0; u < q.vertex_count(); ++u) {
    for (int v = 0; v < q.vertex_count(); ++v) {
      total += count_paths(q, u, v, len);
    }
  }
  return total;
}

// every composable arrow sequence whose letter labels spell u
inline std::vector<std::vector<int>> paths_labeled(const ufn::Quiver& q,
                                                   const ufn::Word& u) {
  std::vector<std::vector<int>> out;
  std::vector<int> seq;
  auto visit = [&](auto&& self, std::size_t i, int at) -> void {
    if (i == u.size()) {
      out.push_back(seq);
      return;
    }
    for (int a = 0; a < q.arrow_count(); ++a) {
      const ufn::Arrow& arr = q.arrow(a);
      if (arr.label != u[i]) continue;
      if (i > 0 && arr.source != at) continue;
      seq.push_back(a);
      self(self, i + 1, arr.target);
      seq.pop_back();
    }
  };
  visit(visit, 0, -1);
  std::sort(out.begin(), out.end());
  return out;
}

// all-permutations multigraph isomorphism, fine up to ~8 vertices
inline bool isomorphic(const ufn::Quiver& a, const ufn::Quiver& b) {
  const int n = a.vertex_count();
  if (n != b.vertex_count() || a.arrow_count() != b.arrow_count()) return false;
  auto counts = [n](const ufn::Quiver& q) {
    std::vector<std::vector<int>> m(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < q.arrow_count(); ++i) {
      ++m[static_cast<std::size_t>(q.arrow(i).source)]
         [static_cast<std::size_t>(q.arrow(i).target)];
    }
    return m;
  };
  const auto ma = counts(a);
  const auto mb = counts(b);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; ok && u < n; ++u) {
      for (int v = 0; ok && v < n; ++v) {
        ok = ma[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] ==
             mb[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)])]
               [static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])];
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace oracle
