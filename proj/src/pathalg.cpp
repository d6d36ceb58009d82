#include "ufn/pathalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace ufn {

PathSum PathSum::unit(const Quiver& q) {
  PathSum s;
  s.terms_.reserve(static_cast<std::size_t>(q.vertex_count()));
  for (int v = 0; v < q.vertex_count(); ++v) {
    s.terms_.emplace_back(Path::trivial(v), 1);
  }
  return s;
}

PathSum PathSum::of(Path p) {
  PathSum s;
  s.terms_.emplace_back(std::move(p), 1);
  return s;
}

std::optional<int> PathSum::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().first.length();
}

void PathSum::add(Path p, BigInt c) {
  if (c == 0) return;
  if (!terms_.empty() && terms_.front().first.length() != p.length())
    throw input_error("path sum terms must share one degree");
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), p,
      [](const auto& term, const Path& key) { return term.first < key; });
  if (it != terms_.end() && it->first == p) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.emplace(it, std::move(p), std::move(c));
  }
}

bool PathSum::unit_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second == 1; });
}

PathSum add(PathSum a, const PathSum& b) {
  for (const auto& [p, c] : b.terms()) a.add(p, c);
  return a;
}

PathSum multiply(const PathSum& a, const PathSum& b) {
  std::vector<std::pair<Path, BigInt>> raw;
  for (const auto& [p, cp] : a.terms()) {
    for (const auto& [q, cq] : b.terms()) {
      if (p.target() != q.source()) continue;
      raw.emplace_back(concat_paths(p, q), cp * cq);
    }
  }
  std::sort(raw.begin(), raw.end(),
            [](const auto& s, const auto& t) { return s.first < t.first; });
  PathSum out;
  std::size_t i = 0;
  while (i < raw.size()) {
    BigInt c = std::move(raw[i].second);
    std::size_t j = i + 1;
    while (j < raw.size() && raw[j].first == raw[i].first) {
      c += raw[j].second;
      ++j;
    }
    if (c != 0) out.add(std::move(raw[i].first), std::move(c));
    i = j;
  }
  return out;
}

NatMatrix NatMatrix::identity(std::size_t n) {
  NatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

BigInt NatMatrix::total() const {
  return std::accumulate(data_.begin(), data_.end(), BigInt(0));
}

NatMatrix multiply(const NatMatrix& a, const NatMatrix& b) {
  if (a.cols() != b.rows())
    throw input_error("matrix dimensions do not match");
  NatMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const BigInt& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return out;
}

NatMatrix incidence(const Quiver& q) {
  const auto n = static_cast<std::size_t>(q.vertex_count());
  NatMatrix m(n, n);
  for (const Arrow& a : q.arrows()) {
    m.at(static_cast<std::size_t>(a.source),
         static_cast<std::size_t>(a.target)) += 1;
  }
  return m;
}

NatMatrix count_paths(const Quiver& q, int n) {
  if (n < 0) throw input_error("path length must be nonnegative");
  NatMatrix result =
      NatMatrix::identity(static_cast<std::size_t>(q.vertex_count()));
  NatMatrix base = incidence(q);
  unsigned int e = static_cast<unsigned int>(n);
  while (e > 0) {
    if (e & 1u) result = multiply(result, base);
    e >>= 1u;
    if (e > 0) base = multiply(base, base);
  }
  return result;
}

BigInt total_path_count(const Quiver& q, int n) {
  if (n < 0) throw input_error("path length must be nonnegative");
  const auto nv = static_cast<std::size_t>(q.vertex_count());
  NatMatrix m = incidence(q);
  std::vector<BigInt> row(nv, 1);
  for (int step = 0; step < n; ++step) {
    std::vector<BigInt> next(nv, 0);
    for (std::size_t u = 0; u < nv; ++u) {
      if (row[u] == 0) continue;
      for (std::size_t v = 0; v < nv; ++v) {
        const BigInt& muv = m.at(u, v);
        if (muv != 0) next[v] += row[u] * muv;
      }
    }
    row = std::move(next);
  }
  return std::accumulate(row.begin(), row.end(), BigInt(0));
}

Quiver quiver_from_matrix(const NatMatrix& m) {
  if (m.rows() != m.cols())
    throw input_error("an incidence matrix must be square");
  BigInt total = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m.at(i, j) < 0)
        throw input_error("incidence entries must be nonnegative");
      total += m.at(i, j);
    }
  }
  if (total > kMatrixQuiverArrowGuard) {
    throw guard_error("matrix describes more than " +
                      std::to_string(kMatrixQuiverArrowGuard) + " arrows");
  }
  Quiver q;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    q.add_vertex({std::to_string(i), std::nullopt});
  }
  int counter = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      for (BigInt k = 0; k < m.at(i, j); ++k) {
        q.add_arrow({static_cast<int>(i), static_cast<int>(j),
                     "a" + std::to_string(counter++), std::nullopt,
                     std::nullopt});
      }
    }
  }
  return q;
}

std::pair<Quiver, Quiver> lr_rl_pair(const NatMatrix& l, const NatMatrix& r) {
  if (l.cols() != r.rows() || r.cols() != l.rows())
    throw input_error("matrices are not a compatible (L, R) pair");
  return {quiver_from_matrix(multiply(l, r)),
          quiver_from_matrix(multiply(r, l))};
}

namespace {

struct DegreeSignature {
  std::int64_t out = 0;
  std::int64_t in = 0;
  std::int64_t loops = 0;
  auto operator<=>(const DegreeSignature&) const = default;
};

std::vector<std::vector<std::int64_t>> arrow_counts(const Quiver& q) {
  const auto n = static_cast<std::size_t>(q.vertex_count());
  std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
  for (const Arrow& a : q.arrows()) {
    ++m[static_cast<std::size_t>(a.source)][static_cast<std::size_t>(a.target)];
  }
  return m;
}

std::vector<DegreeSignature> signatures(
    const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t n = m.size();
  std::vector<DegreeSignature> sig(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      sig[u].out += m[u][v];
      sig[v].in += m[u][v];
    }
    sig[u].loops = m[u][u];
  }
  return sig;
}

}  // namespace

std::optional<std::vector<int>> graphs_isomorphic(const Quiver& a,
                                                  const Quiver& b,
                                                  int vertex_bound) {
  if (a.vertex_count() > vertex_bound || b.vertex_count() > vertex_bound) {
    throw guard_error("isomorphism search limited to " +
                      std::to_string(vertex_bound) + " vertices");
  }
  if (a.vertex_count() != b.vertex_count() ||
      a.arrow_count() != b.arrow_count()) {
    return std::nullopt;
  }
  const auto n = static_cast<std::size_t>(a.vertex_count());
  const auto ma = arrow_counts(a);
  const auto mb = arrow_counts(b);
  auto siga = signatures(ma);
  auto sigb = signatures(mb);
  {
    auto sa = siga, sb = sigb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  // Most-constrained vertex first: order by the rarity of the signature.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto rarity = [&](std::size_t u) {
    return std::count(sigb.begin(), sigb.end(), siga[u]);
  };
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return rarity(x) < rarity(y);
  });

  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t pos) {
    if (pos == n) return true;
    const std::size_t u = order[pos];
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v] || sigb[v] != siga[u]) continue;
      bool ok = true;
      for (std::size_t q = 0; q < pos && ok; ++q) {
        const std::size_t w = order[q];
        const auto pw = static_cast<std::size_t>(map[w]);
        ok = ma[u][w] == mb[v][pw] && ma[w][u] == mb[pw][v];
      }
      if (!ok) continue;
      map[u] = static_cast<int>(v);
      used[v] = true;
      if (extend(pos + 1)) return true;
      map[u] = -1;
      used[v] = false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return map;
}

HilbertReport hilbert_tail_check(const Presentation& p, const UfnGraph& g,
                                 int max_n) {
  if (max_n < 0) throw input_error("degree bound must be nonnegative");
  HilbertReport report;
  report.ell = g.ell();
  const auto counts = p.legal_word_counts(max_n + g.ell());
  NatMatrix power =
      NatMatrix::identity(static_cast<std::size_t>(g.quiver().vertex_count()));
  const NatMatrix m = incidence(g.quiver());
  for (int n = 0; n <= max_n; ++n) {
    HilbertRow row;
    row.n = n;
    row.legal_words = counts[static_cast<std::size_t>(n + g.ell())];
    row.paths = power.total();
    report.passed = report.passed && row.legal_words == row.paths;
    report.rows.push_back(std::move(row));
    if (n < max_n) power = multiply(power, m);
  }
  return report;
}

}  // namespace ufn
