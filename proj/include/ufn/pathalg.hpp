#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ufn/presentation.hpp"
#include "ufn/quiver.hpp"
#include "ufn/ufngraph.hpp"

namespace ufn {

// Path counts grow exponentially with the degree, so all matrix arithmetic is
// exact arbitrary-precision integer arithmetic.
using BigInt = boost::multiprecision::cpp_int;

// A homogeneous integer linear combination of paths of one common length.
// Terms are kept sorted with nonzero coefficients; the zero sum is empty.
class PathSum {
 public:
  PathSum() = default;

  // Sum of the trivial paths, one per vertex: the unit of the path algebra.
  static PathSum unit(const Quiver& q);
  static PathSum of(Path p);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  std::optional<int> degree() const;  // empty for the zero sum
  const std::vector<std::pair<Path, BigInt>>& terms() const { return terms_; }

  // Merges one term in; throws input_error when it would mix path lengths.
  void add(Path p, BigInt c);

  bool unit_coefficients() const;  // every coefficient equals one

  bool operator==(const PathSum&) const = default;

 private:
  std::vector<std::pair<Path, BigInt>> terms_;
};

PathSum add(PathSum a, const PathSum& b);

// Concatenation product: terms whose paths fail to compose contribute zero.
PathSum multiply(const PathSum& a, const PathSum& b);

// Dense rows x cols matrix of big integers.
class NatMatrix {
 public:
  NatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  static NatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  BigInt total() const;

  bool operator==(const NatMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigInt> data_;
};

NatMatrix multiply(const NatMatrix& a, const NatMatrix& b);

// M[u][v] = number of arrows u -> v (rows index sources).
NatMatrix incidence(const Quiver& q);

// Entry (u, v) counts the paths of length n from u to v: the n-th power of
// the incidence matrix, computed exactly.
NatMatrix count_paths(const Quiver& q, int n);

// Sum of all entries of count_paths(q, n), via row-vector iteration so large
// quivers need no full matrix powers.
BigInt total_path_count(const Quiver& q, int n);

// Quiver with one vertex per row and m.at(u, v) arrows u -> v. The matrix
// must be square with nonnegative entries; refuses with guard_error when it
// asks for more than kMatrixQuiverArrowGuard arrows.
inline constexpr std::uint64_t kMatrixQuiverArrowGuard = 1'000'000;
Quiver quiver_from_matrix(const NatMatrix& m);

// The quivers of the products L.R and R.L of a compatible matrix pair.
std::pair<Quiver, Quiver> lr_rl_pair(const NatMatrix& l, const NatMatrix& r);

// Multigraph isomorphism: a vertex bijection carrying arrow multiplicities of
// a onto b, found by backtracking with degree-signature pruning. Returns the
// vertex mapping, or nullopt. Exhaustive, hence exact, but intended for small
// quivers; refuses with guard_error above vertex_bound vertices.
inline constexpr int kDefaultIsomorphismVertexBound = 12;
std::optional<std::vector<int>> graphs_isomorphic(
    const Quiver& a, const Quiver& b,
    int vertex_bound = kDefaultIsomorphismVertexBound);

struct HilbertRow {
  int n = 0;
  BigInt legal_words;  // legal words of length n + ell, by direct enumeration
  BigInt paths;        // paths of length n, from incidence-matrix powers
};

struct HilbertReport {
  int ell = 1;
  std::vector<HilbertRow> rows;
  bool passed = true;
};

// Checks dim A_{n+ell} == |Q_n| for n = 0..max_n: the two sides of the
// word/path bijection counted by independent methods.
HilbertReport hilbert_tail_check(const Presentation& p, const UfnGraph& g,
                                 int max_n);

}  // namespace ufn
