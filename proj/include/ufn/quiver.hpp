#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ufn/errors.hpp"
#include "ufn/word.hpp"

namespace ufn {

struct Vertex {
  std::string name;
  // Defining word, when the quiver is built from a presentation.
  std::optional<Word> word;
};

struct Arrow {
  int source = 0;
  int target = 0;
  std::string name;
  // Letter carried by the arrow (first letter of its defining word).
  std::optional<Letter> label;
  std::optional<Word> word;
};

// A finite directed multigraph. Vertices and arrows are identified by their
// position in insertion order; loops and parallel arrows are allowed.
class Quiver {
 public:
  int add_vertex(Vertex v);
  int add_arrow(Arrow a);  // endpoints must exist

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Vertex& vertex(int v) const { return vertices_.at(v); }
  const Arrow& arrow(int a) const { return arrows_.at(a); }
  const std::vector<int>& out_arrows(int v) const { return out_.at(v); }
  const std::vector<int>& in_arrows(int v) const { return in_.at(v); }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

// A directed path: the trivial path at a vertex, or a nonempty composable
// arrow sequence. Paths order lexicographically by (source, target, arrows),
// which is a total order on the homogeneous components of a path algebra.
class Path {
 public:
  static Path trivial(int vertex) { return Path(vertex, vertex, {}); }
  Path(int source, int target, std::vector<int> arrows)
      : source_(source), target_(target), arrows_(std::move(arrows)) {}

  int length() const { return static_cast<int>(arrows_.size()); }
  bool is_trivial() const { return arrows_.empty(); }
  int source() const { return source_; }
  int target() const { return target_; }
  const std::vector<int>& arrows() const { return arrows_; }

  friend auto operator<=>(const Path&, const Path&) = default;

 private:
  int source_;
  int target_;
  std::vector<int> arrows_;
};

// Builds a path from consecutive composable arrows; throws input_error when
// the sequence is empty, an id is out of range, or two arrows fail to meet.
Path make_path(const Quiver& q, std::span<const int> arrow_ids);

// Concatenation p * q; requires p.target() == q.source().
Path concat_paths(const Path& p, const Path& q);

// The same quiver with every arrow reversed.
Quiver reversed(const Quiver& q);

}  // namespace ufn
