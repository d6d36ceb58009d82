#include "ufn/quiver.hpp"

namespace ufn {

int Quiver::add_vertex(Vertex v) {
  vertices_.push_back(std::move(v));
  out_.emplace_back();
  in_.emplace_back();
  return vertex_count() - 1;
}

int Quiver::add_arrow(Arrow a) {
  if (a.source < 0 || a.source >= vertex_count() || a.target < 0 ||
      a.target >= vertex_count()) {
    throw input_error("arrow endpoint out of range");
  }
  arrows_.push_back(std::move(a));
  const int id = arrow_count() - 1;
  out_[static_cast<std::size_t>(arrows_.back().source)].push_back(id);
  in_[static_cast<std::size_t>(arrows_.back().target)].push_back(id);
  return id;
}

Path make_path(const Quiver& q, std::span<const int> arrow_ids) {
  if (arrow_ids.empty()) throw input_error("a path needs at least one arrow");
  for (int a : arrow_ids) {
    if (a < 0 || a >= q.arrow_count())
      throw input_error("arrow id out of range");
  }
  for (std::size_t i = 0; i + 1 < arrow_ids.size(); ++i) {
    if (q.arrow(arrow_ids[i]).target != q.arrow(arrow_ids[i + 1]).source)
      throw input_error("arrows do not compose");
  }
  return Path(q.arrow(arrow_ids.front()).source,
              q.arrow(arrow_ids.back()).target,
              std::vector<int>(arrow_ids.begin(), arrow_ids.end()));
}

Path concat_paths(const Path& p, const Path& q) {
  if (p.target() != q.source())
    throw input_error("paths do not compose");
  if (p.is_trivial()) return q;
  if (q.is_trivial()) return p;
  std::vector<int> arrows = p.arrows();
  arrows.insert(arrows.end(), q.arrows().begin(), q.arrows().end());
  return Path(p.source(), q.target(), std::move(arrows));
}

Quiver reversed(const Quiver& q) {
  Quiver r;
  for (const Vertex& v : q.vertices()) r.add_vertex(v);
  for (const Arrow& a : q.arrows()) {
    Arrow b = a;
    b.source = a.target;
    b.target = a.source;
    r.add_arrow(std::move(b));
  }
  return r;
}

}  // namespace ufn
