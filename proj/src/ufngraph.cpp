#include "ufn/ufngraph.hpp"

#include <algorithm>
#include <cassert>

namespace ufn {

UfnGraph::UfnGraph(const Presentation& p)
    : pres_(p), ell_(p.ell()),
      arrows_by_label_(static_cast<std::size_t>(p.alphabet_size())) {
  for (const Word& w : pres_.legal_words(ell_)) {
    const int v = quiver_.add_vertex({pres_.word_string(w), w});
    vertex_by_word_.emplace(w, v);
  }
  for (const Word& w : pres_.legal_words(ell_ + 1)) {
    const auto s = vertex_of_word(prefix(w, static_cast<std::size_t>(ell_)));
    const auto t = vertex_of_word(suffix(w, static_cast<std::size_t>(ell_)));
    assert(s && t);  // factors of a legal word are legal
    const Letter label = w.front();
    const int a =
        quiver_.add_arrow({*s, *t, pres_.word_string(w), label, w});
    arrow_by_word_.emplace(w, a);
    const bool fresh = arrow_by_ends_.emplace(std::make_pair(*s, *t), a).second;
    assert(fresh);  // the word s + last(t) is determined by the pair
    (void)fresh;
    assert(label == quiver_.vertex(*s).word->front());
    arrows_by_label_[static_cast<std::size_t>(label)].push_back(a);
  }
}

std::optional<int> UfnGraph::vertex_of_word(const Word& w) const {
  auto it = vertex_by_word_.find(w);
  if (it == vertex_by_word_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> UfnGraph::arrow_of_word(const Word& w) const {
  auto it = arrow_by_word_.find(w);
  if (it == arrow_by_word_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> UfnGraph::arrow_between(int source, int target) const {
  auto it = arrow_by_ends_.find({source, target});
  if (it == arrow_by_ends_.end()) return std::nullopt;
  return it->second;
}

Letter UfnGraph::vertex_first_letter(int v) const {
  return quiver_.vertex(v).word->front();
}

const std::vector<int>& UfnGraph::arrows_with_label(Letter x) const {
  if (x < 0 || x >= pres_.alphabet_size())
    throw input_error("letter index out of range");
  return arrows_by_label_[static_cast<std::size_t>(x)];
}

Path UfnGraph::word_to_path(const Word& w) const {
  const auto len = static_cast<int>(w.size());
  if (len < ell_)
    throw input_error("word is shorter than ell; no path represents it");
  if (!pres_.is_legal(w))
    throw input_error("illegal words have no path representative");
  if (len == ell_) return Path::trivial(*vertex_of_word(w));

  std::vector<int> ids;
  ids.reserve(static_cast<std::size_t>(len - ell_));
  for (int i = 0; i + ell_ < len; ++i) {
    Word window(w.begin() + i, w.begin() + i + ell_ + 1);
    const auto a = arrow_of_word(window);
    assert(a);  // windows of a legal word are legal
    ids.push_back(*a);
  }
  const int source = quiver_.arrow(ids.front()).source;
  const int target = quiver_.arrow(ids.back()).target;
  return Path(source, target, std::move(ids));
}

Word UfnGraph::path_to_word(const Path& p) const {
  if (p.source() < 0 || p.source() >= quiver_.vertex_count())
    throw input_error("path vertex out of range");
  if (p.is_trivial()) return *quiver_.vertex(p.source()).word;
  Word w = *quiver_.arrow(p.arrows().front()).word;
  for (std::size_t i = 1; i < p.arrows().size(); ++i) {
    const Word& next = *quiver_.arrow(p.arrows()[i]).word;
    assert(std::equal(next.begin(), next.end() - 1,
                      w.end() - static_cast<std::ptrdiff_t>(next.size()) + 1));
    w.push_back(next.back());
  }
  return w;
}

std::vector<Path> UfnGraph::paths_with_label(const Word& u) const {
  if (u.empty()) throw input_error("a path label must be nonempty");
  for (Letter x : u) {
    if (x < 0 || x >= pres_.alphabet_size())
      throw input_error("letter index out of range");
  }
  std::vector<Path> frontier;
  for (int a : arrows_with_label(u.front())) {
    frontier.emplace_back(quiver_.arrow(a).source, quiver_.arrow(a).target,
                          std::vector<int>{a});
  }
  for (std::size_t i = 1; i < u.size(); ++i) {
    std::vector<Path> next;
    for (const Path& p : frontier) {
      if (vertex_first_letter(p.target()) != u[i]) continue;
      for (int a : quiver_.out_arrows(p.target())) {
        std::vector<int> ids = p.arrows();
        ids.push_back(a);
        next.emplace_back(p.source(), quiver_.arrow(a).target,
                          std::move(ids));
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  std::sort(frontier.begin(), frontier.end());
  return frontier;
}

bool UfnGraph::path_exists_labeled(const Word& u) const {
  if (u.empty()) throw input_error("a path label must be nonempty");
  for (const Vertex& v : quiver_.vertices()) {
    if (pres_.is_legal(concat(u, *v.word))) return true;
  }
  return false;
}

}  // namespace ufn
