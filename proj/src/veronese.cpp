#include "ufn/veronese.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "ufn/errors.hpp"

namespace ufn {

VeronesePresentation veronese_presentation(const Presentation& p, int n) {
  if (n < 1) throw input_error("veronese degree must be positive");
  if (n < p.ell()) {
    throw input_error("veronese degree " + std::to_string(n) +
                      " is below the overlap bound " +
                      std::to_string(p.ell()) +
                      "; relations would not be quadratic");
  }
  VeronesePresentation vp{p, n, p.legal_words(n), {}};

  // uv is legal iff u, v are legal and no forbidden factor crosses the
  // boundary. A crossing factor has length <= ell + 1 <= n + 1, so it is
  // contained in the last ell letters of u plus the first ell of v. Scan that
  // window instead of the whole concatenation.
  const std::size_t win = static_cast<std::size_t>(std::min(n, p.ell()));
  std::vector<Word> tails, heads;
  tails.reserve(vp.blocks.size());
  heads.reserve(vp.blocks.size());
  for (const Word& b : vp.blocks) {
    tails.push_back(suffix(b, win));
    heads.push_back(prefix(b, win));
  }
  for (int i = 0; i < static_cast<int>(vp.blocks.size()); ++i) {
    for (int j = 0; j < static_cast<int>(vp.blocks.size()); ++j) {
      if (!p.is_legal(concat(tails[static_cast<std::size_t>(i)],
                             heads[static_cast<std::size_t>(j)]))) {
        vp.relations.emplace_back(i, j);
      }
    }
  }
  return vp;
}

Presentation VeronesePresentation::to_presentation(
    const std::vector<std::string>& aliases) const {
  std::vector<std::string> names;
  if (aliases.empty()) {
    for (const Word& b : blocks) names.push_back(base.word_string(b));
  } else {
    if (aliases.size() != blocks.size()) {
      throw input_error("expected " + std::to_string(blocks.size()) +
                        " aliases, got " + std::to_string(aliases.size()));
    }
    names = aliases;
  }
  std::vector<Word> forbidden;
  forbidden.reserve(relations.size());
  for (const auto& [i, j] : relations) forbidden.push_back(Word{i, j});
  return Presentation(names, forbidden);
}

UfnGraph veronese_ufn_graph(const VeronesePresentation& vp,
                            const std::vector<std::string>& aliases) {
  return UfnGraph(vp.to_presentation(aliases));
}

Presentation quiver_to_presentation(const QuiverInput& qi) {
  const Quiver& q = qi.quiver;
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (int a = 0; a < q.arrow_count(); ++a) {
    const std::string& name = q.arrow(a).name;
    if (!seen.insert(name).second) {
      throw input_error("duplicate arrow name: " + name);
    }
    names.push_back(name);
  }
  std::vector<Word> forbidden;
  for (int a = 0; a < q.arrow_count(); ++a) {
    for (int b = 0; b < q.arrow_count(); ++b) {
      if (q.arrow(a).target != q.arrow(b).source) {
        forbidden.push_back(Word{a, b});
      }
    }
  }
  for (const auto& ids : qi.forbidden_paths) {
    if (ids.size() < 2) {
      throw input_error("forbidden paths must have length at least 2");
    }
    for (int id : ids) {
      if (id < 0 || id >= q.arrow_count()) {
        throw input_error("forbidden path references unknown arrow");
      }
    }
    for (std::size_t i = 0; i + 1 < ids.size(); ++i) {
      if (q.arrow(ids[i]).target != q.arrow(ids[i + 1]).source) {
        throw input_error("forbidden path is not composable");
      }
    }
    forbidden.emplace_back(ids.begin(), ids.end());
  }
  return Presentation(names, forbidden);
}

}  // namespace ufn
