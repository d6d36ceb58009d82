#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "corpus.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "ufn/veronese.hpp"

using ufn::Presentation;
using ufn::QuiverInput;
using ufn::UfnGraph;
using ufn::VeronesePresentation;
using ufn::Word;

TEST_CASE("second veronese of the cube-relation algebra") {
  const Presentation base = corpus::yyy();
  const VeronesePresentation vp = veronese_presentation(base, 2);
  REQUIRE(vp.blocks.size() == 4);
  CHECK(vp.blocks == std::vector<Word>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});

  const Presentation bp = vp.to_presentation({"s", "t", "u", "v"});
  CHECK(bp.generator_names() == std::vector<std::string>{"s", "t", "u", "v"});
  // blocks s=xx t=xy u=yx v=yy; exactly tv, vu, vv hit the cube
  CHECK(bp.forbidden() ==
        std::vector<Word>{{1, 3}, {3, 2}, {3, 3}});
  CHECK(bp.ell() == 1);

  const UfnGraph vg = veronese_ufn_graph(vp, {"s", "t", "u", "v"});
  CHECK(vg.quiver().vertex_count() == 4);
  CHECK(vg.quiver().arrow_count() == 13);

  // block words of length m are exactly the base words of length 2m
  const auto base_counts = base.legal_word_counts(12);
  const auto block_counts = bp.legal_word_counts(6);
  for (int m = 0; m <= 6; ++m) {
    CHECK(block_counts[static_cast<std::size_t>(m)] ==
          base_counts[static_cast<std::size_t>(2 * m)]);
  }
}

TEST_CASE("first veronese is the algebra itself") {
  const Presentation base = corpus::zz_zy();
  const VeronesePresentation vp = veronese_presentation(base, 1);
  CHECK(vp.blocks.size() == 3);
  const Presentation bp = vp.to_presentation();
  CHECK(bp.generator_names() == base.generator_names());
  CHECK(bp.forbidden() == base.forbidden());
}

TEST_CASE("veronese word counts match the base at every admissible n") {
  for (const auto& entry : corpus::build(15)) {
    const int ell = entry.pres.ell();
    INFO(entry.name);
    for (int n = ell; n <= ell + 2; ++n) {
      const VeronesePresentation vp = veronese_presentation(entry.pres, n);
      const Presentation bp = vp.to_presentation();
      const auto base_counts = entry.pres.legal_word_counts(4 * n);
      const auto block_counts = bp.legal_word_counts(4);
      for (int m = 0; m <= 4; ++m) {
        CHECK(block_counts[static_cast<std::size_t>(m)] ==
              base_counts[static_cast<std::size_t>(n * m)]);
      }
    }
  }
}

TEST_CASE("block legality is decided by the quadratic relations alone") {
  // brute-force: a sequence of blocks is legal exactly when its flattening is
  const Presentation base = corpus::yyy();
  for (int n = 2; n <= 4; ++n) {
    const VeronesePresentation vp = veronese_presentation(base, n);
    const Presentation bp = vp.to_presentation();
    const int nblocks = static_cast<int>(vp.blocks.size());
    for (const Word& seq : oracle::all_words(nblocks, 3)) {
      Word flat;
      for (auto b : seq) {
        const Word& block = vp.blocks[static_cast<std::size_t>(b)];
        flat.insert(flat.end(), block.begin(), block.end());
      }
      CHECK(bp.is_legal(seq) == base.is_legal(flat));
    }
  }
}

TEST_CASE("veronese input validation") {
  const Presentation base = corpus::yyy();  // ell = 2
  CHECK_THROWS_AS(veronese_presentation(base, 0), ufn::input_error);
  CHECK_THROWS_AS(veronese_presentation(base, 1), ufn::input_error);
  CHECK_NOTHROW(veronese_presentation(base, 2));

  const VeronesePresentation vp = veronese_presentation(base, 2);
  CHECK_THROWS_AS(vp.to_presentation({"a", "b"}), ufn::input_error);
  CHECK_THROWS_AS(vp.to_presentation({"a", "a", "b", "c"}), ufn::input_error);

  // default names are the block words themselves
  const Presentation bp = vp.to_presentation();
  CHECK(bp.generator_names() ==
        std::vector<std::string>{"xx", "xy", "yx", "yy"});
}

TEST_CASE("presentation out of a quiver") {
  {
    // one vertex, loops a and b, with bbb struck out by hand
    QuiverInput qi;
    qi.quiver.add_vertex({"v", std::nullopt});
    qi.quiver.add_arrow({0, 0, "a", std::nullopt, std::nullopt});
    qi.quiver.add_arrow({0, 0, "b", std::nullopt, std::nullopt});
    qi.forbidden_paths = {{1, 1, 1}};
    const Presentation p = quiver_to_presentation(qi);
    CHECK(p.generator_names() == std::vector<std::string>{"a", "b"});
    CHECK(p.forbidden() == std::vector<Word>{{1, 1, 1}});
  }
  {
    // 1 -a-> 2 with loop c at 2 and b back: the non-composable pairs
    QuiverInput qi;
    qi.quiver.add_vertex({"1", std::nullopt});
    qi.quiver.add_vertex({"2", std::nullopt});
    qi.quiver.add_arrow({0, 1, "a", std::nullopt, std::nullopt});
    qi.quiver.add_arrow({1, 0, "b", std::nullopt, std::nullopt});
    qi.quiver.add_arrow({1, 1, "c", std::nullopt, std::nullopt});
    const Presentation p = quiver_to_presentation(qi);
    CHECK(p.generator_names() == std::vector<std::string>{"a", "b", "c"});
    CHECK(p.forbidden() ==
          std::vector<Word>{{0, 0}, {1, 1}, {1, 2}, {2, 0}});

    // legal words of length r are the composable paths of length r, for
    // r >= 1; degree 0 disagrees by design (one empty word vs one trivial
    // path per vertex)
    const auto counts = p.legal_word_counts(6);
    CHECK(counts[0] == 1);
    CHECK(oracle::count_paths_total(qi.quiver, 0) == 2);
    for (int r = 1; r <= 6; ++r) {
      CHECK(counts[static_cast<std::size_t>(r)] ==
            oracle::count_paths_total(qi.quiver, r));
    }
  }
  {
    QuiverInput dup;
    dup.quiver.add_vertex({"v", std::nullopt});
    dup.quiver.add_arrow({0, 0, "a", std::nullopt, std::nullopt});
    dup.quiver.add_arrow({0, 0, "a", std::nullopt, std::nullopt});
    CHECK_THROWS_AS(quiver_to_presentation(dup), ufn::input_error);
  }
  {
    QuiverInput bad;
    bad.quiver.add_vertex({"v", std::nullopt});
    bad.quiver.add_arrow({0, 0, "a", std::nullopt, std::nullopt});
    bad.forbidden_paths = {{0, 7}};
    CHECK_THROWS_AS(quiver_to_presentation(bad), ufn::input_error);
    bad.forbidden_paths = {{0}};  // too short to be a relation
    CHECK_THROWS_AS(quiver_to_presentation(bad), ufn::input_error);
  }
}
