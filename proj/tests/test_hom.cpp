#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>
#include <string>

#include "corpus.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "ufn/hom.hpp"

using ufn::KernelData;
using ufn::PathSum;
using ufn::Presentation;
using ufn::UfnGraph;
using ufn::Word;

namespace {

// arrow names of the single-arrow terms of a degree-one sum
std::set<std::string> term_arrows(const PathSum& s, const UfnGraph& g) {
  std::set<std::string> out;
  for (const auto& [path, coeff] : s.terms()) {
    REQUIRE(path.length() == 1);
    REQUIRE(coeff == 1);
    out.insert(g.quiver().arrow(path.arrows()[0]).name);
  }
  return out;
}

}  // namespace

TEST_CASE("generator images of the three-generator example") {
  const UfnGraph g(corpus::zz_zy());
  CHECK(term_arrows(f_letter(0, g), g) ==
        std::set<std::string>{"xx", "xy", "xz"});
  CHECK(term_arrows(f_letter(1, g), g) ==
        std::set<std::string>{"yx", "yy", "yz"});
  CHECK(term_arrows(f_letter(2, g), g) == std::set<std::string>{"zx"});
  CHECK_THROWS_AS(f_letter(3, g), ufn::input_error);
}

TEST_CASE("generator images of the cube-relation example") {
  const UfnGraph g(corpus::yyy());
  CHECK(term_arrows(f_letter(0, g), g) ==
        std::set<std::string>{"xxx", "xxy", "xyx", "xyy"});
  CHECK(term_arrows(f_letter(1, g), g) ==
        std::set<std::string>{"yxx", "yxy", "yyx"});
}

TEST_CASE("word images are the labelled-path sums") {
  for (const Presentation& pres :
       {corpus::zz_zy(), corpus::yyy(), corpus::xy_xx()}) {
    const UfnGraph g(pres);
    for (int r = 1; r <= 5; ++r) {
      for (const Word& u : oracle::all_words(pres.alphabet_size(), r)) {
        const PathSum fw = f_word(u, g);
        const auto want = oracle::paths_labeled(g.quiver(), u);
        REQUIRE(fw.term_count() == want.size());
        std::vector<std::vector<int>> got;
        for (const auto& [path, coeff] : fw.terms()) {
          CHECK(coeff == 1);
          got.push_back(path.arrows());
        }
        std::sort(got.begin(), got.end());
        CHECK(got == want);
        if (!pres.is_legal(u)) CHECK(fw.is_zero());
      }
    }
    // the empty word maps to the unit
    CHECK(f_word({}, g) == PathSum::unit(g.quiver()));
  }
}

TEST_CASE("kernel generators of the worked examples") {
  {
    const Presentation p = corpus::zz_zy();
    const UfnGraph g(p);
    CHECK(kernel_generators(p, g).words.empty());  // every letter has arrows
  }
  {
    const Presentation p = corpus::yyy();
    const UfnGraph g(p);
    CHECK(kernel_generators(p, g).words.empty());
  }
  {
    const Presentation p = corpus::xy_xx();
    const UfnGraph g(p);
    const KernelData k = kernel_generators(p, g);
    REQUIRE(k.words.size() == 1);
    CHECK(k.words[0] == Word{0});  // S = {x}, and x is legal
    CHECK(k.word_is_legal[0]);
    CHECK(f_word({0}, g).is_zero());
    CHECK(p.is_legal({0}));
  }
  {
    // empty graph: both short words label no path, one of them legally
    const Presentation p({"x"}, {{0, 0}, {0, 0, 0}});
    const UfnGraph g(p);
    const KernelData k = kernel_generators(p, g);
    REQUIRE(k.words.size() == 2);
    CHECK(k.words[0] == Word{0});
    CHECK(k.words[1] == Word{0, 0});
    CHECK(k.word_is_legal[0]);
    CHECK(!k.word_is_legal[1]);
  }
}

TEST_CASE("suffix membership test") {
  const Presentation p = corpus::xy_xx();
  const UfnGraph g(p);
  const KernelData k = kernel_generators(p, g);
  CHECK(k.kills({0}));         // x
  CHECK(k.kills({1, 1, 0}));   // yyx ends in x
  CHECK(!k.kills({1, 1}));
  CHECK(!k.kills({}));

  CHECK(kernel_membership({1, 1, 0}, k, p, g));
  CHECK(!kernel_membership({1, 1}, k, p, g));
  CHECK_THROWS_AS(kernel_membership({0, 0}, k, p, g), ufn::input_error);
}

TEST_CASE("membership by suffix equals vanishing image, across the corpus") {
  for (const auto& entry : corpus::build(30)) {
    const UfnGraph g(entry.pres);
    const KernelData k = kernel_generators(entry.pres, g);
    INFO(entry.name);
    for (int r = 1; r <= 5; ++r) {
      for (const Word& w : oracle::legal_words(entry.pres.alphabet_size(),
                                               entry.pres.forbidden(), r)) {
        CHECK(kernel_membership(w, k, entry.pres, g) == f_word(w, g).is_zero());
      }
    }
  }
}

TEST_CASE("dimension table of the kernel and image") {
  {
    const Presentation p = corpus::xy_xx();
    const UfnGraph g(p);
    const auto rows = kernel_dimension_table(p, g, kernel_generators(p, g), 6);
    REQUIRE(rows.size() == 7);
    CHECK(rows[0].degree == 0);
    CHECK(rows[0].algebra == 1);
    CHECK(rows[0].kernel == 0);
    CHECK(rows[0].image == 1);
    for (int r = 1; r <= 6; ++r) {
      CHECK(rows[static_cast<std::size_t>(r)].algebra == 2);
      CHECK(rows[static_cast<std::size_t>(r)].kernel == 1);
      CHECK(rows[static_cast<std::size_t>(r)].image == 1);
    }
  }
  {
    // injective case: kernel column is zero, image fills the algebra
    const Presentation p = corpus::zz_zy();
    const UfnGraph g(p);
    const auto rows = kernel_dimension_table(p, g, kernel_generators(p, g), 5);
    const std::vector<std::uint64_t> dims = {1, 3, 7, 17, 41, 99};
    for (int r = 0; r <= 5; ++r) {
      CHECK(rows[static_cast<std::size_t>(r)].algebra ==
            dims[static_cast<std::size_t>(r)]);
      CHECK(rows[static_cast<std::size_t>(r)].kernel == 0);
      CHECK(rows[static_cast<std::size_t>(r)].image ==
            dims[static_cast<std::size_t>(r)]);
    }
  }
  {
    // no vertices at all: even the unit dies
    const Presentation p({"x"}, {{0, 0}, {0, 0, 0}});
    const UfnGraph g(p);
    const auto rows = kernel_dimension_table(p, g, kernel_generators(p, g), 3);
    CHECK(rows[0].algebra == 1);
    CHECK(rows[0].kernel == 1);
    CHECK(rows[0].image == 0);
    CHECK(rows[1].algebra == 1);
    CHECK(rows[1].kernel == 1);
    CHECK(rows[2].algebra == 0);
  }
}

TEST_CASE("annihilation, stability, independence") {
  for (const auto& entry : corpus::build(20)) {
    const UfnGraph g(entry.pres);
    INFO(entry.name);
    CHECK(verify_kernel_annihilation(kernel_generators(entry.pres, g),
                                     entry.pres)
              .passed);
    CHECK(verify_cokernel_stability(entry.pres, g).passed);
    CHECK(verify_independence(entry.pres, g, 6).passed);
  }
}
