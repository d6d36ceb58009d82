#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdint>
#include <numeric>

#include "corpus.hpp"
#include "doctest.h"
#include "ufn/hom.hpp"
#include "ufn/verify.hpp"

using ufn::Presentation;
using ufn::UfnGraph;

namespace {

std::uint64_t words_in_range(const Presentation& p, int lo, int hi) {
  const auto counts = p.legal_word_counts(hi);
  std::uint64_t total = 0;
  for (int r = lo; r <= hi; ++r) total += counts[static_cast<std::size_t>(r)];
  return total;
}

}  // namespace

TEST_CASE("the full battery passes on the worked examples") {
  for (const Presentation& p :
       {corpus::zz_zy(), corpus::yyy(), corpus::xy_xx()}) {
    const UfnGraph g(p);
    const ufn::VerifyReport report = run_checks(p, g, 8);
    CHECK(report.all_passed());
    REQUIRE(report.checks.size() == 15);
    for (const auto& c : report.checks) {
      INFO(c.name);
      CHECK(c.passed);
      CHECK(c.counterexample.empty());
    }
  }
}

TEST_CASE("case counters measure what they claim") {
  const Presentation p = corpus::yyy();
  const UfnGraph g(p);

  // kernel sweep touches every legal word once per check
  const auto kernel = kernel_image_sweep(g, 7);
  const std::uint64_t legal_1_to_7 = words_in_range(p, 1, 7);
  CHECK(kernel.kernel_criterion.cases == legal_1_to_7);
  CHECK(kernel.unit_coefficients.cases == legal_1_to_7);
  CHECK(kernel.kernel_criterion.passed);
  CHECK(kernel.independence.passed);
  CHECK(kernel.unit_coefficients.passed);

  // label sweep touches every word; the illegal check counts the complement
  const auto label = label_lemma_sweep(g, 5);
  std::uint64_t all_1_to_5 = 0;
  for (int r = 1; r <= 5; ++r) {
    std::uint64_t n = 1;
    for (int i = 0; i < r; ++i) n *= 2;
    all_1_to_5 += n;
  }
  CHECK(label.illegal_no_paths.cases == all_1_to_5 - words_in_range(p, 1, 5));
  CHECK(label.illegal_no_paths.passed);
  CHECK(label.reachability.cases == all_1_to_5);
  CHECK(label.suffix_reduction.passed);

  CHECK(check_relations_vanish(g).cases == p.forbidden().size());

  // bijection walks the legal words of length ell..max+ell
  const auto bij = check_word_path_bijection(g, 6);
  CHECK(bij.cases == words_in_range(p, g.ell(), 6 + g.ell()));
  CHECK(bij.passed);

  const auto spell = check_paths_yield_legal_words(g, 6);
  CHECK(spell.passed);
  CHECK(spell.cases == words_in_range(p, g.ell() + 1, 6 + g.ell()));
}

TEST_CASE("battery passes across the corpus at a shallow depth") {
  for (const auto& entry : corpus::build(25)) {
    const UfnGraph g(entry.pres);
    INFO(entry.name);
    const auto report = run_checks(entry.pres, g, 6);
    CHECK(report.all_passed());
  }
}

TEST_CASE("a mismatched presentation and graph is caught") {
  const Presentation a = corpus::zz_zy();
  const Presentation b = corpus::yyy();
  const auto report = hilbert_tail_check(a, UfnGraph(b), 5);
  CHECK(!report.passed);
}

TEST_CASE("bounds and guards") {
  const Presentation p = corpus::yyy();
  const UfnGraph g(p);
  CHECK_THROWS_AS(run_checks(p, g, -1), ufn::input_error);
  CHECK_THROWS_AS(kernel_image_sweep(g, -2), ufn::input_error);

  // build the graph first: a 3-node guard would abort even the L_2 scan
  Presentation tight = p;
  const UfnGraph tg(tight);
  tight.set_enumeration_guard(3);
  CHECK_THROWS_AS(run_checks(tight, tg, 10), ufn::guard_error);
}
