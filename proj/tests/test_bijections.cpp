#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "permstat/bijections.hpp"
#include "permstat/star.hpp"

using namespace permstat;

TEST_CASE("insertion words from embracing numbers") {
  CHECK(word_from_embracings({4, 6, 8, 9}, {{4, 1}, {6, 1}, {8, 0}, {9, 0}},
                             EmbracingMode::InversionBottom) == std::vector<int>{8, 4, 6, 9});
  CHECK(word_from_embracings({1, 2, 3, 5, 7}, {{1, 0}, {2, 0}, {3, 0}, {5, 1}, {7, 2}},
                             EmbracingMode::InversionTop) == std::vector<int>{1, 2, 7, 5, 3});
  CHECK(word_from_embracings({2, 5, 9}, {}, EmbracingMode::InversionBottom) ==
        std::vector<int>{2, 5, 9});
  CHECK_THROWS_AS(
      word_from_embracings({1, 2}, {{2, 2}}, EmbracingMode::InversionTop),
      EmbracingOutOfRangeError);
}

TEST_CASE("phi worked examples") {
  CHECK(phi(parse_permutation("412796583")).to_string() == "249385716");
  CHECK(phi(parse_permutation("1423")).to_string() == "1342");
  CHECK(phi(parse_permutation("4321")).to_string() == "4123");
  CHECK(phi(Permutation::identity(6)) == Permutation::identity(6));
  CHECK(phi(Permutation()) == Permutation());
}

TEST_CASE("phi is a bijection with a cached inverse") {
  for (int n = 0; n <= 8; ++n) {
    std::set<std::vector<int>> images;
    for_each_permutation(n, [&images](const Permutation& s) { images.insert(phi(s).word()); });
    CHECK(images.size() == static_cast<size_t>(factorial_ll(n)));
  }
  CHECK(phi_inverse(parse_permutation("1342")).to_string() == "1423");
  CHECK(phi_inverse(parse_permutation("249385716")).to_string() == "412796583");
  for_each_permutation(6, [](const Permutation& s) { CHECK(phi_inverse(phi(s)) == s); });
  CHECK_THROWS_AS(phi_inverse(Permutation::identity(5), 4), CacheBoundExceededError);
}

TEST_CASE("phi transfers the seven statistics and their refinement") {
  for (int n = 0; n <= 6; ++n) {
    for_each_permutation(n, [n](const Permutation& s) {
      const Permutation tau = phi(s);
      const LinearCounts lin = linear_counts(s, BoundaryConvention::ZeroTop);
      const PatternCounts pat = pattern_counts(s);
      const CyclicCounts cyc = cyclic_counts(tau);
      const CrossNestCounts cn = crossing_nesting_counts(tau);
      CHECK(pat.ress == cn.nest);
      CHECK(pat.les == cn.cros);
      CHECK(lin.des == cyc.defi);
      CHECK(lin.da - lin.fmax == cyc.cda);
      CHECK(lin.dd == cyc.cdd);
      CHECK(lin.valley == cyc.cvalley);
      CHECK(lin.fmax == cyc.fix);
      for (int k = 1; k <= n; ++k)
        CHECK(pat.ress_k[static_cast<size_t>(k - 1)] == cn.nest_k[static_cast<size_t>(k - 1)]);
    });
  }
}

TEST_CASE("psi worked examples") {
  CHECK(psi(parse_permutation("412796583")).to_string() == "351496827");
  CHECK(psi(parse_permutation("1234")).to_string() == "2341");
  CHECK(psi(parse_permutation("4321")).to_string() == "1234");
}

TEST_CASE("psi is a bijection transferring the six statistics") {
  CHECK(psi(Permutation()) == Permutation());
  for (int n = 1; n <= 6; ++n) {
    std::set<std::vector<int>> images;
    for_each_permutation(n, [&](const Permutation& s) {
      const Permutation tau = psi(s);
      images.insert(tau.word());
      const LinearCounts lin = linear_counts(s, BoundaryConvention::ZeroZero);
      const PatternCounts pat = pattern_counts(s);
      const StarCounts st = star_counts(tau);
      CHECK(pat.res == st.nest);
      CHECK(pat.les == st.cros);
      CHECK(lin.des == st.defi - 1);
      CHECK(lin.da == st.cda + st.fix);
      CHECK(lin.dd == st.cdd);
      CHECK(lin.valley == st.cvalley);
    });
    CHECK(images.size() == static_cast<size_t>(factorial_ll(n)));
  }
}

TEST_CASE("psi stays injective at the larger desk sizes") {
  for (int n = 7; n <= 8; ++n) {
    std::set<std::vector<int>> images;
    for_each_permutation(n, [&images](const Permutation& s) { images.insert(psi(s).word()); });
    CHECK(images.size() == static_cast<size_t>(factorial_ll(n)));
  }
}
