#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "permstat/star.hpp"

using namespace permstat;

TEST_CASE("star word examples") {
  CHECK(star_map(parse_permutation("3762154")).to_string() == "2651043");
  CHECK(star_map(Permutation::identity(3)).to_string() == "012");

  std::set<std::vector<int>> images;
  for_each_permutation(5, [&images](const Permutation& s) { images.insert(star_map(s).word()); });
  CHECK(images.size() == 120);
}

TEST_CASE("star statistics on the worked example") {
  const StarCounts c = star_counts(parse_permutation("3762154"));
  CHECK(c.cros == 4);
  CHECK(c.nest == 3);
  CHECK(c.components == 2);  // one cycle and the descending path
  CHECK(c.cycles == 1);

  const StatRecord r = star_stats(parse_permutation("3762154"));
  CHECK(r.get("cros_star") == 4);
  CHECK(r.get("nest_star") == 3);
  CHECK(r.get("cyc_star") == 2);
}

TEST_CASE("fixed stars of 231") {
  // 231 lowers to 120, which fixes the values 1 and 2.
  CHECK(star_counts(parse_permutation("231")).fix == 2);
}

TEST_CASE("star weak excedances count ordinary excedances") {
  for (int n = 1; n <= 8; ++n) {
    for_each_permutation(n, [](const Permutation& s) {
      CHECK(star_counts(s).wex == cyclic_counts(s).exc);
    });
  }
}

TEST_CASE("star diagram is cycles plus one path") {
  for_each_permutation(7, [](const Permutation& s) {
    const StarCounts c = star_counts(s);
    CHECK(c.components == c.cycles + 1);
    CHECK(c.defi == s.size() - c.wex);
  });
}
