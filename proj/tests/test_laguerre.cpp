#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "permstat/laguerre.hpp"
#include "permstat/polynomials.hpp"

using namespace permstat;

TEST_CASE("history space sizes") {
  long long fact = 1;
  for (int n = 0; n <= 6; ++n) {
    CHECK(enumerate_histories(n, Flavor::FV).size() == static_cast<size_t>(fact * (n + 1)));
    fact *= n + 1;
  }
  // FZ-flavoured histories of length n are in bijection with S_n.
  long long f = 1;
  for (int n = 0; n <= 6; ++n) {
    if (n > 0) f *= n;
    CHECK(enumerate_histories(n, Flavor::FZ).size() == static_cast<size_t>(f));
  }
}

TEST_CASE("history bounds are enforced") {
  // A fall at height 1 admits no choice under the FZ bounds beyond p = 0.
  const ColoredMotzkinPath ud{std::vector<Step>{Step::NorthEast, Step::SouthEast}};
  CHECK_NOTHROW(LaguerreHistory(ud, {0, 0}, Flavor::FZ));
  CHECK_THROWS_AS(LaguerreHistory(ud, {0, 1}, Flavor::FZ), DomainError);
  CHECK_NOTHROW(LaguerreHistory(ud, {0, 1}, Flavor::FV));
  CHECK_THROWS_AS(LaguerreHistory(ud, {0}, Flavor::FV), DomainError);
  // A red level step at height 0 is impossible in the FZ flavour.
  const ColoredMotzkinPath r{std::vector<Step>{Step::EastRed}};
  CHECK_THROWS_AS(LaguerreHistory(r, {0}, Flavor::FZ), DomainError);
  CHECK_NOTHROW(LaguerreHistory(r, {0}, Flavor::FV));
}

TEST_CASE("valley-history map worked examples") {
  const LaguerreHistory h = fv_map(parse_permutation("213"));
  CHECK(h.path.steps == std::vector<Step>{Step::NorthEast, Step::SouthEast});
  CHECK(h.choices == std::vector<int>{0, 1});

  CHECK(fv_map(parse_permutation("1")).length() == 0);

  std::set<LaguerreHistory> images;
  for_each_permutation(4, [&images](const Permutation& s) { images.insert(fv_map(s)); });
  CHECK(images.size() == 24);
  const auto all = enumerate_histories(3, Flavor::FV);
  CHECK(all.size() == 24);
  for (const auto& hist : all) CHECK(images.count(hist) == 1);
}

TEST_CASE("cyclic-history map worked examples") {
  const LaguerreHistory h21 = fz_map(parse_permutation("21"));
  CHECK(h21.path.steps == std::vector<Step>{Step::NorthEast, Step::SouthEast});
  CHECK(h21.choices == std::vector<int>{0, 0});

  const LaguerreHistory hid = fz_map(Permutation::identity(2));
  CHECK(hid.path.steps == std::vector<Step>{Step::EastBlue, Step::EastBlue});
  CHECK(hid.choices == std::vector<int>{0, 0});

  std::set<LaguerreHistory> images;
  for_each_permutation(4, [&images](const Permutation& s) { images.insert(fz_map(s)); });
  CHECK(images.size() == 24);
}

TEST_CASE("a fixed point is exactly a blue step at its height bound") {
  for_each_permutation(5, [](const Permutation& s) {
    const LaguerreHistory h = fz_map(s);
    const std::vector<int> heights = h.path.heights();
    int blue_at_bound = 0;
    for (int i = 0; i < h.length(); ++i)
      if (h.path.steps[static_cast<size_t>(i)] == Step::EastBlue &&
          h.choices[static_cast<size_t>(i)] == heights[static_cast<size_t>(i)])
        ++blue_at_bound;
    CHECK(blue_at_bound == cyclic_counts(s).fix);
  });
}

TEST_CASE("cached inverses undo the history maps") {
  for_each_permutation(5, [](const Permutation& s) {
    CHECK(fv_inverse(fv_map(s)) == s);
    CHECK(fz_inverse(fz_map(s)) == s);
  });
  CHECK_THROWS_AS(fv_inverse(fv_map(Permutation::identity(6)), 4), CacheBoundExceededError);
  CHECK_THROWS_AS(fz_inverse(fv_map(Permutation::identity(3))), FlavorMismatchError);
}

TEST_CASE("history weights add up to the builders") {
  MultiPoly fv_sum, fz_sum;
  for_each_permutation(3, [&](const Permutation& s) {
    fv_sum += history_weight(fv_map(s), Flavor::FV);
    fz_sum += history_weight(fz_map(s), Flavor::FZ);
  });
  CHECK(fv_sum == build_polynomial(PolyFamily::A, 3));
  CHECK(fz_sum == build_polynomial(PolyFamily::BCyclic, 3));

  CHECK(history_weight(fv_map(parse_permutation("1")), Flavor::FV) == MultiPoly(1));
  CHECK_THROWS_AS(history_weight(fv_map(parse_permutation("21")), Flavor::FZ),
                  FlavorMismatchError);
}
