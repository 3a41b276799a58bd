#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "permstat/euler.hpp"
#include "permstat/gamma.hpp"
#include "permstat/multipoly.hpp"

using namespace permstat;

namespace {

MultiPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(0, 5), expo(0, 3), coeff(-9, 9), nvars(0, 2);
  MultiPoly f;
  const int terms = nterms(rng);
  for (int i = 0; i < terms; ++i) {
    Exponents e = MultiPoly::zero_exponents();
    const int used = nvars(rng);
    for (int v = 0; v <= used; ++v)
      e[static_cast<size_t>(std::uniform_int_distribution<int>(0, kVarCount - 1)(rng))] =
          expo(rng);
    const int c = coeff(rng);
    if (c != 0) f.add_term(e, c);
  }
  return f;
}

}  // namespace

TEST_CASE("pq integers") {
  CHECK(pq_integer(0).is_zero());
  CHECK(pq_integer(1) == MultiPoly(1));
  CHECK(pq_integer(2) == var(Var::P) + var(Var::Q));
  const MultiPoly three = var(Var::P, 2) + var(Var::P) * var(Var::Q) + var(Var::Q, 2);
  CHECK(pq_integer(3) == three);
  // (p^3 - q^3) = (p - q) [3]
  CHECK((var(Var::P) - var(Var::Q)) * pq_integer(3) == var(Var::P, 3) - var(Var::Q, 3));
}

TEST_CASE("rendering is canonical") {
  const MultiPoly ppq = var(Var::P) + var(Var::Q);
  CHECK(ppq.to_string() == "p+q");
  CHECK((ppq * (ppq + 2)).to_string() == "p^2+2*p*q+q^2+2*p+2*q");
  CHECK(MultiPoly(0).to_string() == "0");
  CHECK(MultiPoly(-61).to_string() == "-61");
  CHECK((var(Var::Beta) * 15 - MultiPoly(1)).to_string() == "15*beta-1");
}

TEST_CASE("specialize") {
  const MultiPoly ppq = var(Var::P) + var(Var::Q);
  CHECK(ppq.specialize({{Var::P, BigInt(1)}, {Var::Q, BigInt(1)}}) == MultiPoly(2));
  const MultiPoly uptv = var(Var::U) + var(Var::T) * var(Var::V);
  CHECK(uptv.specialize({{Var::U, BigInt(1)}, {Var::V, BigInt(1)}}) ==
        MultiPoly(1) + var(Var::T));
  // renaming: p -> q turns [3]_{p,q} into 3 q^2
  CHECK(pq_integer(3).specialize({{Var::P, Var::Q}}) == MultiPoly(3) * var(Var::Q, 2));
}

TEST_CASE("coefficient extraction") {
  const MultiPoly f = MultiPoly(1) + MultiPoly(4) * var(Var::T) + var(Var::T, 2);
  CHECK(f.coefficient_of(Var::T, 1) == MultiPoly(4));
  CHECK(f.coefficient_of(Var::T, 5).is_zero());
  CHECK((var(Var::U) + var(Var::T) * var(Var::V)).coefficient_of(Var::T, 1) == var(Var::V));
}

TEST_CASE("exact division") {
  const MultiPoly ppq = var(Var::P) + var(Var::Q);
  CHECK(exact_divide(ppq * (ppq + 2), ppq) == ppq + 2);
  const MultiPoly f = var(Var::W) * pq_integer(4) - MultiPoly(7);
  CHECK(exact_divide(f, MultiPoly(1)) == f);
  CHECK_THROWS_AS(exact_divide(var(Var::P, 2) + var(Var::Q, 2), ppq), NotDivisibleError);
  CHECK_THROWS_AS(exact_divide(MultiPoly(3), MultiPoly(2)), NotDivisibleError);
  CHECK_THROWS_AS(exact_divide(f, MultiPoly(0)), DomainError);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(20240817);
  for (int iter = 0; iter < 300; ++iter) {
    const MultiPoly f = random_poly(rng), g = random_poly(rng), h = random_poly(rng);
    CHECK((f + g) * h == f * h + g * h);
    CHECK(f * g == g * f);
    if (!g.is_zero()) CHECK(exact_divide(f * g, g) == f);
    const MultiPoly::Assignment s{{Var::P, BigInt(2)}, {Var::T, BigInt(-1)}};
    CHECK((f * g).specialize(s) == f.specialize(s) * g.specialize(s));
    CHECK((f + g).specialize(s) == f.specialize(s) + g.specialize(s));
  }
}

TEST_CASE("gamma expansion") {
  const MultiPoly a3 = MultiPoly(1) + MultiPoly(4) * var(Var::T) + var(Var::T, 2);
  const GammaVector g = gamma_expand(a3, 2);
  REQUIRE(g.gammas.size() == 2);
  CHECK(g.gammas[0] == MultiPoly(1));
  CHECK(g.gammas[1] == MultiPoly(2));
  CHECK(gamma_recompose(g) == a3);

  const GammaVector gt = gamma_expand(var(Var::T), 2);
  CHECK(gt.gammas[0].is_zero());
  CHECK(gt.gammas[1] == MultiPoly(1));

  CHECK_THROWS_AS(gamma_expand(var(Var::T, 2), 2), NotSymmetricError);
}

TEST_CASE("gamma round trip on random palindromic polynomials") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coeff(-5, 5), half(0, 3);
  for (int iter = 0; iter < 200; ++iter) {
    // Build sum gamma_k t^k (1+t)^(d-2k) from random gammas, then re-extract.
    const int d = 2 * half(rng) + half(rng) % 2;
    GammaVector g;
    g.degree = d;
    for (int k = 0; 2 * k <= d; ++k) g.gammas.push_back(MultiPoly(coeff(rng)));
    const MultiPoly h = gamma_recompose(g);
    const GammaVector back = gamma_expand(h, d);
    CHECK(gamma_recompose(back) == h);
    for (size_t k = 0; k < g.gammas.size(); ++k) CHECK(back.gammas[k] == g.gammas[k]);
  }
}

TEST_CASE("euler numbers from the boustrophedon recurrence") {
  const long long expected[] = {1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521};
  for (int n = 0; n <= 10; ++n) CHECK(euler_number(n) == BigInt(expected[n]));
}

TEST_CASE("q shift device") {
  // t evaluated at -1/q
  const MultiPoly m = substitute_neg_inv_q(var(Var::T), Var::T);
  CHECK(m == MultiPoly(-1).shifted_down_by_q(1));
  CHECK(m.to_string() == "q^-1*(-1)");

  // (1 + t)^2 at t = -1/q equals (q-1)^2 / q^2
  const MultiPoly f = (MultiPoly(1) + var(Var::T)).pow(2);
  const MultiPoly got = substitute_neg_inv_q(f, Var::T);
  const MultiPoly want = ((var(Var::Q) - MultiPoly(1)).pow(2)).shifted_down_by_q(2);
  CHECK(got == want);

  // shifts cancel in arithmetic: q * (x/q) = x
  CHECK(var(Var::Q) * MultiPoly(5).shifted_down_by_q(1) == MultiPoly(5));
  CHECK(MultiPoly(3).shifted_down_by_q(2) + var(Var::Q, 2).shifted_down_by_q(2) ==
        (MultiPoly(3) + var(Var::Q, 2)).shifted_down_by_q(2));
}
