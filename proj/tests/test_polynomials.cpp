#include <catch2/catch_amalgamated.hpp>

#include "permstat/polynomials.hpp"
#include "permstat/verify.hpp"

using namespace permstat;

namespace {
const MultiPoly P = var(Var::P);
const MultiPoly Q = var(Var::Q);
const MultiPoly B = var(Var::Beta);
}  // namespace

TEST_CASE("small builders by hand") {
  CHECK(build_polynomial(PolyFamily::A, 0) == MultiPoly(1));
  CHECK(build_polynomial(PolyFamily::A, 2) == var(Var::U) + var(Var::T) * var(Var::V));
  const MultiPoly::Assignment all_ones{{Var::P, BigInt(1)}, {Var::Q, BigInt(1)},
                                       {Var::T, BigInt(1)}, {Var::U, BigInt(1)},
                                       {Var::V, BigInt(1)}, {Var::W, BigInt(1)}};
  CHECK(build_polynomial(PolyFamily::A, 3).specialize(all_ones) == MultiPoly(6));

  // the only derangement of size two is the transposition
  CHECK(build_polynomial(PolyFamily::C, 2) ==
        B * var(Var::T) * var(Var::W));
  CHECK(build_polynomial(PolyFamily::BCyclic, 2) ==
        var(Var::Y, 2) + var(Var::T) * var(Var::W));
  CHECK(build_polynomial(PolyFamily::DStar, 1) == MultiPoly(1));
}

TEST_CASE("cyclic and linear routes build the same polynomial") {
  for (int n = 0; n <= 6; ++n)
    CHECK(build_polynomial(PolyFamily::BCyclic, n) == build_polynomial(PolyFamily::BLinear, n));
}

TEST_CASE("valley coefficients match their published factored forms") {
  CHECK(coeff_family(CoeffFamily::A, 3, 1) == P + Q);
  CHECK(coeff_family(CoeffFamily::A, 4, 1) == (P + Q) * (P + Q + 2));
  CHECK(coeff_family(CoeffFamily::A, 5, 1) == (P + Q) * ((P + Q).pow(2) + (P + Q) * 2 + 3));
  CHECK(coeff_family(CoeffFamily::A, 5, 2) ==
        (P + Q).pow(2) * (P.pow(2) + P * Q + Q.pow(2) + 1));
  for (int n = 1; n <= 5; ++n) CHECK(coeff_family(CoeffFamily::A, n, 0) == MultiPoly(1));
}

TEST_CASE("cyclic coefficients match their published forms") {
  CHECK(coeff_family(CoeffFamily::B, 4, 2, 0) == (P + Q).pow(2) + 1);
  CHECK(coeff_family(CoeffFamily::B, 3, 1, 1) == P + 2);
  CHECK(coeff_family(CoeffFamily::B, 1, 0, 1) == MultiPoly(1));
  CHECK(coeff_family(CoeffFamily::C, 4, 2) == B * (B * 3 + 2));
  CHECK(coeff_family(CoeffFamily::C, 6, 3) == B * (B.pow(2) * 15 + B * 30 + 16));
  for (int n = 1; n <= 8; ++n) CHECK(coeff_family(CoeffFamily::C, n, 0).is_zero());
  CHECK(coeff_family(CoeffFamily::D, 3, 1) == B + 1);
  CHECK(coeff_family(CoeffFamily::D, 5, 2) == (B + 1) * (B * 3 + 5));
  for (int n = 1; n <= 6; ++n) CHECK(coeff_family(CoeffFamily::D, n, 0) == MultiPoly(1));
}

TEST_CASE("one-sweep rows agree with the single-coefficient builders") {
  for (int n = 1; n <= 5; ++n) {
    const auto arow = a_family_row(n);
    for (int k = 0; 2 * k <= n - 1; ++k)
      CHECK(arow[static_cast<size_t>(k)] == coeff_family(CoeffFamily::A, n, k));
    const auto brows = b_family_rows(n);
    for (int j = 0; j <= n; ++j)
      for (int k = 0; 2 * k <= n - j; ++k)
        CHECK(brows[static_cast<size_t>(j)][static_cast<size_t>(k)] ==
              coeff_family(CoeffFamily::B, n, k, j));
    const auto crow = c_family_row(n);
    for (int k = 0; 2 * k <= n; ++k)
      CHECK(crow[static_cast<size_t>(k)] == coeff_family(CoeffFamily::C, n, k));
    const auto drow = d_family_row(n);
    for (int k = 0; 2 * k <= n - 1; ++k)
      CHECK(drow[static_cast<size_t>(k)] == coeff_family(CoeffFamily::D, n, k));
  }
}

TEST_CASE("worker count does not change results") {
  for (int jobs : {2, 3, 5}) {
    CHECK(build_polynomial(PolyFamily::A, 7, jobs) == build_polynomial(PolyFamily::A, 7));
    CHECK(build_polynomial(PolyFamily::BCyclic, 7, jobs) ==
          build_polynomial(PolyFamily::BCyclic, 7));
    const auto rows1 = b_family_rows(7);
    const auto rowsj = b_family_rows(7, jobs);
    CHECK(rows1 == rowsj);
  }
}

TEST_CASE("involution descent polynomial") {
  CHECK(involution_descent_poly(1) == MultiPoly(1));
  CHECK(involution_descent_poly(3) ==
        MultiPoly(1) + MultiPoly(2) * var(Var::T) + var(Var::T, 2));
  // involution counts 1, 1, 2, 4, 10, 26, 76
  const long long counts[] = {1, 1, 2, 4, 10, 26, 76};
  for (int n = 0; n <= 6; ++n) {
    const MultiPoly mass = involution_descent_poly(n).specialize({{Var::T, BigInt(1)}});
    CHECK(mass == MultiPoly(BigInt(counts[n])));
  }
}

TEST_CASE("total mass identities") {
  // sum_k a_{n,k}(1,1) 2^{n-1-2k} = n!
  for (int n = 1; n <= 8; ++n) {
    const auto row = a_family_row(n);
    BigInt total = 0;
    for (int k = 0; 2 * k <= n - 1; ++k)
      total += row[static_cast<size_t>(k)]
                   .specialize({{Var::P, BigInt(1)}, {Var::Q, BigInt(1)}})
                   .constant_value() *
               big_pow(2, n - 1 - 2 * k);
    CHECK(total == big_factorial(n));
  }
}

TEST_CASE("zigzag numbers appear as extreme coefficients") {
  // a_{2m+1,m}(1,1) = E_{2m+1}, b_{2m,m,0}(1,1) = E_{2m}
  const MultiPoly::Assignment ones{{Var::P, BigInt(1)}, {Var::Q, BigInt(1)}};
  CHECK(coeff_family(CoeffFamily::A, 3, 1).specialize(ones).constant_value() == euler_number(3));
  CHECK(coeff_family(CoeffFamily::A, 5, 2).specialize(ones).constant_value() == euler_number(5));
  CHECK(coeff_family(CoeffFamily::A, 7, 3).specialize(ones).constant_value() == euler_number(7));
  CHECK(coeff_family(CoeffFamily::B, 4, 2, 0).specialize(ones).constant_value() ==
        euler_number(4));
  CHECK(coeff_family(CoeffFamily::B, 6, 3, 0).specialize(ones).constant_value() ==
        euler_number(6));
}

TEST_CASE("setting y to zero keeps exactly the derangements") {
  for (int n = 0; n <= 6; ++n) {
    const MultiPoly b0 = build_polynomial(PolyFamily::BCyclic, n).specialize({{Var::Y, BigInt(0)}});
    MultiPoly expect;
    for_each_permutation(n, [&expect](const Permutation& s) {
      const CyclicCounts cyc = cyclic_counts(s);
      if (cyc.fix != 0) return;
      const CrossNestCounts cn = crossing_nesting_counts(s);
      Exponents e = MultiPoly::zero_exponents();
      e[static_cast<size_t>(Var::P)] = cn.nest;
      e[static_cast<size_t>(Var::Q)] = cn.cros;
      e[static_cast<size_t>(Var::T)] = cyc.defi;
      e[static_cast<size_t>(Var::U)] = cyc.cda;
      e[static_cast<size_t>(Var::V)] = cyc.cdd;
      e[static_cast<size_t>(Var::W)] = cyc.cvalley;
      expect.add_term(e, 1);
    });
    CHECK(b0 == expect);
  }
}
