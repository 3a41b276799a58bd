#pragma once

#include <functional>
#include <vector>

#include "permstat/multipoly.hpp"
#include "permstat/permutation.hpp"
#include "permstat/star.hpp"
#include "permstat/stats.hpp"

namespace permstat {

enum class PolyFamily { A, BCyclic, BLinear, C, DStar };

namespace detail {

inline Exponents a_exponents(const Permutation& s) {
  const LinearCounts lin = linear_counts(s, BoundaryConvention::ZeroZero);
  const PatternCounts pat = pattern_counts(s);
  Exponents e = MultiPoly::zero_exponents();
  e[static_cast<size_t>(Var::P)] = pat.res;
  e[static_cast<size_t>(Var::Q)] = pat.les;
  e[static_cast<size_t>(Var::T)] = lin.des;
  e[static_cast<size_t>(Var::U)] = lin.da;
  e[static_cast<size_t>(Var::V)] = lin.dd;
  e[static_cast<size_t>(Var::W)] = lin.valley;
  return e;
}

inline Exponents b_cyclic_exponents(const Permutation& s) {
  const CyclicCounts cyc = cyclic_counts(s);
  const CrossNestCounts cn = crossing_nesting_counts(s);
  Exponents e = MultiPoly::zero_exponents();
  e[static_cast<size_t>(Var::P)] = cn.nest;
  e[static_cast<size_t>(Var::Q)] = cn.cros;
  e[static_cast<size_t>(Var::T)] = cyc.defi;
  e[static_cast<size_t>(Var::U)] = cyc.cda;
  e[static_cast<size_t>(Var::V)] = cyc.cdd;
  e[static_cast<size_t>(Var::W)] = cyc.cvalley;
  e[static_cast<size_t>(Var::Y)] = cyc.fix;
  return e;
}

inline Exponents b_linear_exponents(const Permutation& s) {
  const LinearCounts lin = linear_counts(s, BoundaryConvention::ZeroTop);
  const PatternCounts pat = pattern_counts(s);
  Exponents e = MultiPoly::zero_exponents();
  e[static_cast<size_t>(Var::P)] = pat.ress;
  e[static_cast<size_t>(Var::Q)] = pat.les;
  e[static_cast<size_t>(Var::T)] = lin.des;
  e[static_cast<size_t>(Var::U)] = lin.da - lin.fmax;
  e[static_cast<size_t>(Var::V)] = lin.dd;
  e[static_cast<size_t>(Var::W)] = lin.valley;
  e[static_cast<size_t>(Var::Y)] = lin.fmax;
  return e;
}

}  // namespace detail

/// Exhaustive exact builders for the generating polynomials:
///   A:       sum over S_n of p^res q^les t^des u^da* v^dd* w^valley*
///   BCyclic: sum over S_n of p^nest q^cros t^defi u^cda v^cdd w^cvalley y^fix
///   BLinear: the same polynomial from the linear statistics
///            p^ress q^les t^des u^(da-fmax) v^dd w^valley y^fmax
///   C:       sum over derangements of beta^cyc t^exc u^cda v^cdd w^cvalley
///   DStar:   sum over S_n of beta^(cycles of the star word, the descending
///            path excluded, minus fix*) t^exc u^(cda*+fix*) v^cdd* w^cvalley*
inline MultiPoly build_polynomial(PolyFamily family, int n, int jobs = 1) {
  auto fold = [](MultiPoly& a, const MultiPoly& b) { a += b; };
  switch (family) {
    case PolyFamily::A:
      return accumulate_over_sn<MultiPoly>(
          n, jobs,
          [](MultiPoly& acc, const Permutation& s) { acc.add_term(detail::a_exponents(s), 1); },
          fold);
    case PolyFamily::BCyclic:
      return accumulate_over_sn<MultiPoly>(
          n, jobs,
          [](MultiPoly& acc, const Permutation& s) {
            acc.add_term(detail::b_cyclic_exponents(s), 1);
          },
          fold);
    case PolyFamily::BLinear:
      return accumulate_over_sn<MultiPoly>(
          n, jobs,
          [](MultiPoly& acc, const Permutation& s) {
            acc.add_term(detail::b_linear_exponents(s), 1);
          },
          fold);
    case PolyFamily::C:
      return accumulate_over_sn<MultiPoly>(
          n, jobs,
          [](MultiPoly& acc, const Permutation& s) {
            const CyclicCounts cyc = cyclic_counts(s);
            if (cyc.fix != 0) return;
            Exponents e = MultiPoly::zero_exponents();
            e[static_cast<size_t>(Var::Beta)] = cyc.cyc;
            e[static_cast<size_t>(Var::T)] = cyc.exc;
            e[static_cast<size_t>(Var::U)] = cyc.cda;
            e[static_cast<size_t>(Var::V)] = cyc.cdd;
            e[static_cast<size_t>(Var::W)] = cyc.cvalley;
            acc.add_term(e, 1);
          },
          fold);
    case PolyFamily::DStar:
      return accumulate_over_sn<MultiPoly>(
          n, jobs,
          [](MultiPoly& acc, const Permutation& s) {
            const StarCounts st = star_counts(s);
            Exponents e = MultiPoly::zero_exponents();
            e[static_cast<size_t>(Var::Beta)] = st.cycles - st.fix;
            e[static_cast<size_t>(Var::T)] = st.wex;
            e[static_cast<size_t>(Var::U)] = st.cda + st.fix;
            e[static_cast<size_t>(Var::V)] = st.cdd;
            e[static_cast<size_t>(Var::W)] = st.cvalley;
            acc.add_term(e, 1);
          },
          fold);
  }
  throw DomainError("unknown polynomial family");
}

enum class CoeffFamily { A, B, C, D };

/// The four coefficient families, by exhaustive enumeration of the defining
/// subset with the defining weight:
///   a(n,k):   valley* = k, dd* = 0; weight p^res q^les
///   b(n,k,j): cvalley = k, fix = j, cda = 0; weight p^nest q^cros
///   c(n,k):   derangements, cvalley = k, cdd = 0; weight beta^cyc
///   d(n,k):   cvalley* = k, cdd* = 0; weight beta^(star cycles - fix*)
inline MultiPoly coeff_family(CoeffFamily family, int n, int k, int j = 0, int jobs = 1) {
  auto fold = [](MultiPoly& a, const MultiPoly& b) { a += b; };
  switch (family) {
    case CoeffFamily::A:
      return accumulate_over_sn<MultiPoly>(
          n, jobs,
          [k](MultiPoly& acc, const Permutation& s) {
            const LinearCounts lin = linear_counts(s, BoundaryConvention::ZeroZero);
            if (lin.valley != k || lin.dd != 0) return;
            const PatternCounts pat = pattern_counts(s);
            Exponents e = MultiPoly::zero_exponents();
            e[static_cast<size_t>(Var::P)] = pat.res;
            e[static_cast<size_t>(Var::Q)] = pat.les;
            acc.add_term(e, 1);
          },
          fold);
    case CoeffFamily::B:
      return accumulate_over_sn<MultiPoly>(
          n, jobs,
          [k, j](MultiPoly& acc, const Permutation& s) {
            const CyclicCounts cyc = cyclic_counts(s);
            if (cyc.cvalley != k || cyc.fix != j || cyc.cda != 0) return;
            const CrossNestCounts cn = crossing_nesting_counts(s);
            Exponents e = MultiPoly::zero_exponents();
            e[static_cast<size_t>(Var::P)] = cn.nest;
            e[static_cast<size_t>(Var::Q)] = cn.cros;
            acc.add_term(e, 1);
          },
          fold);
    case CoeffFamily::C:
      return accumulate_over_sn<MultiPoly>(
          n, jobs,
          [k](MultiPoly& acc, const Permutation& s) {
            const CyclicCounts cyc = cyclic_counts(s);
            if (cyc.fix != 0 || cyc.cvalley != k || cyc.cdd != 0) return;
            acc.add_term(
                [&] {
                  Exponents e = MultiPoly::zero_exponents();
                  e[static_cast<size_t>(Var::Beta)] = cyc.cyc;
                  return e;
                }(),
                1);
          },
          fold);
    case CoeffFamily::D:
      return accumulate_over_sn<MultiPoly>(
          n, jobs,
          [k](MultiPoly& acc, const Permutation& s) {
            const StarCounts st = star_counts(s);
            if (st.cvalley != k || st.cdd != 0) return;
            Exponents e = MultiPoly::zero_exponents();
            e[static_cast<size_t>(Var::Beta)] = st.cycles - st.fix;
            acc.add_term(e, 1);
          },
          fold);
  }
  throw DomainError("unknown coefficient family");
}

namespace detail {

// One-sweep family rows: row[k] (or row[j][k]) summed over a single pass.
using PolyRow = std::vector<MultiPoly>;

inline void fold_rows(PolyRow& a, const PolyRow& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
}

inline void row_add(PolyRow& row, int k, const Exponents& e) {
  if (static_cast<int>(row.size()) <= k) row.resize(static_cast<size_t>(k) + 1);
  row[static_cast<size_t>(k)].add_term(e, 1);
}

}  // namespace detail

/// a_{n,k}(p,q) for k = 0..floor((n-1)/2), one sweep of S_n.
inline std::vector<MultiPoly> a_family_row(int n, int jobs = 1) {
  detail::PolyRow row = accumulate_over_sn<detail::PolyRow>(
      n, jobs,
      [](detail::PolyRow& acc, const Permutation& s) {
        const LinearCounts lin = linear_counts(s, BoundaryConvention::ZeroZero);
        if (lin.dd != 0) return;
        const PatternCounts pat = pattern_counts(s);
        Exponents e = MultiPoly::zero_exponents();
        e[static_cast<size_t>(Var::P)] = pat.res;
        e[static_cast<size_t>(Var::Q)] = pat.les;
        detail::row_add(acc, lin.valley, e);
      },
      detail::fold_rows);
  if (row.size() > static_cast<size_t>(std::max(0, (n - 1) / 2)) + 1)
    throw InternalAssertionError("valley count exceeded its range");
  row.resize(static_cast<size_t>(std::max(0, (n - 1) / 2)) + 1);
  return row;
}

/// b_{n,k,j}(p,q) indexed [j][k], one sweep of S_n.
inline std::vector<std::vector<MultiPoly>> b_family_rows(int n, int jobs = 1) {
  using Grid = std::vector<detail::PolyRow>;
  Grid grid = accumulate_over_sn<Grid>(
      n, jobs,
      [n](Grid& acc, const Permutation& s) {
        const CyclicCounts cyc = cyclic_counts(s);
        if (cyc.cda != 0) return;
        if (acc.empty()) acc.resize(static_cast<size_t>(n) + 1);
        const CrossNestCounts cn = crossing_nesting_counts(s);
        Exponents e = MultiPoly::zero_exponents();
        e[static_cast<size_t>(Var::P)] = cn.nest;
        e[static_cast<size_t>(Var::Q)] = cn.cros;
        detail::row_add(acc[static_cast<size_t>(cyc.fix)], cyc.cvalley, e);
      },
      [](Grid& a, const Grid& b) {
        if (a.size() < b.size()) a.resize(b.size());
        for (size_t j = 0; j < b.size(); ++j) detail::fold_rows(a[j], b[j]);
      });
  grid.resize(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    if (grid[static_cast<size_t>(j)].size() > static_cast<size_t>(std::max(0, (n - j) / 2)) + 1)
      throw InternalAssertionError("cyclic valley count exceeded its range");
    grid[static_cast<size_t>(j)].resize(static_cast<size_t>(std::max(0, (n - j) / 2)) + 1);
  }
  return grid;
}

/// c_{n,k}(beta) for k = 0..floor(n/2).
inline std::vector<MultiPoly> c_family_row(int n, int jobs = 1) {
  detail::PolyRow row = accumulate_over_sn<detail::PolyRow>(
      n, jobs,
      [](detail::PolyRow& acc, const Permutation& s) {
        const CyclicCounts cyc = cyclic_counts(s);
        if (cyc.fix != 0 || cyc.cdd != 0) return;
        Exponents e = MultiPoly::zero_exponents();
        e[static_cast<size_t>(Var::Beta)] = cyc.cyc;
        detail::row_add(acc, cyc.cvalley, e);
      },
      detail::fold_rows);
  if (row.size() > static_cast<size_t>(n / 2) + 1)
    throw InternalAssertionError("cyclic valley count exceeded its range");
  row.resize(static_cast<size_t>(n / 2) + 1);
  return row;
}

/// d_{n,k}(beta) for k = 0..floor((n-1)/2).
inline std::vector<MultiPoly> d_family_row(int n, int jobs = 1) {
  detail::PolyRow row = accumulate_over_sn<detail::PolyRow>(
      n, jobs,
      [](detail::PolyRow& acc, const Permutation& s) {
        const StarCounts st = star_counts(s);
        if (st.cdd != 0) return;
        Exponents e = MultiPoly::zero_exponents();
        e[static_cast<size_t>(Var::Beta)] = st.cycles - st.fix;
        detail::row_add(acc, st.cvalley, e);
      },
      detail::fold_rows);
  if (row.size() > static_cast<size_t>(std::max(0, (n - 1) / 2)) + 1)
    throw InternalAssertionError("star valley count exceeded its range");
  row.resize(static_cast<size_t>(std::max(0, (n - 1) / 2)) + 1);
  return row;
}

/// Enumerates involutions directly: the smallest unplaced element is fixed
/// or paired with any larger unplaced element.
template <typename F>
void for_each_involution(int n, F&& f) {
  std::vector<int> word(static_cast<size_t>(n), 0);
  const std::function<void()> rec = [&]() {
    int a = 0;
    while (a < n && word[static_cast<size_t>(a)] != 0) ++a;
    if (a == n) {
      f(Permutation(word));
      return;
    }
    word[static_cast<size_t>(a)] = a + 1;
    rec();
    word[static_cast<size_t>(a)] = 0;
    for (int b = a + 1; b < n; ++b) {
      if (word[static_cast<size_t>(b)] != 0) continue;
      word[static_cast<size_t>(a)] = b + 1;
      word[static_cast<size_t>(b)] = a + 1;
      rec();
      word[static_cast<size_t>(a)] = 0;
      word[static_cast<size_t>(b)] = 0;
    }
  };
  rec();
}

/// Descent polynomial of involutions, exact in t.
inline MultiPoly involution_descent_poly(int n) {
  MultiPoly out;
  for_each_involution(n, [&out](const Permutation& s) {
    Exponents e = MultiPoly::zero_exponents();
    e[static_cast<size_t>(Var::T)] = linear_counts(s, BoundaryConvention::ZeroZero).des;
    out.add_term(e, 1);
  });
  return out;
}

}  // namespace permstat
