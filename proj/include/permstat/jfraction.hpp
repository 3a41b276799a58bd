#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "permstat/error.hpp"
#include "permstat/motzkin.hpp"
#include "permstat/multipoly.hpp"
#include "permstat/series.hpp"

namespace permstat {

/// J-fraction data: 1/(1 - b_0 x - l_1 x^2/(1 - b_1 x - l_2 x^2/...)) with
/// level weights b_h and product weights l_h (= a_{h-1} c_h in path terms).
struct JFractionSpec {
  std::function<MultiPoly(int)> level_weight;    // b_h, h >= 0
  std::function<MultiPoly(int)> product_weight;  // l_h, h >= 1
};

/// Series of the J-fraction to order N via the height DP: the x^n
/// coefficient is the weighted Motzkin path sum of length n with rise weight
/// l_{h+1} and unit fall weight.
inline TruncatedSeries jfraction_series(const JFractionSpec& spec, int N) {
  if (N < 0) throw DomainError("negative order");
  TruncatedSeries out(N);
  std::vector<MultiPoly> cur(static_cast<size_t>(N) + 2);
  cur[0] = 1;
  out[0] = 1;
  for (int i = 0; i < N; ++i) {
    std::vector<MultiPoly> next(static_cast<size_t>(N) + 2);
    for (int h = 0; h <= i; ++h) {
      const MultiPoly& src = cur[static_cast<size_t>(h)];
      if (src.is_zero()) continue;
      next[static_cast<size_t>(h) + 1] += src * spec.product_weight(h + 1);
      next[static_cast<size_t>(h)] += src * spec.level_weight(h);
      if (h > 0) next[static_cast<size_t>(h) - 1] += src;
    }
    cur = std::move(next);
    out[i + 1] = cur[0];
  }
  return out;
}

/// Same series by literal bottom-up evaluation of the finite fraction of
/// depth ceil(N/2)+1, which is exact to order N: level-k weights first reach
/// the series at x^{2k}.
inline TruncatedSeries jfraction_series_cf(const JFractionSpec& spec, int N) {
  if (N < 0) throw DomainError("negative order");
  const int depth = (N + 1) / 2 + 1;
  TruncatedSeries f = TruncatedSeries::constant(1, N);
  for (int k = depth - 1; k >= 0; --k) {
    TruncatedSeries denom = TruncatedSeries::constant(1, N);
    denom -= TruncatedSeries::constant(1, N).shifted(spec.level_weight(k), 1);
    denom -= f.shifted(spec.product_weight(k + 1), 2);
    f = series_inverse(denom);
  }
  return f;
}

/// S-fraction 1/(1 - c_1 x/(1 - c_2 x/(...))) to order N (depth N is exact:
/// c_m first reaches the series at x^m).
inline TruncatedSeries sfraction_series(const std::function<MultiPoly(int)>& c, int N) {
  if (N < 0) throw DomainError("negative order");
  TruncatedSeries g = TruncatedSeries::constant(1, N);
  for (int m = N; m >= 1; --m) {
    TruncatedSeries denom = TruncatedSeries::constant(1, N);
    denom -= g.shifted(c(m), 1);
    g = series_inverse(denom);
  }
  return g;
}

/// The two contractions of an S-fraction into J-fractions:
///   1/(1-c1 x/(1-c2 x/...))
///     = 1 + c1 x / (1-(c1+c2)x - c2 c3 x^2/(1-(c3+c4)x - c4 c5 x^2/...))
///     = 1/(1 - c1 x - c1 c2 x^2/(1-(c2+c3)x - c3 c4 x^2/...)).
struct ContractionReport {
  TruncatedSeries sfrac;
  TruncatedSeries even;
  TruncatedSeries odd;
  bool pass = false;

  ContractionReport(int order) : sfrac(order), even(order), odd(order) {}
};

inline ContractionReport contraction_check(const std::function<MultiPoly(int)>& c, int N) {
  ContractionReport rep(N);
  rep.sfrac = sfraction_series(c, N);

  JFractionSpec even{
      [&c](int h) { return c(2 * h + 1) + c(2 * h + 2); },
      [&c](int h) { return c(2 * h) * c(2 * h + 1); },
  };
  rep.even = TruncatedSeries::constant(1, N) + jfraction_series(even, N).shifted(c(1), 1);

  JFractionSpec odd{
      [&c](int h) { return h == 0 ? c(1) : c(2 * h) + c(2 * h + 1); },
      [&c](int h) { return c(2 * h - 1) * c(2 * h); },
  };
  rep.odd = jfraction_series(odd, N);

  rep.pass = rep.sfrac == rep.even && rep.sfrac == rep.odd;
  return rep;
}

// ---------------------------------------------------------------------------
// Named weight schemes for the generating identities the project verifies.
// x_offset records where family member n sits: coefficient of x^{n - x_offset}.

struct NamedScheme {
  std::string id;
  std::string description;
  JFractionSpec jf;
  int x_offset = 0;
};

inline const std::vector<NamedScheme>& cf_schemes() {
  static const std::vector<NamedScheme> schemes = [] {
    auto pq = [](int n) { return pq_integer(n); };
    std::vector<NamedScheme> v;
    v.push_back({"A",
                 "six-variable generalized Eulerian polynomials, member n at x^(n-1)",
                 {[pq](int h) { return (var(Var::U) + var(Var::T) * var(Var::V)) * pq(h + 1); },
                  [pq](int h) { return var(Var::T) * var(Var::W) * pq(h) * pq(h + 1); }},
                 1});
    v.push_back({"Asub",
                 "valley-coefficient extractor: x^(n-1) carries sum_k a_{n,k} w^k",
                 {[pq](int h) { return pq(h + 1); },
                  [pq](int h) { return var(Var::W) * pq(h) * pq(h + 1); }},
                 1});
    v.push_back({"B",
                 "seven-variable cyclic-statistic polynomials, member n at x^n",
                 {[pq](int h) {
                    return var(Var::Y) * var(Var::P, h) +
                           (var(Var::Q) * var(Var::U) + var(Var::T) * var(Var::V)) * pq(h);
                  },
                  [pq](int h) { return var(Var::T) * var(Var::W) * pq(h) * pq(h); }},
                 0});
    v.push_back({"At",
                 "three-variable Eulerian series after even contraction (J part)",
                 {[pq](int h) { return (MultiPoly(1) + var(Var::T)) * pq(h + 1); },
                  [pq](int h) { return var(Var::T) * pq(h) * pq(h + 1); }},
                 0});
    v.push_back({"Bt",
                 "three-variable derangement-style series after odd contraction",
                 {[pq](int h) { return var(Var::T) * pq(h) + pq(h + 1); },
                  [pq](int h) { return var(Var::T) * pq(h) * pq(h); }},
                 0});
    v.push_back({"C",
                 "cycle-weighted derangement polynomials, member n at x^n",
                 {[](int h) {
                    return MultiPoly(h) * (var(Var::T) * var(Var::U) + var(Var::V));
                  },
                  [](int h) {
                    return MultiPoly(h) * (var(Var::Beta) + MultiPoly(h - 1)) * var(Var::T) *
                           var(Var::W);
                  }},
                 0});
    v.push_back({"Csub",
                 "cycle-coefficient extractor: x^n carries sum_k c_{n,k} w^k",
                 {[](int h) { return MultiPoly(h); },
                  [](int h) { return MultiPoly(h) * (var(Var::Beta) + MultiPoly(h - 1)) * var(Var::W); }},
                 0});
    v.push_back({"Dstar",
                 "star-statistic polynomials, member n at x^(n-1)",
                 {[](int h) {
                    return MultiPoly(h + 1) * (var(Var::T) * var(Var::U) + var(Var::V));
                  },
                  [](int h) {
                    return MultiPoly(h) * (var(Var::Beta) + MultiPoly(h)) * var(Var::T) *
                           var(Var::W);
                  }},
                 1});
    v.push_back({"Dsub",
                 "star-coefficient extractor: x^(n-1) carries sum_k d_{n,k} w^k",
                 {[](int h) { return MultiPoly(h + 1); },
                  [](int h) { return MultiPoly(h) * (var(Var::Beta) + MultiPoly(h)) * var(Var::W); }},
                 1});
    return v;
  }();
  return schemes;
}

inline const NamedScheme& cf_scheme(const std::string& id) {
  for (const NamedScheme& s : cf_schemes())
    if (s.id == id) return s;
  throw DomainError("unknown continued-fraction scheme '" + id + "'");
}

/// S-fraction letters with c_{2i-1} = [i]_{p,q} and c_{2i} = t [i]_{p,q};
/// its series carries the three-variable Eulerian polynomials.
inline std::function<MultiPoly(int)> eulerian_sfraction_letters() {
  return [](int m) {
    const int i = (m + 1) / 2;
    MultiPoly c = pq_integer(i);
    if (m % 2 == 0) c = c * var(Var::T);
    return c;
  };
}

}  // namespace permstat
