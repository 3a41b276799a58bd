#pragma once

#include <vector>

#include "permstat/bigint.hpp"
#include "permstat/error.hpp"
#include "permstat/multipoly.hpp"

namespace permstat {

/// Power series in x truncated at order N, with MultiPoly coefficients.
struct TruncatedSeries {
  std::vector<MultiPoly> coeff;  // coeff[k] multiplies x^k; size N+1

  explicit TruncatedSeries(int order = 0) : coeff(static_cast<size_t>(order) + 1) {}

  int order() const { return static_cast<int>(coeff.size()) - 1; }

  const MultiPoly& operator[](int k) const { return coeff[static_cast<size_t>(k)]; }
  MultiPoly& operator[](int k) { return coeff[static_cast<size_t>(k)]; }

  static TruncatedSeries constant(const MultiPoly& c, int order) {
    TruncatedSeries s(order);
    s[0] = c;
    return s;
  }

  bool operator==(const TruncatedSeries& o) const { return coeff == o.coeff; }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    if (o.order() != order()) throw DomainError("series order mismatch");
    for (int k = 0; k <= order(); ++k) coeff[static_cast<size_t>(k)] += o[k];
    return *this;
  }

  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    if (o.order() != order()) throw DomainError("series order mismatch");
    for (int k = 0; k <= order(); ++k) coeff[static_cast<size_t>(k)] -= o[k];
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) throw DomainError("series order mismatch");
    TruncatedSeries r(a.order());
    for (int i = 0; i <= a.order(); ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; i + j <= a.order(); ++j) {
        if (b[j].is_zero()) continue;
        r[i + j] += a[i] * b[j];
      }
    }
    return r;
  }

  /// Multiplication by c*x^k.
  TruncatedSeries shifted(const MultiPoly& c, int k) const {
    TruncatedSeries r(order());
    for (int i = 0; i + k <= order(); ++i) r[i + k] = coeff[static_cast<size_t>(i)] * c;
    return r;
  }
};

/// Inverse of a series with constant term 1:
/// h_0 = 1, h_n = -sum_{k=1..n} f_k h_{n-k}.
inline TruncatedSeries series_inverse(const TruncatedSeries& f) {
  if (!(f[0] == MultiPoly(1))) throw DomainError("series inverse needs constant term 1");
  TruncatedSeries h(f.order());
  h[0] = 1;
  for (int n = 1; n <= f.order(); ++n) {
    MultiPoly s;
    for (int k = 1; k <= n; ++k) s += f[k] * h[n - k];
    h[n] = -s;
  }
  return h;
}

// ---------------------------------------------------------------------------
// Exponential generating function checks run over Q[t]: dense polynomials in
// t with exact rational coefficients.

using QtPoly = std::vector<BigRat>;  // QtPoly[k] multiplies t^k

inline void qt_trim(QtPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline QtPoly qt_add(const QtPoly& a, const QtPoly& b) {
  QtPoly r(std::max(a.size(), b.size()), BigRat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  qt_trim(r);
  return r;
}

inline QtPoly qt_neg(QtPoly a) {
  for (auto& c : a) c = -c;
  return a;
}

inline QtPoly qt_mul(const QtPoly& a, const QtPoly& b) {
  if (a.empty() || b.empty()) return {};
  QtPoly r(a.size() + b.size() - 1, BigRat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  qt_trim(r);
  return r;
}

inline QtPoly qt_scale(QtPoly a, const BigRat& s) {
  for (auto& c : a) c *= s;
  qt_trim(a);
  return a;
}

/// Series over Q[t] with the same inverse recurrence as above.
struct RationalSeries {
  std::vector<QtPoly> coeff;
  explicit RationalSeries(int order) : coeff(static_cast<size_t>(order) + 1) {}
  int order() const { return static_cast<int>(coeff.size()) - 1; }
};

inline RationalSeries rational_series_inverse(const RationalSeries& f) {
  if (f.coeff[0] != QtPoly{BigRat(1)})
    throw DomainError("series inverse needs constant term 1");
  RationalSeries h(f.order());
  h.coeff[0] = {BigRat(1)};
  for (int n = 1; n <= f.order(); ++n) {
    QtPoly s;
    for (int k = 1; k <= n; ++k)
      s = qt_add(s, qt_mul(f.coeff[static_cast<size_t>(k)], h.coeff[static_cast<size_t>(n - k)]));
    h.coeff[static_cast<size_t>(n)] = qt_neg(s);
  }
  return h;
}

inline MultiPoly qt_to_multipoly_times(const QtPoly& a, const BigInt& factor) {
  MultiPoly r;
  for (size_t k = 0; k < a.size(); ++k) {
    BigRat c = a[k] * factor;
    if (boost::multiprecision::denominator(c) != 1)
      throw InternalAssertionError("non-integer coefficient in EGF extraction");
    Exponents e = MultiPoly::zero_exponents();
    e[static_cast<size_t>(Var::T)] = static_cast<int>(k);
    r.add_term(e, boost::multiprecision::numerator(c));
  }
  return r;
}

/// n! times the x^n coefficients of (1-t)/(e^{(t-1)x} - t), n = 0..N.
///
/// The denominator factors as (1-t)(1 + g(x)) with
/// g = sum_{n>=1} -(t-1)^{n-1} x^n / n!, so the quotient is 1/(1+g), whose
/// coefficients stay in Q[t].
inline std::vector<MultiPoly> egf_eulerian_polynomials(int N) {
  RationalSeries f(N);
  f.coeff[0] = {BigRat(1)};
  const QtPoly t_minus_1 = {BigRat(-1), BigRat(1)};
  QtPoly powp = {BigRat(1)};  // (t-1)^{n-1}
  BigInt fact = 1;
  for (int n = 1; n <= N; ++n) {
    fact *= n;
    f.coeff[static_cast<size_t>(n)] = qt_scale(qt_neg(powp), BigRat(1, fact));
    powp = qt_mul(powp, t_minus_1);
  }
  const RationalSeries h = rational_series_inverse(f);
  std::vector<MultiPoly> out;
  BigInt nf = 1;
  for (int n = 0; n <= N; ++n) {
    if (n > 0) nf *= n;
    out.push_back(qt_to_multipoly_times(h.coeff[static_cast<size_t>(n)], nf));
  }
  return out;
}

/// n! times the x^n coefficients of (1-t)/(e^{tx} - t e^{x}), n = 0..N.
///
/// Here e^{tx} - t e^{x} = (1-t)(1 + g(x)) with
/// g = sum_{n>=2} -t (1 + t + ... + t^{n-2}) x^n / n!.
inline std::vector<MultiPoly> egf_derangement_polynomials(int N) {
  RationalSeries f(N);
  f.coeff[0] = {BigRat(1)};
  BigInt fact = 1;
  for (int n = 1; n <= N; ++n) {
    fact *= n;
    if (n == 1) {
      f.coeff[1] = {};
      continue;
    }
    QtPoly geo(static_cast<size_t>(n), BigRat(0));  // t(1+t+...+t^{n-2})
    for (int k = 1; k <= n - 1; ++k) geo[static_cast<size_t>(k)] = 1;
    f.coeff[static_cast<size_t>(n)] = qt_scale(qt_neg(geo), BigRat(1, fact));
  }
  const RationalSeries h = rational_series_inverse(f);
  std::vector<MultiPoly> out;
  BigInt nf = 1;
  for (int n = 0; n <= N; ++n) {
    if (n > 0) nf *= n;
    out.push_back(qt_to_multipoly_times(h.coeff[static_cast<size_t>(n)], nf));
  }
  return out;
}

}  // namespace permstat
