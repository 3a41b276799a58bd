#pragma once

#include <string>
#include <vector>

#include "permstat/error.hpp"
#include "permstat/multipoly.hpp"

namespace permstat {

/// Coefficients of an expansion in the basis t^k (1+t)^(d-2k),
/// k = 0..floor(d/2). Recomposition reproduces the source exactly; the
/// entries may be polynomials in the remaining variables and may be
/// negative.
struct GammaVector {
  std::vector<MultiPoly> gammas;
  int degree = 0;  // the d of the basis

  std::string to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < gammas.size(); ++i) {
      if (i) s += ", ";
      s += gammas[i].to_string();
    }
    return s + "]";
  }
};

inline MultiPoly gamma_recompose(const GammaVector& g) {
  MultiPoly sum;
  const MultiPoly one_plus_t = MultiPoly(1) + var(Var::T);
  for (size_t k = 0; k < g.gammas.size(); ++k) {
    sum += g.gammas[k] * var(Var::T, static_cast<int>(k)) *
           one_plus_t.pow(g.degree - 2 * static_cast<int>(k));
  }
  return sum;
}

/// Greedy triangular extraction: gamma_k is the t^k coefficient of the
/// running residual. Succeeds exactly when h is palindromic in t with
/// center d/2; otherwise throws NotSymmetricError.
inline GammaVector gamma_expand(const MultiPoly& h, int d) {
  if (h.degree(Var::T) > d) throw DomainError("degree in t exceeds d");
  GammaVector g;
  g.degree = d;
  const MultiPoly one_plus_t = MultiPoly(1) + var(Var::T);
  MultiPoly residual = h;
  for (int k = 0; 2 * k <= d; ++k) {
    MultiPoly gk = residual.coefficient_of(Var::T, k);
    g.gammas.push_back(gk);
    residual -= gk * var(Var::T, k) * one_plus_t.pow(d - 2 * k);
  }
  if (!residual.is_zero())
    throw NotSymmetricError("residual " + residual.to_string());
  return g;
}

}  // namespace permstat
