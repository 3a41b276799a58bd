#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "permstat/error.hpp"
#include "permstat/motzkin.hpp"
#include "permstat/multipoly.hpp"
#include "permstat/permutation.hpp"
#include "permstat/stats.hpp"

namespace permstat {

enum class Flavor { FV, FZ };

/// Colored Motzkin path together with one bounded choice per step.
///
/// FV flavor: 0 <= p_i <= h_i at every step.
/// FZ flavor: 0 <= p_i <= h_i on rises and blue steps, 0 <= p_i <= h_i - 1
/// on falls and red steps (which therefore need h_i >= 1). A blue step with
/// p_i = h_i marks a fixed point.
struct LaguerreHistory {
  ColoredMotzkinPath path;
  std::vector<int> choices;
  Flavor flavor = Flavor::FV;

  LaguerreHistory() = default;
  LaguerreHistory(ColoredMotzkinPath p, std::vector<int> c, Flavor f)
      : path(std::move(p)), choices(std::move(c)), flavor(f) {
    validate();
  }

  int length() const { return path.length(); }

  void validate() const {
    path.validate();
    if (static_cast<int>(choices.size()) != path.length())
      throw DomainError("choice sequence length mismatch");
    const std::vector<int> h = path.heights();
    for (int i = 0; i < path.length(); ++i) {
      const Step s = path.steps[static_cast<size_t>(i)];
      const int hi = h[static_cast<size_t>(i)];
      const int bound =
          (flavor == Flavor::FV ||
           s == Step::NorthEast || s == Step::EastBlue)
              ? hi
              : hi - 1;
      const int p = choices[static_cast<size_t>(i)];
      if (p < 0 || p > bound)
        throw DomainError("choice " + std::to_string(p) + " out of bounds at step " +
                          std::to_string(i + 1));
    }
  }

  bool operator==(const LaguerreHistory& o) const {
    return flavor == o.flavor && path == o.path && choices == o.choices;
  }
  bool operator<(const LaguerreHistory& o) const {
    if (path.steps != o.path.steps) return path.steps < o.path.steps;
    return choices < o.choices;
  }

  std::string to_string() const {
    std::string s = "steps=" + path.to_string() + " choices=";
    for (size_t i = 0; i < choices.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(choices[i]);
    }
    return s;
  }
};

/// Laguerre history of length n-1 from the valley/peak/double-ascent/
/// double-descent classification of the values 1..n-1 (zero boundaries),
/// with choices p_i = res_i.
inline LaguerreHistory fv_map(const Permutation& sigma) {
  const int n = sigma.size();
  if (n < 1) throw DomainError("fv_map needs n >= 1");
  const std::vector<int> pos = sigma.position_of();
  const PatternCounts pat = pattern_counts(sigma);
  std::vector<Step> steps;
  std::vector<int> choices;
  steps.reserve(static_cast<size_t>(n) - 1);
  for (int value = 1; value <= n - 1; ++value) {
    const int i = pos[static_cast<size_t>(value - 1)];
    const int prev = (i == 1) ? 0 : sigma(i - 1);
    const int next = (i == n) ? 0 : sigma(i + 1);
    Step s;
    if (prev > value && value < next) {
      s = Step::NorthEast;  // valley
    } else if (prev < value && value > next) {
      s = Step::SouthEast;  // peak
    } else if (prev < value && value < next) {
      s = Step::EastBlue;  // double ascent
    } else {
      s = Step::EastRed;  // double descent
    }
    steps.push_back(s);
    choices.push_back(pat.res_k[static_cast<size_t>(value - 1)]);
  }
  return LaguerreHistory(ColoredMotzkinPath{std::move(steps)}, std::move(choices), Flavor::FV);
}

/// Laguerre history of length n from the cyclic classification of the values
/// 1..n (fixed points ride on blue steps), with choices p_i = nest_i.
inline LaguerreHistory fz_map(const Permutation& sigma) {
  const int n = sigma.size();
  const std::vector<int> pos = sigma.position_of();
  const CrossNestCounts cn = crossing_nesting_counts(sigma);
  std::vector<Step> steps;
  std::vector<int> choices;
  steps.reserve(static_cast<size_t>(n));
  for (int value = 1; value <= n; ++value) {
    const int pre = pos[static_cast<size_t>(value - 1)];
    const int post = sigma(value);
    Step s;
    if (pre > value && value < post) {
      s = Step::NorthEast;  // cyclic valley
    } else if (pre < value && value > post) {
      s = Step::SouthEast;  // cyclic peak
    } else if (post >= value) {
      s = Step::EastBlue;  // cyclic double ascent or fixed point
    } else {
      s = Step::EastRed;  // cyclic double drop
    }
    steps.push_back(s);
    choices.push_back(cn.nest_k[static_cast<size_t>(value - 1)]);
  }
  return LaguerreHistory(ColoredMotzkinPath{std::move(steps)}, std::move(choices), Flavor::FZ);
}

/// Weight of one history under the scheme of its flavor.
///
/// FV: t^{R+U} u^{B} v^{R} w^{U} prod_i p^{p_i} q^{h_i - p_i}.
/// FZ: t^{R+U} u^{B - B*} v^{R} w^{U} y^{B*} prod_i p^{p_i} q^{bound_i - p_i},
/// where B* counts blue steps with p_i = h_i and bound_i is h_i on rises and
/// blue steps, h_i - 1 on falls and red steps.
inline MultiPoly history_weight(const LaguerreHistory& hist, Flavor scheme) {
  if (scheme != hist.flavor) throw FlavorMismatchError("weight scheme does not match flavor");
  const std::vector<int> h = hist.path.heights();
  Exponents e = MultiPoly::zero_exponents();
  auto bump = [&e](Var v, int by = 1) { e[static_cast<size_t>(v)] += by; };
  for (int i = 0; i < hist.length(); ++i) {
    const Step s = hist.path.steps[static_cast<size_t>(i)];
    const int hi = h[static_cast<size_t>(i)];
    const int p = hist.choices[static_cast<size_t>(i)];
    switch (s) {
      case Step::NorthEast:
        bump(Var::T);
        bump(Var::W);
        break;
      case Step::EastRed:
        bump(Var::T);
        bump(Var::V);
        break;
      case Step::EastBlue:
        if (scheme == Flavor::FZ && p == hi) {
          bump(Var::Y);
        } else {
          bump(Var::U);
        }
        break;
      case Step::SouthEast:
        break;
    }
    const int bound =
        (scheme == Flavor::FV || s == Step::NorthEast || s == Step::EastBlue) ? hi : hi - 1;
    bump(Var::P, p);
    bump(Var::Q, bound - p);
  }
  return MultiPoly::monomial(e, 1);
}

namespace detail {

template <typename Map>
inline Permutation cached_inverse(const LaguerreHistory& h, Flavor flavor, int n, int cache_bound,
                                  Map map) {
  if (h.flavor != flavor) throw FlavorMismatchError("history has the wrong flavor");
  if (n > cache_bound)
    throw CacheBoundExceededError("inverse cached only up to n = " + std::to_string(cache_bound));
  static std::mutex mu;
  static std::map<std::pair<Flavor, int>, std::map<LaguerreHistory, std::vector<int>>> tables;
  std::lock_guard<std::mutex> lock(mu);
  auto& table = tables[{flavor, n}];
  if (table.empty()) {
    for_each_permutation(n, [&](const Permutation& s) { table.emplace(map(s), s.word()); });
  }
  auto it = table.find(h);
  if (it == table.end()) throw DomainError("history is not in the image");
  return Permutation(it->second);
}

}  // namespace detail

/// Inverses of the two history maps, realized as cached lookups over the
/// forward maps at desk scale.
inline Permutation fv_inverse(const LaguerreHistory& h, int cache_bound = 8) {
  return detail::cached_inverse(h, Flavor::FV, h.length() + 1, cache_bound,
                                [](const Permutation& s) { return fv_map(s); });
}

inline Permutation fz_inverse(const LaguerreHistory& h, int cache_bound = 8) {
  return detail::cached_inverse(h, Flavor::FZ, h.length(), cache_bound,
                                [](const Permutation& s) { return fz_map(s); });
}

/// All histories of the given flavor and length, lexicographic by (steps,
/// choices). There are (n+1)! FV histories of length n.
inline std::vector<LaguerreHistory> enumerate_histories(int n, Flavor flavor) {
  std::vector<LaguerreHistory> out;
  std::vector<Step> steps;
  std::vector<int> choices;
  const std::function<void(int, int)> rec = [&](int remaining, int height) {
    if (remaining == 0) {
      if (height == 0)
        out.emplace_back(ColoredMotzkinPath{std::vector<Step>(steps)},
                         std::vector<int>(choices), flavor);
      return;
    }
    if (height > remaining) return;
    const auto try_step = [&](Step s, int dh, int bound) {
      if (bound < 0) return;
      steps.push_back(s);
      for (int p = 0; p <= bound; ++p) {
        choices.push_back(p);
        rec(remaining - 1, height + dh);
        choices.pop_back();
      }
      steps.pop_back();
    };
    const bool fz = flavor == Flavor::FZ;
    try_step(Step::NorthEast, +1, height);
    if (height > 0) try_step(Step::SouthEast, -1, fz ? height - 1 : height);
    try_step(Step::EastBlue, 0, height);
    try_step(Step::EastRed, 0, fz ? height - 1 : height);
  };
  rec(n, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace permstat
