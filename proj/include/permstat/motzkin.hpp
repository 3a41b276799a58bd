#pragma once

#include <functional>
#include <string>
#include <vector>

#include "permstat/error.hpp"
#include "permstat/multipoly.hpp"

namespace permstat {

enum class Step : char { NorthEast, SouthEast, EastBlue, EastRed };

inline char step_letter(Step s) {
  switch (s) {
    case Step::NorthEast: return 'U';
    case Step::SouthEast: return 'D';
    case Step::EastBlue: return 'B';
    case Step::EastRed: return 'R';
  }
  return '?';
}

/// Motzkin path with two-coloured level steps. Plain paths use EastBlue for
/// every level step. Heights stay nonnegative and the path ends at 0; the
/// height of a step is the ordinate where it starts.
struct ColoredMotzkinPath {
  std::vector<Step> steps;

  ColoredMotzkinPath() = default;
  explicit ColoredMotzkinPath(std::vector<Step> s) : steps(std::move(s)) { validate(); }

  int length() const { return static_cast<int>(steps.size()); }

  /// heights()[i] = height before step i+1 (h_i in 1-based speak).
  std::vector<int> heights() const {
    std::vector<int> h;
    h.reserve(steps.size());
    int cur = 0;
    for (Step s : steps) {
      h.push_back(cur);
      if (s == Step::NorthEast) ++cur;
      if (s == Step::SouthEast) --cur;
    }
    return h;
  }

  void validate() const {
    int cur = 0;
    for (Step s : steps) {
      if (s == Step::NorthEast) ++cur;
      if (s == Step::SouthEast) {
        if (cur == 0) throw DomainError("path dips below zero");
        --cur;
      }
    }
    if (cur != 0) throw DomainError("path does not return to zero");
  }

  bool operator==(const ColoredMotzkinPath& o) const { return steps == o.steps; }
  bool operator<(const ColoredMotzkinPath& o) const { return steps < o.steps; }

  std::string to_string() const {
    std::string s;
    for (Step st : steps) s += step_letter(st);
    return s;
  }
};

/// All Motzkin paths of length n; colored doubles the level steps, plain
/// emits EastBlue only.
inline std::vector<ColoredMotzkinPath> motzkin_enumerate(int n, bool colored) {
  std::vector<ColoredMotzkinPath> out;
  std::vector<Step> cur;
  const std::function<void(int, int)> rec = [&](int remaining, int height) {
    if (remaining == 0) {
      if (height == 0) out.push_back(ColoredMotzkinPath{std::vector<Step>(cur)});
      return;
    }
    if (height > remaining) return;  // cannot come back down
    cur.push_back(Step::EastBlue);
    rec(remaining - 1, height);
    cur.back() = Step::EastRed;
    if (colored) rec(remaining - 1, height);
    cur.back() = Step::NorthEast;
    rec(remaining - 1, height + 1);
    if (height > 0) {
      cur.back() = Step::SouthEast;
      rec(remaining - 1, height - 1);
    }
    cur.pop_back();
  };
  rec(n, 0);
  return out;
}

/// Height-indexed step weights: a(h) for rises, b(h) for level steps,
/// c(h) for falls.
struct StepWeights {
  std::function<MultiPoly(int)> rise;   // a_h
  std::function<MultiPoly(int)> level;  // b_h
  std::function<MultiPoly(int)> fall;   // c_h
};

/// Sum over all plain Motzkin paths of length n of the product of step
/// weights, by dynamic programming over (position, height).
inline MultiPoly weighted_path_sum(int n, const StepWeights& w) {
  if (n < 0) throw DomainError("negative path length");
  std::vector<MultiPoly> cur(static_cast<size_t>(n) + 2);
  cur[0] = 1;
  for (int i = 0; i < n; ++i) {
    std::vector<MultiPoly> next(static_cast<size_t>(n) + 2);
    const int hmax = std::min(i, n - i);
    for (int h = 0; h <= hmax; ++h) {
      const MultiPoly& src = cur[static_cast<size_t>(h)];
      if (src.is_zero()) continue;
      next[static_cast<size_t>(h) + 1] += src * w.rise(h);
      next[static_cast<size_t>(h)] += src * w.level(h);
      if (h > 0) next[static_cast<size_t>(h) - 1] += src * w.fall(h);
    }
    cur = std::move(next);
  }
  return cur[0];
}

/// Brute-force oracle for the same sum: enumerate and multiply.
inline MultiPoly weighted_path_sum_enumerated(int n, const StepWeights& w) {
  MultiPoly total;
  for (const ColoredMotzkinPath& path : motzkin_enumerate(n, /*colored=*/false)) {
    MultiPoly prod = 1;
    const std::vector<int> h = path.heights();
    for (int i = 0; i < path.length(); ++i) {
      switch (path.steps[static_cast<size_t>(i)]) {
        case Step::NorthEast: prod *= w.rise(h[static_cast<size_t>(i)]); break;
        case Step::SouthEast: prod *= w.fall(h[static_cast<size_t>(i)]); break;
        default: prod *= w.level(h[static_cast<size_t>(i)]); break;
      }
    }
    total += prod;
  }
  return total;
}

}  // namespace permstat
