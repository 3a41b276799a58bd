#pragma once

#include <map>
#include <string>
#include <vector>

#include "permstat/error.hpp"
#include "permstat/permutation.hpp"

namespace permstat {

/// Boundary convention for classifying entries against their neighbours:
/// which sentinel values play sigma(0) and sigma(n+1).
enum class BoundaryConvention {
  ZeroZero,  // sigma(0) = sigma(n+1) = 0
  ZeroTop,   // sigma(0) = 0, sigma(n+1) = n+1
  TopTop,    // sigma(0) = sigma(n+1) = n+1
};

/// Named nonnegative counts for one permutation; which names are populated
/// depends on the producing operation. Reading an absent name is an error
/// (e.g. fmax exists only under the ZeroTop convention).
class StatRecord {
 public:
  void set(const std::string& name, int value) { counts_[name] = value; }

  int get(const std::string& name) const {
    auto it = counts_.find(name);
    if (it == counts_.end()) throw MissingStatError("no statistic '" + name + "'");
    return it->second;
  }

  bool has(const std::string& name) const { return counts_.count(name) != 0; }

  void set_vector(const std::string& name, std::vector<int> v) {
    vectors_[name] = std::move(v);
  }

  const std::vector<int>& get_vector(const std::string& name) const {
    auto it = vectors_.find(name);
    if (it == vectors_.end()) throw MissingStatError("no refinement '" + name + "'");
    return it->second;
  }

  const std::map<std::string, int>& counts() const { return counts_; }
  const std::map<std::string, std::vector<int>>& vectors() const { return vectors_; }

  void merge(const StatRecord& other) {
    for (const auto& [k, v] : other.counts_) counts_[k] = v;
    for (const auto& [k, v] : other.vectors_) vectors_[k] = v;
  }

 private:
  std::map<std::string, int> counts_;
  std::map<std::string, std::vector<int>> vectors_;
};

// ---------------------------------------------------------------------------
// Linear statistics: each position classified as peak / valley / double
// ascent / double descent against its neighbours under a boundary convention.

struct LinearCounts {
  int des = 0;
  int peak = 0, valley = 0, da = 0, dd = 0;
  int fmax = 0;  // meaningful only under ZeroTop
};

inline LinearCounts linear_counts(const Permutation& p, BoundaryConvention conv) {
  const int n = p.size();
  const int left0 = (conv == BoundaryConvention::TopTop) ? n + 1 : 0;
  const int rightn1 = (conv == BoundaryConvention::ZeroZero) ? 0 : n + 1;
  LinearCounts c;
  int running_max = 0;
  for (int i = 1; i <= n; ++i) {
    const int prev = (i == 1) ? left0 : p(i - 1);
    const int next = (i == n) ? rightn1 : p(i + 1);
    const int cur = p(i);
    const bool lr_max = cur > running_max;
    running_max = std::max(running_max, cur);
    if (prev < cur && cur > next) {
      ++c.peak;
    } else if (prev > cur && cur < next) {
      ++c.valley;
    } else if (prev < cur && cur < next) {
      ++c.da;
      if (lr_max) ++c.fmax;  // foremaximum: double ascent that is a l-to-r maximum
    } else {
      ++c.dd;
    }
    if (i < n && p(i) > p(i + 1)) ++c.des;
  }
  return c;
}

inline StatRecord linear_stats(const Permutation& p, BoundaryConvention conv) {
  const LinearCounts c = linear_counts(p, conv);
  StatRecord r;
  r.set("des", c.des);
  switch (conv) {
    case BoundaryConvention::ZeroZero:
      r.set("peak_star", c.peak);
      r.set("valley_star", c.valley);
      r.set("da_star", c.da);
      r.set("dd_star", c.dd);
      break;
    case BoundaryConvention::ZeroTop:
      r.set("peak", c.peak);
      r.set("valley", c.valley);
      r.set("da", c.da);
      r.set("dd", c.dd);
      r.set("fmax", c.fmax);
      break;
    case BoundaryConvention::TopTop:
      r.set("peak_b", c.peak);
      r.set("valley_b", c.valley);
      r.set("da_b", c.da);
      r.set("dd_b", c.dd);
      break;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Cyclic statistics: each value classified through the functional graph.

struct CyclicCounts {
  int exc = 0, wex = 0, defi = 0, fix = 0, cyc = 0;
  int cpeak = 0, cvalley = 0, cda = 0, cdd = 0;
};

inline CyclicCounts cyclic_counts(const Permutation& p) {
  const int n = p.size();
  const std::vector<int> pos = p.position_of();
  CyclicCounts c;
  c.cyc = p.cycle_count();
  for (int x = 1; x <= n; ++x) {
    const int pre = pos[static_cast<size_t>(x - 1)];  // sigma^{-1}(x)
    const int post = p(x);
    if (post > x) ++c.exc;
    if (post >= x) ++c.wex;
    if (post < x) ++c.defi;
    if (post == x) {
      ++c.fix;
    } else if (pre < x && x > post) {
      ++c.cpeak;
    } else if (pre > x && x < post) {
      ++c.cvalley;
    } else if (pre < x && x < post) {
      ++c.cda;  // double excedance
    } else {
      ++c.cdd;  // double drop
    }
  }
  return c;
}

inline StatRecord cyclic_stats(const Permutation& p) {
  const CyclicCounts c = cyclic_counts(p);
  StatRecord r;
  r.set("exc", c.exc);
  r.set("wex", c.wex);
  r.set("defi", c.defi);
  r.set("fix", c.fix);
  r.set("cyc", c.cyc);
  r.set("cpeak", c.cpeak);
  r.set("cvalley", c.cvalley);
  r.set("cda", c.cda);
  r.set("cdd", c.cdd);
  return r;
}

// ---------------------------------------------------------------------------
// Vincular pattern statistics and their per-value refinements.
//
// les  counts (i,j), 2 <= i < j <= n,   sigma(i-1) > sigma(j) > sigma(i)
// less counts (i,j), 2 <= i < j <= n,   sigma(i-1) < sigma(j) < sigma(i)
// res  counts (i,j), 1 <= i < j <= n-1, sigma(j+1) > sigma(i) > sigma(j)
// ress counts (i,j), 1 <= i < j <= n-1, sigma(j+1) < sigma(i) < sigma(j)
//
// les_k / ress_k / res_k refine by the embraced value k: the adjacent pair
// must lie strictly left (les) or strictly right (ress, res) of k's position.

struct PatternCounts {
  int les = 0, less = 0, res = 0, ress = 0;
  std::vector<int> les_k, res_k, ress_k;  // length n, indexed by value k-1
};

inline PatternCounts pattern_counts(const Permutation& p) {
  const int n = p.size();
  const std::vector<int> pos = p.position_of();
  PatternCounts c;
  c.les_k.assign(static_cast<size_t>(n), 0);
  c.res_k.assign(static_cast<size_t>(n), 0);
  c.ress_k.assign(static_cast<size_t>(n), 0);
  for (int i = 2; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (p(i - 1) > p(j) && p(j) > p(i)) ++c.les;
      if (p(i - 1) < p(j) && p(j) < p(i)) ++c.less;
    }
  }
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 1; j <= n - 1; ++j) {
      if (p(j + 1) > p(i) && p(i) > p(j)) ++c.res;
      if (p(j + 1) < p(i) && p(i) < p(j)) ++c.ress;
    }
  }
  for (int k = 1; k <= n; ++k) {
    const int jk = pos[static_cast<size_t>(k - 1)];
    for (int i = 2; i <= n; ++i) {
      const int a = p(i - 1), b = p(i);
      if (i < jk && b < k && k < a) ++c.les_k[static_cast<size_t>(k - 1)];
      if (jk < i - 1 && b < k && k < a) ++c.ress_k[static_cast<size_t>(k - 1)];
      if (jk < i - 1 && a < k && k < b) ++c.res_k[static_cast<size_t>(k - 1)];
    }
  }
  return c;
}

inline StatRecord pattern_stats(const Permutation& p) {
  const PatternCounts c = pattern_counts(p);
  StatRecord r;
  r.set("les", c.les);
  r.set("less", c.less);
  r.set("res", c.res);
  r.set("ress", c.ress);
  r.set_vector("les_k", c.les_k);
  r.set_vector("res_k", c.res_k);
  r.set_vector("ress_k", c.ress_k);
  return r;
}

// ---------------------------------------------------------------------------
// Crossings and nestings of the permutation diagram (upper arcs for weak
// excedances, lower arcs for drops), with per-value refinements.

struct CrossNestCounts {
  int cros = 0, nest = 0;
  std::vector<int> cros_k, nest_k;  // length n, indexed by value k-1
};

inline CrossNestCounts crossing_nesting_counts(const Permutation& p) {
  const int n = p.size();
  CrossNestCounts c;
  c.cros_k.assign(static_cast<size_t>(n), 0);
  c.nest_k.assign(static_cast<size_t>(n), 0);
  for (int k = 1; k <= n; ++k) {
    const int sk = p(k);
    for (int i = 1; i <= n; ++i) {
      const int si = p(i);
      if ((i < k && k <= si && si < sk) || (i > k && k > si && si > sk))
        ++c.cros_k[static_cast<size_t>(k - 1)];
      if ((i < k && k <= sk && sk < si) || (i > k && k > sk && sk > si))
        ++c.nest_k[static_cast<size_t>(k - 1)];
    }
  }
  for (int k = 0; k < n; ++k) {
    c.cros += c.cros_k[static_cast<size_t>(k)];
    c.nest += c.nest_k[static_cast<size_t>(k)];
  }
  return c;
}

inline StatRecord crossing_nesting(const Permutation& p) {
  const CrossNestCounts c = crossing_nesting_counts(p);
  StatRecord r;
  r.set("cros", c.cros);
  r.set("nest", c.nest);
  r.set_vector("cros_k", c.cros_k);
  r.set_vector("nest_k", c.nest_k);
  return r;
}

// ---------------------------------------------------------------------------

inline PermutationFlags predicates(const Permutation& p) {
  PermutationFlags f;
  f.is_derangement = cyclic_counts(p).fix == 0;
  f.is_coderangement = linear_counts(p, BoundaryConvention::ZeroTop).fmax == 0;
  f.is_alternating = true;
  for (int i = 1; i + 1 <= p.size(); ++i) {
    const bool want_desc = (i % 2 == 1);  // falling alternating: starts with a descent
    if (want_desc != (p(i) > p(i + 1))) {
      f.is_alternating = false;
      break;
    }
  }
  f.is_involution = p.compose(p) == Permutation::identity(p.size());
  return f;
}

}  // namespace permstat
