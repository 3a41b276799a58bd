#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "permstat/error.hpp"
#include "permstat/permutation.hpp"
#include "permstat/stats.hpp"

namespace permstat {

/// Image of the star transformation: a bijection from [n] onto {0,...,n-1},
/// obtained by lowering every letter of a permutation by one. Its functional
/// graph splits into disjoint cycles plus exactly one path from n down to 0.
class StarMap {
 public:
  StarMap() = default;

  explicit StarMap(std::vector<int> word) : word_(std::move(word)) {
    const int n = static_cast<int>(word_.size());
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v : word_) {
      if (v < 0 || v >= n) throw DomainError("star word value out of range");
      if (seen[static_cast<size_t>(v)]) throw DomainError("star word repeats a value");
      seen[static_cast<size_t>(v)] = 1;
    }
  }

  int size() const { return static_cast<int>(word_.size()); }

  /// 1-based application: sigma*(i), defined for i in 1..n.
  int operator()(int i) const { return word_[static_cast<size_t>(i - 1)]; }

  /// Preimage of a value v in 0..n-1; v = n-1... every v in {0..n-1} has one.
  int preimage(int v) const {
    for (int i = 1; i <= size(); ++i)
      if ((*this)(i) == v) return i;
    throw DomainError("value not in star image");
  }

  const std::vector<int>& word() const { return word_; }

  std::string to_string() const {
    std::ostringstream os;
    if (size() <= 10) {
      for (int v : word_) os << v;
    } else {
      for (size_t i = 0; i < word_.size(); ++i) {
        if (i) os << ' ';
        os << word_[i];
      }
    }
    return os.str();
  }

 private:
  std::vector<int> word_;
};

inline StarMap star_map(const Permutation& p) {
  std::vector<int> w(p.word());
  for (int& v : w) --v;
  return StarMap(std::move(w));
}

struct StarCounts {
  int fix = 0, wex = 0, defi = 0;
  int cros = 0, nest = 0;
  int cda = 0, cdd = 0, cvalley = 0;
  int components = 0;  // cycles plus the single n -> ... -> 0 path
  int cycles = 0;      // genuine cycles only
};

/// Statistics of the star word. The boundary entries are never compared:
/// value classifications run over i in [n-1], where both (sigma*)^{-1}(i)
/// and sigma*(i) exist.
inline StarCounts star_counts(const StarMap& m) {
  const int n = m.size();
  StarCounts c;
  std::vector<int> pre(static_cast<size_t>(n), 0);  // pre[v] = (sigma*)^{-1}(v), v in 0..n-1
  for (int i = 1; i <= n; ++i) pre[static_cast<size_t>(m(i))] = i;

  for (int i = 1; i <= n - 1; ++i) {
    const int post = m(i);
    const int p = pre[static_cast<size_t>(i)];
    if (post == i) ++c.fix;
    if (post >= i) ++c.wex;
    if (p > i && i > post) ++c.cdd;
    if (p < i && i < post) ++c.cda;
    if (p > i && i < post) ++c.cvalley;
  }
  for (int i = 1; i <= n; ++i)
    if (m(i) < i) ++c.defi;

  for (int k = 1; k <= n; ++k) {
    const int sk = m(k);
    for (int i = 1; i <= n; ++i) {
      const int si = m(i);
      if ((i < k && k <= si && si < sk) || (i > k && k > si && si > sk)) ++c.cros;
      if ((i < k && k <= sk && sk < si) || (i > k && k > sk && sk > si)) ++c.nest;
    }
  }

  // Component walk: follow i -> sigma*(i); the walk from n ends at 0, every
  // other component is a cycle.
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  seen[0] = 1;
  {
    int x = n;  // the path component
    while (x != 0) {
      seen[static_cast<size_t>(x)] = 1;
      x = m(x);
    }
  }
  for (int s = 1; s <= n; ++s) {
    if (seen[static_cast<size_t>(s)]) continue;
    ++c.cycles;
    int x = s;
    while (!seen[static_cast<size_t>(x)]) {
      seen[static_cast<size_t>(x)] = 1;
      x = m(x);
    }
  }
  c.components = c.cycles + 1;
  return c;
}

inline StarCounts star_counts(const Permutation& p) { return star_counts(star_map(p)); }

/// cyc_star reports the component count of the diagram (cycles plus the one
/// descending path), matching the worked value on 3762154.
inline StatRecord star_stats(const StarMap& m) {
  const StarCounts c = star_counts(m);
  StatRecord r;
  r.set("fix_star", c.fix);
  r.set("wex_star", c.wex);
  r.set("defi_star", c.defi);
  r.set("cros_star", c.cros);
  r.set("nest_star", c.nest);
  r.set("cda_star", c.cda);
  r.set("cdd_star", c.cdd);
  r.set("cvalley_star", c.cvalley);
  r.set("cyc_star", c.components);
  return r;
}

inline StatRecord star_stats(const Permutation& p) { return star_stats(star_map(p)); }

}  // namespace permstat
