#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "permstat/error.hpp"
#include "permstat/permutation.hpp"
#include "permstat/stats.hpp"

namespace permstat {

enum class EmbracingMode { InversionBottom, InversionTop };

/// Arranges the given letters into the unique word whose inversion bottom
/// numbers (larger letters to the left) or inversion top numbers (smaller
/// letters to the right) equal the prescribed embracing numbers.
///
/// InversionBottom inserts letters in decreasing order at index emb(a);
/// InversionTop inserts in increasing order, leaving emb(b) placed letters
/// to the right. Each placement is independent of later letters.
inline std::vector<int> word_from_embracings(const std::vector<int>& letters,
                                             const std::map<int, int>& emb,
                                             EmbracingMode mode) {
  std::vector<int> sorted = letters;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> word;
  word.reserve(sorted.size());
  const auto emb_of = [&emb](int letter) {
    auto it = emb.find(letter);
    return it == emb.end() ? 0 : it->second;
  };
  if (mode == EmbracingMode::InversionBottom) {
    for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) {
      const int e = emb_of(*it);
      if (e < 0 || e > static_cast<int>(word.size()))
        throw EmbracingOutOfRangeError("embracing number " + std::to_string(e) +
                                       " impossible for letter " + std::to_string(*it));
      word.insert(word.begin() + e, *it);
    }
  } else {
    for (int letter : sorted) {
      const int e = emb_of(letter);
      if (e < 0 || e > static_cast<int>(word.size()))
        throw EmbracingOutOfRangeError("embracing number " + std::to_string(e) +
                                       " impossible for letter " + std::to_string(letter));
      word.insert(word.end() - e, letter);
    }
  }
  return word;
}

/// The biword bijection: descent bottoms/tops and their complements are
/// rearranged so that the right embracing number of every letter becomes its
/// inversion bottom (descent tops) or inversion top (other letters) number;
/// sorting the columns by the rearranged row yields the image.
///
/// Transfers, verified exhaustively in the tests:
/// (ress, les, des, da - fmax, dd, valley, fmax) of sigma equals
/// (nest, cros, defi, cda, cdd, cvalley, fix) of phi(sigma).
inline Permutation phi(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<char> is_descent_bottom(static_cast<size_t>(n) + 1, 0);
  std::vector<char> is_descent_top(static_cast<size_t>(n) + 1, 0);
  for (int i = 1; i < n; ++i) {
    if (sigma(i) > sigma(i + 1)) {
      is_descent_top[static_cast<size_t>(sigma(i))] = 1;
      is_descent_bottom[static_cast<size_t>(sigma(i + 1))] = 1;
    }
  }
  std::vector<int> f, g, ftops, gtops;
  for (int v = 1; v <= n; ++v) {
    (is_descent_bottom[static_cast<size_t>(v)] ? f : g).push_back(v);
    (is_descent_top[static_cast<size_t>(v)] ? ftops : gtops).push_back(v);
  }
  const PatternCounts pat = pattern_counts(sigma);
  std::map<int, int> emb;
  for (int v = 1; v <= n; ++v) emb[v] = pat.ress_k[static_cast<size_t>(v - 1)];

  const std::vector<int> fprime = word_from_embracings(ftops, emb, EmbracingMode::InversionBottom);
  const std::vector<int> gprime = word_from_embracings(gtops, emb, EmbracingMode::InversionTop);

  // Columns are (top f,g over bottom f',g'); reading the sorted biword means
  // tau(bottom) = top.
  std::vector<int> tau(static_cast<size_t>(n));
  for (size_t j = 0; j < f.size(); ++j) tau[static_cast<size_t>(fprime[j] - 1)] = f[j];
  for (size_t j = 0; j < g.size(); ++j) tau[static_cast<size_t>(gprime[j] - 1)] = g[j];
  return Permutation(std::move(tau));
}

/// Inverse of phi from a cached forward table, built once per size.
inline Permutation phi_inverse(const Permutation& tau, int cache_bound = 9) {
  const int n = tau.size();
  if (n > cache_bound)
    throw CacheBoundExceededError("phi_inverse cached only up to n = " +
                                  std::to_string(cache_bound));
  static std::mutex mu;
  static std::map<int, std::map<std::vector<int>, std::vector<int>>> tables;
  std::lock_guard<std::mutex> lock(mu);
  auto& table = tables[n];
  if (table.empty()) {
    for_each_permutation(n, [&](const Permutation& s) {
      table[phi(s).word()] = s.word();
    });
  }
  auto it = table.find(tau.word());
  if (it == table.end()) throw InternalAssertionError("phi image table is incomplete");
  return Permutation(it->second);
}

/// Derived bijection: append a new minimum after lifting all letters, apply
/// phi, and strip the forced leading maximum.
///
/// Transfers (verified in tests): (res, les, des, da*, dd*, valley*) of
/// sigma equals (nest*, cros*, defi* - 1, cda* + fix*, cdd*, cvalley*) of
/// psi(sigma).
inline Permutation psi(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<int> lifted;
  lifted.reserve(static_cast<size_t>(n) + 1);
  for (int v : sigma.word()) lifted.push_back(v + 1);
  lifted.push_back(1);
  const Permutation tau = phi(Permutation(std::move(lifted)));
  if (tau(1) != n + 1)
    throw InternalAssertionError("phi image does not start with the maximum");
  std::vector<int> out;
  out.reserve(static_cast<size_t>(n));
  for (int i = 2; i <= n + 1; ++i) out.push_back(tau(i));
  return Permutation(std::move(out));
}

}  // namespace permstat
