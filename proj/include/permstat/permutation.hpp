#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "permstat/error.hpp"

namespace permstat {

/// A permutation of [n] = {1,...,n} in one-line notation.
///
/// The word is the canonical representation throughout; cycle structure is
/// derived on demand. Construction validates that the word is a bijection
/// of [n]. n = 0 (the empty permutation) is allowed.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
    const int n = static_cast<int>(word_.size());
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : word_) {
      if (v < 1 || v > n) {
        throw ParseError("value " + std::to_string(v) + " out of range 1.." +
                         std::to_string(n));
      }
      if (seen[static_cast<size_t>(v)]) {
        throw ParseError("duplicate value " + std::to_string(v));
      }
      seen[static_cast<size_t>(v)] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
  }

  int size() const { return static_cast<int>(word_.size()); }

  /// 1-based application: sigma(i) for i in 1..n.
  int operator()(int i) const { return word_[static_cast<size_t>(i - 1)]; }

  const std::vector<int>& word() const { return word_; }

  Permutation inverse() const {
    std::vector<int> inv(word_.size());
    for (int i = 1; i <= size(); ++i) inv[static_cast<size_t>((*this)(i)-1)] = i;
    return Permutation(std::move(inv));
  }

  /// Positions of each value: position_of()[v-1] = sigma^{-1}(v).
  std::vector<int> position_of() const { return inverse().word(); }

  Permutation compose(const Permutation& other) const {
    // (this o other)(i) = this(other(i))
    if (size() != other.size()) throw DomainError("size mismatch in compose");
    std::vector<int> w(word_.size());
    for (int i = 1; i <= size(); ++i) w[static_cast<size_t>(i - 1)] = (*this)(other(i));
    return Permutation(std::move(w));
  }

  int cycle_count() const {
    const int n = size();
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    int cycles = 0;
    for (int s = 1; s <= n; ++s) {
      if (seen[static_cast<size_t>(s)]) continue;
      ++cycles;
      int x = s;
      while (!seen[static_cast<size_t>(x)]) {
        seen[static_cast<size_t>(x)] = 1;
        x = (*this)(x);
      }
    }
    return cycles;
  }

  bool operator==(const Permutation& o) const { return word_ == o.word_; }
  bool operator<(const Permutation& o) const { return word_ < o.word_; }

  /// Compact rendering: digit string for n <= 9, space-separated otherwise.
  std::string to_string() const {
    std::ostringstream os;
    if (size() <= 9) {
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

/// Parses whitespace- or comma-separated values; a single token of two or
/// more digits is read digit-by-digit ("412796583" means 4 1 2 7 9 6 5 8 3).
/// If expected_n >= 0 the parsed length must match it.
inline Permutation parse_permutation(const std::string& text, int expected_n = -1) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));

  std::vector<int> values;
  if (tokens.size() == 1 && tokens[0].size() > 1 &&
      std::all_of(tokens[0].begin(), tokens[0].end(),
                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    for (char c : tokens[0]) values.push_back(c - '0');
  } else {
    for (const std::string& t : tokens) {
      size_t pos = 0;
      int v = 0;
      try {
        v = std::stoi(t, &pos);
      } catch (const std::exception&) {
        throw ParseError("bad token '" + t + "'");
      }
      if (pos != t.size()) throw ParseError("bad token '" + t + "'");
      values.push_back(v);
    }
  }
  if (expected_n >= 0 && static_cast<int>(values.size()) != expected_n) {
    throw ParseError("expected " + std::to_string(expected_n) + " values, got " +
                     std::to_string(values.size()));
  }
  return Permutation(std::move(values));
}

enum class Transform { Reverse, Complement, ReverseComplement };

inline Permutation apply_transform(const Permutation& p, Transform kind) {
  const int n = p.size();
  std::vector<int> w(static_cast<size_t>(n));
  switch (kind) {
    case Transform::Reverse:
      for (int i = 1; i <= n; ++i) w[static_cast<size_t>(i - 1)] = p(n + 1 - i);
      break;
    case Transform::Complement:
      for (int i = 1; i <= n; ++i) w[static_cast<size_t>(i - 1)] = n + 1 - p(i);
      break;
    case Transform::ReverseComplement:
      for (int i = 1; i <= n; ++i) w[static_cast<size_t>(i - 1)] = n + 1 - p(n + 1 - i);
      break;
  }
  return Permutation(std::move(w));
}

/// Visits all of S_n in lexicographic order. S_0 contains the empty word.
template <typename F>
void for_each_permutation(int n, F&& f) {
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    f(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

inline long long factorial_ll(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

/// Word at a given lexicographic index (factorial number system).
inline std::vector<int> unrank_permutation(long long index, int n) {
  std::vector<int> pool(static_cast<size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> w;
  w.reserve(static_cast<size_t>(n));
  long long f = factorial_ll(n);
  for (int i = n; i >= 1; --i) {
    f /= i;
    const long long d = index / f;
    index %= f;
    w.push_back(pool[static_cast<size_t>(d)]);
    pool.erase(pool.begin() + static_cast<long>(d));
  }
  return w;
}

/// Accumulates over S_n with `jobs` workers. Each worker owns a chunk of the
/// lexicographic order and a local accumulator of type Acc (default
/// constructed); chunks are folded left-to-right, so the result does not
/// depend on the worker count.
template <typename Acc, typename Visit, typename Fold>
Acc accumulate_over_sn(int n, int jobs, Visit visit, Fold fold) {
  const long long total = factorial_ll(n);
  if (jobs < 1) jobs = 1;
  if (jobs == 1 || total < 5040) {
    Acc acc{};
    for_each_permutation(n, [&](const Permutation& p) { visit(acc, p); });
    return acc;
  }
  const long long workers = std::min<long long>(jobs, total);
  std::vector<Acc> parts(static_cast<size_t>(workers));
  std::vector<std::thread> threads;
  threads.reserve(static_cast<size_t>(workers));
  for (long long c = 0; c < workers; ++c) {
    threads.emplace_back([&, c]() {
      const long long lo = total * c / workers;
      const long long hi = total * (c + 1) / workers;
      std::vector<int> w = unrank_permutation(lo, n);
      Acc& acc = parts[static_cast<size_t>(c)];
      for (long long i = lo; i < hi; ++i) {
        visit(acc, Permutation(w));
        std::next_permutation(w.begin(), w.end());
      }
    });
  }
  for (auto& t : threads) t.join();
  Acc acc = std::move(parts[0]);
  for (size_t c = 1; c < parts.size(); ++c) fold(acc, parts[c]);
  return acc;
}

struct PermutationFlags {
  bool is_derangement = false;
  bool is_coderangement = false;
  bool is_alternating = false;
  bool is_involution = false;
};

}  // namespace permstat
