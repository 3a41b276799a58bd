#pragma once

#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include "permstat/bigint.hpp"
#include "permstat/error.hpp"

namespace permstat {

/// The fixed variable tuple. Every polynomial in the project lives in
/// Z[p,q,t,u,v,w,y,beta]; the series variable x exists only in
/// TruncatedSeries, never here.
enum class Var : int { P = 0, Q, T, U, V, W, Y, Beta };

inline constexpr int kVarCount = 8;

inline constexpr const char* kVarNames[kVarCount] = {"p", "q", "t", "u",
                                                     "v", "w", "y", "beta"};

using Exponents = std::array<int, kVarCount>;

inline int total_degree(const Exponents& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

/// Canonical term order: total degree descending, then exponent tuple
/// lexicographically descending. Map iteration therefore matches the
/// rendered form (e.g. "p^2+2*p*q+q^2+2*p+2*q").
struct TermOrder {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

/// Sparse exact multivariate polynomial over arbitrary-precision integers.
///
/// Laurent support exists only in q, through a single global factor
/// q^(-q_shift): the value represents q^(-q_shift) * (sum of stored terms).
/// Values are normalized so that q_shift > 0 implies some term has
/// q-exponent 0; comparisons therefore reduce to member-wise equality.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, BigInt, TermOrder>;

  MultiPoly() = default;

  MultiPoly(long long c) {  // NOLINT: implicit by design, mirrors integer literals
    if (c != 0) terms_[zero_exponents()] = c;
  }

  explicit MultiPoly(const BigInt& c) {
    if (c != 0) terms_[zero_exponents()] = c;
  }

  static Exponents zero_exponents() { return Exponents{0, 0, 0, 0, 0, 0, 0, 0}; }

  static MultiPoly variable(Var v, int exponent = 1) {
    MultiPoly r;
    if (exponent < 0) throw DomainError("negative exponent");
    Exponents e = zero_exponents();
    e[static_cast<size_t>(v)] = exponent;
    r.terms_[e] = 1;
    return r;
  }

  static MultiPoly monomial(const Exponents& e, BigInt c) {
    MultiPoly r;
    for (int x : e)
      if (x < 0) throw DomainError("negative exponent");
    if (c != 0) r.terms_[e] = std::move(c);
    return r;
  }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  int q_shift() const { return q_shift_; }

  void add_term(const Exponents& e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
    normalize();
  }

  int degree(Var v) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<size_t>(v)]);
    return d - (v == Var::Q ? q_shift_ : 0);
  }

  int degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d - q_shift_;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    if (o.q_shift_ == q_shift_) {
      for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
          it->second += c;
          if (it->second == 0) terms_.erase(it);
        }
      }
      normalize();
      return *this;
    }
    align_shift(std::max(q_shift_, o.q_shift_));
    MultiPoly rhs = o;
    rhs.align_shift(q_shift_);
    for (const auto& [e, c] : rhs.terms_) {
      auto [it, inserted] = terms_.try_emplace(e, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
      }
    }
    normalize();
    return *this;
  }

  MultiPoly& operator-=(const MultiPoly& o) { return *this += -o; }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    r.q_shift_ = a.q_shift_ + b.q_shift_;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e;
        for (int i = 0; i < kVarCount; ++i) e[static_cast<size_t>(i)] = ea[static_cast<size_t>(i)] + eb[static_cast<size_t>(i)];
        auto [it, inserted] = r.terms_.try_emplace(e, ca * cb);
        if (!inserted) {
          it->second += ca * cb;
          if (it->second == 0) r.terms_.erase(it);
        }
      }
    }
    r.normalize();
    return r;
  }

  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly pow(int e) const {
    if (e < 0) throw DomainError("negative power");
    MultiPoly r = 1;
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  bool operator==(const MultiPoly& o) const {
    return q_shift_ == o.q_shift_ && terms_ == o.terms_;
  }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  /// Multiplies by q^(-k), k >= 0 (the Laurent device).
  MultiPoly shifted_down_by_q(int k) const {
    if (k < 0) throw DomainError("negative q shift");
    MultiPoly r = *this;
    r.q_shift_ += k;
    r.normalize();
    return r;
  }

  /// Coefficient of v^k, as a polynomial in the remaining variables.
  MultiPoly coefficient_of(Var v, int k) const {
    if (v == Var::Q && q_shift_ != 0)
      throw DomainError("coefficient_of in q requires an unshifted value");
    MultiPoly r;
    for (const auto& [e, c] : terms_) {
      if (e[static_cast<size_t>(v)] != k) continue;
      Exponents e2 = e;
      e2[static_cast<size_t>(v)] = 0;
      r.terms_[e2] = c;
    }
    r.q_shift_ = q_shift_;
    r.normalize();
    return r;
  }

  /// Exact substitution: each assigned variable becomes an integer or
  /// another variable; unassigned variables are untouched.
  using Assignment = std::map<Var, std::variant<BigInt, Var>>;

  MultiPoly specialize(const Assignment& assign) const {
    if (q_shift_ != 0 && assign.count(Var::Q))
      throw DomainError("cannot specialize q on a q-shifted value");
    MultiPoly r;
    r.q_shift_ = q_shift_;
    for (const auto& [e, c] : terms_) {
      BigInt coeff = c;
      Exponents e2 = zero_exponents();
      for (int i = 0; i < kVarCount; ++i) {
        const int exp = e[static_cast<size_t>(i)];
        if (exp == 0) continue;
        auto it = assign.find(static_cast<Var>(i));
        if (it == assign.end()) {
          e2[static_cast<size_t>(i)] += exp;
        } else if (std::holds_alternative<BigInt>(it->second)) {
          coeff *= big_pow(std::get<BigInt>(it->second), exp);
        } else {
          e2[static_cast<size_t>(std::get<Var>(it->second))] += exp;
        }
      }
      if (coeff == 0) continue;
      auto [it2, inserted] = r.terms_.try_emplace(e2, coeff);
      if (!inserted) {
        it2->second += coeff;
        if (it2->second == 0) r.terms_.erase(it2);
      }
    }
    r.normalize();
    return r;
  }

  /// The integer value of a constant polynomial.
  BigInt constant_value() const {
    if (q_shift_ != 0) throw DomainError("not a constant (q-shifted)");
    if (terms_.empty()) return 0;
    if (terms_.size() != 1 || terms_.begin()->first != zero_exponents())
      throw DomainError("not a constant polynomial");
    return terms_.begin()->second;
  }

  /// Canonical rendering: expanded, terms in the canonical order, e.g.
  /// "p^2+2*p*q+q^2+2*p+2*q". A pending q-shift is printed as a prefix.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    if (q_shift_ != 0) os << "q^-" << q_shift_ << "*(";
    bool first = true;
    for (const auto& [e, c] : terms_) {
      const bool neg = c < 0;
      if (first) {
        if (neg) os << '-';
      } else {
        os << (neg ? '-' : '+');
      }
      first = false;
      const BigInt a = neg ? BigInt(-c) : c;
      std::string mono;
      for (int i = 0; i < kVarCount; ++i) {
        const int exp = e[static_cast<size_t>(i)];
        if (exp == 0) continue;
        if (!mono.empty()) mono += '*';
        mono += kVarNames[i];
        if (exp > 1) mono += '^' + std::to_string(exp);
      }
      if (mono.empty()) {
        os << a.str();
      } else if (a == 1) {
        os << mono;
      } else {
        os << a.str() << '*' << mono;
      }
    }
    if (q_shift_ != 0) os << ')';
    return os.str();
  }

 private:
  // Renormalizes the Laurent prefactor: clears q_shift against the minimum
  // q-exponent of the stored terms.
  void normalize() {
    if (terms_.empty()) {
      q_shift_ = 0;
      return;
    }
    if (q_shift_ == 0) return;
    int minq = q_shift_;
    for (const auto& [e, c] : terms_) minq = std::min(minq, e[static_cast<size_t>(Var::Q)]);
    if (minq <= 0) return;
    reduce_q_exponents(minq);
    q_shift_ -= minq;
  }

  // Rewrites the value with a larger stored shift (same represented value).
  void align_shift(int target) {
    if (target < q_shift_) throw DomainError("cannot lower q shift");
    if (target == q_shift_) return;
    const int d = target - q_shift_;
    TermMap fresh;
    for (const auto& [e, c] : terms_) {
      Exponents e2 = e;
      e2[static_cast<size_t>(Var::Q)] += d;
      fresh[e2] = c;
    }
    terms_ = std::move(fresh);
    q_shift_ = target;
  }

  void reduce_q_exponents(int d) {
    TermMap fresh;
    for (const auto& [e, c] : terms_) {
      Exponents e2 = e;
      e2[static_cast<size_t>(Var::Q)] -= d;
      fresh[e2] = c;
    }
    terms_ = std::move(fresh);
  }

  TermMap terms_;
  int q_shift_ = 0;
};

inline MultiPoly var(Var v, int e = 1) { return MultiPoly::variable(v, e); }

/// [n]_{p,q} = p^{n-1} + p^{n-2} q + ... + q^{n-1}; [0] = 0.
inline MultiPoly pq_integer(int n) {
  if (n < 0) throw DomainError("pq_integer of negative n");
  MultiPoly r;
  for (int i = 0; i < n; ++i) {
    Exponents e = MultiPoly::zero_exponents();
    e[static_cast<size_t>(Var::P)] = n - 1 - i;
    e[static_cast<size_t>(Var::Q)] = i;
    r.add_term(e, 1);
  }
  return r;
}

/// Exact division: returns h with g*h = f, or throws NotDivisibleError.
/// Reduction is univariate in the first variable g actually uses, with the
/// coefficient divisions recursing into the remaining variables.
inline MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g) {
  if (g.is_zero()) throw DomainError("division by zero polynomial");
  if (f.q_shift() != 0 || g.q_shift() != 0) {
    // Divide the polynomial parts; shifts subtract. A deficit on the left is
    // folded back into the polynomial part of the quotient's shift.
    MultiPoly fp = f, gp = g;
    const int fs = f.q_shift(), gs = g.q_shift();
    // Strip the shifts by multiplying back q^shift.
    MultiPoly qf = var(Var::Q, fs), qg = var(Var::Q, gs);
    fp = MultiPoly(f * qf);  // now unshifted by normalization
    gp = MultiPoly(g * qg);
    MultiPoly h = exact_divide(fp, gp);
    if (fs >= gs) return h.shifted_down_by_q(fs - gs);
    return h * var(Var::Q, gs - fs);
  }

  if (f.is_zero()) return MultiPoly();

  // Constant divisor: exact integer division of every coefficient.
  bool g_constant = true;
  for (const auto& [e, c] : g.terms())
    if (e != MultiPoly::zero_exponents()) g_constant = false;
  if (g_constant) {
    const BigInt d = g.terms().begin()->second;
    MultiPoly r;
    for (const auto& [e, c] : f.terms()) {
      if (c % d != 0) throw NotDivisibleError("coefficient not divisible");
      r.add_term(e, c / d);
    }
    return r;
  }

  Var pivot = Var::P;
  for (int i = 0; i < kVarCount; ++i) {
    if (g.degree(static_cast<Var>(i)) > 0) {
      pivot = static_cast<Var>(i);
      break;
    }
  }
  const int dg = g.degree(pivot);
  const MultiPoly lead = g.coefficient_of(pivot, dg);

  MultiPoly rem = f;
  MultiPoly quo;
  while (!rem.is_zero()) {
    const int dr = rem.degree(pivot);
    if (dr < dg) throw NotDivisibleError("remainder " + rem.to_string());
    const MultiPoly top = rem.coefficient_of(pivot, dr);
    const MultiPoly piece = exact_divide(top, lead) * var(pivot, dr - dg);
    quo += piece;
    rem -= g * piece;
    if (!rem.is_zero() && rem.degree(pivot) >= dr)
      throw InternalAssertionError("division failed to reduce degree");
  }
  return quo;
}

/// Substitutes v := -1/q exactly, producing a q-shifted value.
inline MultiPoly substitute_neg_inv_q(const MultiPoly& f, Var v) {
  if (v == Var::Q) throw DomainError("substituting q into itself");
  if (f.q_shift() != 0) throw DomainError("value already q-shifted");
  const int dmax = f.degree(v);
  MultiPoly r;
  for (const auto& [e, c] : f.terms()) {
    const int ev = e[static_cast<size_t>(v)];
    Exponents e2 = e;
    e2[static_cast<size_t>(v)] = 0;
    e2[static_cast<size_t>(Var::Q)] += dmax - ev;  // q^{-ev} lifted by q^{dmax}
    r.add_term(e2, (ev % 2 == 0) ? c : BigInt(-c));
  }
  return r.shifted_down_by_q(dmax);
}

}  // namespace permstat
