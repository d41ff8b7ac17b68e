#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace seidelcert {

/// Univariate polynomial with rational coefficients, stored lowest degree first.
/// The zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

  static Polynomial constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }
  static Polynomial x() { return Polynomial(std::vector<Rational>{0, 1}); }
  /// The monic linear factor x - r.
  static Polynomial linear_root(const Rational& r) { return Polynomial(std::vector<Rational>{-r, 1}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coefficients() const { return c_; }

  Rational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const Rational& leading() const {
    if (c_.empty()) throw DomainError("zero polynomial has no leading coefficient");
    return c_.back();
  }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

  int sign_at(const Rational& x) const { return sign((*this)(x)); }

  Polynomial derivative() const {
    std::vector<Rational> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<unsigned long>(k));
    return Polynomial(std::move(d));
  }

  Polynomial monic() const {
    if (c_.empty()) return *this;
    Polynomial p = *this;
    Rational lead = c_.back();
    for (auto& a : p.c_) a /= lead;
    return p;
  }

  /// p(x + q).
  Polynomial taylor_shift(const Rational& q) const {
    std::vector<Rational> a = c_;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t k = n - 1; k-- > i;) a[k] += q * a[k + 1];
    return Polynomial(std::move(a));
  }

  /// p(a x + b).
  Polynomial compose_linear(const Rational& a, const Rational& b) const {
    Polynomial p = taylor_shift(b);
    Rational power = 1;
    for (auto& c : p.c_) {
      c *= power;
      power *= a;
    }
    p.trim();
    return p;
  }

  /// p(-x).
  Polynomial reflect() const {
    Polynomial p = *this;
    for (std::size_t k = 1; k < p.c_.size(); k += 2) p.c_[k] = -p.c_[k];
    return p;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Rational& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& a : c_) a *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Euclidean division; returns (quotient, remainder).
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial{}, a};
    std::vector<Rational> rem = a.c_;
    std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1, Rational(0));
    const Rational& lead = b.c_.back();
    for (std::size_t k = quo.size(); k-- > 0;) {
      Rational f = rem[k + b.c_.size() - 1] / lead;
      quo[k] = f;
      if (f == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= f * b.c_[j];
    }
    rem.resize(b.c_.size() - 1);
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
  }

  friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }
  friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }

  Polynomial pow(std::size_t e) const {
    Polynomial r = constant(1), base = *this;
    while (e) {
      if (e & 1) r = r * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
inline Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

/// p / gcd(p, p'): same distinct roots, each simple.
inline Polynomial square_free_part(const Polynomial& p) {
  if (p.degree() <= 0) return p.monic();
  return (p / gcd(p, p.derivative())).monic();
}

/// Yun's decomposition p = lead * prod f_i^i with f_i monic, square-free and pairwise coprime.
/// Entry k of the result is f_{k+1} (possibly the constant 1).
inline std::vector<Polynomial> square_free_decomposition(const Polynomial& p) {
  std::vector<Polynomial> out;
  if (p.degree() <= 0) return out;
  Polynomial a = p.monic();
  Polynomial b = a.derivative();
  Polynomial c = gcd(a, b);
  Polynomial w = a / c;
  Polynomial y = b / c;
  Polynomial z = y - w.derivative();
  while (w.degree() > 0) {
    Polynomial g = gcd(w, z);
    out.push_back(g);
    w = w / g;
    y = z / g;
    z = y - w.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

/// Multiplicity of `q` as a root of `p` (0 when not a root).
inline std::size_t root_multiplicity(const Polynomial& p, const Rational& q) {
  if (p.is_zero()) throw DomainError("multiplicity in the zero polynomial");
  std::size_t m = 0;
  Polynomial cur = p;
  const Polynomial lin = Polynomial::linear_root(q);
  while (cur.degree() > 0 && cur(q) == 0) {
    cur = cur / lin;
    ++m;
  }
  return m;
}

/// Sturm chain p, p', -rem(...), ... of the square-free part of a polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& p) {
    if (p.is_zero()) throw DomainError("Sturm sequence of the zero polynomial");
    Polynomial a = square_free_part(p);
    seq_.push_back(a);
    if (a.degree() <= 0) return;
    Polynomial b = a.derivative();
    while (!b.is_zero()) {
      seq_.push_back(b);
      Polynomial r = -(seq_[seq_.size() - 2] % b);
      b = std::move(r);
    }
  }

  /// Number of distinct roots in (lo, hi]; an empty bound means infinity.
  std::size_t count(const std::optional<Rational>& lo, const std::optional<Rational>& hi) const {
    int vlo = lo ? variations_at(*lo) : variations_at_infinity(-1);
    int vhi = hi ? variations_at(*hi) : variations_at_infinity(+1);
    return vlo > vhi ? static_cast<std::size_t>(vlo - vhi) : 0;
  }

  const Polynomial& square_free() const { return seq_.front(); }

 private:
  static int variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  }
  int variations_at(const Rational& x) const {
    std::vector<int> s;
    s.reserve(seq_.size());
    for (const auto& p : seq_) s.push_back(p.sign_at(x));
    return variations(s);
  }
  int variations_at_infinity(int direction) const {
    std::vector<int> s;
    s.reserve(seq_.size());
    for (const auto& p : seq_) {
      int sg = sign(p.leading());
      if (direction < 0 && p.degree() % 2 == 1) sg = -sg;
      s.push_back(sg);
    }
    return variations(s);
  }

  std::vector<Polynomial> seq_;
};

/// Number of distinct real roots in (lo, hi].
inline std::size_t count_distinct_roots(const Polynomial& p, const std::optional<Rational>& lo,
                                        const std::optional<Rational>& hi) {
  return SturmSequence(p).count(lo, hi);
}

/// Number of real roots in (lo, hi], counted with multiplicity.
inline std::size_t count_roots(const Polynomial& p, const std::optional<Rational>& lo,
                               const std::optional<Rational>& hi) {
  auto parts = square_free_decomposition(p);
  std::size_t total = 0;
  for (std::size_t k = 0; k < parts.size(); ++k)
    if (parts[k].degree() > 0) total += (k + 1) * count_distinct_roots(parts[k], lo, hi);
  return total;
}

/// Sign criterion for a real-rooted polynomial: every root is >= 0 iff the
/// coefficients weakly alternate in sign. Only meaningful when all roots are real.
inline bool real_rooted_all_nonnegative(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("sign criterion on the zero polynomial");
  const int d = p.degree();
  const int lead = sign(p.leading());
  for (int k = 0; k <= d; ++k) {
    int s = sign(p.coefficient(static_cast<std::size_t>(k)));
    if (s == 0) continue;
    int expected = ((d - k) % 2 == 0) ? lead : -lead;
    if (s != expected) return false;
  }
  return true;
}

/// Strict upper bound on the absolute value of every complex root.
inline Rational cauchy_bound(const Polynomial& p) {
  if (p.degree() < 1) return Rational(1);
  Rational best = 0;
  for (int k = 0; k < p.degree(); ++k) {
    Rational r = p.coefficient(static_cast<std::size_t>(k)) / p.leading();
    if (r < 0) r = -r;
    if (r > best) best = r;
  }
  return best + 1;
}

/// Disjoint open intervals (a, b), in increasing order, each holding exactly one
/// distinct real root of p; no endpoint is a root.
inline std::vector<std::pair<Rational, Rational>> isolate_real_roots(const Polynomial& p) {
  std::vector<std::pair<Rational, Rational>> out;
  if (p.degree() < 1) return out;
  SturmSequence sturm(p);
  const Polynomial& sf = sturm.square_free();
  Rational bound = cauchy_bound(sf);
  std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    std::size_t n = sturm.count(a, b);
    if (n == 0) continue;
    if (n == 1) {
      out.emplace_back(a, b);
      continue;
    }
    Rational m = (a + b) / 2;
    while (sf(m) == 0) m = (m + b) / 2;
    stack.emplace_back(m, b);
    stack.emplace_back(a, m);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

/// Shrinks an isolating interval (a, b) of a square-free polynomial by bisection
/// until its width is at most `width`. The root lies in the returned closed
/// interval; a midpoint that hits the root exactly comes back as (m, m).
inline std::pair<Rational, Rational> refine_root_interval(const Polynomial& square_free, Rational a, Rational b,
                                                          const Rational& width) {
  while (b - a > width) {
    Rational m = (a + b) / 2;
    int sm = square_free.sign_at(m);
    if (sm == 0) return {m, m};
    if (square_free.sign_at(a) != sm)
      b = m;
    else
      a = m;
  }
  return {a, b};
}

/// Integer roots of p, in increasing order, without multiplicity.
inline std::vector<Integer> integer_roots(const Polynomial& p) {
  std::vector<Integer> roots;
  if (p.degree() < 1) return roots;
  Polynomial sf = square_free_part(p);
  for (auto [a, b] : isolate_real_roots(sf)) {
    auto [lo, hi] = refine_root_interval(sf, a, b, Rational(1, 2));
    Integer k, last;
    mpz_cdiv_q(k.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    mpz_fdiv_q(last.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
    for (; k <= last; ++k)
      if (sf(Rational(k)) == 0) roots.push_back(k);
  }
  return roots;
}

inline std::string to_string(const Polynomial& p, const std::string& var = "x") {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coefficient(static_cast<std::size_t>(k));
    if (c == 0) continue;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    bool unit = c == 1;
    if (!unit || k == 0) os << to_string(c);
    if (k > 0) {
      if (!unit) os << '*';
      os << var;
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

}  // namespace seidelcert
