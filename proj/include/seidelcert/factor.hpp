#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace seidelcert {

struct IrreducibleFactor {
  Polynomial factor;  // monic, integer coefficients
  std::size_t multiplicity = 1;
};

struct Factorization {
  std::vector<IrreducibleFactor> factors;
  bool complete = true;  // false if recombination hit its trial budget
};

namespace detail::modp {

// Polynomials over F_p, lowest degree first, no trailing zeros. p < 2^31.
using Coeff = std::uint64_t;
using Poly = std::vector<Coeff>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline Coeff pow(Coeff a, Coeff e, Coeff p) {
  Coeff r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

inline Coeff inv(Coeff a, Coeff p) { return pow(a, p - 2, p); }

inline Poly sub(Poly a, const Poly& b, Coeff p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

inline Poly add(Poly a, const Poly& b, Coeff p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + b[i]) % p;
  trim(a);
  return a;
}

inline Poly mul(const Poly& a, const Poly& b, Coeff p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, Coeff p) {
  if (b.empty()) throw DomainError("division by the zero polynomial mod p");
  if (a.size() < b.size()) return {{}, a};
  Poly rem = a, quo(a.size() - b.size() + 1, 0);
  const Coeff lead_inv = inv(b.back(), p);
  for (std::size_t k = quo.size(); k-- > 0;) {
    Coeff f = rem[k + b.size() - 1] * lead_inv % p;
    quo[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] = (rem[k + j] + p - f * b[j] % p) % p;
  }
  rem.resize(b.size() - 1);
  trim(rem);
  trim(quo);
  return {quo, rem};
}

inline Poly rem(const Poly& a, const Poly& b, Coeff p) { return divmod(a, b, p).second; }

inline Poly monic(Poly a, Coeff p) {
  if (a.empty()) return a;
  Coeff li = inv(a.back(), p);
  for (auto& c : a) c = c * li % p;
  return a;
}

inline Poly gcd(Poly a, Poly b, Coeff p) {
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

/// s, t with s a + t b = 1 for coprime a, b.
inline std::pair<Poly, Poly> bezout(const Poly& a, const Poly& b, Coeff p) {
  Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = sub(s0, mul(q, s1, p), p), t2 = sub(t0, mul(q, t1, p), p);
    s0 = std::move(s1), s1 = std::move(s2);
    t0 = std::move(t1), t1 = std::move(t2);
  }
  if (deg(r0) != 0) throw DomainError("bezout: polynomials are not coprime mod p");
  Coeff c = inv(r0[0], p);
  for (auto& x : s0) x = x * c % p;
  for (auto& x : t0) x = x * c % p;
  return {s0, t0};
}

/// base^e mod m.
inline Poly powmod(Poly base, const Integer& e, const Poly& m, Coeff p) {
  Poly r{1};
  base = rem(base, m, p);
  for (std::size_t bit = mpz_sizeinbase(e.get_mpz_t(), 2); bit-- > 0;) {
    r = rem(mul(r, r, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), bit)) r = rem(mul(r, base, p), m, p);
  }
  return r;
}

inline Poly derivative(const Poly& a, Coeff p) {
  Poly d;
  for (std::size_t k = 1; k < a.size(); ++k) d.push_back(a[k] * (k % p) % p);
  trim(d);
  return d;
}

/// Distinct-degree factorization of a monic square-free f: (product of the degree-d factors, d).
inline std::vector<std::pair<Poly, int>> distinct_degree(Poly f, Coeff p) {
  std::vector<std::pair<Poly, int>> out;
  const Poly x{0, 1};
  Poly h = x;
  for (int d = 1; 2 * d <= deg(f); ++d) {
    h = powmod(h, Integer(static_cast<unsigned long>(p)), f, p);
    Poly g = gcd(f, sub(h, x, p), p);
    if (deg(g) > 0) {
      out.push_back({g, d});
      f = divmod(f, g, p).first;
      h = rem(h, f, p);
    }
  }
  if (deg(f) > 0) out.push_back({f, deg(f)});
  return out;
}

/// Splits a product of degree-d irreducibles (Cantor-Zassenhaus, p odd).
inline void equal_degree(const Poly& g, int d, Coeff p, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (deg(g) == d) {
    out.push_back(g);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<Coeff> coin(0, p - 1);
  while (true) {
    Poly a(static_cast<std::size_t>(deg(g)));
    for (auto& c : a) c = coin(rng);
    trim(a);
    if (deg(a) < 1) continue;
    Poly b = sub(powmod(a, e, g, p), Poly{1}, p);
    Poly c = gcd(g, b, p);
    if (deg(c) > 0 && deg(c) < deg(g)) {
      equal_degree(c, d, p, rng, out);
      equal_degree(divmod(g, c, p).first, d, p, rng, out);
      return;
    }
  }
}

inline std::vector<Poly> factor(const Poly& f, Coeff p) {
  std::mt19937_64 rng(0x5eed);
  std::vector<Poly> out;
  for (auto& [g, d] : distinct_degree(f, p)) equal_degree(g, d, p, rng, out);
  return out;
}

inline bool is_prime(Coeff n) {
  if (n < 2) return false;
  for (Coeff d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace detail::modp

namespace detail {

using IntPoly = std::vector<Integer>;

inline IntPoly to_int_poly(const Polynomial& f) {
  IntPoly out;
  for (const auto& c : f.coefficients()) {
    if (!is_integer(c)) throw DomainError("integer factorization needs integer coefficients");
    out.push_back(c.get_num());
  }
  return out;
}

inline Polynomial from_int_poly(const IntPoly& a) {
  std::vector<Rational> c;
  for (const auto& x : a) c.emplace_back(x);
  return Polynomial(std::move(c));
}

inline modp::Poly reduce(const IntPoly& a, modp::Coeff p) {
  modp::Poly out;
  Integer r;
  for (const auto& c : a) {
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p);
    out.push_back(r.get_ui());
  }
  modp::trim(out);
  return out;
}

inline IntPoly lift(const modp::Poly& a) {
  IntPoly out;
  for (auto c : a) out.emplace_back(static_cast<unsigned long>(c));
  return out;
}

inline IntPoly int_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline void int_trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Coefficients reduced into (-m/2, m/2].
inline IntPoly symmetric_mod(IntPoly a, const Integer& m) {
  const Integer half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  int_trim(a);
  return a;
}

/// Exact division of f by the monic g over Z, if it goes through.
inline bool int_divides(const IntPoly& f, const IntPoly& g, IntPoly* quotient) {
  if (g.size() > f.size()) return false;
  IntPoly rem = f, quo(f.size() - g.size() + 1, Integer(0));
  for (std::size_t k = quo.size(); k-- > 0;) {
    Integer c = rem[k + g.size() - 1];
    quo[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) rem[k + j] -= c * g[j];
  }
  for (std::size_t k = 0; k + 1 < g.size(); ++k)
    if (rem[k] != 0) return false;
  if (quotient) *quotient = std::move(quo);
  return true;
}

/// Lifts f ≡ g h (mod p), g monic and coprime to h, to f ≡ G H (mod p^k); returns G.
inline IntPoly hensel_lift(const IntPoly& f, const modp::Poly& g, const modp::Poly& h, modp::Coeff p,
                           std::size_t k) {
  auto [s, t] = modp::bezout(g, h, p);
  IntPoly big_g = lift(g), big_h = lift(h);
  Integer m = static_cast<unsigned long>(p);
  for (std::size_t j = 1; j < k; ++j) {
    IntPoly e = f;
    IntPoly gh = int_mul(big_g, big_h);
    if (e.size() < gh.size()) e.resize(gh.size(), Integer(0));
    for (std::size_t i = 0; i < gh.size(); ++i) e[i] -= gh[i];
    for (auto& c : e) c /= m;  // exact
    modp::Poly c = reduce(e, p);
    auto [q, tau] = modp::divmod(modp::mul(t, c, p), g, p);
    modp::Poly sigma = modp::add(modp::mul(s, c, p), modp::mul(q, h, p), p);
    IntPoly dt = lift(tau), ds = lift(sigma);
    if (big_g.size() < dt.size()) big_g.resize(dt.size(), Integer(0));
    if (big_h.size() < ds.size()) big_h.resize(ds.size(), Integer(0));
    for (std::size_t i = 0; i < dt.size(); ++i) big_g[i] += m * dt[i];
    for (std::size_t i = 0; i < ds.size(); ++i) big_h[i] += m * ds[i];
    m *= static_cast<unsigned long>(p);
  }
  return big_g;
}

inline constexpr std::size_t kRecombinationBudget = 200000;

/// Irreducible factors of a monic, square-free integer polynomial of degree >= 2
/// (Zassenhaus: modular factorization, Hensel lifting, recombination).
inline std::vector<IntPoly> zassenhaus(const IntPoly& f, bool& complete) {
  const int n = static_cast<int>(f.size()) - 1;
  // Among a few primes keeping f square-free, take the one with fewest modular factors.
  modp::Coeff best_p = 0;
  std::vector<modp::Poly> best;
  int good = 0;
  for (modp::Coeff p = 1009; good < 5; p += 2) {
    if (!modp::is_prime(p)) continue;
    modp::Poly fp = reduce(f, p);
    if (modp::deg(fp) != n || modp::deg(modp::gcd(fp, modp::derivative(fp, p), p)) != 0) continue;
    ++good;
    auto fs = modp::factor(fp, p);
    if (best_p == 0 || fs.size() < best.size()) best_p = p, best = std::move(fs);
  }
  if (best.size() == 1) return {f};

  // Any monic factor has coefficients at most 2^n * ||f||_2.
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer bound;
  mpz_sqrt(bound.get_mpz_t(), norm2.get_mpz_t());
  bound = (bound + 1) << n;
  std::size_t k = 1;
  Integer m = static_cast<unsigned long>(best_p);
  while (m <= 2 * bound) m *= static_cast<unsigned long>(best_p), ++k;

  const modp::Poly fp = reduce(f, best_p);
  std::vector<IntPoly> lifted;
  for (const auto& g : best) {
    modp::Poly h = modp::divmod(fp, g, best_p).first;
    lifted.push_back(symmetric_mod(hensel_lift(f, g, h, best_p, k), m));
  }

  std::vector<IntPoly> out;
  IntPoly rest = f;
  std::vector<std::size_t> live(lifted.size());
  for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;
  std::size_t trials = 0;
  for (std::size_t size = 1; 2 * size <= live.size();) {
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    bool found = false;
    while (true) {
      if (++trials > kRecombinationBudget) {
        complete = false;
        out.push_back(rest);
        return out;
      }
      IntPoly g{Integer(1)};
      for (std::size_t i : pick) g = symmetric_mod(int_mul(g, lifted[live[i]]), m);
      IntPoly q;
      if (int_divides(rest, g, &q)) {
        out.push_back(g);
        rest = std::move(q);
        for (std::size_t i = size; i-- > 0;) live.erase(live.begin() + static_cast<std::ptrdiff_t>(pick[i]));
        found = true;
        break;
      }
      // Next combination in lexicographic order.
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == live.size() - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!found) ++size;
  }
  if (rest.size() > 1) out.push_back(rest);
  return out;
}

inline bool factor_before(const IrreducibleFactor& a, const IrreducibleFactor& b) {
  if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
  const auto& ca = a.factor.coefficients();
  const auto& cb = b.factor.coefficients();
  if (a.factor.degree() == 1) return -ca[0] < -cb[0];  // linear factors by root
  return std::lexicographical_compare(ca.rbegin(), ca.rend(), cb.rbegin(), cb.rend());
}

}  // namespace detail

/// Complete factorization over Z of a monic integer polynomial into irreducible monic factors.
/// Linear factors come first, ordered by root; the rest by degree.
inline Factorization factor_over_integers(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("cannot factor the zero polynomial");
  if (!p.is_monic()) throw DomainError("integer factorization expects a monic polynomial");
  detail::to_int_poly(p);
  Factorization out;
  auto parts = square_free_decomposition(p);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Polynomial& f = parts[i];
    if (f.degree() <= 0) continue;
    if (f.degree() == 1) {
      out.factors.push_back({f, i + 1});
      continue;
    }
    for (const auto& g : detail::zassenhaus(detail::to_int_poly(f), out.complete))
      out.factors.push_back({detail::from_int_poly(g), i + 1});
  }
  std::sort(out.factors.begin(), out.factors.end(), detail::factor_before);
  return out;
}

inline std::string to_string(const Factorization& f) {
  if (f.factors.empty()) return "1";
  std::string out;
  for (const auto& [g, m] : f.factors) {
    if (!out.empty()) out += " * ";
    out += g.degree() == 1 && g.coefficient(0) == 0 ? "x" : "(" + to_string(g) + ")";
    if (m > 1) out += "^" + std::to_string(m);
  }
  if (!f.complete) out += "  [last factor not fully split]";
  return out;
}

}  // namespace seidelcert
