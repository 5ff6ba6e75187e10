#pragma once

// Reference computations for Wick calculus that avoid the library's
// combinatorial formulas. Polynomials are in three commuting variables
// (phi, v, x) stored as exponent triples.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <map>
#include <vector>

namespace oracle {

using Exp = std::array<int, 3>;
using Poly = std::map<Exp, mpq_class>;

inline void add(Poly& p, const Exp& e, const mpq_class& q) {
  if (q == 0) return;
  auto& slot = p[e];
  slot += q;
  if (slot == 0) p.erase(e);
}

inline Poly mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, qa] : a)
    for (const auto& [eb, qb] : b) add(out, {ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, qa * qb);
  return out;
}

/// Hermite polynomial He_k(phi; v) with variance v:
/// He_0 = 1, He_1 = phi, He_{k+1} = phi He_k - k v He_{k-1}.
inline Poly hermite(int k) {
  Poly prev{{{0, 0, 0}, 1}};
  if (k == 0) return prev;
  Poly cur{{{1, 0, 0}, 1}};
  for (int n = 1; n < k; ++n) {
    Poly next;
    for (const auto& [e, q] : cur) add(next, {e[0] + 1, e[1], e[2]}, q);
    for (const auto& [e, q] : prev) add(next, {e[0], e[1] + 1, e[2]}, -q * n);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Expands p (an ordinary polynomial in phi) in the Hermite basis with
/// variance v by peeling off the leading phi power. Result maps the Hermite
/// degree to its coefficient polynomial in (v, x), carried with phi-exponent 0.
inline std::map<int, Poly> to_hermite_basis(Poly p) {
  std::map<int, Poly> out;
  while (!p.empty()) {
    int top = 0;
    for (const auto& [e, q] : p) top = std::max(top, e[0]);
    Poly lead;
    for (const auto& [e, q] : p)
      if (e[0] == top) add(lead, {0, e[1], e[2]}, q);
    for (const auto& [e, q] : lead) add(out[top], e, q);
    Poly sub = mul(lead, hermite(top));
    for (const auto& [e, q] : sub) add(p, e, -q);
  }
  return out;
}

/// Coefficient of t^k in exp(x t^2) * sum_m t^m phi^m / m!, times k!, built by
/// multiplying truncated power series.
inline Poly generating_coefficient(int k) {
  std::vector<Poly> expo(static_cast<std::size_t>(k + 1)), field(static_cast<std::size_t>(k + 1));
  mpq_class fact = 1;
  for (int n = 0; n <= k; ++n) {
    if (n > 0) fact *= n;
    add(field[static_cast<std::size_t>(n)], {n, 0, 0}, 1 / fact);
  }
  mpq_class jf = 1;
  for (int j = 0; 2 * j <= k; ++j) {
    if (j > 0) jf *= j;
    add(expo[static_cast<std::size_t>(2 * j)], {0, 0, j}, 1 / jf);
  }
  Poly coeff;
  for (int a = 0; a <= k; ++a)
    for (const auto& [e, q] : mul(expo[static_cast<std::size_t>(a)], field[static_cast<std::size_t>(k - a)]))
      add(coeff, e, q * fact);
  return coeff;
}

}  // namespace oracle
