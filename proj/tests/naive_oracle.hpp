#pragma once

// Brute-force reference computations on raw multiplication tables. Nothing
// here calls into the library, so the results can be compared against it.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

namespace naive {

using Table = std::vector<std::vector<int>>;
using Map = std::vector<int>;

inline Table cyclic_table(int n) {
  Table t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

inline int inverse(const Table& t, int a) {
  for (int b = 0; b < static_cast<int>(t.size()); ++b)
    if (t[a][b] == 0) return b;
  return -1;
}

inline std::vector<Map> automorphisms(const Table& t) {
  const int n = static_cast<int>(t.size());
  Map p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Map> out;
  do {
    bool ok = p[0] == 0;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) ok = p[t[a][b]] == t[p[a]][p[b]];
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

struct Cocycle {
  std::vector<int> xi;  // xi[g1 * n + g]
  std::vector<Map> phi;
};

inline bool is_cocycle(const Table& G, const Table& A, const Cocycle& c) {
  const int n = static_cast<int>(G.size()), m = static_cast<int>(A.size());
  auto xi = [&](int g1, int g) { return c.xi[static_cast<std::size_t>(g1 * n + g)]; };
  for (int g1 = 0; g1 < n; ++g1)
    for (int g = 0; g < n; ++g) {
      int g12 = G[g1][g];
      int x = xi(g1, g), xinv = inverse(A, x);
      for (int a = 0; a < m; ++a) {
        // phi(g1) phi(g) phi(g1 g)^-1 (a) == x a x^-1
        int pre = -1;
        for (int b = 0; b < m; ++b)
          if (c.phi[g12][b] == a) pre = b;
        if (c.phi[g1][c.phi[g][pre]] != A[A[x][a]][xinv]) return false;
      }
    }
  for (int g2 = 0; g2 < n; ++g2)
    for (int g1 = 0; g1 < n; ++g1)
      for (int g = 0; g < n; ++g)
        if (A[xi(g2, g1)][xi(G[g2][g1], g)] != A[c.phi[g2][xi(g1, g)]][xi(g2, G[g1][g])]) return false;
  return true;
}

/// All normalized cocycles, generated by plain nested enumeration.
inline std::vector<Cocycle> normalized_cocycles(const Table& G, const Table& A) {
  const int n = static_cast<int>(G.size()), m = static_cast<int>(A.size());
  const auto auts = automorphisms(A);
  std::vector<Cocycle> out;
  std::vector<int> phi_idx(static_cast<std::size_t>(n), 0);
  const int free_xi = (n - 1) * (n - 1);
  while (true) {
    std::vector<int> code(static_cast<std::size_t>(free_xi), 0);
    while (true) {
      Cocycle c;
      c.xi.assign(static_cast<std::size_t>(n * n), 0);
      for (int k = 0; k < free_xi; ++k) c.xi[static_cast<std::size_t>((k / (n - 1) + 1) * n + k % (n - 1) + 1)] = code[k];
      for (int g = 0; g < n; ++g) c.phi.push_back(auts[phi_idx[g]]);
      if (is_cocycle(G, A, c)) out.push_back(c);
      int k = 0;
      while (k < free_xi && ++code[k] == m) code[k++] = 0;
      if (k == free_xi) break;
    }
    int g = 1;
    while (g < n && ++phi_idx[g] == static_cast<int>(auts.size())) phi_idx[g++] = 0;
    if (g >= n) break;
  }
  return out;
}

/// Product table of the extension on pairs a * |G| + g.
inline Table extension_table(const Table& G, const Table& A, const Cocycle& c) {
  const int n = static_cast<int>(G.size()), m = static_cast<int>(A.size());
  Table E(static_cast<std::size_t>(n * m), std::vector<int>(static_cast<std::size_t>(n * m)));
  for (int x = 0; x < n * m; ++x)
    for (int y = 0; y < n * m; ++y) {
      int a1 = x / n, g1 = x % n, a = y / n, g = y % n;
      E[x][y] = A[A[a1][c.phi[g1][a]]][c.xi[static_cast<std::size_t>(g1 * n + g)]] * n + G[g1][g];
    }
  return E;
}

/// Whether some bijection E1 -> E2 fixing A-pairs (a,1) and preserving the
/// G-coordinate is a homomorphism. Tries every assignment of images for (1,g).
inline bool extensions_equivalent(const Table& E1, const Table& E2, int n, int m) {
  std::vector<int> shift(static_cast<std::size_t>(n), 0);
  while (true) {
    bool ok = true;
    // f(a, g) = (a, 1) * (shift(g), g) computed in E2.
    std::vector<int> map(static_cast<std::size_t>(n * m));
    for (int x = 0; x < n * m; ++x) map[x] = E2[(x / n) * n][shift[x % n] * n + x % n];
    for (int x = 0; x < n * m && ok; ++x)
      for (int y = 0; y < n * m && ok; ++y) ok = map[E1[x][y]] == E2[map[x]][map[y]];
    if (ok) return true;
    int g = 1;
    while (g < n && ++shift[g] == m) shift[g++] = 0;
    if (g >= n) return false;
  }
}

/// Number of extension-equivalence classes among the extensions built from
/// every normalized cocycle.
inline int extension_class_count(const Table& G, const Table& A) {
  const int n = static_cast<int>(G.size()), m = static_cast<int>(A.size());
  const auto cocycles = normalized_cocycles(G, A);
  std::vector<Table> reps;
  for (const auto& c : cocycles) {
    Table E = extension_table(G, A, c);
    bool found = false;
    for (const auto& r : reps)
      if (extensions_equivalent(E, r, n, m)) {
        found = true;
        break;
      }
    if (!found) reps.push_back(E);
  }
  return static_cast<int>(reps.size());
}

}  // namespace naive
