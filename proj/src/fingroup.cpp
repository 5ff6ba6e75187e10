#include "covlab/fingroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <regex>

namespace covlab::fingroup {

Perm compose(const Perm& p, const Perm& q) {
  Perm r(q.size());
  for (std::size_t x = 0; x < q.size(); ++x) r[x] = p[static_cast<std::size_t>(q[x])];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[static_cast<std::size_t>(p[x])] = static_cast<int>(x);
  return r;
}

Perm identity_perm(int n) {
  Perm p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  return p;
}

Perm GroupTable::ad(Elem a) const {
  Perm p(static_cast<std::size_t>(n_));
  for (int x = 0; x < n_; ++x) p[static_cast<std::size_t>(x)] = conj(a, x);
  return p;
}

int GroupTable::element_order(Elem a) const {
  int k = 1;
  for (Elem x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

bool GroupTable::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<std::vector<int>> GroupTable::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) out[static_cast<std::size_t>(a)].push_back(mul(a, b));
  return out;
}

GroupTable make_group(const std::vector<std::vector<int>>& input, std::string name) {
  const int n = static_cast<int>(input.size());
  if (n == 0) throw Error(ErrorKind::IndexOutOfRange, "empty table");
  for (int a = 0; a < n; ++a) {
    const auto& row = input[static_cast<std::size_t>(a)];
    if (static_cast<int>(row.size()) != n)
      throw Error(ErrorKind::IndexOutOfRange, "table is not square at row " + std::to_string(a), {a});
    for (int b = 0; b < n; ++b) {
      int v = row[static_cast<std::size_t>(b)];
      if (v < 0 || v >= n)
        throw Error(ErrorKind::IndexOutOfRange, "entry out of range at (" + std::to_string(a) + "," +
                                                    std::to_string(b) + ")", {a, b});
    }
  }
  auto at = [&](int a, int b) { return input[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };

  int e = -1;
  for (int c = 0; c < n && e < 0; ++c) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = at(c, x) == x && at(x, c) == x;
    if (ok) e = c;
  }
  if (e < 0) throw Error(ErrorKind::NoIdentity, "no two-sided identity element");

  // Relabel so the identity is element 0 (swap labels e and 0).
  std::vector<int> relabel = identity_perm(n);
  std::swap(relabel[0], relabel[static_cast<std::size_t>(e)]);

  GroupTable g;
  g.n_ = n;
  g.name_ = std::move(name);
  g.table_.assign(static_cast<std::size_t>(n * n), 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      g.table_[static_cast<std::size_t>(relabel[static_cast<std::size_t>(a)] * n +
                                        relabel[static_cast<std::size_t>(b)])] =
          relabel[static_cast<std::size_t>(at(a, b))];

  g.inv_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (g.mul(a, b) == 0 && g.mul(b, a) == 0) {
        g.inv_[static_cast<std::size_t>(a)] = b;
        break;
      }
    }
    if (g.inv_[static_cast<std::size_t>(a)] < 0) {
      int original = relabel[static_cast<std::size_t>(a)];  // relabel is an involution
      throw Error(ErrorKind::NotInvertible, "element has no two-sided inverse", {original});
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
          auto orig = [&](int x) { return relabel[static_cast<std::size_t>(x)]; };
          throw Error(ErrorKind::NotAssociative, "(xy)z != x(yz)", {orig(a), orig(b), orig(c)});
        }
  return g;
}

Verdict check_hom(const GroupHom& h) {
  const int n = h.source.order();
  if (static_cast<int>(h.map.size()) != n) return Verdict::fail("map size differs from source order");
  for (int x : h.map)
    if (x < 0 || x >= h.target.order()) return Verdict::fail("image out of range");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (h.map[static_cast<std::size_t>(h.source.mul(x, y))] !=
          h.target.mul(h.map[static_cast<std::size_t>(x)], h.map[static_cast<std::size_t>(y)]))
        return Verdict::fail("f(xy) != f(x)f(y)", {x, y});
  return Verdict::pass();
}

std::optional<int> AutGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(perms.begin(), perms.end(), p);
  if (it == perms.end() || *it != p) return std::nullopt;
  return static_cast<int>(it - perms.begin());
}

std::vector<Elem> closure(const GroupTable& g, const std::vector<Elem>& gens) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  std::deque<Elem> queue{0};
  in[0] = 1;
  while (!queue.empty()) {
    Elem x = queue.front();
    queue.pop_front();
    for (Elem s : gens) {
      Elem y = g.mul(x, s);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = 1;
        queue.push_back(y);
      }
    }
  }
  std::vector<Elem> out;
  for (int x = 0; x < g.order(); ++x)
    if (in[static_cast<std::size_t>(x)]) out.push_back(x);
  return out;
}

std::vector<Elem> generators(const GroupTable& g) {
  std::vector<Elem> gens;
  std::vector<Elem> current{0};
  for (Elem x = 1; x < g.order(); ++x) {
    if (std::binary_search(current.begin(), current.end(), x)) continue;
    gens.push_back(x);
    current = closure(g, gens);
  }
  return gens;
}

namespace {

// Extends generator images to the whole group by BFS over words, checking
// well-definedness and the hom law. Returns the image list or nullopt.
std::optional<std::vector<Elem>> extend_from_generators(const GroupTable& src, const GroupTable& tgt,
                                                        const std::vector<Elem>& gens,
                                                        const std::vector<Elem>& images) {
  std::vector<Elem> f(static_cast<std::size_t>(src.order()), -1);
  f[0] = 0;
  std::deque<Elem> queue{0};
  while (!queue.empty()) {
    Elem x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Elem y = src.mul(x, gens[i]);
      Elem fy = tgt.mul(f[static_cast<std::size_t>(x)], images[i]);
      if (f[static_cast<std::size_t>(y)] < 0) {
        f[static_cast<std::size_t>(y)] = fy;
        queue.push_back(y);
      } else if (f[static_cast<std::size_t>(y)] != fy) {
        return std::nullopt;
      }
    }
  }
  for (Elem v : f)
    if (v < 0) return std::nullopt;
  for (int a = 0; a < src.order(); ++a)
    for (int b = 0; b < src.order(); ++b)
      if (f[static_cast<std::size_t>(src.mul(a, b))] !=
          tgt.mul(f[static_cast<std::size_t>(a)], f[static_cast<std::size_t>(b)]))
        return std::nullopt;
  return f;
}

// Backtracks over generator images, filtering by element order divisibility.
void enumerate_generator_images(const GroupTable& src, const GroupTable& tgt, const std::vector<Elem>& gens,
                                bool bijective,
                                const std::function<bool(const std::vector<Elem>&)>& visit) {
  std::vector<Elem> images(gens.size(), 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == gens.size()) {
      auto f = extend_from_generators(src, tgt, gens, images);
      if (!f) return true;
      if (bijective) {
        std::vector<Elem> sorted = *f;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return true;
        if (src.order() != tgt.order()) return true;
      }
      return visit(*f);
    }
    int ord = src.element_order(gens[i]);
    for (Elem y = 0; y < tgt.order(); ++y) {
      int oy = tgt.element_order(y);
      if (bijective ? oy != ord : ord % oy != 0) continue;
      images[i] = y;
      if (!rec(i + 1)) return false;
    }
    return true;
  };
  rec(0);
}

}  // namespace

void for_each_hom(const GroupTable& source, const GroupTable& target,
                  const std::function<bool(const std::vector<Elem>&)>& visit) {
  enumerate_generator_images(source, target, generators(source), false, visit);
}

std::optional<std::vector<Elem>> find_isomorphism(const GroupTable& a, const GroupTable& b) {
  if (a.order() != b.order()) return std::nullopt;
  std::optional<std::vector<Elem>> found;
  enumerate_generator_images(a, b, generators(a), true, [&](const std::vector<Elem>& f) {
    found = f;
    return false;
  });
  return found;
}

AutGroup compute_aut(const GroupTable& g, const Limits& limits) {
  if (g.order() > limits.aut_cap)
    throw Error(ErrorKind::CapExceeded, "group order " + std::to_string(g.order()) +
                                            " exceeds automorphism cap " + std::to_string(limits.aut_cap));
  AutGroup out;
  enumerate_generator_images(g, g, generators(g), true, [&](const std::vector<Elem>& f) {
    out.perms.push_back(f);
    return true;
  });
  std::sort(out.perms.begin(), out.perms.end());
  const int m = static_cast<int>(out.perms.size());
  std::vector<std::vector<int>> table(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          *out.index_of(compose(out.perms[static_cast<std::size_t>(i)], out.perms[static_cast<std::size_t>(j)]));
  out.group = make_group(table, "Aut(" + g.name() + ")");
  return out;
}

std::vector<Elem> centre(const GroupTable& g) {
  std::vector<Elem> z;
  for (Elem a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Elem x = 0; x < g.order() && central; ++x) central = g.mul(a, x) == g.mul(x, a);
    if (central) z.push_back(a);
  }
  return z;
}

bool is_subgroup(const GroupTable& g, const std::vector<Elem>& subset) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (Elem x : subset) {
    if (x < 0 || x >= g.order()) return false;
    in[static_cast<std::size_t>(x)] = 1;
  }
  if (!in[0]) return false;
  for (Elem a : subset) {
    if (!in[static_cast<std::size_t>(g.inv(a))]) return false;
    for (Elem b : subset)
      if (!in[static_cast<std::size_t>(g.mul(a, b))]) return false;
  }
  return true;
}

bool is_normal(const GroupTable& g, const std::vector<Elem>& subset) {
  if (!is_subgroup(g, subset)) return false;
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (Elem x : subset) in[static_cast<std::size_t>(x)] = 1;
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem x : subset)
      if (!in[static_cast<std::size_t>(g.conj(a, x))]) return false;
  return true;
}

Subgroup subgroup(const GroupTable& g, const std::vector<Elem>& elements) {
  if (!is_subgroup(g, elements))
    throw Error(ErrorKind::PreconditionFailed, "element list is not a subgroup");
  std::vector<Elem> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  std::map<Elem, int> index;
  for (std::size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> table(sorted.size(), std::vector<int>(sorted.size()));
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = 0; j < sorted.size(); ++j) table[i][j] = index.at(g.mul(sorted[i], sorted[j]));
  return {make_group(table), sorted};
}

Quotient quotient(const GroupTable& g, const std::vector<Elem>& normal) {
  if (!is_normal(g, normal)) throw Error(ErrorKind::PreconditionFailed, "subgroup is not normal");
  const int n = g.order();
  std::vector<Elem> coset_rep(static_cast<std::size_t>(n), -1);
  for (Elem x = 0; x < n; ++x) {
    Elem least = x;
    for (Elem k : normal) least = std::min(least, g.mul(x, k));
    coset_rep[static_cast<std::size_t>(x)] = least;
  }
  std::vector<Elem> reps = coset_rep;
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  std::map<Elem, int> index;
  for (std::size_t i = 0; i < reps.size(); ++i) index[reps[i]] = static_cast<int>(i);
  Quotient q;
  q.projection.resize(static_cast<std::size_t>(n));
  for (Elem x = 0; x < n; ++x) q.projection[static_cast<std::size_t>(x)] = index.at(coset_rep[static_cast<std::size_t>(x)]);
  std::vector<std::vector<int>> table(reps.size(), std::vector<int>(reps.size()));
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j)
      table[i][j] = q.projection[static_cast<std::size_t>(g.mul(reps[i], reps[j]))];
  q.group = make_group(table);
  return q;
}

std::vector<Elem> kernel(const GroupHom& h) {
  std::vector<Elem> k;
  for (Elem x = 0; x < h.source.order(); ++x)
    if (h.map[static_cast<std::size_t>(x)] == 0) k.push_back(x);
  return k;
}

std::vector<Elem> image(const GroupHom& h) {
  std::vector<Elem> im(h.map.begin(), h.map.end());
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  return im;
}

GroupTable cyclic(int n) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  return make_group(t, "Z" + std::to_string(n));
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
  const int m = g.order(), n = h.order();
  std::vector<std::vector<int>> t(static_cast<std::size_t>(m * n), std::vector<int>(static_cast<std::size_t>(m * n)));
  for (int a = 0; a < m * n; ++a)
    for (int b = 0; b < m * n; ++b)
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = g.mul(a / n, b / n) * n + h.mul(a % n, b % n);
  return make_group(t, g.name() + "x" + h.name());
}

GroupTable klein_four() {
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = a ^ b;
  return make_group(t, "Z2xZ2");
}

GroupTable symmetric3() {
  std::vector<Perm> perms;
  Perm p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      Perm c = compose(perms[a], perms[b]);
      t[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return make_group(t, "S3");
}

GroupTable quaternion8() {
  // Unit quaternions as (sign, unit) with unit in {1,i,j,k}; index = 2*unit + (sign<0).
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int unit_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ua = a / 2, ub = b / 2;
      int sign = (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1) * unit_sign[ua][ub];
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 2 * unit_mul[ua][ub] + (sign < 0 ? 1 : 0);
    }
  return make_group(t, "Q8");
}

GroupTable dihedral(int n) {
  // (k, s) -> r^k s^s, index k + n*s.
  std::vector<std::vector<int>> t(static_cast<std::size_t>(2 * n), std::vector<int>(static_cast<std::size_t>(2 * n)));
  for (int a = 0; a < 2 * n; ++a)
    for (int b = 0; b < 2 * n; ++b) {
      int ka = a % n, sa = a / n, kb = b % n, sb = b / n;
      int k = ((sa ? ka - kb : ka + kb) % n + n) % n;
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = k + n * (sa ^ sb);
    }
  return make_group(t, "D" + std::to_string(n));
}

std::optional<GroupTable> named_group(const std::string& name) {
  static const std::regex cyc_re(R"(Z(\d+))"), prod_re(R"(Z(\d+)xZ(\d+))"), dih_re(R"(D(\d+))");
  std::smatch m;
  if (name == "S3") return symmetric3();
  if (name == "Q8") return quaternion8();
  if (name == "Z2xZ2") return klein_four();
  if (std::regex_match(name, m, cyc_re)) {
    int n = std::stoi(m[1]);
    if (n < 1 || n > 4096) return std::nullopt;
    return cyclic(n);
  }
  if (std::regex_match(name, m, prod_re)) {
    int a = std::stoi(m[1]), b = std::stoi(m[2]);
    if (a < 1 || b < 1 || a * b > 4096) return std::nullopt;
    auto g = direct_product(cyclic(a), cyclic(b));
    g.set_name(name);
    return g;
  }
  if (std::regex_match(name, m, dih_re)) {
    int n = std::stoi(m[1]);
    if (n < 1 || n > 2048) return std::nullopt;
    return dihedral(n);
  }
  return std::nullopt;
}

std::optional<std::string> identify_group(const GroupTable& g) {
  const int n = g.order();
  if (n > 32) return std::nullopt;
  // Elementary abelian 2-groups beyond rank 2 have no table constructor.
  if (n >= 8 && (n & (n - 1)) == 0) {
    bool involutions = true;
    for (Elem x = 0; x < n; ++x) involutions = involutions && g.mul(x, x) == 0;
    if (involutions) {
      std::string name = "Z2";
      for (int m = n; m > 2; m /= 2) name += "xZ2";
      return name;
    }
  }
  std::vector<std::string> candidates{"Z" + std::to_string(n)};
  for (int a = 2; a * a <= n; ++a)
    if (n % a == 0 && (n / a) % a == 0) candidates.push_back(a == 2 && n == 4 ? "Z2xZ2" : "Z" + std::to_string(a) + "xZ" + std::to_string(n / a));
  if (n == 6) candidates.push_back("S3");
  if (n == 8) candidates.push_back("Q8");
  if (n % 2 == 0 && n / 2 >= 4) candidates.push_back("D" + std::to_string(n / 2));
  for (const auto& name : candidates) {
    auto h = named_group(name);
    if (h && find_isomorphism(g, *h)) return name;
  }
  return std::nullopt;
}

}  // namespace covlab::fingroup
