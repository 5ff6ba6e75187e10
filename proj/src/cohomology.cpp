#include "covlab/cohomology.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace covlab::cohomology {

using fingroup::Perm;

std::shared_ptr<const Coefficients> make_coefficients(const GroupTable& a, const Limits& limits) {
  return std::make_shared<const Coefficients>(Coefficients{a, fingroup::compute_aut(a, limits)});
}

bool Cochain2::is_normalized() const {
  if (phi.empty() || phi[0] != 0) return false;
  for (Elem g = 0; g < G.order(); ++g)
    if (xi_at(g, 0) != 0 || xi_at(0, g) != 0) return false;
  return true;
}

Cochain2 trivial_cochain(const GroupTable& g, std::shared_ptr<const Coefficients> a) {
  Cochain2 c{g, std::move(a), {}, {}};
  c.xi.assign(static_cast<std::size_t>(g.order() * g.order()), 0);
  c.phi.assign(static_cast<std::size_t>(g.order()), 0);
  return c;
}

bool lex_less(const Cochain2& a, const Cochain2& b) {
  if (a.xi != b.xi) return a.xi < b.xi;
  return a.phi < b.phi;
}

namespace {

bool well_formed(const Cochain2& c, std::string& why) {
  const int n = c.G.order(), m = c.coeff().order();
  if (c.xi.size() != static_cast<std::size_t>(n * n)) return why = "xi table has wrong size", false;
  if (c.phi.size() != static_cast<std::size_t>(n)) return why = "phi has wrong size", false;
  for (Elem x : c.xi)
    if (x < 0 || x >= m) return why = "xi value out of range", false;
  for (int p : c.phi)
    if (p < 0 || p >= static_cast<int>(c.A->aut.perms.size())) return why = "phi index out of range", false;
  return true;
}

// All inner automorphisms ad(a) of A, indexed by a.
std::vector<Perm> inner_automorphisms(const GroupTable& a) {
  std::vector<Perm> ad;
  ad.reserve(static_cast<std::size_t>(a.order()));
  for (Elem x = 0; x < a.order(); ++x) ad.push_back(a.ad(x));
  return ad;
}

// Twist without re-validating; callers that need the guarantee validate.
Cochain2 twist_unchecked(const Cochain2& c, const TwistMap& t, const std::vector<Perm>& ad) {
  const GroupTable& G = c.G;
  const GroupTable& A = c.coeff();
  Cochain2 out{G, c.A, c.xi, c.phi};
  for (Elem g = 0; g < G.order(); ++g) {
    Perm p = fingroup::compose(ad[static_cast<std::size_t>(t.zeta[static_cast<std::size_t>(g)])], c.phi_at(g));
    out.phi[static_cast<std::size_t>(g)] = *c.A->aut.index_of(p);
  }
  for (Elem g1 = 0; g1 < G.order(); ++g1)
    for (Elem g = 0; g < G.order(); ++g) {
      Elem z1 = t.zeta[static_cast<std::size_t>(g1)];
      Elem z = t.zeta[static_cast<std::size_t>(g)];
      Elem z12 = t.zeta[static_cast<std::size_t>(G.mul(g1, g))];
      Elem v = A.mul(A.mul(A.mul(z1, c.phi_at(g1)[static_cast<std::size_t>(z)]), c.xi_at(g1, g)), A.inv(z12));
      out.xi[static_cast<std::size_t>(g1 * G.order() + g)] = v;
    }
  return out;
}

}  // namespace

CocycleReport validate_cocycle(const Cochain2& c, bool require_normalized) {
  CocycleReport report;
  if (!well_formed(c, report.detail)) {
    report.valid = false;
    return report;
  }
  const GroupTable& G = c.G;
  const GroupTable& A = c.coeff();
  const auto ad = inner_automorphisms(A);
  std::vector<Perm> phi_inv;
  for (Elem g = 0; g < G.order(); ++g) phi_inv.push_back(fingroup::inverse(c.phi_at(g)));

  for (Elem g1 = 0; g1 < G.order() && report.valid; ++g1)
    for (Elem g = 0; g < G.order(); ++g) {
      Perm lhs = fingroup::compose(fingroup::compose(c.phi_at(g1), c.phi_at(g)),
                                   phi_inv[static_cast<std::size_t>(G.mul(g1, g))]);
      if (lhs != ad[static_cast<std::size_t>(c.xi_at(g1, g))]) {
        report.valid = false;
        report.phi_witness = {g1, g};
        report.detail = "phi(g1)phi(g)phi(g1 g)^-1 != ad(xi(g1,g))";
        break;
      }
    }
  for (Elem g2 = 0; g2 < G.order() && !report.xi_witness; ++g2)
    for (Elem g1 = 0; g1 < G.order() && !report.xi_witness; ++g1)
      for (Elem g = 0; g < G.order(); ++g) {
        Elem lhs = A.mul(c.xi_at(g2, g1), c.xi_at(G.mul(g2, g1), g));
        Elem rhs = A.mul(c.phi_at(g2)[static_cast<std::size_t>(c.xi_at(g1, g))], c.xi_at(g2, G.mul(g1, g)));
        if (lhs != rhs) {
          if (report.valid) report.detail = "xi(g2,g1)xi(g2 g1,g) != phi(g2)(xi(g1,g))xi(g2,g1 g)";
          report.valid = false;
          report.xi_witness = std::array<Elem, 3>{g2, g1, g};
          break;
        }
      }
  report.normalized = c.is_normalized();
  if (require_normalized && !report.normalized && report.valid) {
    report.valid = false;
    report.detail = "cochain is not normalized";
  }
  return report;
}

bool is_neutral(const Cochain2& c) {
  if (!std::all_of(c.xi.begin(), c.xi.end(), [](Elem x) { return x == 0; })) return false;
  const GroupTable& G = c.G;
  for (Elem g1 = 0; g1 < G.order(); ++g1)
    for (Elem g = 0; g < G.order(); ++g)
      if (fingroup::compose(c.phi_at(g1), c.phi_at(g)) != c.phi_at(G.mul(g1, g)))
        throw Error(ErrorKind::PreconditionFailed, "xi == 1 but phi is not a homomorphism", {g1, g});
  return true;
}

Cochain2 coboundary_twist(const Cochain2& c, const TwistMap& t) {
  if (t.zeta.size() != static_cast<std::size_t>(c.G.order()))
    throw Error(ErrorKind::PreconditionFailed, "twist map has wrong size");
  for (Elem z : t.zeta)
    if (z < 0 || z >= c.coeff().order()) throw Error(ErrorKind::PreconditionFailed, "twist value out of range");
  auto before = validate_cocycle(c);
  if (!before.valid) throw Error(ErrorKind::InvalidCocycle, "twist input: " + before.detail);
  Cochain2 out = twist_unchecked(c, t, inner_automorphisms(c.coeff()));
  auto after = validate_cocycle(out);
  if (!after.valid) throw std::logic_error("coboundary twist produced a non-cocycle: " + after.detail);
  return out;
}

TwistMap compose_twists(const GroupTable& a, const TwistMap& second, const TwistMap& first) {
  TwistMap out;
  out.zeta.resize(first.zeta.size());
  for (std::size_t g = 0; g < first.zeta.size(); ++g) out.zeta[g] = a.mul(second.zeta[g], first.zeta[g]);
  return out;
}

std::optional<TwistMap> cohomologous(const Cochain2& c1, const Cochain2& c2, const Limits& limits) {
  if (!(c1.G == c2.G) || !(c1.coeff() == c2.coeff()))
    throw Error(ErrorKind::PreconditionFailed, "cochains have different (G, A)");
  const GroupTable& G = c1.G;
  const GroupTable& A = c1.coeff();
  const int n = G.order();
  if (saturating_pow(static_cast<std::uint64_t>(A.order()), static_cast<std::uint64_t>(n)) > limits.search_cap)
    throw Error(ErrorKind::SearchSpaceTooLarge, "|A|^|G| exceeds search cap");
  const bool normalized = c1.is_normalized() && c2.is_normalized();
  const auto ad = inner_automorphisms(A);

  // phi2(g) = ad(zeta(g)) phi1(g) restricts the admissible values of zeta(g).
  std::vector<std::vector<Elem>> candidates(static_cast<std::size_t>(n));
  for (Elem g = 0; g < n; ++g)
    for (Elem a = 0; a < A.order(); ++a) {
      if (normalized && g == 0 && a != 0) continue;
      if (fingroup::compose(ad[static_cast<std::size_t>(a)], c1.phi_at(g)) == c2.phi_at(g))
        candidates[static_cast<std::size_t>(g)].push_back(a);
    }

  // The xi-condition at (g1, g) is checked once zeta(g1), zeta(g), zeta(g1 g) are all set.
  std::vector<std::vector<std::pair<Elem, Elem>>> checks(static_cast<std::size_t>(n));
  for (Elem g1 = 0; g1 < n; ++g1)
    for (Elem g = 0; g < n; ++g) checks[static_cast<std::size_t>(std::max({g1, g, G.mul(g1, g)}))].push_back({g1, g});

  std::vector<Elem> zeta(static_cast<std::size_t>(n), 0);
  std::function<bool(int)> rec = [&](int pos) -> bool {
    if (pos == n) return true;
    for (Elem a : candidates[static_cast<std::size_t>(pos)]) {
      zeta[static_cast<std::size_t>(pos)] = a;
      bool ok = true;
      for (auto [g1, g] : checks[static_cast<std::size_t>(pos)]) {
        Elem z1 = zeta[static_cast<std::size_t>(g1)], z = zeta[static_cast<std::size_t>(g)];
        Elem z12 = zeta[static_cast<std::size_t>(G.mul(g1, g))];
        Elem v = A.mul(A.mul(A.mul(z1, c1.phi_at(g1)[static_cast<std::size_t>(z)]), c1.xi_at(g1, g)), A.inv(z12));
        if (v != c2.xi_at(g1, g)) {
          ok = false;
          break;
        }
      }
      if (ok && rec(pos + 1)) return true;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return TwistMap{zeta};
}

std::vector<Cochain2> enumerate_normalized_cocycles(const GroupTable& G, std::shared_ptr<const Coefficients> coeff,
                                                    const Limits& limits) {
  const GroupTable& A = coeff->group;
  const int n = G.order();
  const int n_aut = static_cast<int>(coeff->aut.perms.size());
  const std::uint64_t phi_count =
      saturating_pow(static_cast<std::uint64_t>(n_aut), static_cast<std::uint64_t>(n - 1));
  if (phi_count > limits.search_cap) throw Error(ErrorKind::SearchSpaceTooLarge, "too many phi maps");

  const auto ad = inner_automorphisms(A);
  std::map<Perm, std::vector<Elem>> ad_preimage;
  for (Elem a = 0; a < A.order(); ++a) ad_preimage[ad[static_cast<std::size_t>(a)]].push_back(a);

  // Free xi positions are pairs with both entries nontrivial, in row-major order.
  std::vector<std::pair<Elem, Elem>> positions;
  for (Elem g1 = 1; g1 < n; ++g1)
    for (Elem g = 1; g < n; ++g) positions.push_back({g1, g});
  auto pos_of = [&](Elem g1, Elem g) -> int { return (g1 == 0 || g == 0) ? -1 : (g1 - 1) * (n - 1) + (g - 1); };
  std::vector<std::vector<std::array<Elem, 3>>> triple_checks(positions.size());
  for (Elem g2 = 0; g2 < n; ++g2)
    for (Elem g1 = 0; g1 < n; ++g1)
      for (Elem g = 0; g < n; ++g) {
        int last = std::max({pos_of(g2, g1), pos_of(G.mul(g2, g1), g), pos_of(g1, g), pos_of(g2, G.mul(g1, g))});
        if (last >= 0) triple_checks[static_cast<std::size_t>(last)].push_back({g2, g1, g});
      }

  std::vector<Cochain2> out;
  std::vector<int> phi(static_cast<std::size_t>(n), 0);
  std::uint64_t budget = 0;
  for (std::uint64_t code = 0; code < phi_count; ++code) {
    std::uint64_t rest = code;
    for (Elem g = 1; g < n; ++g) {
      phi[static_cast<std::size_t>(g)] = static_cast<int>(rest % static_cast<std::uint64_t>(n_aut));
      rest /= static_cast<std::uint64_t>(n_aut);
    }
    auto phi_perm = [&](Elem g) -> const Perm& { return coeff->aut.perms[static_cast<std::size_t>(phi[static_cast<std::size_t>(g)])]; };
    std::vector<const std::vector<Elem>*> candidates;
    std::uint64_t space = 1;
    bool feasible = true;
    for (auto [g1, g] : positions) {
      Perm target = fingroup::compose(fingroup::compose(phi_perm(g1), phi_perm(g)), fingroup::inverse(phi_perm(G.mul(g1, g))));
      auto it = ad_preimage.find(target);
      if (it == ad_preimage.end()) {
        feasible = false;
        break;
      }
      candidates.push_back(&it->second);
      space = space > limits.search_cap ? space : space * it->second.size();
    }
    if (!feasible) continue;
    budget += space;
    if (budget > limits.search_cap) throw Error(ErrorKind::SearchSpaceTooLarge, "normalized cochain space exceeds cap");

    Cochain2 c{G, coeff, std::vector<Elem>(static_cast<std::size_t>(n * n), 0), phi};
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
      if (pos == positions.size()) {
        out.push_back(c);
        return;
      }
      auto [p1, p] = positions[pos];
      for (Elem a : *candidates[pos]) {
        c.xi[static_cast<std::size_t>(p1 * n + p)] = a;
        bool ok = true;
        for (const auto& t : triple_checks[pos]) {
          Elem g2 = t[0], g1 = t[1], g = t[2];
          Elem lhs = A.mul(c.xi_at(g2, g1), c.xi_at(G.mul(g2, g1), g));
          Elem rhs = A.mul(phi_perm(g2)[static_cast<std::size_t>(c.xi_at(g1, g))], c.xi_at(g2, G.mul(g1, g)));
          if (lhs != rhs) {
            ok = false;
            break;
          }
        }
        if (ok) rec(pos + 1);
      }
      c.xi[static_cast<std::size_t>(p1 * n + p)] = 0;
    };
    if (positions.empty()) {
      // |G| = 1: the single normalized cochain is trivially a cocycle.
      out.push_back(c);
    } else {
      rec(0);
    }
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::vector<H2Class> classify_h2(const GroupTable& g, const GroupTable& a, const Limits& limits) {
  return classify_h2(g, make_coefficients(a, limits), limits);
}

std::vector<H2Class> classify_h2(const GroupTable& G, std::shared_ptr<const Coefficients> coeff,
                                 const Limits& limits) {
  const GroupTable& A = coeff->group;
  const int n = G.order();
  const std::uint64_t twists = saturating_pow(static_cast<std::uint64_t>(A.order()), static_cast<std::uint64_t>(n - 1));
  if (twists > limits.search_cap) throw Error(ErrorKind::SearchSpaceTooLarge, "normalized twist space exceeds cap");

  const auto cocycles = enumerate_normalized_cocycles(G, coeff, limits);
  std::map<std::pair<std::vector<Elem>, std::vector<int>>, std::size_t> index;
  for (std::size_t i = 0; i < cocycles.size(); ++i) index[{cocycles[i].xi, cocycles[i].phi}] = i;

  const auto ad = inner_automorphisms(A);
  std::vector<int> class_of(cocycles.size(), -1);
  std::vector<H2Class> classes;
  TwistMap t{std::vector<Elem>(static_cast<std::size_t>(n), 0)};
  for (std::size_t i = 0; i < cocycles.size(); ++i) {
    if (class_of[i] >= 0) continue;
    const int id = static_cast<int>(classes.size());
    // Sorted input: the first unvisited member is the lexicographic minimum.
    H2Class cls{cocycles[i], 0, false};
    for (std::uint64_t code = 0; code < twists; ++code) {
      std::uint64_t rest = code;
      for (Elem g = 1; g < n; ++g) {
        t.zeta[static_cast<std::size_t>(g)] = static_cast<Elem>(rest % static_cast<std::uint64_t>(A.order()));
        rest /= static_cast<std::uint64_t>(A.order());
      }
      Cochain2 twisted = twist_unchecked(cocycles[i], t, ad);
      std::size_t j = index.at({twisted.xi, twisted.phi});
      if (class_of[j] < 0) {
        class_of[j] = id;
        ++cls.size;
      }
    }
    const auto& rep = cls.representative;
    cls.distinguished = std::all_of(rep.xi.begin(), rep.xi.end(), [](Elem x) { return x == 0; }) &&
                        std::all_of(rep.phi.begin(), rep.phi.end(), [](int p) { return p == 0; });
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace covlab::cohomology
