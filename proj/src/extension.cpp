#include "covlab/extension.hpp"

#include <algorithm>
#include <functional>

namespace covlab::extension {

const char* to_string(ExtensionType t) {
  switch (t) {
    case ExtensionType::DirectProduct: return "direct_product";
    case ExtensionType::Semidirect: return "semidirect";
    case ExtensionType::Central: return "central";
    case ExtensionType::General: return "general";
  }
  return "?";
}

ExtensionGroup build_extension(const Cochain2& c) {
  auto report = cohomology::validate_cocycle(c, true);
  if (!report.valid) {
    std::vector<int> w;
    if (report.xi_witness) w.assign(report.xi_witness->begin(), report.xi_witness->end());
    else if (report.phi_witness) w = {report.phi_witness->first, report.phi_witness->second};
    throw Error(ErrorKind::InvalidCocycle, report.detail, w);
  }
  const GroupTable& G = c.G;
  const GroupTable& A = c.coeff();
  const int n = G.order(), m = A.order();
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n * m), std::vector<int>(static_cast<std::size_t>(n * m)));
  for (Elem a1 = 0; a1 < m; ++a1)
    for (Elem g1 = 0; g1 < n; ++g1)
      for (Elem a = 0; a < m; ++a)
        for (Elem g = 0; g < n; ++g) {
          Elem prod_a = A.mul(A.mul(a1, c.phi_at(g1)[static_cast<std::size_t>(a)]), c.xi_at(g1, g));
          table[static_cast<std::size_t>(a1 * n + g1)][static_cast<std::size_t>(a * n + g)] = prod_a * n + G.mul(g1, g);
        }
  GroupTable E;
  try {
    E = fingroup::make_group(table, "E(" + G.name() + "," + A.name() + ")");
  } catch (const Error& err) {
    throw Error(ErrorKind::InvalidCocycle, std::string("extension product fails: ") + err.what(), err.witness());
  }

  ExtensionGroup ext{E, {A, E, {}}, {E, G, {}}, c};
  for (Elem a = 0; a < m; ++a) ext.inclusion.map.push_back(ext.encode(a, 0));
  for (Elem e = 0; e < E.order(); ++e) ext.projection.map.push_back(ext.decode(e).second);
  if (!fingroup::check_hom(ext.inclusion) || !fingroup::check_hom(ext.projection))
    throw std::logic_error("extension maps are not homomorphisms");
  auto ker = fingroup::kernel(ext.projection);
  auto img = fingroup::image(ext.inclusion);
  if (ker != img || static_cast<int>(fingroup::image(ext.projection).size()) != n)
    throw std::logic_error("extension sequence is not exact");
  return ext;
}

TypeReport classify_type(const ExtensionGroup& e, const Limits& limits) {
  TypeReport report;
  const Cochain2& c = e.cocycle;
  auto trivial = cohomology::trivial_cochain(c.G, c.A);
  report.direct_witness = cohomology::cohomologous(c, trivial, limits);
  if (report.direct_witness) {
    report.neutral_partner = trivial;
    report.semidirect_witness = report.direct_witness;
  } else {
    fingroup::for_each_hom(c.G, c.A->aut.group, [&](const std::vector<Elem>& phi) {
      Cochain2 neutral{c.G, c.A, trivial.xi, std::vector<int>(phi.begin(), phi.end())};
      if (auto w = cohomology::cohomologous(c, neutral, limits)) {
        report.neutral_partner = neutral;
        report.semidirect_witness = w;
        return false;
      }
      return true;
    });
  }
  auto z = fingroup::centre(e.E);
  bool central = std::all_of(e.inclusion.map.begin(), e.inclusion.map.end(),
                             [&](Elem x) { return std::binary_search(z.begin(), z.end(), x); });
  if (report.direct_witness) report.labels.push_back(ExtensionType::DirectProduct);
  if (report.semidirect_witness) report.labels.push_back(ExtensionType::Semidirect);
  if (central) report.labels.push_back(ExtensionType::Central);
  if (report.labels.empty()) report.labels.push_back(ExtensionType::General);
  report.preferred = report.labels.front();
  return report;
}

std::optional<std::vector<Elem>> extensions_equivalent(const ExtensionGroup& e1, const ExtensionGroup& e2,
                                                       const Limits& limits) {
  const GroupTable& G = e1.cocycle.G;
  const GroupTable& A = e1.cocycle.coeff();
  if (!(G == e2.cocycle.G) || !(A == e2.cocycle.coeff()))
    throw Error(ErrorKind::PreconditionFailed, "extensions of different (G, A)");
  const int n = G.order(), m = A.order();
  if (saturating_pow(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(n - 1)) > limits.search_cap)
    throw Error(ErrorKind::SearchSpaceTooLarge, "|A|^(|G|-1) exceeds search cap");

  // Pairs (g1, g) become checkable once zeta(g1), zeta(g), zeta(g1 g) are fixed.
  std::vector<std::vector<std::pair<Elem, Elem>>> checks(static_cast<std::size_t>(n));
  for (Elem g1 = 0; g1 < n; ++g1)
    for (Elem g = 0; g < n; ++g) checks[static_cast<std::size_t>(std::max({g1, g, G.mul(g1, g)}))].push_back({g1, g});

  std::vector<Elem> zeta(static_cast<std::size_t>(n), 0);
  auto f = [&](Elem x) {
    auto [a, g] = e1.decode(x);
    return e2.encode(A.mul(a, zeta[static_cast<std::size_t>(g)]), g);
  };
  auto consistent = [&](int pos) {
    for (auto [g1, g] : checks[static_cast<std::size_t>(pos)])
      for (Elem a1 = 0; a1 < m; ++a1)
        for (Elem a = 0; a < m; ++a) {
          Elem x = e1.encode(a1, g1), y = e1.encode(a, g);
          if (f(e1.E.mul(x, y)) != e2.E.mul(f(x), f(y))) return false;
        }
    return true;
  };
  std::function<bool(int)> rec = [&](int pos) -> bool {
    if (pos == n) return true;
    for (Elem a = 0; a < (pos == 0 ? 1 : m); ++a) {
      zeta[static_cast<std::size_t>(pos)] = a;
      if (consistent(pos) && rec(pos + 1)) return true;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  std::vector<Elem> map;
  for (Elem x = 0; x < e1.E.order(); ++x) map.push_back(f(x));
  return map;
}

}  // namespace covlab::extension
