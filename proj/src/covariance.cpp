#include "covlab/covariance.hpp"

#include <algorithm>
#include <functional>

namespace covlab::covariance {

namespace {

std::string mor_name(const FinCat& c, int f) { return c.morphisms[static_cast<std::size_t>(f)].id; }

}  // namespace

std::vector<int> FinCat::hom(int x, int y) const {
  std::vector<int> out;
  for (int f = 0; f < num_morphisms(); ++f)
    if (morphisms[static_cast<std::size_t>(f)].dom == x && morphisms[static_cast<std::size_t>(f)].cod == y)
      out.push_back(f);
  return out;
}

std::optional<int> FinCat::inverse(int f) const {
  const auto& m = morphisms[static_cast<std::size_t>(f)];
  for (int g : hom(m.cod, m.dom))
    if (compose(g, f) == identities[static_cast<std::size_t>(m.dom)] &&
        compose(f, g) == identities[static_cast<std::size_t>(m.cod)])
      return g;
  return std::nullopt;
}

std::optional<int> FinCat::find_morphism(const std::string& id) const {
  for (int f = 0; f < num_morphisms(); ++f)
    if (morphisms[static_cast<std::size_t>(f)].id == id) return f;
  return std::nullopt;
}

std::optional<int> FinCat::find_object(const std::string& name) const {
  for (int x = 0; x < num_objects(); ++x)
    if (objects[static_cast<std::size_t>(x)] == name) return x;
  return std::nullopt;
}

FinCat make_fincat(const std::vector<std::string>& objects, const std::vector<std::array<std::string, 3>>& morphisms,
                   const std::vector<std::array<std::string, 3>>& composites,
                   const std::vector<std::string>& identities) {
  FinCat c;
  c.objects = objects;
  for (std::size_t i = 0; i < objects.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (objects[i] == objects[j]) throw Error(ErrorKind::InvalidCategory, "duplicate object " + objects[i]);
  auto object = [&](const std::string& name) {
    auto x = c.find_object(name);
    if (!x) throw Error(ErrorKind::InvalidCategory, "unknown object " + name);
    return *x;
  };
  for (const auto& [id, dom, cod] : morphisms) {
    if (c.find_morphism(id)) throw Error(ErrorKind::InvalidCategory, "duplicate morphism " + id);
    c.morphisms.push_back({id, object(dom), object(cod)});
  }
  auto morphism = [&](const std::string& id) {
    auto f = c.find_morphism(id);
    if (!f) throw Error(ErrorKind::InvalidCategory, "unknown morphism " + id);
    return *f;
  };
  if (identities.size() != objects.size())
    throw Error(ErrorKind::InvalidCategory, "need one identity per object");
  for (const auto& id : identities) c.identities.push_back(morphism(id));
  const int n = c.num_morphisms();
  c.comp.assign(static_cast<std::size_t>(n * n), -1);
  for (const auto& [f, g, h] : composites) {
    int& slot = c.comp[static_cast<std::size_t>(morphism(f) * n + morphism(g))];
    if (slot >= 0 && slot != morphism(h))
      throw Error(ErrorKind::InvalidCategory, "conflicting composites for " + f + " o " + g);
    slot = morphism(h);
  }
  return c;
}

Verdict validate_fincat(const FinCat& c, const Limits& limits) {
  const int n = c.num_morphisms(), k = c.num_objects();
  if (c.identities.size() != static_cast<std::size_t>(k)) return Verdict::fail("BadIdentity: wrong count");
  if (c.comp.size() != static_cast<std::size_t>(n * n)) return Verdict::fail("MissingComposite: table size");
  for (const auto& m : c.morphisms)
    if (m.dom < 0 || m.dom >= k || m.cod < 0 || m.cod >= k) return Verdict::fail("BadMorphism: endpoint out of range");
  for (int x = 0; x < k; ++x) {
    int id = c.identities[static_cast<std::size_t>(x)];
    if (id < 0 || id >= n || c.morphisms[static_cast<std::size_t>(id)].dom != x ||
        c.morphisms[static_cast<std::size_t>(id)].cod != x)
      return Verdict::fail("BadIdentity: identity of object " + c.objects[static_cast<std::size_t>(x)], {x});
  }
  for (int f = 0; f < n; ++f)
    for (int g = 0; g < n; ++g) {
      const auto& mf = c.morphisms[static_cast<std::size_t>(f)];
      const auto& mg = c.morphisms[static_cast<std::size_t>(g)];
      int h = c.compose(f, g);
      if (mf.dom != mg.cod) {
        if (h >= 0) return Verdict::fail("BadComposite: " + mf.id + " o " + mg.id + " is not composable", {f, g});
        continue;
      }
      if (h < 0) return Verdict::fail("MissingComposite: " + mf.id + " o " + mg.id, {f, g});
      if (h >= n || c.morphisms[static_cast<std::size_t>(h)].dom != mg.dom ||
          c.morphisms[static_cast<std::size_t>(h)].cod != mf.cod)
        return Verdict::fail("BadComposite: " + mf.id + " o " + mg.id + " has wrong endpoints", {f, g});
    }
  for (int f = 0; f < n; ++f) {
    const auto& m = c.morphisms[static_cast<std::size_t>(f)];
    if (c.compose(f, c.identities[static_cast<std::size_t>(m.dom)]) != f ||
        c.compose(c.identities[static_cast<std::size_t>(m.cod)], f) != f)
      return Verdict::fail("IdentityLaw: " + m.id, {f});
  }
  for (int f = 0; f < n; ++f)
    for (int g = 0; g < n; ++g) {
      int fg = c.compose(f, g);
      if (fg < 0) continue;
      for (int h = 0; h < n; ++h) {
        int gh = c.compose(g, h);
        if (gh < 0) continue;
        if (c.compose(fg, h) != c.compose(f, gh)) return Verdict::fail("NotAssociative", {f, g, h});
      }
    }
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      if (static_cast<int>(c.hom(x, y).size()) > limits.hom_set_cap)
        return Verdict::fail("HomSetTooLarge: " + c.objects[static_cast<std::size_t>(x)] + " -> " +
                                 c.objects[static_cast<std::size_t>(y)],
                             {x, y});
  return Verdict::pass();
}

FinCat group_category(const GroupTable& h) {
  FinCat c;
  c.objects = {"*"};
  for (Elem x = 0; x < h.order(); ++x) c.morphisms.push_back({"h" + std::to_string(x), 0, 0});
  c.identities = {0};
  c.comp.resize(static_cast<std::size_t>(h.order() * h.order()));
  for (Elem x = 0; x < h.order(); ++x)
    for (Elem y = 0; y < h.order(); ++y) c.comp[static_cast<std::size_t>(x * h.order() + y)] = h.mul(x, y);
  return c;
}

FinCat discrete_category(int n) {
  FinCat c;
  for (int x = 0; x < n; ++x) {
    c.objects.push_back("o" + std::to_string(x));
    c.morphisms.push_back({"id" + std::to_string(x), x, x});
    c.identities.push_back(x);
  }
  c.comp.assign(static_cast<std::size_t>(n * n), -1);
  for (int x = 0; x < n; ++x) c.comp[static_cast<std::size_t>(x * n + x)] = x;
  return c;
}

Verdict validate_functor(const TheoryFunctor& f) {
  const FinCat& s = *f.source;
  const FinCat& t = *f.target;
  if (f.objects.size() != static_cast<std::size_t>(s.num_objects()) ||
      f.morphisms.size() != static_cast<std::size_t>(s.num_morphisms()))
    return Verdict::fail("functor maps have wrong size");
  for (int x : f.objects)
    if (x < 0 || x >= t.num_objects()) return Verdict::fail("object image out of range");
  for (int m : f.morphisms)
    if (m < 0 || m >= t.num_morphisms()) return Verdict::fail("morphism image out of range");
  auto F = [&](int m) { return f.morphisms[static_cast<std::size_t>(m)]; };
  for (int m = 0; m < s.num_morphisms(); ++m) {
    const auto& sm = s.morphisms[static_cast<std::size_t>(m)];
    const auto& tm = t.morphisms[static_cast<std::size_t>(F(m))];
    if (tm.dom != f.objects[static_cast<std::size_t>(sm.dom)] || tm.cod != f.objects[static_cast<std::size_t>(sm.cod)])
      return Verdict::fail("functor does not preserve endpoints of " + sm.id, {m});
  }
  for (int x = 0; x < s.num_objects(); ++x)
    if (F(s.identities[static_cast<std::size_t>(x)]) != t.identities[static_cast<std::size_t>(f.objects[static_cast<std::size_t>(x)])])
      return Verdict::fail("functor does not preserve the identity of " + s.objects[static_cast<std::size_t>(x)], {x});
  for (int a = 0; a < s.num_morphisms(); ++a)
    for (int b = 0; b < s.num_morphisms(); ++b) {
      int ab = s.compose(a, b);
      if (ab >= 0 && F(ab) != t.compose(F(a), F(b)))
        return Verdict::fail("functor does not preserve " + mor_name(s, a) + " o " + mor_name(s, b), {a, b});
    }
  return Verdict::pass();
}

Verdict validate_gaction(const GAction& a) {
  const FinCat& c = *a.cat;
  const int n = a.G.order();
  if (a.objects.size() != static_cast<std::size_t>(n) || a.morphisms.size() != static_cast<std::size_t>(n))
    return Verdict::fail("one functor per group element required");
  for (Elem g = 0; g < n; ++g) {
    auto v = validate_functor({a.cat, a.cat, a.objects[static_cast<std::size_t>(g)], a.morphisms[static_cast<std::size_t>(g)]});
    if (!v) return Verdict::fail("T(" + std::to_string(g) + ") is not a functor: " + v.violation, {g});
    auto objs = a.objects[static_cast<std::size_t>(g)];
    auto mors = a.morphisms[static_cast<std::size_t>(g)];
    std::sort(objs.begin(), objs.end());
    std::sort(mors.begin(), mors.end());
    if (std::adjacent_find(objs.begin(), objs.end()) != objs.end() ||
        std::adjacent_find(mors.begin(), mors.end()) != mors.end())
      return Verdict::fail("T(" + std::to_string(g) + ") is not invertible", {g});
  }
  for (int x = 0; x < c.num_objects(); ++x)
    if (a.act(0, x) != x) return Verdict::fail("T(1) is not the identity functor", {0});
  for (int f = 0; f < c.num_morphisms(); ++f)
    if (a.act_mor(0, f) != f) return Verdict::fail("T(1) is not the identity functor", {0});
  for (Elem g = 0; g < n; ++g)
    for (Elem h = 0; h < n; ++h) {
      Elem gh = a.G.mul(g, h);
      for (int x = 0; x < c.num_objects(); ++x)
        if (a.act(gh, x) != a.act(g, a.act(h, x))) return Verdict::fail("T(gh) != T(g)T(h)", {g, h});
      for (int f = 0; f < c.num_morphisms(); ++f)
        if (a.act_mor(gh, f) != a.act_mor(g, a.act_mor(h, f))) return Verdict::fail("T(gh) != T(g)T(h)", {g, h});
    }
  return Verdict::pass();
}

GAction trivial_action(const GroupTable& g, std::shared_ptr<const FinCat> cat) {
  GAction a{g, cat, {}, {}};
  std::vector<int> objs(static_cast<std::size_t>(cat->num_objects())), mors(static_cast<std::size_t>(cat->num_morphisms()));
  for (std::size_t i = 0; i < objs.size(); ++i) objs[i] = static_cast<int>(i);
  for (std::size_t i = 0; i < mors.size(); ++i) mors[i] = static_cast<int>(i);
  a.objects.assign(static_cast<std::size_t>(g.order()), objs);
  a.morphisms.assign(static_cast<std::size_t>(g.order()), mors);
  return a;
}

std::optional<Elem> GaugeGroup::index_of(const std::vector<int>& family) const {
  for (std::size_t i = 0; i < families.size(); ++i)
    if (families[i] == family) return static_cast<Elem>(i);
  return std::nullopt;
}

GaugeGroup compute_gauge_group(const TheoryFunctor& f, const Limits& limits) {
  const FinCat& s = *f.source;
  const FinCat& t = *f.target;
  const int k = s.num_objects();
  auto F = [&](int m) { return f.morphisms[static_cast<std::size_t>(m)]; };
  auto Fo = [&](int x) { return f.objects[static_cast<std::size_t>(x)]; };

  std::vector<std::vector<int>> candidates(static_cast<std::size_t>(k));
  std::uint64_t space = 1;
  for (int x = 0; x < k; ++x) {
    for (int m : t.hom(Fo(x), Fo(x)))
      if (t.inverse(m)) candidates[static_cast<std::size_t>(x)].push_back(m);
    space = std::min<std::uint64_t>(space * candidates[static_cast<std::size_t>(x)].size(), limits.search_cap + 1);
  }
  if (space > limits.search_cap) throw Error(ErrorKind::SearchSpaceTooLarge, "natural-family space exceeds cap");

  // Naturality at gamma: C -> C' is checked once both components are chosen.
  std::vector<std::vector<int>> checks(static_cast<std::size_t>(k));
  for (int m = 0; m < s.num_morphisms(); ++m) {
    const auto& sm = s.morphisms[static_cast<std::size_t>(m)];
    checks[static_cast<std::size_t>(std::max(sm.dom, sm.cod))].push_back(m);
  }
  std::vector<std::vector<int>> found;
  std::vector<int> alpha(static_cast<std::size_t>(k), -1);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == k) {
      found.push_back(alpha);
      return;
    }
    for (int c : candidates[static_cast<std::size_t>(pos)]) {
      alpha[static_cast<std::size_t>(pos)] = c;
      bool ok = true;
      for (int m : checks[static_cast<std::size_t>(pos)]) {
        const auto& sm = s.morphisms[static_cast<std::size_t>(m)];
        if (t.compose(alpha[static_cast<std::size_t>(sm.cod)], F(m)) != t.compose(F(m), alpha[static_cast<std::size_t>(sm.dom)])) {
          ok = false;
          break;
        }
      }
      if (ok) rec(pos + 1);
    }
  };
  rec(0);

  std::vector<int> identity;
  for (int x = 0; x < k; ++x) identity.push_back(t.identities[static_cast<std::size_t>(Fo(x))]);
  std::sort(found.begin(), found.end());
  found.erase(std::find(found.begin(), found.end(), identity));
  found.insert(found.begin(), identity);

  GaugeGroup gauge;
  gauge.families = found;
  const int n = static_cast<int>(found.size());
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> prod(static_cast<std::size_t>(k));
      for (int x = 0; x < k; ++x)
        prod[static_cast<std::size_t>(x)] = t.compose(found[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)],
                                                      found[static_cast<std::size_t>(j)][static_cast<std::size_t>(x)]);
      table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = *gauge.index_of(prod);
    }
  gauge.group = fingroup::make_group(table, "Aut(A)");
  gauge.coefficients = cohomology::make_coefficients(gauge.group, limits);
  return gauge;
}

namespace {

struct Ctx {
  const CovarianceModel& m;
  const FinCat& t;
  explicit Ctx(const CovarianceModel& model) : m(model), t(*model.functor.target) {}
  int comp(int f, int g) const { return t.compose(f, g); }
  int inv(int f) const { return *t.inverse(f); }
  int A(int source_morphism) const { return m.functor.morphisms[static_cast<std::size_t>(source_morphism)]; }
  int Ao(int object) const { return m.functor.objects[static_cast<std::size_t>(object)]; }
  int objects() const { return m.functor.source->num_objects(); }
};

// Family indexed by object whose component at gC is computed from C.
template <typename Fn>
std::vector<int> family_at_translates(const Ctx& ctx, Elem g, Fn component) {
  std::vector<int> fam(static_cast<std::size_t>(ctx.objects()), -1);
  for (int c = 0; c < ctx.objects(); ++c) fam[static_cast<std::size_t>(ctx.m.action.act(g, c))] = component(c);
  return fam;
}

void require_valid(const CovarianceModel& m, const Implementation& impl) {
  auto v = validate_implementation(m, impl);
  if (!v) throw Error(ErrorKind::InvalidImplementation, v.violation, v.witness);
}

}  // namespace

Verdict validate_implementation(const CovarianceModel& m, const Implementation& impl) {
  const Ctx ctx(m);
  const FinCat& s = *m.functor.source;
  const GAction& act = m.action;
  const int n = act.G.order();
  if (impl.eta.size() != static_cast<std::size_t>(n)) return Verdict::fail("one family per group element required");
  for (Elem g = 0; g < n; ++g) {
    if (impl.eta[static_cast<std::size_t>(g)].size() != static_cast<std::size_t>(ctx.objects()))
      return Verdict::fail("family has wrong size", {g});
    for (int c = 0; c < ctx.objects(); ++c) {
      int e = impl.at(g, c);
      if (e < 0 || e >= ctx.t.num_morphisms()) return Verdict::fail("component out of range", {g, c});
      const auto& tm = ctx.t.morphisms[static_cast<std::size_t>(e)];
      if (tm.dom != ctx.Ao(c) || tm.cod != ctx.Ao(act.act(g, c)))
        return Verdict::fail("component eta(g)_C is not A(C) -> A(gC)", {g, c});
      if (!ctx.t.inverse(e)) return Verdict::fail("component eta(g)_C is not invertible", {g, c});
      if (g == 0 && e != ctx.t.identities[static_cast<std::size_t>(ctx.Ao(c))])
        return Verdict::fail("eta(1) is not the identity", {0, c});
    }
  }
  for (Elem g = 0; g < n; ++g)
    for (int gamma = 0; gamma < s.num_morphisms(); ++gamma) {
      const auto& sm = s.morphisms[static_cast<std::size_t>(gamma)];
      int lhs = ctx.comp(impl.at(g, sm.cod), ctx.A(gamma));
      int rhs = ctx.comp(ctx.A(act.act_mor(g, gamma)), impl.at(g, sm.dom));
      if (lhs != rhs) return Verdict::fail("naturality fails for eta(g) at " + sm.id, {g, gamma});
    }
  return Verdict::pass();
}

Cochain2 extract_cocycle(const CovarianceModel& m, const Implementation& impl, const GaugeGroup& gauge) {
  require_valid(m, impl);
  const Ctx ctx(m);
  const GroupTable& G = m.action.G;
  const int n = G.order();
  const auto& coeff = gauge.coefficients;
  Cochain2 out{G, coeff, std::vector<Elem>(static_cast<std::size_t>(n * n), 0), std::vector<int>(static_cast<std::size_t>(n), 0)};

  for (Elem g = 0; g < n; ++g) {
    fingroup::Perm p(gauge.families.size());
    for (std::size_t a = 0; a < gauge.families.size(); ++a) {
      const auto& alpha = gauge.families[a];
      auto fam = family_at_translates(ctx, g, [&](int c) {
        int e = impl.at(g, c);
        return ctx.comp(ctx.comp(e, alpha[static_cast<std::size_t>(c)]), ctx.inv(e));
      });
      auto idx = gauge.index_of(fam);
      if (!idx) throw Error(ErrorKind::NotNatural, "phi(g)(alpha) is not a gauge element", {g, static_cast<int>(a)});
      p[a] = *idx;
    }
    auto ai = coeff->aut.index_of(p);
    if (!ai) throw std::logic_error("phi(g) is not an automorphism of the gauge group");
    out.phi[static_cast<std::size_t>(g)] = *ai;
  }
  for (Elem g1 = 0; g1 < n; ++g1)
    for (Elem g = 0; g < n; ++g) {
      Elem g1g = G.mul(g1, g);
      auto fam = family_at_translates(ctx, g1g, [&](int c) {
        return ctx.comp(ctx.comp(impl.at(g1, m.action.act(g, c)), impl.at(g, c)), ctx.inv(impl.at(g1g, c)));
      });
      auto idx = gauge.index_of(fam);
      if (!idx) throw Error(ErrorKind::NotInGaugeGroup, "xi(g', g) is not a gauge element", {g1, g});
      out.xi[static_cast<std::size_t>(g1 * n + g)] = *idx;
    }
  auto report = cohomology::validate_cocycle(out, true);
  if (!report.valid) throw std::logic_error("extracted cochain is not a normalized cocycle: " + report.detail);
  return out;
}

TwistMap compare_implementations(const CovarianceModel& m, const Implementation& i1, const Implementation& i2,
                                 const GaugeGroup& gauge) {
  require_valid(m, i1);
  require_valid(m, i2);
  const Ctx ctx(m);
  TwistMap t;
  for (Elem g = 0; g < m.action.G.order(); ++g) {
    auto fam = family_at_translates(ctx, g, [&](int c) { return ctx.comp(i2.at(g, c), ctx.inv(i1.at(g, c))); });
    auto idx = gauge.index_of(fam);
    if (!idx) throw Error(ErrorKind::NotNatural, "eta2(g) eta1(g)^-1 is not natural", {g});
    t.zeta.push_back(*idx);
  }
  auto c1 = extract_cocycle(m, i1, gauge);
  auto c2 = extract_cocycle(m, i2, gauge);
  if (!(cohomology::coboundary_twist(c1, t) == c2))
    throw std::logic_error("implementations are not related by the computed twist");
  return t;
}

Implementation twist_implementation(const CovarianceModel& m, const Implementation& impl, const GaugeGroup& gauge,
                                    const TwistMap& t) {
  const Ctx ctx(m);
  Implementation out = impl;
  for (Elem g = 0; g < m.action.G.order(); ++g)
    for (int c = 0; c < ctx.objects(); ++c) {
      const auto& zeta = gauge.families[static_cast<std::size_t>(t.zeta[static_cast<std::size_t>(g)])];
      out.eta[static_cast<std::size_t>(g)][static_cast<std::size_t>(c)] =
          ctx.comp(zeta[static_cast<std::size_t>(m.action.act(g, c))], impl.at(g, c));
    }
  return out;
}

LiftResult lift_to_extension(const CovarianceModel& m, const Implementation& impl, const GaugeGroup& gauge,
                             const extension::ExtensionGroup& ext) {
  const Ctx ctx(m);
  auto base = extract_cocycle(m, impl, gauge);
  if (!(base == ext.cocycle))
    throw Error(ErrorKind::PreconditionFailed, "extension is not built from the implementation's cocycle");

  LiftResult out;
  out.model.name = m.name + "/E";
  out.model.functor = m.functor;
  out.model.action.G = ext.E;
  out.model.action.cat = m.action.cat;
  for (Elem e = 0; e < ext.E.order(); ++e) {
    Elem g = ext.decode(e).second;
    out.model.action.objects.push_back(m.action.objects[static_cast<std::size_t>(g)]);
    out.model.action.morphisms.push_back(m.action.morphisms[static_cast<std::size_t>(g)]);
  }
  for (Elem e = 0; e < ext.E.order(); ++e) {
    auto [a, g] = ext.decode(e);
    const auto& alpha = gauge.families[static_cast<std::size_t>(a)];
    std::vector<int> fam(static_cast<std::size_t>(ctx.objects()));
    for (int c = 0; c < ctx.objects(); ++c)
      fam[static_cast<std::size_t>(c)] = ctx.comp(alpha[static_cast<std::size_t>(m.action.act(g, c))], impl.at(g, c));
    out.rho.eta.push_back(fam);
  }
  out.cocycle = extract_cocycle(out.model, out.rho, gauge);
  if (!cohomology::is_neutral(out.cocycle)) throw std::logic_error("lifted cocycle is not neutral");
  for (Elem e = 0; e < ext.E.order(); ++e) {
    auto [a, g] = ext.decode(e);
    auto expected = fingroup::compose(gauge.group.ad(a), base.phi_at(g));
    if (out.cocycle.phi_at(e) != expected) throw std::logic_error("lifted phi differs from ad(alpha) o phi(g)");
  }
  return out;
}

Verdict check_trivial_relations(const CovarianceModel& m, const Implementation& impl, const GaugeGroup& gauge) {
  const Ctx ctx(m);
  const GroupTable& G = m.action.G;
  for (Elem g = 0; g < G.order(); ++g)
    for (std::size_t a = 0; a < gauge.families.size(); ++a)
      for (int c = 0; c < ctx.objects(); ++c) {
        const auto& alpha = gauge.families[a];
        if (ctx.comp(impl.at(g, c), alpha[static_cast<std::size_t>(c)]) !=
            ctx.comp(alpha[static_cast<std::size_t>(m.action.act(g, c))], impl.at(g, c)))
          return Verdict::fail("eta(g)_C alpha_C != alpha_{gC} eta(g)_C", {g, static_cast<int>(a), c});
      }
  for (Elem g1 = 0; g1 < G.order(); ++g1)
    for (Elem g = 0; g < G.order(); ++g)
      for (int c = 0; c < ctx.objects(); ++c)
        if (impl.at(G.mul(g1, g), c) != ctx.comp(impl.at(g1, m.action.act(g, c)), impl.at(g, c)))
          return Verdict::fail("eta(g'g)_C != eta(g')_{gC} eta(g)_C", {g1, g, c});
  return Verdict::pass();
}

std::vector<int> active_passive_compose(const CovarianceModel& m, const Implementation& impl, int c0,
                                        const std::vector<int>& psi) {
  require_valid(m, impl);
  const Ctx ctx(m);
  const FinCat& s = *m.functor.source;
  const GAction& act = m.action;
  const GroupTable& G = act.G;
  const int n = G.order();
  if (c0 < 0 || c0 >= s.num_objects()) throw Error(ErrorKind::PreconditionFailed, "base object out of range");
  if (psi.size() != static_cast<std::size_t>(n)) throw Error(ErrorKind::PreconditionFailed, "one psi per group element required");
  for (Elem g = 0; g < n; ++g) {
    int p = psi[static_cast<std::size_t>(g)];
    if (p < 0 || p >= s.num_morphisms() || s.morphisms[static_cast<std::size_t>(p)].dom != c0 ||
        s.morphisms[static_cast<std::size_t>(p)].cod != act.act(G.inv(g), c0))
      throw Error(ErrorKind::PreconditionFailed, "psi_g is not a morphism C0 -> g^-1 C0", {g});
  }
  for (Elem g1 = 0; g1 < n; ++g1)
    for (Elem g = 0; g < n; ++g)
      if (psi[static_cast<std::size_t>(G.mul(g1, g))] !=
          s.compose(act.act_mor(G.inv(g), psi[static_cast<std::size_t>(g1)]), psi[static_cast<std::size_t>(g)]))
        throw Error(ErrorKind::Eq18Violated, "psi_{g'g} != T(g^-1)psi_{g'} o psi_g", {g1, g});
  for (Elem g1 = 0; g1 < n; ++g1)
    for (Elem g = 0; g < n; ++g)
      for (int c = 0; c < s.num_objects(); ++c)
        if (impl.at(G.mul(g1, g), c) != ctx.comp(impl.at(g1, act.act(g, c)), impl.at(g, c)))
          throw Error(ErrorKind::PreconditionFailed, "implementation cocycle is not trivial", {g1, g, c});

  std::vector<int> xi_map(static_cast<std::size_t>(n));
  for (Elem g = 0; g < n; ++g)
    xi_map[static_cast<std::size_t>(g)] =
        ctx.comp(ctx.A(act.act_mor(g, psi[static_cast<std::size_t>(g)])), impl.at(g, c0));

  if (xi_map[0] != ctx.t.identities[static_cast<std::size_t>(ctx.Ao(c0))]) throw std::logic_error("Xi(1) != id");
  for (Elem g1 = 0; g1 < n; ++g1)
    for (Elem g = 0; g < n; ++g)
      if (ctx.comp(xi_map[static_cast<std::size_t>(g1)], xi_map[static_cast<std::size_t>(g)]) !=
          xi_map[static_cast<std::size_t>(G.mul(g1, g))])
        throw std::logic_error("Xi is not a homomorphism");
  for (Elem k = 0; k < n; ++k)
    if (psi[static_cast<std::size_t>(k)] == s.identities[static_cast<std::size_t>(c0)] &&
        xi_map[static_cast<std::size_t>(k)] != impl.at(k, c0))
      throw std::logic_error("Xi(k) != zeta(k)_{C0} for an element covering the identity");
  return xi_map;
}

}  // namespace covlab::covariance
