#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "covlab/cohomology.hpp"
#include "covlab/extension.hpp"

namespace covlab::covariance {

using cohomology::Cochain2;
using cohomology::TwistMap;
using fingroup::Elem;
using fingroup::GroupTable;

struct Morphism {
  std::string id;
  int dom = 0;
  int cod = 0;
};

/// A finite category. Morphisms and objects are addressed by index;
/// comp[f * |Mor| + g] is f o g when dom f == cod g and -1 otherwise.
struct FinCat {
  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  std::vector<int> identities;  // per object
  std::vector<int> comp;

  int num_objects() const { return static_cast<int>(objects.size()); }
  int num_morphisms() const { return static_cast<int>(morphisms.size()); }
  int compose(int f, int g) const { return comp[static_cast<std::size_t>(f * num_morphisms() + g)]; }
  std::vector<int> hom(int x, int y) const;
  std::optional<int> inverse(int f) const;
  std::optional<int> find_morphism(const std::string& id) const;
  std::optional<int> find_object(const std::string& name) const;
};

/// Assembles a category from named data; composites are triples (f, g, h)
/// meaning f o g = h. Pairs not listed stay undefined (caught by validation).
/// Throws InvalidCategory on unknown names or duplicate ids.
FinCat make_fincat(const std::vector<std::string>& objects, const std::vector<std::array<std::string, 3>>& morphisms,
                   const std::vector<std::array<std::string, 3>>& composites,
                   const std::vector<std::string>& identities);

/// Violations are named MissingComposite, BadComposite, BadIdentity,
/// IdentityLaw, NotAssociative or HomSetTooLarge; witnesses are morphism indices.
Verdict validate_fincat(const FinCat& c, const Limits& limits = {});

/// The one-object category whose morphisms are the elements of h; morphism i
/// is element i.
FinCat group_category(const GroupTable& h);
/// n objects and only identities.
FinCat discrete_category(int n);

struct TheoryFunctor {
  std::shared_ptr<const FinCat> source;
  std::shared_ptr<const FinCat> target;
  std::vector<int> objects;    // source object -> target object
  std::vector<int> morphisms;  // source morphism -> target morphism
};

Verdict validate_functor(const TheoryFunctor& f);

/// A homomorphism T: G -> Aut(C), stored as one endofunctor per element.
struct GAction {
  GroupTable G;
  std::shared_ptr<const FinCat> cat;
  std::vector<std::vector<int>> objects;    // [g][C] = T(g)C
  std::vector<std::vector<int>> morphisms;  // [g][f] = T(g)f

  int act(Elem g, int object) const { return objects[static_cast<std::size_t>(g)][static_cast<std::size_t>(object)]; }
  int act_mor(Elem g, int f) const { return morphisms[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)]; }
};

Verdict validate_gaction(const GAction& a);
GAction trivial_action(const GroupTable& g, std::shared_ptr<const FinCat> cat);

/// A theory functor together with the group action on its source.
struct CovarianceModel {
  std::string name;
  TheoryFunctor functor;
  GAction action;
};

/// eta[g][C] is a target morphism A(C) -> A(gC).
struct Implementation {
  std::vector<std::vector<int>> eta;
  int at(Elem g, int object) const { return eta[static_cast<std::size_t>(g)][static_cast<std::size_t>(object)]; }
};

/// Natural automorphisms of the theory functor, realized as component
/// families families[i][C] (an automorphism of A(C)). Element 0 is the
/// identity family; the rest follow in lexicographic order of families.
struct GaugeGroup {
  GroupTable group;
  std::vector<std::vector<int>> families;
  std::shared_ptr<const cohomology::Coefficients> coefficients;

  std::optional<Elem> index_of(const std::vector<int>& family) const;
};

GaugeGroup compute_gauge_group(const TheoryFunctor& f, const Limits& limits = {});

/// Invertibility, dom/cod, eta(1) = id and every naturality square. Witness
/// (g, C) or (g, gamma) in the violation named by the verdict.
Verdict validate_implementation(const CovarianceModel& m, const Implementation& impl);

/// xi(g', g)_{g'gC} = eta(g')_{gC} eta(g)_C eta(g'g)_C^-1 and
/// phi(g)(alpha)_{gC} = eta(g)_C alpha_C eta(g)_C^-1, over (G, Aut(A)).
/// Throws NotInGaugeGroup or NotNatural if a computed family is not a gauge
/// element; asserts the result is a normalized cocycle.
Cochain2 extract_cocycle(const CovarianceModel& m, const Implementation& impl, const GaugeGroup& gauge);

/// zeta(g)_{gC} = eta2(g)_C eta1(g)_C^-1; asserts extract(i2) equals the
/// twist of extract(i1) by zeta. Throws NotNatural.
TwistMap compare_implementations(const CovarianceModel& m, const Implementation& i1, const Implementation& i2,
                                 const GaugeGroup& gauge);

/// eta~(g)_C = zeta(g)_{gC} eta(g)_C.
Implementation twist_implementation(const CovarianceModel& m, const Implementation& impl, const GaugeGroup& gauge,
                                    const TwistMap& t);

struct LiftResult {
  CovarianceModel model;  // same functor, E acting through T o q
  Implementation rho;     // rho(alpha, g)_C = alpha_{gC} eta(g)_C
  Cochain2 cocycle;       // over (E, Aut(A)); neutral
};

/// Requires ext to be built from extract_cocycle(m, impl, gauge). Asserts the
/// lifted cocycle is neutral with phi(alpha, g) = ad(alpha) o phi(g).
LiftResult lift_to_extension(const CovarianceModel& m, const Implementation& impl, const GaugeGroup& gauge,
                             const extension::ExtensionGroup& ext);

/// The relations eta(g)_C alpha_C = alpha_{gC} eta(g)_C for every gauge element
/// and eta(g'g)_C = eta(g')_{gC} eta(g)_C.
Verdict check_trivial_relations(const CovarianceModel& m, const Implementation& impl, const GaugeGroup& gauge);

/// psi[g] is a source morphism C0 -> g^-1 C0. Returns
/// Xi(g) = A(T(g) psi_g) o eta(g)_{C0} as automorphisms of A(C0).
/// Throws Eq18Violated (witness g', g) when psi_{g'g} != T(g^-1)psi_{g'} o psi_g,
/// PreconditionFailed when the implementation's xi is not trivial.
std::vector<int> active_passive_compose(const CovarianceModel& m, const Implementation& impl, int c0,
                                        const std::vector<int>& psi);

}  // namespace covlab::covariance
