#include "covlab/cli.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "covlab/covering.hpp"
#include "covlab/extension.hpp"
#include "covlab/field_fixtures.hpp"
#include "covlab/model_fixtures.hpp"
#include "covlab/wick.hpp"

namespace covlab::cli {

using io::json;

namespace {

bool is_input_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError:
    case ErrorKind::SchemaError:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::NoIdentity:
    case ErrorKind::NotInvertible:
    case ErrorKind::NotAssociative:
    case ErrorKind::InvalidCategory:
    case ErrorKind::InvalidFunctor:
    case ErrorKind::InvalidAction:
    case ErrorKind::CapExceeded:
    case ErrorKind::SearchSpaceTooLarge:
    case ErrorKind::SectionInvalid:
    case ErrorKind::NotCentral:
      return true;
    default:
      return false;
  }
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

std::vector<int> parse_list(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::SchemaError, flag);
    }
  }
  return out;
}

// Per-invocation state shared by the verbs.
struct Context {
  RunReport& report;
  std::string input;
  std::optional<io::Document> doc;
  Limits limits = Limits::from_env();

  const io::Document& document() {
    if (!doc) {
      if (input.empty()) {
        doc.emplace();
      } else {
        doc = io::load_document(input);
        report.inputs.emplace_back(input, doc->digest);
      }
    }
    return *doc;
  }

  void builtin(const std::string& kind, const std::string& name) {
    std::string ref = kind + ":" + name;
    for (const auto& [r, d] : report.inputs)
      if (r == ref) return;
    report.inputs.emplace_back(ref, io::fnv1a_hex(ref));
  }

  fingroup::GroupTable group(const std::string& ref, const std::string& flag) {
    const auto& d = document();
    if (auto it = d.groups.find(ref); it != d.groups.end()) return it->second.table;
    auto g = fingroup::named_group(ref);
    if (!g) throw Error(ErrorKind::SchemaError, flag);
    builtin("group", ref);
    return *g;
  }

  template <class Map>
  const typename Map::mapped_type& lookup(const Map& m, const std::string& id, const std::string& flag) {
    auto it = m.find(id);
    if (it == m.end()) throw Error(ErrorKind::SchemaError, flag);
    return it->second;
  }

  fixtures::ModelFixture model_fixture(const std::string& name) {
    auto f = fixtures::model_fixture(name);
    if (!f) throw Error(ErrorKind::SchemaError, "--model");
    builtin("model", name);
    return *f;
  }

  fixtures::FieldFixture field_fixture(const std::string& name) {
    auto f = fixtures::field_fixture(name);
    if (!f) throw Error(ErrorKind::SchemaError, "--field");
    builtin("field", name);
    return *f;
  }
};

json group_summary(const fingroup::GroupTable& g) {
  json j = {{"order", g.order()}, {"abelian", g.is_abelian()}};
  if (auto name = fingroup::identify_group(g)) j["isomorphic_to"] = *name;
  return j;
}

std::string group_label(const fingroup::GroupTable& g) {
  auto name = fingroup::identify_group(g);
  return name ? *name : "an unidentified group of order " + std::to_string(g.order());
}

json twist_json(const cohomology::TwistMap& t) { return t.zeta; }

// Cocycle from --cochain (document), --model (extracted) or --field.
struct CocycleSource {
  std::string cochain, model, field;

  void add(CLI::App& app) {
    app.add_option("--cochain", cochain, "cochain id in the input document");
    app.add_option("--model", model, "built-in covariance model (cocycle of its implementation)");
    app.add_option("--field", field, "built-in field-space fixture");
  }

  cohomology::Cochain2 get(Context& ctx) const {
    if (!cochain.empty()) return ctx.lookup(ctx.document().cochains, cochain, "--cochain");
    if (!model.empty()) {
      auto f = ctx.model_fixture(model);
      auto gauge = covariance::compute_gauge_group(f.model.functor, ctx.limits);
      return covariance::extract_cocycle(f.model, f.impl, gauge);
    }
    if (!field.empty()) return ctx.field_fixture(field).action.cocycle;
    throw Error(ErrorKind::SchemaError, "--cochain");
  }
};

// Model and implementations from --model (fixture) or --impl/--impl2 (document).
struct ModelSource {
  std::string model, impl, impl2;

  void add(CLI::App& app, bool second) {
    app.add_option("--model", model, "built-in covariance model");
    app.add_option("--impl", impl, "implementation id in the input document");
    if (second) app.add_option("--impl2", impl2, "second implementation id");
  }

  struct Loaded {
    covariance::CovarianceModel model;
    covariance::Implementation impl;
    std::optional<covariance::Implementation> alternative;
  };

  Loaded get(Context& ctx) const {
    if (!model.empty()) {
      auto f = ctx.model_fixture(model);
      return {f.model, f.impl, f.alternative};
    }
    if (impl.empty()) throw Error(ErrorKind::SchemaError, "--model");
    const auto& d = ctx.document();
    const auto& i = ctx.lookup(d.implementations, impl, "--impl");
    Loaded out{d.models.at(i.model), i.impl, std::nullopt};
    if (!impl2.empty()) {
      const auto& j = ctx.lookup(d.implementations, impl2, "--impl2");
      if (j.model != i.model) throw Error(ErrorKind::SchemaError, "--impl2");
      out.alternative = j.impl;
    }
    return out;
  }
};

using Handler = std::function<void(Context&)>;
struct Verb {
  std::function<void(CLI::App&)> configure;
  Handler run;
};

// Each verb registers its flags into `app`, then runs after parsing.
std::map<std::string, std::function<Handler(CLI::App&)>> verb_table() {
  std::map<std::string, std::function<Handler(CLI::App&)>> t;

  t["validate-cocycle"] = [](CLI::App& app) -> Handler {
    auto src = std::make_shared<CocycleSource>();
    src->add(app);
    auto normalized = std::make_shared<bool>(false);
    app.add_flag("--normalized", *normalized, "also require normalization");
    return [src, normalized](Context& ctx) {
      auto c = src->get(ctx);
      auto rep = cohomology::validate_cocycle(c, *normalized);
      std::vector<int> witness;
      if (rep.phi_witness) witness = {rep.phi_witness->first, rep.phi_witness->second};
      if (rep.xi_witness) witness = {(*rep.xi_witness)[0], (*rep.xi_witness)[1], (*rep.xi_witness)[2]};
      ctx.report.add({"cocycle", rep.valid, witness, rep.detail});
      ctx.report.result = {{"cochain", io::cochain_json(c)}, {"normalized", rep.normalized}, {"valid", rep.valid}};
      if (rep.valid) ctx.report.summary.push_back(std::string("valid cocycle") + (rep.normalized ? " (normalized)" : ""));
      else ctx.report.summary.push_back("not a cocycle: " + rep.detail);
    };
  };

  t["classify-h2"] = [](CLI::App& app) -> Handler {
    auto g = std::make_shared<std::string>();
    auto a = std::make_shared<std::string>();
    app.add_option("--G", *g, "acting group")->required();
    app.add_option("--A", *a, "coefficient group")->required();
    return [g, a](Context& ctx) {
      auto G = ctx.group(*g, "--G");
      auto A = ctx.group(*a, "--A");
      auto classes = cohomology::classify_h2(G, A, ctx.limits);
      json list = json::array();
      std::vector<std::string> names;
      std::size_t total = 0;
      for (const auto& c : classes) {
        auto e = extension::build_extension(c.representative);
        auto type = extension::classify_type(e, ctx.limits);
        names.push_back(group_label(e.E));
        total += c.size;
        list.push_back({{"representative", io::cochain_json(c.representative)},
                        {"size", c.size},
                        {"distinguished", c.distinguished},
                        {"extension", group_summary(e.E)},
                        {"type", extension::to_string(type.preferred)}});
      }
      ctx.report.add({"classification", true, {}, ""});
      ctx.report.result = {{"G", *g}, {"A", *a}, {"cocycles", total}, {"classes", list}};
      std::string line = std::to_string(classes.size()) + (classes.size() == 1 ? " class" : " classes");
      ctx.report.summary.push_back(line + " (" + std::to_string(total) + " normalized cocycles)");
      std::string ext = "extensions:";
      for (const auto& n : names) ext += " " + n;
      ctx.report.summary.push_back(ext);
    };
  };

  t["build-extension"] = [](CLI::App& app) -> Handler {
    auto src = std::make_shared<CocycleSource>();
    src->add(app);
    return [src](Context& ctx) {
      auto c = src->get(ctx);
      try {
        auto e = extension::build_extension(c);
        ctx.report.add({"extension", true, {}, ""});
        ctx.report.result = {{"E", group_summary(e.E)}, {"table", e.E.rows()}};
        ctx.report.summary.push_back("E has order " + std::to_string(e.E.order()) + ", isomorphic to " +
                                     group_label(e.E));
        try {
          auto type = extension::classify_type(e, ctx.limits);
          json labels = json::array();
          for (auto l : type.labels) labels.push_back(extension::to_string(l));
          ctx.report.result["labels"] = labels;
          ctx.report.result["preferred"] = extension::to_string(type.preferred);
          if (type.direct_witness) ctx.report.result["direct_witness"] = twist_json(*type.direct_witness);
          ctx.report.summary.push_back(std::string("type: ") + extension::to_string(type.preferred));
        } catch (const Error& err) {
          if (err.kind() != ErrorKind::SearchSpaceTooLarge) throw;
          ctx.report.result["preferred"] = nullptr;
          ctx.report.summary.push_back("type: unclassified (" + err.detail() + ")");
        }
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::InvalidCocycle) throw;
        ctx.report.add({"extension", false, err.witness(), err.detail()});
        ctx.report.summary.push_back("cannot build extension: " + err.detail());
      }
    };
  };

  t["gauge-group"] = [](CLI::App& app) -> Handler {
    auto src = std::make_shared<ModelSource>();
    src->add(app, false);
    return [src](Context& ctx) {
      auto m = src->get(ctx);
      auto gauge = covariance::compute_gauge_group(m.model.functor, ctx.limits);
      ctx.report.add({"gauge-group", true, {}, ""});
      ctx.report.result = {{"group", group_summary(gauge.group)}, {"families", gauge.families},
                           {"table", gauge.group.rows()}};
      ctx.report.summary.push_back("gauge group of order " + std::to_string(gauge.group.order()) + ", isomorphic to " +
                                   group_label(gauge.group));
    };
  };

  t["extract-cocycle"] = [](CLI::App& app) -> Handler {
    auto src = std::make_shared<ModelSource>();
    src->add(app, false);
    return [src](Context& ctx) {
      auto m = src->get(ctx);
      auto gauge = covariance::compute_gauge_group(m.model.functor, ctx.limits);
      auto v = covariance::validate_implementation(m.model, m.impl);
      ctx.report.add({"implementation", v.ok, v.witness, v.violation});
      if (!v) return;
      auto c = covariance::extract_cocycle(m.model, m.impl, gauge);
      auto trivial = cohomology::cohomologous(c, cohomology::trivial_cochain(c.G, c.A), ctx.limits);
      ctx.report.add({"cocycle", cohomology::validate_cocycle(c, true).valid, {}, ""});
      ctx.report.result = {{"cochain", io::cochain_json(c)}, {"neutral", cohomology::is_neutral(c)},
                           {"cohomologically_trivial", trivial.has_value()}};
      if (trivial) ctx.report.result["trivializing_twist"] = twist_json(*trivial);
      ctx.report.summary.push_back(std::string("cocycle is ") + (trivial ? "trivial" : "nontrivial") + " in H^2");
    };
  };

  t["compare-impls"] = [](CLI::App& app) -> Handler {
    auto src = std::make_shared<ModelSource>();
    src->add(app, true);
    return [src](Context& ctx) {
      auto m = src->get(ctx);
      if (!m.alternative) throw Error(ErrorKind::SchemaError, "--impl2");
      auto gauge = covariance::compute_gauge_group(m.model.functor, ctx.limits);
      for (const auto* impl : {&m.impl, &*m.alternative}) {
        auto v = covariance::validate_implementation(m.model, *impl);
        ctx.report.add({"implementation", v.ok, v.witness, v.violation});
        if (!v) return;
      }
      auto zeta = covariance::compare_implementations(m.model, m.impl, *m.alternative, gauge);
      ctx.report.add({"cohomologous", true, {}, ""});
      ctx.report.result = {{"zeta", twist_json(zeta)},
                           {"cocycle1", io::cochain_json(covariance::extract_cocycle(m.model, m.impl, gauge))},
                           {"cocycle2", io::cochain_json(covariance::extract_cocycle(m.model, *m.alternative, gauge))}};
      ctx.report.summary.push_back("implementations differ by zeta = [" + join(zeta.zeta) + "]");
    };
  };

  t["lift-extension"] = [](CLI::App& app) -> Handler {
    auto src = std::make_shared<ModelSource>();
    src->add(app, false);
    return [src](Context& ctx) {
      auto m = src->get(ctx);
      auto gauge = covariance::compute_gauge_group(m.model.functor, ctx.limits);
      auto c = covariance::extract_cocycle(m.model, m.impl, gauge);
      auto e = extension::build_extension(c);
      auto lift = covariance::lift_to_extension(m.model, m.impl, gauge, e);
      bool neutral = cohomology::is_neutral(lift.cocycle);
      ctx.report.add({"neutral", neutral, {}, ""});
      ctx.report.result = {{"E", group_summary(e.E)}, {"rho", lift.rho.eta}};
      ctx.report.summary.push_back("lifted to E of order " + std::to_string(e.E.order()) + " (" + group_label(e.E) +
                                   "); lifted cocycle is " + (neutral ? "neutral" : "not neutral"));
    };
  };

  t["verify-multiplet"] = [](CLI::App& app) -> Handler {
    auto field = std::make_shared<std::string>();
    auto action = std::make_shared<std::string>();
    auto k = std::make_shared<int>(0);
    auto coupling = std::make_shared<std::string>("generic");
    auto lambda = std::make_shared<std::string>("2");
    app.add_option("--field", *field, "built-in field-space fixture");
    app.add_option("--action", *action, "field action id in the input document");
    app.add_option("--k", *k, "field power for the scaling multiplet");
    app.add_option("--coupling", *coupling, "minimal, conformal or generic")
        ->check(CLI::IsMember({"minimal", "conformal", "generic"}));
    app.add_option("--lambda", *lambda, "sample scale factor");
    return [=](Context& ctx) {
      if (*k > 0) {
        mpq_class lam;
        try {
          lam = mpq_class(*lambda);
          lam.canonicalize();
        } catch (const std::invalid_argument&) {
          throw Error(ErrorKind::SchemaError, "--lambda");
        }
        auto c = *coupling == "minimal" ? multiplet::Coupling::Minimal
                 : *coupling == "conformal" ? multiplet::Coupling::Conformal
                                            : multiplet::Coupling::Generic;
        ctx.builtin("scaling", "k=" + std::to_string(*k));
        auto sm = multiplet::scaling_multiplet(*k, c, lam);
        json entries = json::array();
        for (const auto& row : sm.entries) {
          json r = json::array();
          for (const auto& e : row) r.push_back(e.to_string());
          entries.push_back(r);
        }
        for (int m = 2; m <= 3; ++m) {
          auto v = multiplet::check_scaling_group_law(*k, c, lam, m);
          ctx.report.add({"group-law-m" + std::to_string(m), v.ok, v.witness, v.violation});
        }
        ctx.report.result = {{"k", *k}, {"dim", sm.dim}, {"coupling", multiplet::to_string(c)},
                             {"entries", entries}, {"sample", io::matrix_json(sm.sample)},
                             {"nilpotent_rank", sm.nilpotent_rank}, {"shape", multiplet::to_string(sm.shape)}};
        ctx.report.summary.push_back(std::to_string(sm.dim) + "-dimensional multiplet, " +
                                     multiplet::to_string(sm.shape));
        return;
      }
      multiplet::FieldSpaceAction a;
      if (!field->empty()) a = ctx.field_fixture(*field).action;
      else if (!action->empty()) a = ctx.lookup(ctx.document().field_actions, *action, "--action");
      else throw Error(ErrorKind::SchemaError, "--field");
      auto v = multiplet::verify_field_action(a);
      ctx.report.add({"field-action", v.ok, v.witness, v.violation});
      if (!v) {
        ctx.report.summary.push_back("field action violates " + v.violation + " at (" + join(v.witness) + ")");
        return;
      }
      auto e = extension::build_extension(a.cocycle);
      auto rho = multiplet::build_rho(a, e);
      auto rv = multiplet::verify_rep(rho);
      ctx.report.add({"rho", rv.ok, rv.witness, rv.violation});
      ctx.report.result = {{"E", group_summary(e.E)}, {"dim", rho.dim},
                           {"irreducible", multiplet::certified_irreducible(rho)}};
      ctx.report.summary.push_back("rho is a representation of E (" + group_label(e.E) + ") on dimension " +
                                   std::to_string(rho.dim));
    };
  };

  t["detect-mixing"] = [](CLI::App& app) -> Handler {
    auto field = std::make_shared<std::string>();
    auto action = std::make_shared<std::string>();
    auto sub1 = std::make_shared<std::string>();
    auto sub2 = std::make_shared<std::string>();
    app.add_option("--field", *field, "built-in field-space fixture");
    app.add_option("--action", *action, "field action id in the input document");
    app.add_option("--sub1", *sub1, "first submultiplet id");
    app.add_option("--sub2", *sub2, "second submultiplet id");
    return [=](Context& ctx) {
      multiplet::FieldSpaceAction a;
      multiplet::Submultiplet s1, s2;
      if (!field->empty()) {
        auto f = ctx.field_fixture(*field);
        if (!f.sub1) throw Error(ErrorKind::SchemaError, "--field");
        a = f.action;
        s1 = *f.sub1;
        s2 = *f.sub2;
      } else {
        const auto& d = ctx.document();
        a = ctx.lookup(d.field_actions, *action, "--action");
        s1 = ctx.lookup(d.submultiplets, *sub1, "--sub1");
        s2 = ctx.lookup(d.submultiplets, *sub2, "--sub2");
      }
      auto e = extension::build_extension(a.cocycle);
      auto rho = multiplet::build_rho(a, e);
      auto r = multiplet::detect_mixing(rho, e, s1, s2, ctx.limits);
      std::vector<int> witness;
      if (r.witness) {
        auto [alpha, g] = e.decode(*r.witness);
        witness = {*r.witness, alpha, g};
      }
      ctx.report.add({"no-mixing", !r.witness.has_value(), witness, r.witness ? "sub-multiplets mix" : ""});
      ctx.report.add({"corollary", !r.corollary_violated, {}, ""});
      ctx.report.result = {{"trivial_cocycle", r.trivial_cocycle},
                           {"sigma1_irreducible", r.sigma1_irreducible},
                           {"sigma2_irreducible", r.sigma2_irreducible},
                           {"equivalent", r.sigmas_equivalent},
                           {"corollary_applies", r.corollary_applies}};
      if (r.witness) ctx.report.result["witness"] = {{"e", witness[0]}, {"alpha", witness[1]}, {"g", witness[2]}};
      ctx.report.summary.push_back(r.witness ? "mixing witness e = " + std::to_string(witness[0]) + " = (" +
                                                   std::to_string(witness[1]) + ", " + std::to_string(witness[2]) + ")"
                                             : "no element of E mixes the sub-multiplets");
    };
  };

  auto cover_of = [](Context& ctx, const std::string& ref) {
    const auto& d = ctx.document();
    if (auto it = d.covers.find(ref); it != d.covers.end()) return it->second;
    auto c = covering::named_cover(ref);
    if (!c) throw Error(ErrorKind::SchemaError, "--cover");
    ctx.builtin("cover", ref);
    return *c;
  };

  t["cover-z"] = [cover_of](CLI::App& app) -> Handler {
    auto cover = std::make_shared<std::string>("Q8->Z2xZ2");
    auto section = std::make_shared<std::string>();
    app.add_option("--cover", *cover, "cover id or built-in cover");
    app.add_option("--section", *section, "section id in the input document (default: all sections)");
    return [=](Context& ctx) {
      auto c = cover_of(ctx, *cover);
      std::vector<covering::Section> secs;
      if (!section->empty()) secs.push_back(ctx.lookup(ctx.document().sections, *section, "--section").section);
      else secs = covering::all_sections(c, ctx.limits);
      auto trivial = cohomology::trivial_cochain(c.L, c.K_coefficients);
      json list = json::array();
      std::optional<cohomology::Cochain2> first;
      bool independent = true;
      int nontrivial = 0;
      for (const auto& s : secs) {
        auto z = covering::z_cocycle(c, s);
        bool triv = cohomology::cohomologous(z, trivial, ctx.limits).has_value();
        nontrivial += triv ? 0 : 1;
        if (!first) first = z;
        else independent = independent && cohomology::cohomologous(*first, z, ctx.limits).has_value();
        list.push_back({{"lift", s.lift}, {"z", io::cochain_json(z)["xi"]}, {"trivial", !triv ? false : true}});
      }
      ctx.report.add({"section-independence", independent, {}, ""});
      ctx.report.result = {{"cover", c.name}, {"kernel", c.K.embedding}, {"sections", list}};
      ctx.report.summary.push_back("z class nontrivial for " + std::to_string(nontrivial) + " of " +
                                   std::to_string(secs.size()) + " sections");
    };
  };

  t["spin-obstruction"] = [cover_of](CLI::App& app) -> Handler {
    auto cover = std::make_shared<std::string>("Q8->Z2xZ2");
    auto rep = std::make_shared<std::string>("spinor");
    auto gauge = std::make_shared<std::string>("Z2");
    auto zeta = std::make_shared<std::string>();
    auto section = std::make_shared<std::string>();
    app.add_option("--cover", *cover, "cover id or built-in cover");
    app.add_option("--rep", *rep, "rep id, or spinor, trivial, char:<si>,<sj> for the Q8 cover");
    app.add_option("--gauge", *gauge, "gauge group");
    app.add_option("--zeta", *zeta, "gauge image of each kernel element, comma separated");
    app.add_option("--section", *section, "section id in the input document");
    return [=](Context& ctx) {
      auto c = cover_of(ctx, *cover);
      auto A = ctx.group(*gauge, "--gauge");
      std::vector<int> z;
      if (!zeta->empty()) {
        z = parse_list(*zeta, "--zeta");
      } else {
        // Default univalence: the nontrivial kernel element goes to the generator of Z2.
        z.assign(c.K.embedding.size(), 0);
        if (z.size() == 2 && A.order() == 2) z[1] = 1;
      }
      multiplet::MatrixRep r;
      const auto& d = ctx.document();
      if (auto it = d.reps.find(*rep); it != d.reps.end()) {
        r = it->second;
      } else if (*rep == "spinor" && c.S == fingroup::quaternion8()) {
        r = covering::q8_spinor();
      } else if (*rep == "trivial") {
        r = multiplet::trivial_rep(c.S);
      } else if (rep->rfind("char:", 0) == 0 && c.S == fingroup::quaternion8()) {
        auto signs = parse_list(rep->substr(5), "--rep");
        if (signs.size() != 2 || std::abs(signs[0]) != 1 || std::abs(signs[1]) != 1)
          throw Error(ErrorKind::SchemaError, "--rep");
        r = covering::q8_character(signs[0], signs[1]);
      } else {
        throw Error(ErrorKind::SchemaError, "--rep");
      }
      if (d.reps.find(*rep) == d.reps.end()) ctx.builtin("rep", *rep);
      covering::Section s = section->empty() ? covering::all_sections(c, ctx.limits).front()
                                             : ctx.lookup(d.sections, *section, "--section").section;
      auto cv = covering::check_centre_hom(c, A, z);
      ctx.report.add({"centre-hom", cv.ok, cv.witness, cv.violation});
      if (!cv) {
        ctx.report.summary.push_back("zeta is not a central homomorphism: " + cv.violation);
        return;
      }
      auto v = covering::spin_obstruction(c, s, cohomology::make_coefficients(A, ctx.limits), z, r, ctx.limits);
      std::vector<int> witness;
      if (v.obstruction) witness = {*v.obstruction};
      ctx.report.add({"descends", v.descends, witness, v.descends ? "" : "kernel acts nontrivially"});
      if (v.inconsistent) ctx.report.add({"consistent", false, witness, "trivial zeta but rep does not descend"});
      else ctx.report.add({"consistent", true, {}, ""});
      auto q = covering::spin_quotient(c, A, z);
      ctx.report.result = {{"cover", c.name}, {"zeta", z}, {"zeta_trivial", v.zeta_trivial},
                           {"induced_cocycle_trivial", v.induced_cocycle_trivial},
                           {"quotient", group_summary(q.quotient.group)}};
      if (v.descended) {
        json mats = json::array();
        for (const auto& m : v.descended->matrices) mats.push_back(io::matrix_json(m));
        ctx.report.result["descended"] = mats;
      }
      ctx.report.summary.push_back(v.descends ? "rep descends to " + group_label(c.L)
                                              : "obstructed: kernel element " + std::to_string(*v.obstruction) +
                                                    " acts nontrivially");
      ctx.report.summary.push_back("(" + group_label(A) + " x " + group_label(c.S) + ") / kernel image is " +
                                   group_label(q.quotient.group));
    };
  };

  t["wick-product"] = [](CLI::App& app) -> Handler {
    auto p = std::make_shared<std::string>();
    auto q = std::make_shared<std::string>();
    app.add_option("--p", *p, "left factor, e.g. Phi^2")->required();
    app.add_option("--q", *q, "right factor")->required();
    return [=](Context& ctx) {
      ctx.builtin("wick", *p + " * " + *q);
      auto prod = wick::wick_product(wick::WickPoly::parse(*p), wick::WickPoly::parse(*q));
      ctx.report.add({"product", true, {}, ""});
      ctx.report.result = {{"product", prod.to_string()}};
      ctx.report.summary.push_back(prod.to_string());
    };
  };

  t["scale-power"] = [](CLI::App& app) -> Handler {
    auto k = std::make_shared<int>(0);
    app.add_option("--k", *k, "field power")->required();
    return [=](Context& ctx) {
      ctx.builtin("wick", "k=" + std::to_string(*k));
      auto p = wick::scale_wick_power(*k);
      ctx.report.add({"closed-form", p == wick::scaling_closed_form(*k), {}, ""});
      ctx.report.result = {{"k", *k}, {"scaled", p.to_string()}};
      ctx.report.summary.push_back("lambda * Phi^" + std::to_string(*k) + " = " + p.to_string());
    };
  };

  t["scaling-cocycle"] = [](CLI::App& app) -> Handler {
    auto lambda = std::make_shared<std::string>("2");
    auto coupling = std::make_shared<bool>(false);
    app.add_option("--lambda", *lambda, "scale factor");
    app.add_flag("--nonzero-coupling", *coupling, "curvature coupling xi != 0");
    return [=](Context& ctx) {
      mpq_class lam;
      try {
        lam = mpq_class(*lambda);
        lam.canonicalize();
      } catch (const std::invalid_argument&) {
        throw Error(ErrorKind::SchemaError, "--lambda");
      }
      ctx.builtin("scaling", "lambda=" + lam.get_str());
      std::vector<wick::GaugeElement> samples;
      for (int s : {1, -1})
        for (const mpq_class& m : {mpq_class(0), mpq_class(1), mpq_class(-3, 2), mpq_class(5, 7)})
          if (!*coupling || m == 0) samples.push_back({s, m});
      auto cert = wick::scaling_cocycle_nontrivial(lam, *coupling);
      auto v = wick::check_scaling_automorphism(lam, samples);
      ctx.report.add({"automorphism", v.ok, v.witness, v.violation});
      json reach = json::array();
      for (const auto& r : cert.reachable) reach.push_back(r.get_str());
      ctx.report.result = {{"lambda", lam.get_str()},
                           {"nontrivial", cert.nontrivial},
                           {"probe", {cert.probe.sigma, cert.probe.mu.get_str()}},
                           {"image", {cert.image.sigma, cert.image.mu.get_str()}},
                           {"reachable", reach},
                           {"explanation", cert.explanation}};
      ctx.report.summary.push_back(std::string("scaling cocycle is ") + (cert.nontrivial ? "nontrivial" : "trivial") +
                                   ": " + cert.explanation);
    };
  };

  return t;
}

}  // namespace

void RunReport::add(VerdictLine v) {
  if (!v.ok && exit_code == 0) exit_code = 1;
  verdicts.push_back(std::move(v));
}

json RunReport::to_json() const {
  json j;
  j["tool"] = "covlab";
  j["version"] = kVersion;
  j["command"] = command;
  json in = json::array();
  for (const auto& [ref, digest] : inputs) in.push_back({{"ref", ref}, {"digest", digest}});
  j["inputs"] = in;
  json vs = json::array();
  for (const auto& v : verdicts) {
    json x = {{"name", v.name}, {"ok", v.ok}};
    if (!v.witness.empty()) x["witness"] = v.witness;
    if (!v.detail.empty()) x["detail"] = v.detail;
    vs.push_back(x);
  }
  j["verdicts"] = vs;
  j["summary"] = summary;
  j["result"] = result;
  if (error) j["error"] = *error;
  if (timing_ms) j["timing_ms"] = *timing_ms;
  j["exit_code"] = exit_code;
  return j;
}

std::string RunReport::to_text() const {
  std::ostringstream os;
  os << "covlab " << kVersion << " " << command << "\n";
  for (const auto& [ref, digest] : inputs) os << "input " << ref << " " << digest << "\n";
  for (const auto& s : summary) os << s << "\n";
  for (const auto& v : verdicts) {
    os << (v.ok ? "PASS " : "FAIL ") << v.name;
    if (!v.witness.empty()) os << " witness=(" << join(v.witness) << ")";
    if (!v.detail.empty()) os << " " << v.detail;
    os << "\n";
  }
  if (error) os << "error: " << *error << "\n";
  if (timing_ms) os << "timing_ms " << *timing_ms << "\n";
  return os.str();
}

std::vector<std::string> verbs() {
  std::vector<std::string> out;
  for (const auto& [name, _] : verb_table()) out.push_back(name);
  return out;
}

RunReport run_command(const std::string& verb, const std::vector<std::string>& args) {
  RunReport report;
  report.command = verb;
  auto table = verb_table();
  auto it = table.find(verb);
  if (it == table.end()) {
    report.error = "unknown command '" + verb + "'";
    report.exit_code = 2;
    return report;
  }
  CLI::App app{"covlab " + verb};
  std::string input;
  bool timing = false;
  app.add_option("--input", input, "JSON input file, - for stdin");
  app.add_flag("--json", report.json_output, "machine-readable output");
  app.add_flag("--timing", timing, "report wall-clock time");
  Handler handler = it->second(app);
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    report.error = app.help();
    report.exit_code = 2;
    return report;
  } catch (const CLI::ParseError& e) {
    report.error = e.what();
    report.exit_code = 2;
    return report;
  }
  Context ctx{report, input, std::nullopt};
  auto start = std::chrono::steady_clock::now();
  try {
    if (!input.empty()) ctx.document();
    handler(ctx);
  } catch (const Error& e) {
    report.error = e.what();
    if (is_input_error(e.kind())) {
      report.exit_code = 2;
    } else {
      report.add({to_string(e.kind()), false, e.witness(), e.detail()});
    }
  } catch (const std::exception& e) {
    report.error = std::string("internal: ") + e.what();
    report.exit_code = 2;
  }
  if (timing)
    report.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  if (argc < 2 || std::string(argv[1]) == "--help" || std::string(argv[1]) == "-h") {
    (argc < 2 ? err : out) << "usage: covlab <command> [options]\ncommands:";
    for (const auto& v : verbs()) (argc < 2 ? err : out) << " " << v;
    (argc < 2 ? err : out) << "\n";
    return argc < 2 ? 2 : 0;
  }
  if (std::string(argv[1]) == "--version") {
    out << "covlab " << kVersion << "\n";
    return 0;
  }
  std::vector<std::string> args(argv + 2, argv + argc);
  auto report = run_command(argv[1], args);
  if (report.json_output) out << report.to_json().dump(2) << "\n";
  else out << report.to_text();
  if (report.error && !report.json_output && report.exit_code == 2) err << "covlab: input error\n";
  return report.exit_code;
}

}  // namespace covlab::cli
