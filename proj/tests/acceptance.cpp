// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Exits nonzero when any criterion fails.

#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "covlab/cohomology.hpp"
#include "covlab/covariance.hpp"
#include "covlab/covering.hpp"
#include "covlab/extension.hpp"
#include "covlab/field_fixtures.hpp"
#include "covlab/model_fixtures.hpp"
#include "covlab/multiplet.hpp"
#include "covlab/wick.hpp"
#include "naive_oracle.hpp"
#include "wick_oracle.hpp"

using namespace covlab;
using cohomology::Cochain2;
using cohomology::TwistMap;
using fingroup::GroupTable;

namespace {

// Thrown by expect() with a description of the first broken check.
struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

TwistMap random_twist(std::mt19937& rng, int g_order, int a_order, bool normalized) {
  std::uniform_int_distribution<int> pick(0, a_order - 1);
  TwistMap t;
  for (int g = 0; g < g_order; ++g) t.zeta.push_back(normalized && g == 0 ? 0 : pick(rng));
  return t;
}

// Cocycle law on twisted and extracted cochains.
std::string cocycle_law() {
  std::mt19937 rng(2024);
  int checked = 0;
  auto check = [&](const Cochain2& c, const std::string& where) {
    expect(c.G.order() <= 8 && c.coeff().order() <= 8, where + ": group too large");
    auto r = cohomology::validate_cocycle(c);
    expect(r.valid, where + ": " + r.detail);
    ++checked;
  };

  using P = std::pair<std::string, std::string>;
  for (auto [g, a] : std::vector<P>{{"Z2", "Z2"}, {"Z2", "Z3"}, {"Z2", "Z4"}, {"Z2", "Z2xZ2"}, {"Z2", "S3"},
                                    {"Z3", "Z3"}, {"Z3", "Z2"}, {"Z4", "Z2"}, {"Z2xZ2", "Z2"}}) {
    auto G = *fingroup::named_group(g);
    auto A = cohomology::make_coefficients(*fingroup::named_group(a));
    auto cocycles = cohomology::enumerate_normalized_cocycles(G, A);
    for (std::size_t i = 0; i < cocycles.size() && i < 4; ++i)
      for (int t = 0; t < 2; ++t) {
        auto twist = random_twist(rng, G.order(), A->group.order(), false);
        check(cohomology::coboundary_twist(cocycles[i], twist), g + "/" + a);
      }
  }
  for (auto [g, a] : std::vector<P>{{"S3", "S3"}, {"Q8", "Z4"}, {"D4", "Q8"}, {"Z8", "S3"}}) {
    auto G = *fingroup::named_group(g);
    auto A = cohomology::make_coefficients(*fingroup::named_group(a));
    for (int t = 0; t < 3; ++t)
      check(cohomology::coboundary_twist(cohomology::trivial_cochain(G, A),
                                         random_twist(rng, G.order(), A->group.order(), false)),
            g + "/" + a);
  }
  for (const auto& name : fixtures::model_names()) {
    auto f = *fixtures::model_fixture(name);
    auto gauge = covariance::compute_gauge_group(f.model.functor);
    if (gauge.group.order() > 8) continue;
    check(covariance::extract_cocycle(f.model, f.impl, gauge), name);
    if (f.alternative) check(covariance::extract_cocycle(f.model, *f.alternative, gauge), name + " alternative");
  }
  expect(checked >= 50, "only " + std::to_string(checked) + " cochains");
  return std::to_string(checked) + " cochains valid";
}

// Twisted implementation pairs give cohomologous cocycles related by the
// recovered twist.
std::string twisted_implementations() {
  std::mt19937 rng(77);
  int pairs = 0;
  for (const auto& name : fixtures::model_names()) {
    auto f = *fixtures::model_fixture(name);
    if (f.model.action.G.order() < 2) continue;
    auto gauge = covariance::compute_gauge_group(f.model.functor);
    if (gauge.group.order() < 2) continue;
    auto c1 = covariance::extract_cocycle(f.model, f.impl, gauge);
    for (int trial = 0; trial < 4; ++trial) {
      auto zeta = random_twist(rng, f.model.action.G.order(), gauge.group.order(), true);
      auto twisted = covariance::twist_implementation(f.model, f.impl, gauge, zeta);
      expect(covariance::validate_implementation(f.model, twisted).ok, name + ": twisted implementation invalid");
      auto c2 = covariance::extract_cocycle(f.model, twisted, gauge);
      auto recovered = covariance::compare_implementations(f.model, f.impl, twisted, gauge);
      expect(recovered == zeta, name + ": recovered twist differs");
      expect(cohomology::coboundary_twist(c1, recovered) == c2, name + ": twist relation fails");
      if (saturating_pow(gauge.group.order(), f.model.action.G.order()) <= Limits{}.search_cap)
        expect(cohomology::cohomologous(c1, c2).has_value(), name + ": classes differ");
      ++pairs;
    }
  }
  expect(pairs >= 20, "only " + std::to_string(pairs) + " pairs");
  return std::to_string(pairs) + " pairs";
}

// H^2 classes against extension-equivalence classes, with frozen values from
// the brute-force oracle.
std::string extension_correspondence() {
  struct Case {
    const char* g;
    const char* a;
    int classes;
    int cocycles;
  };
  const Case cases[] = {{"Z2", "Z2", 2, 2}, {"Z2", "Z3", 2, 4}, {"Z3", "Z3", 3, 9}, {"Z2", "Z4", 4, 6}};
  std::ostringstream summary;
  for (const auto& c : cases) {
    std::string where = std::string(c.g) + "/" + c.a;
    auto G = *fingroup::named_group(c.g);
    auto Agrp = *fingroup::named_group(c.a);
    auto A = cohomology::make_coefficients(Agrp);
    auto h2 = cohomology::classify_h2(G, A);
    auto cocycles = cohomology::enumerate_normalized_cocycles(G, A);

    std::vector<extension::ExtensionGroup> reps;
    for (const auto& z : cocycles) {
      auto e = extension::build_extension(z);
      bool seen = false;
      for (const auto& r : reps) seen = seen || extension::extensions_equivalent(e, r).has_value();
      if (!seen) reps.push_back(e);
    }
    const int naive_classes = naive::extension_class_count(G.rows(), Agrp.rows());
    const int naive_cocycles = static_cast<int>(naive::normalized_cocycles(G.rows(), Agrp.rows()).size());

    expect(static_cast<int>(cocycles.size()) == c.cocycles && naive_cocycles == c.cocycles, where + ": cocycle count");
    expect(static_cast<int>(h2.size()) == c.classes, where + ": classify_h2 gives " + std::to_string(h2.size()));
    expect(static_cast<int>(reps.size()) == c.classes, where + ": extension classes " + std::to_string(reps.size()));
    expect(naive_classes == c.classes, where + ": oracle gives " + std::to_string(naive_classes));
    summary << where << "=" << c.classes << " ";
  }
  auto h2 = cohomology::classify_h2(fingroup::cyclic(2), fingroup::cyclic(2));
  std::vector<std::string> names;
  for (const auto& cl : h2) names.push_back(*fingroup::identify_group(extension::build_extension(cl.representative).E));
  std::sort(names.begin(), names.end());
  expect(names == std::vector<std::string>{"Z2xZ2", "Z4"}, "Z2/Z2 extensions are not Z4 and Z2xZ2");
  summary << "(Z4, Z2xZ2)";
  return summary.str();
}

// Lifting to the extension neutralizes the cocycle.
std::string lift_neutral() {
  int fixtures_checked = 0;
  for (const auto& name : fixtures::model_names()) {
    auto f = *fixtures::model_fixture(name);
    auto gauge = covariance::compute_gauge_group(f.model.functor);
    std::vector<covariance::Implementation> impls{f.impl};
    if (f.alternative) impls.push_back(*f.alternative);
    for (const auto& impl : impls) {
      auto c = covariance::extract_cocycle(f.model, impl, gauge);
      auto e = extension::build_extension(c);
      auto lift = covariance::lift_to_extension(f.model, impl, gauge, e);
      const int n = e.E.order();
      for (int e1 = 0; e1 < n; ++e1)
        for (int e2 = 0; e2 < n; ++e2)
          expect(lift.cocycle.xi_at(e1, e2) == 0, name + ": xi_E(" + std::to_string(e1) + "," + std::to_string(e2) + ") != 1");
      expect(covariance::validate_implementation(lift.model, lift.rho).ok, name + ": lifted implementation invalid");
    }
    ++fixtures_checked;
  }
  return std::to_string(fixtures_checked) + " fixtures";
}

// rho is multiplicative on every pair; the field-action equations hold.
std::string rho_homomorphism() {
  int pairs = 0;
  for (const auto& name : fixtures::field_fixture_names()) {
    auto f = *fixtures::field_fixture(name);
    auto v = multiplet::verify_field_action(f.action);
    expect(v.ok, name + ": " + v.violation);
    auto e = extension::build_extension(f.action.cocycle);
    auto rho = multiplet::build_rho(f.action, e);
    const int n = e.E.order();
    expect(rho(0) == linalg::Matrix::identity(rho.dim), name + ": rho(1) != 1");
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y, ++pairs)
        expect(rho(x) * rho(y) == rho(e.E.mul(x, y)), name + ": rho not multiplicative");
  }
  return std::to_string(pairs) + " pairs";
}

// Mixing occurs exactly on the engineered fixtures.
std::string mixing() {
  std::ostringstream summary;
  for (const auto& name : fixtures::field_fixture_names()) {
    auto f = *fixtures::field_fixture(name);
    if (!f.sub1) continue;
    auto e = extension::build_extension(f.action.cocycle);
    auto rho = multiplet::build_rho(f.action, e);
    auto r = multiplet::detect_mixing(rho, e, *f.sub1, *f.sub2);
    bool mixes = false;
    for (int x = 0; x < e.E.order(); ++x)
      mixes = mixes || !(f.sub2->pi * rho(x) * f.sub1->iota).is_zero() || !(f.sub1->pi * rho(x) * f.sub2->iota).is_zero();
    expect(r.witness.has_value() == mixes, name + ": scan disagrees with detect_mixing");
    expect(mixes == f.expect_mixing, name + (mixes ? ": unexpected mixing" : ": no mixing witness"));
    expect(!r.corollary_violated, name + ": corollary violated");
    if (!f.expect_mixing) expect(r.trivial_cocycle, name + ": expected a direct-product fixture");
    summary << name << (mixes ? "=mix " : "=none ");
  }
  for (const char* must : {"equivalent-blocks", "central-z4"}) {
    auto f = *fixtures::field_fixture(must);
    expect(f.expect_mixing, std::string(must) + " is not flagged as mixing");
  }
  return summary.str();
}

// The quaternionic cover and its spinor.
std::string q8_cover() {
  auto c = covering::q8_cover();
  auto sections = covering::all_sections(c);
  auto trivial = cohomology::trivial_cochain(c.L, c.K_coefficients);
  std::optional<Cochain2> first;
  int twisted = 0;
  for (const auto& s : sections) {
    auto z = covering::z_cocycle(c, s);
    expect(!cohomology::cohomologous(z, trivial).has_value(), "z trivial for a section");
    if (first) expect(cohomology::cohomologous(*first, z).has_value(), "z class depends on the section");
    else first = z;
    const int kn = c.K_coefficients->group.order(), ln = c.L.order();
    for (std::uint64_t code = 0; code < saturating_pow(kn, ln); ++code) {
      TwistMap t;
      for (std::uint64_t x = code, g = 0; g < static_cast<std::uint64_t>(ln); ++g, x /= kn) t.zeta.push_back(static_cast<int>(x % kn));
      expect(!cohomology::cohomologous(cohomology::coboundary_twist(z, t), trivial).has_value(), "twisted z trivial");
      ++twisted;
    }
  }
  auto a = cohomology::make_coefficients(fingroup::cyclic(2));
  const std::vector<int> zeta{0, 1};
  auto spinor = covering::spin_obstruction(c, sections.front(), a, zeta, covering::q8_spinor());
  expect(!spinor.descends && spinor.obstruction, "spinor descends");
  const int minus_one = c.K.embedding[1];
  expect(*spinor.obstruction == minus_one, "obstruction is not -1");
  expect(covering::q8_spinor()(minus_one) == linalg::Matrix::scalar(2, -1), "spinor(-1) != -1");
  for (int si : {1, -1})
    for (int sj : {1, -1}) {
      auto v = covering::spin_obstruction(c, sections.front(), a, zeta, covering::q8_character(si, sj));
      expect(v.descends, "a one-dimensional rep does not descend");
    }
  return std::to_string(sections.size()) + " sections, " + std::to_string(twisted) + " twists, obstruction at -1";
}

oracle::Poly to_oracle(const wick::WickPoly& p) {
  using wick::Sym;
  oracle::Poly out;
  for (const auto& [m, q] : p.terms()) {
    expect(m[Sym::C] == m[Sym::L] && m[Sym::L] == m[Sym::R], "c, L, R exponents differ");
    expect(m[Sym::W] == 0 && m[Sym::D] == 0, "unexpected kernel symbol");
    oracle::add(out, {m[Sym::Phi], 0, m[Sym::C]}, q);
  }
  return out;
}

// Scaling of Wick powers against the generating-function oracle.
std::string scaling_law() {
  using wick::Sym;
  using wick::WickPoly;
  for (int k = 1; k <= 8; ++k) {
    auto got = wick::scale_wick_power(k);
    for (const auto& [m, q] : got.terms()) expect(m[Sym::Lambda] == k, "lambda power differs from k");
    expect(to_oracle(got.substitute(Sym::Lambda, 1)) == oracle::generating_coefficient(k),
           "k=" + std::to_string(k) + " differs from the oracle");
    expect(got.substitute(Sym::C, 0) == WickPoly::symbol(Sym::Lambda, k) * WickPoly::phi(k),
           "conformal coupling does not collapse at k=" + std::to_string(k));
  }
  expect(wick::scale_wick_power(1) == WickPoly::symbol(Sym::Lambda) * WickPoly::phi(1), "k=1 not diagonal");
  auto four = wick::scale_wick_power(4);
  auto lam4 = WickPoly::symbol(Sym::Lambda, 4);
  expect(four.coefficient_of_phi(4) == lam4, "Phi^4 coefficient");
  expect(four.coefficient_of_phi(2) == mpq_class(12) * lam4 * WickPoly::parse("c*L*R"), "Phi^2 coefficient");
  expect(four.coefficient_of_phi(0) == mpq_class(12) * lam4 * WickPoly::parse("c^2*L^2*R^2"), "Phi^0 coefficient");
  expect(oracle::generating_coefficient(4) == oracle::Poly{{{4, 0, 0}, 1}, {{2, 0, 1}, 12}, {{0, 0, 2}, 12}},
         "oracle k=4 coefficients");
  return "k<=8, k=4 -> (1, 12, 12)";
}

// The scaling automorphism of the gauge group and its cocycle certificate.
std::string gauge_cocycle() {
  const std::vector<mpq_class> lambdas{mpq_class(2), mpq_class(3), mpq_class(1, 2), mpq_class(5, 3), mpq_class(7, 11),
                                       mpq_class(10), mpq_class(1, 9), mpq_class(13, 4), mpq_class(22, 7),
                                       mpq_class(99, 100)};
  std::vector<wick::GaugeElement> samples;
  for (int s : {1, -1})
    for (const auto& mu : {mpq_class(0), mpq_class(1), mpq_class(-2, 3), mpq_class(7, 5), mpq_class(-4)})
      samples.push_back({s, mu});
  for (const auto& lam : lambdas) {
    auto v = wick::check_scaling_automorphism(lam, samples);
    expect(v.ok, "lambda=" + lam.get_str() + ": " + v.violation);
    auto cert = wick::scaling_cocycle_nontrivial(lam);
    expect(cert.nontrivial, "lambda=" + lam.get_str() + ": no certificate");
    expect(cert.image == wick::GaugeElement{1, 1 / lam}, "certificate image");
    for (const auto& r : cert.reachable) expect(r == 1 || r == -1, "inner rescaling other than +-1");
    expect(!wick::scaling_cocycle_nontrivial(lam, true).nontrivial, "coupling branch not trivial");
  }
  return "10 rationals";
}

// Wick product identities.
std::string wick_product() {
  using wick::Sym;
  using wick::WickPoly;
  auto w = [](int n) { return WickPoly::symbol(Sym::W, n); };
  expect(wick::wick_product(WickPoly::phi(2), WickPoly::phi(2)) ==
             WickPoly::phi(4) + mpq_class(4) * w(1) * WickPoly::phi(2) + mpq_class(2) * w(2),
         "Phi^2 * Phi^2");
  int triples = 0;
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b) {
      auto pa = WickPoly::phi(a), pb = WickPoly::phi(b);
      expect(wick::wick_product(pa, pb) == wick::wick_product(pb, pa), "not commutative");
      for (int c = 0; c <= 5; ++c, ++triples) {
        auto pc = WickPoly::phi(c);
        expect(wick::wick_product(wick::wick_product(pa, pb), pc) == wick::wick_product(pa, wick::wick_product(pb, pc)),
               "not associative at " + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c));
      }
    }
  return std::to_string(triples) + " triples";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
      {"cocycle law on twisted and extracted cochains", cocycle_law},
      {"twisted implementations give cohomologous cocycles", twisted_implementations},
      {"H^2 classes match extension classes", extension_correspondence},
      {"lift to the extension is neutral", lift_neutral},
      {"rho is a homomorphism and the field action is valid", rho_homomorphism},
      {"mixing only on the engineered fixtures", mixing},
      {"Q8 cover: nontrivial z, spinor obstructed", q8_cover},
      {"scaling of Wick powers", scaling_law},
      {"scaling cocycle of the gauge group", gauge_cocycle},
      {"Wick product identities", wick_product},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string status, detail;
    try {
      detail = criteria[i].second();
      status = "PASS";
    } catch (const Failure& f) {
      status = "FAIL";
      detail = f.what;
    } catch (const std::exception& e) {
      status = "FAIL";
      detail = std::string("exception: ") + e.what();
    }
    if (status == "FAIL") ++failures;
    std::cout << status << " " << (i + 1) << " " << criteria[i].first << " (" << detail << ")\n";
  }
  return failures == 0 ? 0 : 1;
}
