#include "covlab/model_fixtures.hpp"

namespace covlab::fixtures {

using covariance::CovarianceModel;
using covariance::FinCat;
using covariance::Implementation;
using fingroup::GroupTable;

namespace {

std::vector<int> iota(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

void require(const Verdict& v, const std::string& what) {
  if (!v) throw std::logic_error(what + ": " + v.violation);
}

}  // namespace

ModelFixture z4_rotation() {
  auto source = std::make_shared<const FinCat>(covariance::discrete_category(1));
  auto target = std::make_shared<const FinCat>(covariance::group_category(fingroup::cyclic(4)));
  ModelFixture f;
  f.model.name = "z4-rotation";
  f.model.functor = {source, target, {0}, {0}};
  f.model.action = covariance::trivial_action(fingroup::cyclic(2), source);
  f.impl.eta = {{0}, {1}};
  f.alternative = Implementation{{{0}, {3}}};
  return f;
}

ModelFixture pair_model() {
  auto source = std::make_shared<const FinCat>(covariance::make_fincat(
      {"C1", "C2"},
      {{"id1", "C1", "C1"}, {"id2", "C2", "C2"}, {"e", "C1", "C1"}, {"m", "C1", "C2"}, {"me", "C1", "C2"}},
      {{"id1", "id1", "id1"}, {"id2", "id2", "id2"}, {"e", "id1", "e"}, {"id1", "e", "e"}, {"e", "e", "id1"},
       {"m", "id1", "m"}, {"id2", "m", "m"}, {"me", "id1", "me"}, {"id2", "me", "me"}, {"m", "e", "me"},
       {"me", "e", "m"}},
      {"id1", "id2"}));
  auto s3 = fingroup::symmetric3();
  auto target = std::make_shared<const FinCat>(covariance::group_category(s3));
  // S3 in lexicographic order: 1 = (1 2) swaps the last two points, 3 = (0 1 2).
  const int t = 1, r = 3;
  ModelFixture f;
  f.model.name = "pair";
  f.model.functor = {source, target, {0, 0}, {0, 0, t, r, s3.mul(r, t)}};
  f.model.action = covariance::trivial_action(fingroup::cyclic(2), source);
  auto gauge = covariance::compute_gauge_group(f.model.functor);
  f.impl.eta = {gauge.families[0], gauge.families.back()};
  return f;
}

ModelFixture s3_identity() {
  auto s3 = fingroup::symmetric3();
  auto cat = std::make_shared<const FinCat>(covariance::group_category(s3));
  ModelFixture f;
  f.model.name = "s3-identity";
  f.model.functor = {cat, cat, {0}, iota(6)};
  f.model.action = covariance::trivial_action(fingroup::cyclic(1), cat);
  f.impl.eta = {{0}};
  return f;
}

ModelFixture swap_model() {
  auto source = std::make_shared<const FinCat>(covariance::make_fincat(
      {"a", "b"}, {{"ida", "a", "a"}, {"idb", "b", "b"}, {"f", "a", "b"}, {"finv", "b", "a"}},
      {{"ida", "ida", "ida"}, {"idb", "idb", "idb"}, {"f", "ida", "f"}, {"idb", "f", "f"}, {"finv", "idb", "finv"},
       {"ida", "finv", "finv"}, {"finv", "f", "ida"}, {"f", "finv", "idb"}},
      {"ida", "idb"}));
  auto target = std::make_shared<const FinCat>(covariance::group_category(fingroup::cyclic(2)));
  ModelFixture f;
  f.model.name = "swap";
  f.model.functor = {source, target, {0, 0}, {0, 0, 1, 1}};
  f.model.action = {fingroup::cyclic(2), source, {{0, 1}, {1, 0}}, {{0, 1, 2, 3}, {1, 0, 3, 2}}};
  f.impl.eta = {{0, 0}, {0, 0}};
  f.alternative = Implementation{{{0, 0}, {1, 1}}};
  return f;
}

ModelFixture spin_groupoid(const GroupTable& s, const GroupTable& l, const std::vector<int>& pi, const GroupTable& h,
                           const std::vector<int>& chi, const std::string& name) {
  const int ns = s.order(), nl = l.order();
  auto cat = std::make_shared<FinCat>();
  for (int x = 0; x < nl; ++x) cat->objects.push_back("l" + std::to_string(x));
  for (int x = 0; x < nl; ++x)
    for (int y = 0; y < ns; ++y)
      cat->morphisms.push_back({"(l" + std::to_string(x) + ",s" + std::to_string(y) + ")", x,
                                l.mul(pi[static_cast<std::size_t>(y)], x)});
  for (int x = 0; x < nl; ++x) cat->identities.push_back(x * ns);
  const int nm = nl * ns;
  cat->comp.assign(static_cast<std::size_t>(nm * nm), -1);
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g) {
      const auto& mf = cat->morphisms[static_cast<std::size_t>(f)];
      const auto& mg = cat->morphisms[static_cast<std::size_t>(g)];
      if (mf.dom == mg.cod) cat->comp[static_cast<std::size_t>(f * nm + g)] = mg.dom * ns + s.mul(f % ns, g % ns);
    }
  std::shared_ptr<const FinCat> source = cat;
  auto target = std::make_shared<const FinCat>(covariance::group_category(h));

  ModelFixture fx;
  fx.model.name = name;
  std::vector<int> fmor;
  for (int f = 0; f < nm; ++f) fmor.push_back(chi[static_cast<std::size_t>(f % ns)]);
  fx.model.functor = {source, target, std::vector<int>(static_cast<std::size_t>(nl), 0), fmor};
  fx.model.action.G = s;
  fx.model.action.cat = source;
  for (int S = 0; S < ns; ++S) {
    std::vector<int> objs, mors;
    for (int x = 0; x < nl; ++x) objs.push_back(l.mul(pi[static_cast<std::size_t>(S)], x));
    for (int f = 0; f < nm; ++f) mors.push_back(objs[static_cast<std::size_t>(f / ns)] * ns + s.conj(S, f % ns));
    fx.model.action.objects.push_back(objs);
    fx.model.action.morphisms.push_back(mors);
  }
  for (int S = 0; S < ns; ++S) fx.impl.eta.push_back(std::vector<int>(static_cast<std::size_t>(nl), chi[static_cast<std::size_t>(S)]));
  require(covariance::validate_fincat(*source), name);
  require(covariance::validate_gaction(fx.model.action), name);
  return fx;
}

ModelFixture spin_q8() {
  return spin_groupoid(fingroup::quaternion8(), fingroup::klein_four(), {0, 0, 1, 1, 2, 2, 3, 3}, fingroup::quaternion8(),
                       iota(8), "spin-q8");
}

ModelFixture frame_model(const GroupTable& g, const GroupTable& l, const std::vector<int>& pi, const GroupTable& h,
                         const std::vector<int>& chi, const std::vector<int>& tau, const std::string& name) {
  const int nl = l.order();
  auto cat = std::make_shared<FinCat>();
  for (int x = 0; x < nl; ++x) cat->objects.push_back("x" + std::to_string(x));
  for (int x = 0; x < nl; ++x)
    for (int m = 0; m < nl; ++m)
      cat->morphisms.push_back({"(x" + std::to_string(x) + ",m" + std::to_string(m) + ")", x, l.mul(x, l.inv(m))});
  for (int x = 0; x < nl; ++x) cat->identities.push_back(x * nl);
  const int nm = nl * nl;
  cat->comp.assign(static_cast<std::size_t>(nm * nm), -1);
  for (int f = 0; f < nm; ++f)
    for (int k = 0; k < nm; ++k) {
      const auto& mf = cat->morphisms[static_cast<std::size_t>(f)];
      const auto& mk = cat->morphisms[static_cast<std::size_t>(k)];
      if (mf.dom == mk.cod) cat->comp[static_cast<std::size_t>(f * nm + k)] = mk.dom * nl + l.mul(f % nl, k % nl);
    }
  std::shared_ptr<const FinCat> source = cat;
  auto target = std::make_shared<const FinCat>(covariance::group_category(h));

  ModelFixture fx;
  fx.model.name = name;
  std::vector<int> fmor;
  for (int f = 0; f < nm; ++f) fmor.push_back(tau[static_cast<std::size_t>(f % nl)]);
  fx.model.functor = {source, target, std::vector<int>(static_cast<std::size_t>(nl), 0), fmor};
  fx.model.action.G = g;
  fx.model.action.cat = source;
  for (int e = 0; e < g.order(); ++e) {
    std::vector<int> objs, mors;
    for (int x = 0; x < nl; ++x) objs.push_back(l.mul(pi[static_cast<std::size_t>(e)], x));
    for (int f = 0; f < nm; ++f) mors.push_back(objs[static_cast<std::size_t>(f / nl)] * nl + f % nl);
    fx.model.action.objects.push_back(objs);
    fx.model.action.morphisms.push_back(mors);
  }
  for (int e = 0; e < g.order(); ++e)
    fx.impl.eta.push_back(std::vector<int>(static_cast<std::size_t>(nl), chi[static_cast<std::size_t>(e)]));
  fx.c0 = 0;
  for (int e = 0; e < g.order(); ++e) fx.psi.push_back(pi[static_cast<std::size_t>(e)]);
  require(covariance::validate_fincat(*source), name);
  require(covariance::validate_gaction(fx.model.action), name);
  return fx;
}

ModelFixture frame_rotation() {
  auto z4 = fingroup::cyclic(4);
  return frame_model(z4, z4, iota(4), z4, iota(4), iota(4), "frame-rotation");
}

ModelFixture frame_kernel() {
  auto z4 = fingroup::cyclic(4);
  return frame_model(z4, fingroup::cyclic(2), {0, 1, 0, 1}, z4, iota(4), {0, 2}, "frame-kernel");
}

std::vector<std::string> model_names() {
  return {"z4-rotation", "pair", "s3-identity", "swap", "spin-q8", "frame-rotation", "frame-kernel"};
}

std::optional<ModelFixture> model_fixture(const std::string& name) {
  if (name == "z4-rotation") return z4_rotation();
  if (name == "pair") return pair_model();
  if (name == "s3-identity") return s3_identity();
  if (name == "swap") return swap_model();
  if (name == "spin-q8") return spin_q8();
  if (name == "frame-rotation") return frame_rotation();
  if (name == "frame-kernel") return frame_kernel();
  return std::nullopt;
}

}  // namespace covlab::fixtures
