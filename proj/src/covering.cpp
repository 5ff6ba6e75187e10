#include "covlab/covering.hpp"

#include <algorithm>
#include <regex>
#include <stdexcept>

namespace covlab::covering {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

// Position of an S-element inside the sorted kernel embedding.
std::optional<int> kernel_index(const CentralCover& c, Elem s) {
  const auto& emb = c.K.embedding;
  auto it = std::lower_bound(emb.begin(), emb.end(), s);
  if (it == emb.end() || *it != s) return std::nullopt;
  return static_cast<int>(it - emb.begin());
}

}  // namespace

CentralCover make_cover(const GroupTable& s, const GroupTable& l, const std::vector<Elem>& pi, std::string name) {
  fingroup::GroupHom h{s, l, pi};
  auto v = fingroup::check_hom(h);
  if (!v) throw Error(ErrorKind::PreconditionFailed, "pi is not a homomorphism", v.witness);
  auto img = fingroup::image(h);
  for (int x = 0; x < l.order(); ++x)
    if (!std::binary_search(img.begin(), img.end(), x)) throw Error(ErrorKind::PreconditionFailed, "pi is not surjective", {x});
  auto ker = fingroup::kernel(h);
  for (Elem k : ker)
    for (int x = 0; x < s.order(); ++x)
      if (s.mul(k, x) != s.mul(x, k)) throw Error(ErrorKind::NotCentral, "kernel element not central", {k, x});
  CentralCover c;
  c.S = s;
  c.L = l;
  c.pi = pi;
  c.K = fingroup::subgroup(s, ker);
  c.K_coefficients = cohomology::make_coefficients(c.K.group);
  c.name = std::move(name);
  return c;
}

Verdict validate_section(const CentralCover& c, const Section& s) {
  if (static_cast<int>(s.lift.size()) != c.L.order()) return Verdict::fail("Shape");
  for (int l = 0; l < c.L.order(); ++l) {
    Elem x = s.lift[idx(l)];
    if (x < 0 || x >= c.S.order() || c.pi[idx(x)] != l) return Verdict::fail("NotASection", {l});
  }
  if (s.lift[0] != 0) return Verdict::fail("NotNormalized", {0});
  return Verdict::pass();
}

std::vector<Section> all_sections(const CentralCover& c, const Limits& limits) {
  std::vector<std::vector<Elem>> fibres(idx(c.L.order()));
  for (int x = 0; x < c.S.order(); ++x) fibres[idx(c.pi[idx(x)])].push_back(x);
  fibres[0] = {0};
  std::uint64_t total = 1;
  for (const auto& f : fibres) total = std::min<std::uint64_t>(total * f.size(), limits.search_cap + 1);
  if (total > limits.search_cap) throw Error(ErrorKind::SearchSpaceTooLarge, "too many sections");
  std::vector<Section> out;
  std::vector<std::size_t> pos(fibres.size(), 0);
  while (true) {
    Section s;
    for (std::size_t l = 0; l < fibres.size(); ++l) s.lift.push_back(fibres[l][pos[l]]);
    out.push_back(std::move(s));
    // Last coordinate varies fastest, so the output is lexicographic.
    std::size_t l = fibres.size();
    while (l > 0) {
      --l;
      if (++pos[l] < fibres[l].size()) break;
      pos[l] = 0;
      if (l == 0) return out;
    }
  }
}

Cochain2 z_cocycle(const CentralCover& c, const Section& s) {
  auto v = validate_section(c, s);
  if (!v) throw Error(ErrorKind::SectionInvalid, v.violation, v.witness);
  auto z = cohomology::trivial_cochain(c.L, c.K_coefficients);
  const int n = c.L.order();
  for (int l1 = 0; l1 < n; ++l1)
    for (int l = 0; l < n; ++l) {
      Elem val = c.S.mul(c.S.mul(s.lift[idx(l1)], s.lift[idx(l)]), c.S.inv(s.lift[idx(c.L.mul(l1, l))]));
      auto k = kernel_index(c, val);
      if (!k) throw std::logic_error("z value outside the kernel");
      z.xi[idx(l1 * n + l)] = *k;
    }
  auto report = cohomology::validate_cocycle(z, true);
  if (!report.valid) throw std::logic_error("z is not a cocycle: " + report.detail);
  return z;
}

Verdict check_centre_hom(const CentralCover& c, const GroupTable& a, const std::vector<Elem>& zeta) {
  const int nk = c.K.group.order();
  if (static_cast<int>(zeta.size()) != nk) return Verdict::fail("Shape");
  for (Elem z : zeta)
    if (z < 0 || z >= a.order()) return Verdict::fail("Shape");
  for (int k1 = 0; k1 < nk; ++k1)
    for (int k = 0; k < nk; ++k)
      if (zeta[idx(c.K.group.mul(k1, k))] != a.mul(zeta[idx(k1)], zeta[idx(k)]))
        return Verdict::fail("NotHomomorphism", {k1, k});
  for (int k = 0; k < nk; ++k)
    for (int x = 0; x < a.order(); ++x)
      if (a.mul(zeta[idx(k)], x) != a.mul(x, zeta[idx(k)])) return Verdict::fail("NotCentral", {k, x});
  return Verdict::pass();
}

Cochain2 induced_gauge_cocycle(const CentralCover& c, const Section& s, std::shared_ptr<const Coefficients> a,
                               const std::vector<Elem>& zeta) {
  auto v = check_centre_hom(c, a->group, zeta);
  if (!v) {
    if (v.violation == "NotCentral") throw Error(ErrorKind::NotCentral, "zeta(k) is not central", v.witness);
    throw Error(ErrorKind::PreconditionFailed, v.violation, v.witness);
  }
  auto z = z_cocycle(c, s);
  auto out = cohomology::trivial_cochain(c.L, std::move(a));
  for (std::size_t i = 0; i < z.xi.size(); ++i) out.xi[i] = zeta[idx(z.xi[i])];
  auto report = cohomology::validate_cocycle(out, true);
  if (!report.valid) throw std::logic_error("induced cochain is not a cocycle: " + report.detail);
  return out;
}

std::vector<Elem> restrict_to_kernel(const CentralCover& c, const covariance::CovarianceModel& m,
                                     const covariance::Implementation& impl, const covariance::GaugeGroup& gauge) {
  if (!(m.action.G == c.S)) throw Error(ErrorKind::PreconditionFailed, "model is not acted on by the covering group");
  std::vector<Elem> zeta;
  for (Elem k : c.K.embedding) {
    auto idx_family = gauge.index_of(impl.eta[idx(k)]);
    if (!idx_family) throw Error(ErrorKind::NotInGaugeGroup, "eta(k) is not a gauge element", {k});
    zeta.push_back(*idx_family);
  }
  return zeta;
}

SpinVerdict spin_obstruction(const CentralCover& c, const Section& s, std::shared_ptr<const Coefficients> a,
                             const std::vector<Elem>& zeta, const multiplet::MatrixRep& rep, const Limits& limits) {
  if (!(rep.group == c.S)) throw Error(ErrorKind::PreconditionFailed, "rep is not a rep of the covering group");
  auto rv = multiplet::verify_rep(rep);
  if (!rv) throw Error(ErrorKind::PreconditionFailed, "rep invalid: " + rv.violation, rv.witness);
  auto sv = validate_section(c, s);
  if (!sv) throw Error(ErrorKind::PreconditionFailed, "section invalid: " + sv.violation, sv.witness);

  SpinVerdict out;
  const auto one = linalg::Matrix::identity(rep.dim);
  for (Elem k : c.K.embedding)
    if (!(rep(k) == one)) {
      out.obstruction = k;
      break;
    }
  out.descends = !out.obstruction;
  if (out.descends) {
    multiplet::MatrixRep down{c.L, rep.dim, {}};
    for (int l = 0; l < c.L.order(); ++l) down.matrices.push_back(rep(s.lift[idx(l)]));
    if (!multiplet::verify_rep(down)) throw std::logic_error("descended rep is not a representation");
    out.descended = std::move(down);
  }
  out.zeta_trivial = std::all_of(zeta.begin(), zeta.end(), [](Elem z) { return z == 0; });
  auto induced = induced_gauge_cocycle(c, s, a, zeta);
  out.induced_cocycle_trivial =
      cohomology::cohomologous(induced, cohomology::trivial_cochain(c.L, a), limits).has_value();
  if (out.zeta_trivial && !out.induced_cocycle_trivial)
    throw std::logic_error("trivial zeta induced a nontrivial cocycle");
  out.inconsistent = out.zeta_trivial && !out.descends;
  return out;
}

SpinQuotient spin_quotient(const CentralCover& c, const GroupTable& a, const std::vector<Elem>& zeta) {
  auto v = check_centre_hom(c, a, zeta);
  if (!v) throw Error(v.violation == "NotCentral" ? ErrorKind::NotCentral : ErrorKind::PreconditionFailed,
                      v.violation, v.witness);
  SpinQuotient q;
  q.product = fingroup::direct_product(a, c.S);
  for (std::size_t i = 0; i < c.K.embedding.size(); ++i)
    q.identified.push_back(zeta[i] * c.S.order() + c.K.embedding[i]);
  std::sort(q.identified.begin(), q.identified.end());
  q.quotient = fingroup::quotient(q.product, q.identified);
  return q;
}

CentralCover cyclic_cover(int m, int n) {
  if (n <= 0 || m <= 0 || m % n != 0) throw Error(ErrorKind::PreconditionFailed, "cyclic cover needs n | m");
  std::vector<Elem> pi;
  for (int x = 0; x < m; ++x) pi.push_back(x % n);
  return make_cover(fingroup::cyclic(m), fingroup::cyclic(n), pi, "Z" + std::to_string(m) + "->Z" + std::to_string(n));
}

CentralCover q8_cover() {
  return make_cover(fingroup::quaternion8(), fingroup::klein_four(), {0, 0, 1, 1, 2, 2, 3, 3}, "Q8->Z2xZ2");
}

CentralCover split_cover(const GroupTable& k, const GroupTable& l) {
  std::vector<Elem> pi;
  for (int x = 0; x < k.order() * l.order(); ++x) pi.push_back(x % l.order());
  return make_cover(fingroup::direct_product(k, l), l, pi, "split:" + k.name() + "x" + l.name());
}

Section split_section(const CentralCover& c) {
  Section s;
  for (int l = 0; l < c.L.order(); ++l) s.lift.push_back(l);
  return s;
}

multiplet::MatrixRep q8_spinor() {
  using linalg::Matrix;
  using linalg::Scalar;
  return multiplet::rep_from_generators(
      fingroup::quaternion8(), {2, 4},
      {Matrix::from_rows({{Scalar::i(), 0}, {0, -Scalar::i()}}), Matrix::from_rows({{0, 1}, {-1, 0}})});
}

multiplet::MatrixRep q8_character(int si, int sj) {
  using linalg::Matrix;
  return multiplet::rep_from_generators(fingroup::quaternion8(), {2, 4}, {Matrix::scalar(1, si), Matrix::scalar(1, sj)});
}

std::vector<std::string> cover_names() { return {"Q8->Z2xZ2", "Z4->Z2", "Z8->Z4", "Z6->Z3", "split:Z2xZ2"}; }

std::optional<CentralCover> named_cover(const std::string& name) {
  if (name == "Q8->Z2xZ2") return q8_cover();
  std::smatch m;
  static const std::regex cyc(R"(Z(\d+)->Z(\d+))");
  static const std::regex split(R"(split:(\w+)x(\w+))");
  if (std::regex_match(name, m, cyc)) {
    int a = std::stoi(m[1]), b = std::stoi(m[2]);
    if (b <= 0 || a % b != 0 || a > 64) return std::nullopt;
    return cyclic_cover(a, b);
  }
  if (std::regex_match(name, m, split)) {
    auto k = fingroup::named_group(m[1]);
    auto l = fingroup::named_group(m[2]);
    if (!k || !l) return std::nullopt;
    return split_cover(*k, *l);
  }
  return std::nullopt;
}

}  // namespace covlab::covering
