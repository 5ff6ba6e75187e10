#include "covlab/multiplet.hpp"

#include <deque>
#include <random>
#include <stdexcept>

namespace covlab::multiplet {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

}  // namespace

Verdict verify_rep(const MatrixRep& r) {
  const int n = r.group.order();
  if (static_cast<int>(r.matrices.size()) != n || r.dim <= 0) return Verdict::fail("Shape");
  for (int g = 0; g < n; ++g)
    if (r(g).rows() != r.dim || r(g).cols() != r.dim) return Verdict::fail("Shape", {g});
  if (!(r(0) == Matrix::identity(r.dim))) return Verdict::fail("NotIdentity", {0});
  for (int g = 0; g < n; ++g)
    if (r(g).det().is_zero()) return Verdict::fail("NotInvertible", {g});
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (!(r(g) * r(h) == r(r.group.mul(g, h)))) return Verdict::fail("NotMultiplicative", {g, h});
  return Verdict::pass();
}

MatrixRep rep_from_generators(const GroupTable& g, const std::vector<Elem>& gens, const std::vector<Matrix>& images) {
  if (gens.size() != images.size() || images.empty())
    throw Error(ErrorKind::PreconditionFailed, "one image per generator required");
  const int dim = images[0].rows();
  std::vector<std::optional<Matrix>> found(idx(g.order()));
  found[0] = Matrix::identity(dim);
  std::deque<Elem> queue{0};
  while (!queue.empty()) {
    Elem x = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Elem y = g.mul(x, gens[s]);
      Matrix m = *found[idx(x)] * images[s];
      if (!found[idx(y)]) {
        found[idx(y)] = std::move(m);
        queue.push_back(y);
      } else if (!(*found[idx(y)] == m)) {
        throw Error(ErrorKind::PreconditionFailed, "generator images violate a relation", {x, gens[s]});
      }
    }
  }
  MatrixRep r{g, dim, {}};
  for (int x = 0; x < g.order(); ++x) {
    if (!found[idx(x)]) throw Error(ErrorKind::PreconditionFailed, "generators do not generate", {x});
    r.matrices.push_back(*found[idx(x)]);
  }
  auto v = verify_rep(r);
  if (!v) throw Error(ErrorKind::PreconditionFailed, "generated rep invalid: " + v.violation, v.witness);
  return r;
}

MatrixRep trivial_rep(const GroupTable& g, int dim) {
  return {g, dim, std::vector<Matrix>(idx(g.order()), Matrix::identity(dim))};
}

MatrixRep direct_sum(const MatrixRep& a, const MatrixRep& b) {
  if (!(a.group == b.group)) throw Error(ErrorKind::PreconditionFailed, "direct sum of reps of different groups");
  MatrixRep r{a.group, a.dim + b.dim, {}};
  for (int g = 0; g < a.group.order(); ++g) r.matrices.push_back(Matrix::direct_sum(a(g), b(g)));
  return r;
}

MatrixRep conjugate_by(const MatrixRep& r, const Matrix& s) {
  auto inv = s.inverse();
  if (!inv) throw Error(ErrorKind::PreconditionFailed, "conjugating matrix is singular");
  MatrixRep out{r.group, r.dim, {}};
  for (const auto& m : r.matrices) out.matrices.push_back(s * m * *inv);
  return out;
}

Verdict verify_field_action(const FieldSpaceAction& a) {
  const auto& c = a.cocycle;
  const int ng = c.G.order();
  const int na = c.coeff().order();
  if (!(a.dot.group == c.coeff())) return Verdict::fail("Shape");
  if (static_cast<int>(a.star.size()) != ng) return Verdict::fail("Shape");
  auto v = verify_rep(a.dot);
  if (!v) return Verdict::fail(v.violation == "Shape" ? "Shape" : "DotNotRep", v.witness);
  for (int g = 0; g < ng; ++g) {
    const auto& s = a.star[idx(g)];
    if (s.rows() != a.dot.dim || s.cols() != a.dot.dim) return Verdict::fail("Shape", {g});
    if (s.det().is_zero()) return Verdict::fail("StarNotInvertible", {g});
  }
  for (int g = 0; g < ng; ++g)
    for (int x = 0; x < na; ++x)
      if (!(a.star[idx(g)] * a.dot(x) == a.dot(c.phi_at(g)[idx(x)]) * a.star[idx(g)]))
        return Verdict::fail("StarNotCovariant", {g, x});
  for (int g1 = 0; g1 < ng; ++g1)
    for (int g = 0; g < ng; ++g)
      if (!(a.star[idx(g1)] * a.star[idx(g)] == a.dot(c.xi_at(g1, g)) * a.star[idx(c.G.mul(g1, g))]))
        return Verdict::fail("StarProductLaw", {g1, g});
  return Verdict::pass();
}

MatrixRep build_rho(const FieldSpaceAction& a, const extension::ExtensionGroup& e) {
  auto v = verify_field_action(a);
  if (!v) throw Error(ErrorKind::PreconditionFailed, "field action fails " + v.violation, v.witness);
  if (!(e.cocycle == a.cocycle)) throw Error(ErrorKind::PreconditionFailed, "extension built from another cocycle");
  MatrixRep rho{e.E, a.dot.dim, {}};
  for (int x = 0; x < e.E.order(); ++x) {
    auto [alpha, g] = e.decode(x);
    rho.matrices.push_back(a.dot(alpha) * a.star[idx(g)]);
  }
  auto check = verify_rep(rho);
  if (!check) throw std::logic_error("rho is not a representation of the extension: " + check.violation);
  return rho;
}

std::vector<Matrix> intertwiners(const MatrixRep& r1, const MatrixRep& r2) {
  if (!(r1.group == r2.group)) throw Error(ErrorKind::PreconditionFailed, "reps of different groups");
  const int d1 = r1.dim, d2 = r2.dim, n = r1.group.order();
  const int unknowns = d1 * d2;
  Matrix system(n * d2 * d1, unknowns);
  int row = 0;
  for (int g = 0; g < n; ++g) {
    const Matrix& a = r1(g);
    const Matrix& b = r2(g);
    // (R a - b R)(i, j) = sum_k R(i, k) a(k, j) - sum_k b(i, k) R(k, j)
    for (int i = 0; i < d2; ++i)
      for (int j = 0; j < d1; ++j, ++row) {
        for (int k = 0; k < d1; ++k) system.at(row, i * d1 + k) += a.at(k, j);
        for (int k = 0; k < d2; ++k) system.at(row, k * d1 + j) -= b.at(i, k);
      }
  }
  std::vector<Matrix> basis;
  for (const auto& v : system.nullspace()) {
    Matrix r(d2, d1);
    for (int i = 0; i < d2; ++i)
      for (int k = 0; k < d1; ++k) r.at(i, k) = v[idx(i * d1 + k)];
    basis.push_back(std::move(r));
  }
  return basis;
}

std::optional<Matrix> equivalence_witness(const MatrixRep& r1, const MatrixRep& r2, const Limits& limits) {
  if (r1.dim != r2.dim) return std::nullopt;
  auto basis = intertwiners(r1, r2);
  if (basis.empty()) return std::nullopt;
  const int d = r1.dim;
  auto combine = [&](const std::vector<int>& coeffs) {
    Matrix m(d, d);
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (coeffs[b] != 0) m = m + Scalar(coeffs[b]) * basis[b];
    return m;
  };
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> dist(-7, 7);
  std::vector<int> coeffs(basis.size());
  for (int trial = 0; trial < 16; ++trial) {
    for (auto& x : coeffs) x = dist(rng);
    Matrix m = combine(coeffs);
    if (!m.det().is_zero()) return m;
  }
  const auto values = static_cast<std::uint64_t>(d + 1);
  if (saturating_pow(values, basis.size()) > limits.search_cap)
    throw Error(ErrorKind::SearchSpaceTooLarge, "intertwiner grid exceeds cap");
  std::fill(coeffs.begin(), coeffs.end(), 0);
  while (true) {
    Matrix m = combine(coeffs);
    if (!m.det().is_zero()) return m;
    std::size_t pos = 0;
    while (pos < coeffs.size() && coeffs[pos] == d) coeffs[pos++] = 0;
    if (pos == coeffs.size()) break;
    ++coeffs[pos];
  }
  return std::nullopt;
}

bool equivalent(const MatrixRep& r1, const MatrixRep& r2, const Limits& limits) {
  return equivalence_witness(r1, r2, limits).has_value();
}

bool certified_irreducible(const MatrixRep& r) { return intertwiners(r, r).size() == 1; }

MatrixRep conjugate_rep(const MatrixRep& r) {
  MatrixRep out{r.group, r.dim, {}};
  for (const auto& m : r.matrices) out.matrices.push_back(m.conj());
  return out;
}

bool is_self_conjugate(const MatrixRep& r, const Limits& limits) { return equivalent(r, conjugate_rep(r), limits); }

Submultiplet coordinate_block(int total, int offset, int d) {
  Submultiplet s{Matrix(total, d), Matrix(d, total)};
  for (int i = 0; i < d; ++i) {
    s.iota.at(offset + i, i) = 1;
    s.pi.at(i, offset + i) = 1;
  }
  return s;
}

MixingReport detect_mixing(const MatrixRep& rho, const extension::ExtensionGroup& e, const Submultiplet& sub1,
                           const Submultiplet& sub2, const Limits& limits) {
  auto fail = [](const std::string& check, std::vector<int> witness = {}) {
    throw Error(ErrorKind::PreconditionFailed, check, std::move(witness));
  };
  if (!(rho.group == e.E)) fail("Shape");
  const int big = rho.dim;
  for (const auto* s : {&sub1, &sub2}) {
    if (s->iota.rows() != big || s->pi.cols() != big || s->iota.cols() != s->pi.rows()) fail("Shape");
    if (!(s->pi * s->iota == Matrix::identity(s->iota.cols()))) fail("Retraction");
  }
  if (!(sub1.pi * sub2.iota).is_zero() || !(sub2.pi * sub1.iota).is_zero()) fail("Disjoint");

  MixingReport report;
  const int ng = e.cocycle.G.order();
  for (auto [s, sigma] : {std::pair{&sub1, &report.sigma1}, std::pair{&sub2, &report.sigma2}}) {
    sigma->group = e.cocycle.G;
    sigma->dim = s->iota.cols();
    for (int g = 0; g < ng; ++g) {
      const Matrix& r = rho(e.encode(0, g));
      Matrix m = s->pi * r * s->iota;
      if (!(r * s->iota == s->iota * m)) fail("Invariant", {g});
      if (!(s->pi * r == m * s->pi)) fail("Equivariant", {g});
      sigma->matrices.push_back(std::move(m));
    }
  }
  for (int x = 0; x < e.E.order(); ++x) {
    const Matrix& r = rho(x);
    if (!(sub1.pi * r * sub2.iota).is_zero() || !(sub2.pi * r * sub1.iota).is_zero()) {
      report.witness = x;
      break;
    }
  }
  report.sigma1_irreducible = certified_irreducible(report.sigma1);
  report.sigma2_irreducible = certified_irreducible(report.sigma2);
  report.sigmas_equivalent = equivalent(report.sigma1, report.sigma2, limits);
  report.trivial_cocycle = e.cocycle == cohomology::trivial_cochain(e.cocycle.G, e.cocycle.A);
  report.corollary_applies =
      report.trivial_cocycle && report.sigma1_irreducible && report.sigma2_irreducible && !report.sigmas_equivalent;
  report.corollary_violated = report.corollary_applies && report.witness.has_value();
  return report;
}

const char* to_string(Coupling c) {
  switch (c) {
    case Coupling::Minimal: return "minimal";
    case Coupling::Conformal: return "conformal";
    case Coupling::Generic: return "generic";
  }
  return "?";
}

const char* to_string(MultipletShape s) {
  switch (s) {
    case MultipletShape::Diagonal: return "diagonal";
    case MultipletShape::Indecomposable: return "indecomposable";
    case MultipletShape::Decomposable: return "decomposable";
  }
  return "?";
}

namespace {

Matrix sample_matrix(const std::vector<std::vector<wick::WickPoly>>& entries, const mpq_class& lambda,
                     const mpq_class& c, const mpq_class& log_symbol) {
  using wick::Sym;
  const int dim = static_cast<int>(entries.size());
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      auto v = entries[idx(i)][idx(j)].substitute(Sym::Lambda, lambda).substitute(Sym::C, c).substitute(Sym::L, log_symbol);
      if (!v.free_of(Sym::R) || !v.free_of(Sym::W) || !v.free_of(Sym::D) || !v.free_of(Sym::Phi))
        throw std::logic_error("scaling entry is not a scalar");
      mpq_class q = 0;
      if (!v.is_zero()) q = v.terms().begin()->second;
      m.at(i, j) = Scalar(q);
    }
  return m;
}

std::vector<std::vector<wick::WickPoly>> scaling_entries(int k, Coupling coupling) {
  using wick::Sym;
  using wick::WickPoly;
  const int dim = k / 2 + 1;
  std::vector<std::vector<WickPoly>> entries(idx(dim), std::vector<WickPoly>(idx(dim)));
  for (int j = 0; j < dim; ++j) {
    const int m = k - 2 * j;
    // lambda * (R^j Phi^m) = lambda^(2j) R^j (lambda * Phi^m); R carries weight 2.
    WickPoly image = m == 0 ? WickPoly::constant(1) : wick::scale_wick_power(m);
    image = WickPoly::symbol(Sym::Lambda, 2 * j) * WickPoly::symbol(Sym::R, j) * image;
    if (coupling == Coupling::Conformal) image = image.substitute(Sym::C, 0);
    for (const auto& [mono, q] : image.terms()) {
      const int i = mono[Sym::R];
      if (mono[Sym::Phi] != k - 2 * i) throw std::logic_error("scaling image leaves the multiplet");
      wick::Mono rest = mono;
      rest[Sym::R] = 0;
      rest[Sym::Phi] = 0;
      entries[idx(i)][idx(j)] += WickPoly::monomial(q, rest);
    }
  }
  return entries;
}

}  // namespace

ScalingMultiplet scaling_multiplet(int k, Coupling coupling, const mpq_class& lambda) {
  if (k < 1) throw Error(ErrorKind::PreconditionFailed, "k must be positive");
  if (lambda <= 0) throw Error(ErrorKind::NonPositiveLambda, "lambda must be positive");
  if (lambda == 1) throw Error(ErrorKind::PreconditionFailed, "sample lambda must differ from 1");
  ScalingMultiplet out;
  out.k = k;
  out.dim = k / 2 + 1;
  out.coupling = coupling;
  out.lambda = lambda;
  out.entries = scaling_entries(k, coupling);
  const mpq_class c = coupling == Coupling::Conformal ? 0 : 1;
  out.sample = sample_matrix(out.entries, lambda, c, 1);
  mpq_class top = 1;
  for (int i = 0; i < k; ++i) top *= lambda;
  out.nilpotent_rank = (out.sample - Matrix::scalar(out.dim, Scalar(top))).rank();
  if (out.nilpotent_rank == 0) out.shape = MultipletShape::Diagonal;
  else if (out.nilpotent_rank == out.dim - 1) out.shape = MultipletShape::Indecomposable;
  else out.shape = MultipletShape::Decomposable;
  return out;
}

Verdict check_scaling_group_law(int k, Coupling coupling, const mpq_class& lambda, int m) {
  if (m < 1) throw Error(ErrorKind::PreconditionFailed, "m must be positive");
  auto entries = scaling_entries(k, coupling);
  const mpq_class c = coupling == Coupling::Conformal ? 0 : 1;
  Matrix base = sample_matrix(entries, lambda, c, 1);
  mpq_class lm = 1;
  for (int i = 0; i < m; ++i) lm *= lambda;
  Matrix expected = sample_matrix(entries, lm, c, m);
  if (!(base.pow(m) == expected)) return Verdict::fail("M(lambda)^m != M(lambda^m)", {k, m});
  return Verdict::pass();
}

}  // namespace covlab::multiplet
