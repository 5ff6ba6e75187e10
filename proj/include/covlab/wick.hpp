#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "covlab/common.hpp"

namespace covlab::wick {

/// Commuting symbols of the single-point model. L stands for log(lambda^2),
/// c for (6 xi - 1)/(96 pi^2), D for a kernel shift, W for the two-point kernel.
enum class Sym { Lambda, C, L, R, W, D, Phi };
constexpr int kNumSyms = 7;
const char* symbol_name(Sym s);

struct Mono {
  std::array<int, kNumSyms> exp{};
  int operator[](Sym s) const { return exp[static_cast<std::size_t>(s)]; }
  int& operator[](Sym s) { return exp[static_cast<std::size_t>(s)]; }
  friend auto operator<=>(const Mono&, const Mono&) = default;
};

/// Terms print with higher field power first.
struct MonoOrder {
  bool operator()(const Mono& a, const Mono& b) const;
};

/// A finite combination of monomials with exact rational coefficients. The
/// ring product treats Phi as an ordinary commuting symbol; the Wick
/// product is wick_product.
class WickPoly {
 public:
  using Terms = std::map<Mono, mpq_class, MonoOrder>;

  WickPoly() = default;
  static WickPoly constant(const mpq_class& q);
  static WickPoly monomial(const mpq_class& q, const Mono& m);
  static WickPoly symbol(Sym s, int power = 1);
  static WickPoly phi(int k) { return symbol(Sym::Phi, k); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True iff no term carries the symbol.
  bool free_of(Sym s) const;

  WickPoly& operator+=(const WickPoly& o);
  WickPoly& operator-=(const WickPoly& o);
  friend WickPoly operator+(WickPoly a, const WickPoly& b) { return a += b; }
  friend WickPoly operator-(WickPoly a, const WickPoly& b) { return a -= b; }
  friend WickPoly operator*(const WickPoly& a, const WickPoly& b);
  friend WickPoly operator*(const mpq_class& q, const WickPoly& a);
  WickPoly operator-() const { return mpq_class(-1) * *this; }
  WickPoly pow(int n) const;
  friend bool operator==(const WickPoly& a, const WickPoly& b) { return a.terms_ == b.terms_; }

  /// Replaces symbol s by the rational q (negative powers need q != 0).
  WickPoly substitute(Sym s, const mpq_class& q) const;
  /// Replaces symbol s by q * s.
  WickPoly rescale(Sym s, const mpq_class& q) const;
  /// Coefficient-ring part multiplying Phi^k, with Phi removed.
  WickPoly coefficient_of_phi(int k) const;

  /// Canonical text, e.g. "1*Phi^4 + 12*c^1*L^1*R^1*Phi^2"; "0" when empty.
  std::string to_string() const;
  /// Inverse of to_string (also accepts omitted exponents and coefficients).
  /// Throws Error{ParseError}.
  static WickPoly parse(const std::string& text);

 private:
  void add_term(const Mono& m, const mpq_class& q);
  Terms terms_;
};

/// j! C(k, j) C(l, j). Throws JTooLarge when j > min(k, l).
mpz_class contraction_coeff(int k, int l, int j);

/// Bilinear extension of Phi^k * Phi^l = sum_j contraction_coeff(k,l,j) W^j Phi^(k+l-2j).
WickPoly wick_product(const WickPoly& p, const WickPoly& q);

/// Rewrites powers ordered with respect to K as powers ordered with respect to
/// K + delta: Phi^k_K = sum_j k!/(j!(k-2j)! 2^j) delta^j Phi^(k-2j)_{K+delta}.
/// delta must not contain Phi.
WickPoly change_of_ordering(const WickPoly& p, const WickPoly& delta = WickPoly::symbol(Sym::D));

/// Scaling exponents in four dimensions.
struct ScaleWeights {
  int dimension = 4;
  int field = -3;          // eta(lambda) multiplies k-fold fields by lambda^(-3k)
  int test_function = -4;  // test functions transform as lambda^(-4)
  int kernel = 6;          // W_{lambda M} = lambda^6 W_M

  /// Net lambda power carried by lambda * Phi^k.
  int wick_power_exponent(int k) const { return k * (field - test_function); }
  /// kernel = 2 |field| and kernel = Green-operator weight (2 from box^-1, 4 from the volume form).
  Verdict check() const;
};

/// lambda^k sum_j k!/(j!(k-2j)!) c^j L^j R^j Phi^(k-2j).
WickPoly scaling_closed_form(int k);

/// lambda * Phi^k, computed as lambda^(weights) times change_of_ordering with
/// delta = 2 c L R (the Hadamard coincidence shift), asserted equal to
/// scaling_closed_form(k). Requires k >= 1.
WickPoly scale_wick_power(int k, const ScaleWeights& weights = {});

/// Element (sigma, mu) of Z2 x| R with (s', m')(s, m) = (s' s, m' s + m).
struct GaugeElement {
  int sigma = 1;
  mpq_class mu = 0;
  friend bool operator==(const GaugeElement& a, const GaugeElement& b) { return a.sigma == b.sigma && a.mu == b.mu; }
};
GaugeElement gauge_mul(const GaugeElement& a, const GaugeElement& b);
GaugeElement gauge_inv(const GaugeElement& a);
/// ad(a)(b) = a b a^-1.
GaugeElement gauge_ad(const GaugeElement& a, const GaugeElement& b);

/// phi(lambda)(sigma, mu) = (sigma, mu / lambda). With nonzero coupling the
/// gauge group is Z2 and mu must be 0. Throws NonPositiveLambda, PreconditionFailed.
GaugeElement gauge_scaling_action(const mpq_class& lambda, const GaugeElement& e, bool nonzero_coupling = false);

/// Checks phi(lambda) is multiplicative and bijective on the sample set.
Verdict check_scaling_automorphism(const mpq_class& lambda, const std::vector<GaugeElement>& samples);

struct ScalingCertificate {
  bool nontrivial = false;
  mpq_class lambda;
  GaugeElement probe;                // (1, 1)
  GaugeElement image;                // phi(lambda)(probe)
  std::vector<mpq_class> reachable;  // factors ad(s', m') can apply to mu
  std::string explanation;
};

/// Shows phi(lambda) is not inner: inner automorphisms rescale mu only by
/// +-1, while phi(lambda) rescales it by 1/lambda. With nonzero coupling the
/// gauge group is Z2, phi(lambda) = id and the cocycle is trivial.
ScalingCertificate scaling_cocycle_nontrivial(const mpq_class& lambda = 2, bool nonzero_coupling = false);

}  // namespace covlab::wick
