#include "covlab/wick.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace covlab::wick {

namespace {

constexpr std::array<Sym, kNumSyms> kAll = {Sym::Lambda, Sym::C, Sym::L, Sym::R, Sym::W, Sym::D, Sym::Phi};

mpz_class factorial(int n) {
  mpz_class r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

mpz_class binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

mpq_class qpow(const mpq_class& q, int e) {
  mpq_class r = 1;
  for (int i = 0; i < (e < 0 ? -e : e); ++i) r *= q;
  if (e < 0) r = 1 / r;
  return r;
}

}  // namespace

const char* symbol_name(Sym s) {
  switch (s) {
    case Sym::Lambda: return "lambda";
    case Sym::C: return "c";
    case Sym::L: return "L";
    case Sym::R: return "R";
    case Sym::W: return "W";
    case Sym::D: return "D";
    case Sym::Phi: return "Phi";
  }
  return "?";
}

bool MonoOrder::operator()(const Mono& a, const Mono& b) const {
  if (a[Sym::Phi] != b[Sym::Phi]) return a[Sym::Phi] > b[Sym::Phi];
  return a.exp < b.exp;
}

void WickPoly::add_term(const Mono& m, const mpq_class& value) {
  mpq_class q = value;
  q.canonicalize();
  if (q == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
}

WickPoly WickPoly::constant(const mpq_class& q) { return monomial(q, Mono{}); }

WickPoly WickPoly::monomial(const mpq_class& q, const Mono& m) {
  WickPoly p;
  p.add_term(m, q);
  return p;
}

WickPoly WickPoly::symbol(Sym s, int power) {
  Mono m;
  m[s] = power;
  return monomial(1, m);
}

bool WickPoly::free_of(Sym s) const {
  for (const auto& [m, q] : terms_)
    if (m[s] != 0) return false;
  return true;
}

WickPoly& WickPoly::operator+=(const WickPoly& o) {
  for (const auto& [m, q] : o.terms_) add_term(m, q);
  return *this;
}

WickPoly& WickPoly::operator-=(const WickPoly& o) {
  for (const auto& [m, q] : o.terms_) add_term(m, -q);
  return *this;
}

WickPoly operator*(const WickPoly& a, const WickPoly& b) {
  WickPoly out;
  for (const auto& [ma, qa] : a.terms_)
    for (const auto& [mb, qb] : b.terms_) {
      Mono m;
      for (std::size_t i = 0; i < kNumSyms; ++i) m.exp[i] = ma.exp[i] + mb.exp[i];
      out.add_term(m, qa * qb);
    }
  return out;
}

WickPoly operator*(const mpq_class& q, const WickPoly& a) {
  WickPoly out;
  for (const auto& [m, c] : a.terms_) out.add_term(m, q * c);
  return out;
}

WickPoly WickPoly::pow(int n) const {
  WickPoly r = constant(1);
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

WickPoly WickPoly::substitute(Sym s, const mpq_class& q) const {
  WickPoly out;
  for (const auto& [key, val] : terms_) {
    Mono m = key;
    mpq_class c = val;
    int e = m[s];
    if (e != 0 && q == 0) {
      if (e < 0) throw Error(ErrorKind::PreconditionFailed, std::string("negative power of ") + symbol_name(s) + " at 0");
      continue;
    }
    c *= qpow(q, e);
    m[s] = 0;
    out.add_term(m, c);
  }
  return out;
}

WickPoly WickPoly::rescale(Sym s, const mpq_class& q) const {
  WickPoly out;
  for (const auto& [m, c] : terms_) out.add_term(m, c * qpow(q, m[s]));
  return out;
}

WickPoly WickPoly::coefficient_of_phi(int k) const {
  WickPoly out;
  for (const auto& [key, c] : terms_)
    if (key[Sym::Phi] == k) {
      Mono m = key;
      m[Sym::Phi] = 0;
      out.add_term(m, c);
    }
  return out;
}

std::string WickPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    mpq_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    os << mag.get_str();
    for (Sym s : kAll)
      if (m[s] != 0 || s == Sym::Phi) os << "*" << symbol_name(s) << "^" << m[s];
  }
  return os.str();
}

WickPoly WickPoly::parse(const std::string& text) {
  auto fail = [&](std::size_t pos, const std::string& why) -> WickPoly {
    throw Error(ErrorKind::ParseError, why + " at offset " + std::to_string(pos), {static_cast<int>(pos)});
  };
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&]() -> std::optional<long> {
    std::size_t start = i;
    if (i < n && (text[i] == '-' || text[i] == '+')) ++i;
    std::size_t digits = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits) {
      i = start;
      return std::nullopt;
    }
    return std::stol(text.substr(start, i - start));
  };

  WickPoly out;
  skip();
  if (text.substr(i) == "0") return out;
  bool expect_term = true;
  int sign = 1;
  if (i < n && text[i] == '-') {
    sign = -1;
    ++i;
  }
  while (true) {
    skip();
    if (!expect_term) break;
    mpq_class coeff = 1;
    Mono mono;
    bool have_factor = false;
    if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::size_t start = i;
      while (i < n && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
      try {
        coeff = mpq_class(text.substr(start, i - start));
      } catch (const std::invalid_argument&) {
        return fail(start, "bad coefficient");
      }
      if (coeff.get_den() == 0) return fail(start, "zero denominator");
      coeff.canonicalize();
      have_factor = true;
    }
    while (true) {
      skip();
      if (have_factor) {
        if (i < n && text[i] == '*') {
          ++i;
          skip();
        } else {
          break;
        }
      }
      std::size_t start = i;
      while (i < n && std::isalpha(static_cast<unsigned char>(text[i]))) ++i;
      std::string name = text.substr(start, i - start);
      if (name.empty()) return fail(start, "expected symbol");
      std::optional<Sym> sym;
      for (Sym s : kAll)
        if (name == symbol_name(s)) sym = s;
      if (!sym) return fail(start, "unknown symbol '" + name + "'");
      int e = 1;
      if (i < n && text[i] == '^') {
        ++i;
        auto v = read_int();
        if (!v) return fail(i, "expected exponent");
        e = static_cast<int>(*v);
        if (e < 0 && *sym != Sym::Lambda) return fail(start, "negative exponent");
      }
      mono[*sym] += e;
      have_factor = true;
    }
    out.add_term(mono, sign * coeff);
    skip();
    if (i == n) break;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    } else {
      return fail(i, "expected '+' or '-'");
    }
  }
  return out;
}

mpz_class contraction_coeff(int k, int l, int j) {
  if (k < 0 || l < 0 || j < 0) throw Error(ErrorKind::PreconditionFailed, "negative argument");
  if (j > std::min(k, l)) throw Error(ErrorKind::JTooLarge, "j exceeds min(k, l)", {k, l, j});
  return factorial(j) * binomial(k, j) * binomial(l, j);
}

WickPoly wick_product(const WickPoly& p, const WickPoly& q) {
  WickPoly out;
  for (const auto& [ma, qa] : p.terms())
    for (const auto& [mb, qb] : q.terms()) {
      const int k = ma[Sym::Phi], l = mb[Sym::Phi];
      Mono base;
      for (std::size_t i = 0; i < kNumSyms; ++i) base.exp[i] = ma.exp[i] + mb.exp[i];
      for (int j = 0; j <= std::min(k, l); ++j) {
        Mono m = base;
        m[Sym::W] += j;
        m[Sym::Phi] = k + l - 2 * j;
        out += WickPoly::monomial(qa * qb * mpq_class(contraction_coeff(k, l, j)), m);
      }
    }
  return out;
}

WickPoly change_of_ordering(const WickPoly& p, const WickPoly& delta) {
  if (!delta.free_of(Sym::Phi)) throw Error(ErrorKind::PreconditionFailed, "kernel shift must not contain Phi");
  WickPoly out;
  for (const auto& [m, q] : p.terms()) {
    const int k = m[Sym::Phi];
    Mono rest = m;
    rest[Sym::Phi] = 0;
    WickPoly prefix = WickPoly::monomial(q, rest);
    WickPoly delta_pow = WickPoly::constant(1);
    for (int j = 0; 2 * j <= k; ++j) {
      mpq_class coeff(factorial(k), factorial(j) * factorial(k - 2 * j) * (mpz_class(1) << static_cast<unsigned>(j)));
      coeff.canonicalize();
      out += coeff * (prefix * delta_pow * WickPoly::phi(k - 2 * j));
      delta_pow = delta_pow * delta;
    }
  }
  return out;
}

Verdict ScaleWeights::check() const {
  if (dimension != 4) return Verdict::fail("only n = 4 is modeled");
  if (kernel != 2 * std::abs(field)) return Verdict::fail("kernel weight != 2 |field weight|");
  // E(f, f') picks up lambda^2 from box^-1 and lambda^4 from the volume form.
  if (kernel != 2 - test_function) return Verdict::fail("kernel weight inconsistent with the commutator");
  return Verdict::pass();
}

WickPoly scaling_closed_form(int k) {
  WickPoly out;
  for (int j = 0; 2 * j <= k; ++j) {
    mpq_class coeff(factorial(k), factorial(j) * factorial(k - 2 * j));
    coeff.canonicalize();
    Mono m;
    m[Sym::Lambda] = k;
    m[Sym::C] = j;
    m[Sym::L] = j;
    m[Sym::R] = j;
    m[Sym::Phi] = k - 2 * j;
    out += WickPoly::monomial(coeff, m);
  }
  return out;
}

WickPoly scale_wick_power(int k, const ScaleWeights& weights) {
  if (k < 1) throw Error(ErrorKind::PreconditionFailed, "k must be positive");
  auto v = weights.check();
  if (!v) throw Error(ErrorKind::PreconditionFailed, v.violation);
  const WickPoly shift = mpq_class(2) * (WickPoly::symbol(Sym::C) * WickPoly::symbol(Sym::L) * WickPoly::symbol(Sym::R));
  WickPoly out = WickPoly::symbol(Sym::Lambda, weights.wick_power_exponent(k)) * change_of_ordering(WickPoly::phi(k), shift);
  if (!(out == scaling_closed_form(k))) throw std::logic_error("scaling law disagrees with its closed form");
  return out;
}

GaugeElement gauge_mul(const GaugeElement& a, const GaugeElement& b) {
  return {a.sigma * b.sigma, a.mu * b.sigma + b.mu};
}

GaugeElement gauge_inv(const GaugeElement& a) { return {a.sigma, -a.mu * a.sigma}; }

GaugeElement gauge_ad(const GaugeElement& a, const GaugeElement& b) { return gauge_mul(gauge_mul(a, b), gauge_inv(a)); }

GaugeElement gauge_scaling_action(const mpq_class& lambda, const GaugeElement& e, bool nonzero_coupling) {
  if (lambda <= 0) throw Error(ErrorKind::NonPositiveLambda, "lambda must be positive");
  if (e.sigma != 1 && e.sigma != -1) throw Error(ErrorKind::PreconditionFailed, "sigma must be +1 or -1");
  if (nonzero_coupling && e.mu != 0) throw Error(ErrorKind::PreconditionFailed, "mu must vanish for nonzero coupling");
  return {e.sigma, e.mu / lambda};
}

Verdict check_scaling_automorphism(const mpq_class& lambda, const std::vector<GaugeElement>& samples) {
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = 0; j < samples.size(); ++j) {
      const auto& a = samples[i];
      const auto& b = samples[j];
      if (!(gauge_scaling_action(lambda, gauge_mul(a, b)) ==
            gauge_mul(gauge_scaling_action(lambda, a), gauge_scaling_action(lambda, b))))
        return Verdict::fail("phi(lambda) is not multiplicative", {static_cast<int>(i), static_cast<int>(j)});
    }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    // The inverse map is phi(1/lambda).
    if (!(gauge_scaling_action(1 / lambda, gauge_scaling_action(lambda, samples[i])) == samples[i]))
      return Verdict::fail("phi(lambda) is not invertible", {static_cast<int>(i)});
  }
  return Verdict::pass();
}

ScalingCertificate scaling_cocycle_nontrivial(const mpq_class& lambda, bool nonzero_coupling) {
  if (lambda <= 0) throw Error(ErrorKind::NonPositiveLambda, "lambda must be positive");
  ScalingCertificate cert;
  cert.lambda = lambda;
  if (nonzero_coupling) {
    cert.probe = {-1, 0};
    cert.image = gauge_scaling_action(lambda, cert.probe, true);
    cert.reachable = {1};
    cert.nontrivial = false;
    cert.explanation = "gauge group is Z2; phi(lambda) fixes both elements, so the cocycle is trivial";
    return cert;
  }
  cert.probe = {1, 1};
  cert.image = gauge_scaling_action(lambda, cert.probe);
  // ad(s', m')(1, mu) = (1, s' mu) for every m'; sample m' to exhibit the independence.
  for (int s : {1, -1})
    for (const mpq_class& m : {mpq_class(0), mpq_class(1), mpq_class(-5, 3)}) {
      auto conj = gauge_ad({s, m}, cert.probe);
      if (conj.sigma != 1) throw std::logic_error("ad moved sigma");
      mpq_class factor = conj.mu / cert.probe.mu;
      if (std::find(cert.reachable.begin(), cert.reachable.end(), factor) == cert.reachable.end())
        cert.reachable.push_back(factor);
    }
  mpq_class needed = cert.image.mu / cert.probe.mu;
  cert.nontrivial = std::find(cert.reachable.begin(), cert.reachable.end(), needed) == cert.reachable.end();
  cert.explanation = cert.nontrivial
                         ? "phi(lambda) rescales mu by " + needed.get_str() +
                               ", but inner automorphisms only rescale it by +1 or -1"
                         : "phi(lambda) is the identity on the mu-line";
  return cert;
}

}  // namespace covlab::wick
