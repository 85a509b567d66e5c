#include "lidzeta/numerics.hpp"

#include <array>
#include <vector>
#include <map>
#include <mutex>
#include <utility>

#include "lidzeta/zeta_engine.hpp"

namespace lidzeta {

namespace bmp = boost::multiprecision;

namespace {

// t / sin t = sum c_i t^(2i) with c_i = (-1)^(i+1) (2^(2i) - 2) B_(2i) / (2i)!.
// Enough terms for the current precision at |t| <= kSeriesThreshold / 2,
// where term i is below 2 (t/pi)^(2i) < 10^(-2.8 i).
std::vector<BigFloat> t_over_sin_t_series() {
  static std::mutex mutex;
  static std::vector<Rational> exact;
  const auto terms = static_cast<std::size_t>(BigFloat::default_precision()) * 10 / 28 + 2;
  std::vector<BigFloat> c;
  {
    const std::lock_guard lock(mutex);
    if (exact.size() < terms) {
      const BernoulliTable b = bernoulli_numbers(static_cast<unsigned>(2 * terms));
      exact.clear();
      for (std::size_t i = 0; i < terms; ++i) {
        const Rational pow2 = Rational(2).pow(static_cast<unsigned>(2 * i));
        const Rational sign(i % 2 == 1 ? 1 : -1);
        exact.push_back(sign * (pow2 - Rational(2)) * b.values[2 * i] * inverse_factorial(static_cast<unsigned>(2 * i)));
      }
    }
    c.reserve(terms);
    for (std::size_t i = 0; i < terms; ++i) c.push_back(to_bigfloat(exact[i]));
  }
  return c;
}

BigFloat composite_gauss(const Integrand& f, const BigFloat& a, const BigFloat& b, unsigned panels) {
  const GaussRule& rule = gauss_legendre_rule(kGaussPanelPoints);
  const BigFloat width = (b - a) / panels;
  const BigFloat half = width / 2;
  BigFloat total = 0;
  for (unsigned p = 0; p < panels; ++p) {
    const BigFloat mid = a + width * p + half;
    BigFloat panel = 0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) panel += rule.weights[i] * f(mid + half * rule.nodes[i]);
    total += panel * half;
  }
  return total;
}

BigFloat composite_simpson(const Integrand& f, const BigFloat& a, const BigFloat& b, unsigned intervals) {
  const BigFloat h = (b - a) / intervals;
  BigFloat odd = 0;
  BigFloat even = 0;
  for (unsigned i = 1; i < intervals; ++i) {
    const BigFloat fx = f(a + h * i);
    if (i % 2 == 1) {
      odd += fx;
    } else {
      even += fx;
    }
  }
  return h / 3 * (f(a) + f(b) + 4 * odd + 2 * even);
}

BigFloat run_rule(const Integrand& f, const BigFloat& a, const BigFloat& b, unsigned nodes, QuadratureMethod method) {
  if (method == QuadratureMethod::GaussLegendre) {
    return composite_gauss(f, a, b, (nodes + kGaussPanelPoints - 1) / kGaussPanelPoints);
  }
  return composite_simpson(f, a, b, nodes + nodes % 2);
}

}  // namespace

std::string to_string(QuadratureMethod method) {
  return method == QuadratureMethod::GaussLegendre ? "gauss-legendre" : "composite-simpson";
}

QuadratureMethod parse_quadrature_method(std::string_view name) {
  if (name == "gauss-legendre") return QuadratureMethod::GaussLegendre;
  if (name == "composite-simpson") return QuadratureMethod::CompositeSimpson;
  throw std::invalid_argument("unknown quadrature method: '" + std::string(name) + "'");
}

KernelWeightedFunction::KernelWeightedFunction(PiScaledPolynomial p) : p_(std::move(p)) {
  if (!p_.base().coeff(0).is_zero()) {
    throw std::invalid_argument("KernelWeightedFunction: numerator must vanish at 0");
  }
  r_ = PiScaledPolynomial(p_.scale() - 1, divide_by_x(p_.base()));
}

BigFloat KernelWeightedFunction::series_branch(const BigFloat& x) const {
  const BigFloat t = x / 2;
  const BigFloat t2 = t * t;
  const std::vector<BigFloat> c = t_over_sin_t_series();
  BigFloat s = 0;
  for (std::size_t i = c.size(); i-- > 0;) s = s * t2 + c[i];
  return s * r_(x);
}

BigFloat KernelWeightedFunction::direct_branch(const BigFloat& x) const { return p_(x) / (2 * bmp::sin(x / 2)); }

BigFloat KernelWeightedFunction::operator()(const BigFloat& x) const {
  return x < kSeriesThreshold ? series_branch(x) : direct_branch(x);
}

KernelWeightedFunction kernel_weighted_integrand(unsigned n) { return KernelWeightedFunction(interpolant(n).poly); }

Integrand::Integrand(Kind kind, PiScaledPolynomial p, unsigned param)
    : kind_(kind), poly_(std::move(p)), param_(param) {
  if (kind_ == Kind::Kernel) kernel_.emplace_back(poly_);
}

Integrand Integrand::polynomial(PiScaledPolynomial p) { return {Kind::Polynomial, std::move(p), 0}; }

Integrand Integrand::cosine(PiScaledPolynomial p, unsigned k) {
  if (k == 0) throw std::invalid_argument("cosine integrand: k must be >= 1");
  return {Kind::Cosine, std::move(p), k};
}

Integrand Integrand::dirichlet(PiScaledPolynomial p, unsigned m) {
  if (m == 0) throw std::invalid_argument("dirichlet integrand: m must be >= 1");
  return {Kind::Dirichlet, std::move(p), m};
}

Integrand Integrand::kernel(PiScaledPolynomial p, unsigned m) {
  if (m == 0) throw std::invalid_argument("kernel integrand: m must be >= 1");
  return {Kind::Kernel, std::move(p), m};
}

Integrand Integrand::from_name(std::string_view name, PiScaledPolynomial p, unsigned param) {
  if (name == "polynomial") return polynomial(std::move(p));
  if (name == "cosine") return cosine(std::move(p), param);
  if (name == "dirichlet") return dirichlet(std::move(p), param);
  if (name == "kernel") return kernel(std::move(p), param);
  throw UnknownIntegrand("unknown integrand: '" + std::string(name) + "'");
}

std::string Integrand::name() const {
  switch (kind_) {
    case Kind::Polynomial: return "polynomial";
    case Kind::Cosine: return "cosine";
    case Kind::Dirichlet: return "dirichlet";
    case Kind::Kernel: return "kernel";
  }
  return "unknown";
}

BigFloat Integrand::operator()(const BigFloat& x) const {
  switch (kind_) {
    case Kind::Polynomial:
      return poly_(x);
    case Kind::Cosine:
      return poly_(x) * bmp::cos(x * param_);
    case Kind::Dirichlet: {
      BigFloat d = BigFloat(1) / 2;
      for (unsigned j = 1; j <= param_; ++j) d += bmp::cos(x * j);
      return poly_(x) * d;
    }
    case Kind::Kernel: {
      const BigFloat freq = BigFloat(2 * param_ + 1) / 2;
      return kernel_.front()(x) * bmp::sin(freq * x);
    }
  }
  return BigFloat(0);
}

PiNumber Integrand::exact_integral_0_pi() const {
  switch (kind_) {
    case Kind::Polynomial:
      return definite_integral_0_pi(poly_);
    case Kind::Cosine:
      return cos_moment_exact(poly_, param_);
    case Kind::Dirichlet:
    case Kind::Kernel: {
      // Both integrands are p(x) times the Dirichlet kernel.
      PiNumber sum = PiNumber(Rational(1, 2)) * definite_integral_0_pi(poly_);
      for (unsigned j = 1; j <= param_; ++j) sum = sum + cos_moment_exact(poly_, j);
      return sum;
    }
  }
  return {};
}

const GaussRule& gauss_legendre_rule(unsigned points) {
  static std::mutex mutex;
  static std::map<std::pair<unsigned, unsigned>, GaussRule> cache;
  const std::lock_guard lock(mutex);
  const auto key = std::make_pair(points, BigFloat::default_precision());
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  GaussRule rule;
  rule.nodes.resize(points);
  rule.weights.resize(points);
  const BigFloat pi = pi_constant();
  const BigFloat tol = bmp::pow(BigFloat(10), -static_cast<int>(BigFloat::default_precision()) + 2);
  // (P_points(x), P_points'(x)) by the three-term recurrence.
  const auto legendre = [points](const BigFloat& x) {
    BigFloat p0 = 1;
    BigFloat p1 = x;
    for (unsigned k = 2; k <= points; ++k) {
      BigFloat p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = std::move(p1);
      p1 = std::move(p2);
    }
    BigFloat derivative = points * (x * p1 - p0) / (x * x - 1);
    return std::make_pair(std::move(p1), std::move(derivative));
  };
  // Roots are symmetric; Newton on the positive half.
  for (unsigned i = 0; i < (points + 1) / 2; ++i) {
    BigFloat x = bmp::cos(pi * (BigFloat(i) + BigFloat(3) / 4) / (BigFloat(points) + BigFloat(1) / 2));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [value, slope] = legendre(x);
      const BigFloat step = value / slope;
      x -= step;
      if (bmp::abs(step) < tol) break;
    }
    const BigFloat derivative = legendre(x).second;
    const BigFloat w = 2 / ((1 - x * x) * derivative * derivative);
    rule.nodes[i] = -x;
    rule.nodes[points - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[points - 1 - i] = w;
  }
  return cache.emplace(key, std::move(rule)).first->second;
}

QuadratureReport quadrature(const Integrand& f, const BigFloat& a, const BigFloat& b, unsigned nodes,
                            QuadratureMethod method) {
  if (!(a < b)) throw std::invalid_argument("quadrature: interval requires a < b");
  if (nodes < 8) throw std::invalid_argument("quadrature: at least 8 nodes required");
  QuadratureReport report;
  report.method = method;
  report.nodes = nodes;
  report.value = run_rule(f, a, b, nodes, method);
  report.estimated_error = bmp::abs(report.value - run_rule(f, a, b, 2 * nodes, method));
  return report;
}

unsigned oscillation_panels(unsigned m, unsigned min_panels) {
  // sin((m+1/2)x) completes (m+1/2)/2 periods on [0, pi]; four panels each.
  return std::max(min_panels, 2 * m + 1);
}

BigFloat dirichlet_kernel_residual(unsigned m, const BigFloat& x) {
  if (!(x > 0) || x > pi_constant()) throw std::domain_error("dirichlet_kernel_residual: x must lie in (0, pi]");
  BigFloat lhs = BigFloat(1) / 2;
  for (unsigned k = 1; k <= m; ++k) lhs += bmp::cos(x * k);
  const BigFloat rhs = bmp::sin(BigFloat(2 * m + 1) / 2 * x) / (2 * bmp::sin(x / 2));
  return bmp::abs(lhs - rhs);
}

BigFloat max_dirichlet_residual(unsigned m, unsigned samples, const Rational& lo, unsigned digits) {
  require_digits(digits);
  if (samples < 2) throw std::invalid_argument("max_dirichlet_residual: need at least two samples");
  const WorkingPrecision guard(digits);
  const BigFloat a = to_bigfloat(lo);
  const BigFloat step = (pi_constant() - a) / (samples - 1);
  BigFloat worst = 0;
  const auto track = [&worst](const BigFloat& r) {
    if (r > worst) worst = r;
  };
  for (unsigned i = 0; i + 1 < samples; ++i) track(dirichlet_kernel_residual(m, a + step * i));
  // The last sample is pi itself, not a rounded a + step * (samples - 1).
  track(dirichlet_kernel_residual(m, pi_constant()));
  return worst;
}

Rational partial_zeta_sum(unsigned n, unsigned m) {
  Rational sum;
  for (unsigned k = 1; k <= m; ++k) sum += Rational(k).pow(2 * n).inverse();
  return sum;
}

std::vector<DecayPoint> riemann_lebesgue_decay(unsigned n, const std::vector<unsigned>& m_values, unsigned digits) {
  if (m_values.empty()) throw std::invalid_argument("riemann_lebesgue_decay: m_values is empty");
  for (std::size_t i = 0; i < m_values.size(); ++i) {
    if (m_values[i] == 0 || (i > 0 && m_values[i] <= m_values[i - 1])) {
      throw std::invalid_argument("riemann_lebesgue_decay: m_values must be positive and strictly increasing");
    }
  }
  require_digits(digits);
  const WorkingPrecision guard(digits);
  const PiScaledPolynomial p = interpolant(n).poly;
  const BigFloat a = 0;
  const BigFloat b = pi_constant();
  std::vector<DecayPoint> out;
  out.reserve(m_values.size());
  for (unsigned m : m_values) {
    const Integrand f = Integrand::kernel(p, m);
    out.push_back({m, composite_gauss(f, a, b, oscillation_panels(m))});
  }
  return out;
}

ConvergenceRow partial_sum_identity_check(unsigned n, unsigned m, unsigned nodes, unsigned digits) {
  if (m == 0) throw std::invalid_argument("partial_sum_identity_check: m must be >= 1");
  require_digits(digits);
  const WorkingPrecision guard(digits);
  const PiScaledPolynomial p = interpolant(n).poly;
  const BigFloat a = 0;
  const BigFloat b = pi_constant();
  const unsigned base_panels = std::max(1u, (nodes + kGaussPanelPoints - 1) / kGaussPanelPoints);

  ConvergenceRow row;
  row.m = m;
  row.partial_sum = to_bigfloat(partial_zeta_sum(n, m));
  row.rhs_constant_term = -composite_gauss(Integrand::polynomial(p), a, b, base_panels) / 2;
  row.rhs_kernel_term = composite_gauss(Integrand::kernel(p, m), a, b, std::max(base_panels, oscillation_panels(m)));
  row.residual = bmp::abs(row.partial_sum - (row.rhs_constant_term + row.rhs_kernel_term));
  return row;
}

}  // namespace lidzeta
