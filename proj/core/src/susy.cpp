#include "ginibre/susy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ginibre/errors.hpp"
#include "ginibre/parallel.hpp"
#include "ginibre/quadrature.hpp"

namespace ginibre {

namespace {

using cd = std::complex<double>;

constexpr double kFirstPanel = 0.05;
constexpr int kContourPanelNodes = 16;

void check_xi(cd xi, const char* who) {
  if (xi == cd(0.0) || xi == cd(-1.0)) {
    throw DomainError(std::string(who) + ": xi must avoid the poles 0 and -1");
  }
}

void check_a_tau(double a, double tau, const char* who) {
  if (!(a > 0.0)) throw DomainError(std::string(who) + ": a must be positive");
  if (!(tau > 0.0)) throw DomainError(std::string(who) + ": tau must be positive");
}

cd ipow(cd base, int n) {
  cd result(1.0);
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

struct Polys {
  cd p200, p100, p220, p120, p201, p101, p221, p202;
};

Polys all_polys(double a, double t, cd x) {
  const double a2 = a * a, a3 = a2 * a, a4 = a3 * a, t2 = t * t;
  const cd x2 = x * x, x3 = x2 * x, x4 = x3 * x;
  Polys p;
  p.p200 = a4 * t2 + 2.0 * a3 * x * t + 4.0 * a3 * t - a2 * x2 * t + 4.0 * a2 * x2 + 8.0 * a2 * x +
           2.0 * a2 * t + 4.0 * a2 + 2.0 * a * x3 + 8.0 * a * x2 + 10.0 * a * x + 4.0 * a + x4 +
           4.0 * x3 + 6.0 * x2 + 4.0 * x + 1.0;
  p.p100 = -a4 * x * t2 + a4 * t2 - 2.0 * a3 * x2 * t - 2.0 * a3 * x * t + 4.0 * a3 * t -
           a2 * x3 * t - 3.0 * a2 * x2 * t - 2.0 * a2 * x * t + 4.0 * a2 * x + 2.0 * a2 * t +
           4.0 * a2 + 2.0 * a * x2 + 6.0 * a * x + 4.0 * a + x3 + 3.0 * x2 + 3.0 * x + 1.0;
  p.p220 = 4.0 * (a + 1.0) * (a2 * t + a * x * t + 2.0 * a * t + x2 + 2.0 * x + 1.0);
  p.p120 = 4.0 * (a + 1.0) * (a2 * t + a * x * t + 2.0 * a * t + x + 1.0);
  p.p201 = 2.0 * (a3 * t2 + 2.0 * a2 * x * t + 4.0 * a2 * t + 2.0 * a * x2 + 2.0 * a * x * t +
                  4.0 * a * x + 3.0 * a * t + 2.0 * a + x3 + 4.0 * x2 + 5.0 * x + 2.0);
  p.p101 = 2.0 * (a3 * t2 + 2.0 * a2 * x * t + 4.0 * a2 * t + a * x2 * t + 3.0 * a * x * t +
                  2.0 * a * x + 3.0 * a * t + 2.0 * a + x2 + 3.0 * x + 2.0);
  p.p221 = 4.0 * (a + 1.0) * (a + x + 2.0);
  p.p202 = a2 * t + 2.0 * a * x + 4.0 * a + x2 + 4.0 * x + 4.0;
  return p;
}

cd gn_unchecked(double a, double tau, double n, double eta, double delta, cd x, GForm form) {
  const Polys p = all_polys(a, tau, x);
  const cd x1 = x + 1.0;
  const cd ax = a * x;
  const double n2 = n * n, eta2 = eta * eta;
  const cd tail_power = form == GForm::cubic_p220 ? x1 * x1 * x1 : x1;
  const cd s = n2 * p.p200 / (a * ax * x * x1 * x1 * tau) - n * p.p100 / (a * ax * x * x1 * tau) +
               delta * n2 * p.p201 / (ax * x1 * x1 * tau) - n * delta * p.p101 / (ax * x1 * tau) +
               n2 * delta * delta * p.p202 / (x1 * x1) +
               n2 * eta2 * p.p220 / (ax * tail_power * tau) - n * eta2 * p.p120 / (ax * tau) +
               n2 * eta2 * delta * p.p221 / x1;
  const double d = a * a * tau + 2.0 * a + 1.0;
  return s / (d * d * x1 * x1);
}

double g_unchecked(double a, double tau, double eta, double e, double z2) {
  const double d = 1.0 + 2.0 * a + a * a * tau;
  return e * a + 0.5 * std::log(d) - std::log(a) - 0.5 * std::log(tau) -
         (z2 * (1.0 + a) - 2.0 * eta * eta * a * a * (1.0 - tau)) / d;
}

// (1 + xi)^N xi^{-N} e^{N E xi - N z2 / (1 + xi)}
cd xi_weight(cd xi, int n, double e, double z2) {
  const double nd = n;
  return ipow((1.0 + xi) / xi, n) * std::exp(nd * e * xi - nd * z2 / (1.0 + xi));
}

std::vector<ContourNode> circle_nodes(double r, int m) {
  std::vector<ContourNode> out(m);
  for (int k = 0; k < m; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / m;
    const cd xi = std::polar(r, theta);
    out[k] = {xi, cd(0.0, 1.0) * xi * (2.0 * std::numbers::pi / m)};
  }
  return out;
}

int panel_count(int nodes) { return std::max(1, (nodes + kContourPanelNodes - 1) / kContourPanelNodes); }

std::vector<double> uniform_edges(double lo, double hi, int panels) {
  std::vector<double> edges(panels + 1);
  for (int i = 0; i <= panels; ++i) edges[i] = lo + (hi - lo) * i / panels;
  return edges;
}

std::vector<ContourNode> gamma_star_nodes(double modulus, int m) {
  const double psi = gamma_star_psi(modulus);
  const double half_height = std::sqrt(std::max(0.0, modulus * modulus - 4.0 / 9.0));
  const double arc_angle = std::numbers::pi - psi;
  const double arc_length = 2.0 * arc_angle * modulus;
  const double seg_length = 2.0 * half_height;
  const int m_arc = std::max(kContourPanelNodes,
                             static_cast<int>(std::lround(m * arc_length / (arc_length + seg_length))));
  const int m_seg = std::max(kContourPanelNodes, m - m_arc);
  const QuadratureRule base = gauss_legendre(kContourPanelNodes);

  std::vector<ContourNode> out;
  // Arc from angle -(pi - psi) up to (pi - psi) through the positive real axis.
  const QuadratureRule arc =
      composite(base, uniform_edges(-arc_angle, arc_angle, panel_count(m_arc)));
  for (std::size_t i = 0; i < arc.nodes.size(); ++i) {
    const cd xi = std::polar(modulus, arc.nodes[i]);
    out.push_back({xi, cd(0.0, 1.0) * xi * arc.weights[i]});
  }
  // Segment from -2/3 + i h down to -2/3 - i h.
  if (half_height > 0.0) {
    const QuadratureRule seg =
        composite(base, uniform_edges(-half_height, half_height, panel_count(m_seg)));
    for (std::size_t i = seg.nodes.size(); i-- > 0;) {
      out.push_back({cd(-2.0 / 3.0, seg.nodes[i]), cd(0.0, -seg.weights[i])});
    }
  }
  return out;
}

struct AGrid {
  QuadratureRule rule;
  double a_max = 0.0;
  double tail = 0.0;
};

double envelope_log(double a, int n, double e, double z2) {
  return -n * g_unchecked(a, 1.0, 0.0, e, z2);
}

AGrid build_a_grid(const SusyParams& p, const QuadSpec& q) {
  const double z2 = std::norm(p.z);
  AGrid grid;
  double a_max = q.a_max ? *q.a_max : std::max(50.0, 10.0 / (p.n * p.e));
  // Peak of the envelope e^{-N g(a, 1, 0)} on a logarithmic scan.
  double peak = -std::numeric_limits<double>::infinity();
  for (double a = 1e-4; a <= a_max; a *= 1.05) peak = std::max(peak, envelope_log(a, p.n, p.e, z2));
  const double log_tol = std::log(q.tol);
  if (!q.a_max) {
    while (envelope_log(a_max, p.n, p.e, z2) - peak > log_tol && a_max < 1e12) a_max *= 2.0;
  }
  grid.a_max = a_max;
  grid.tail = std::exp(envelope_log(a_max, p.n, p.e, z2) - peak);

  std::vector<double> edges{0.0};
  for (double edge = std::min(kFirstPanel, a_max); edges.back() < a_max; edge *= 2.0) {
    edges.push_back(std::min(edge, a_max));
  }
  grid.rule = composite(gauss_legendre(q.n_a), edges);
  return grid;
}

void validate(const SusyParams& p, const QuadSpec& q) {
  if (p.n < 2) throw ArgumentError("susy_trace: the representation requires N >= 2");
  if (!(p.e > 0.0)) throw ArgumentError("susy_trace: E must be positive");
  if (q.n_a < 8 || q.n_tau < 8 || q.contour.nodes < 8) {
    throw ArgumentError("susy_trace: node counts must be at least 8");
  }
  if (q.a_max && !(*q.a_max > 0.0)) throw ArgumentError("susy_trace: a_max must be positive");
  if (!(q.tol > 0.0)) throw ArgumentError("susy_trace: tol must be positive");
}

class TripleIntegral {
 public:
  TripleIntegral(const SusyParams& p, const QuadSpec& q, const AGrid& a_grid)
      : p_(p), q_(q), a_(a_grid.rule) {
    const QuadratureRule u = gauss_legendre(q.n_tau, 0.0, 1.0);
    const double z2 = std::norm(p.z);
    const double eta = p.z.imag();
    // Everything independent of xi: a-weight, d tau = 2u du, tau^{-1/2} = 1/u,
    // and e^{-N g}. The factor a of the measure is included here as well.
    points_.reserve(a_.nodes.size() * u.nodes.size());
    for (std::size_t j = 0; j < a_.nodes.size(); ++j) {
      const double a = a_.nodes[j];
      for (std::size_t l = 0; l < u.nodes.size(); ++l) {
        const double tau = u.nodes[l] * u.nodes[l];
        const double w = a_.weights[j] * u.weights[l] * 2.0 * a *
                         std::exp(-p.n * g_unchecked(a, tau, eta, p.e, z2));
        if (w != 0.0) points_.push_back({a, tau, w});
      }
    }
  }

  cd evaluate(const std::vector<ContourNode>& contour) {
    const double z2 = std::norm(p_.z);
    const double eta = p_.z.imag();
    const double delta = 1.0 - z2;
    std::vector<cd> partial(contour.size());
    parallel_for(contour.size(), q_.threads, [&](std::size_t k) {
      const cd xi = contour[k].node;
      cd inner(0.0);
      for (const auto& pt : points_) {
        inner += pt.weight * gn_unchecked(pt.a, pt.tau, p_.n, eta, delta, xi, q_.form);
      }
      partial[k] = contour[k].weight * xi * xi * xi_weight(xi, p_.n, p_.e, z2) * inner;
    });
    evaluations_ += contour.size() * points_.size();
    cd sum(0.0);
    for (const cd& v : partial) sum += v;
    return static_cast<double>(p_.n) / (4.0 * std::numbers::pi * cd(0.0, 1.0)) * sum;
  }

  std::uint64_t evaluations() const { return evaluations_; }

 private:
  struct Point {
    double a, tau, weight;
  };
  const SusyParams& p_;
  const QuadSpec& q_;
  const QuadratureRule& a_;
  std::vector<Point> points_;
  std::uint64_t evaluations_ = 0;
};

}  // namespace

std::complex<double> eval_f(std::complex<double> xi, double e, double z2) {
  check_xi(xi, "eval_f");
  return e * xi + std::log(1.0 + xi) - std::log(xi) - z2 / (1.0 + xi);
}

double eval_g(double a, double tau, double eta, double e, double z2) {
  check_a_tau(a, tau, "eval_g");
  return g_unchecked(a, tau, eta, e, z2);
}

std::complex<double> eval_poly(Poly index, double a, double tau, std::complex<double> xi) {
  const Polys p = all_polys(a, tau, xi);
  switch (index) {
    case Poly::p200: return p.p200;
    case Poly::p100: return p.p100;
    case Poly::p220: return p.p220;
    case Poly::p120: return p.p120;
    case Poly::p201: return p.p201;
    case Poly::p101: return p.p101;
    case Poly::p221: return p.p221;
    case Poly::p202: return p.p202;
  }
  throw ArgumentError("eval_poly: unknown polynomial index");
}

std::complex<double> eval_G(double a, double tau, std::complex<double> xi, int n, double eta,
                            double delta, GForm form) {
  check_xi(xi, "eval_G");
  check_a_tau(a, tau, "eval_G");
  return gn_unchecked(a, tau, static_cast<double>(n), eta, delta, xi, form);
}

std::complex<double> exp_weight(std::complex<double> xi, double a, double tau, int n, double e,
                                double z2, double eta) {
  check_xi(xi, "exp_weight");
  check_a_tau(a, tau, "exp_weight");
  if (n < 1) throw ArgumentError("exp_weight: N must be positive");
  return xi_weight(xi, n, e, z2) * std::exp(-n * g_unchecked(a, tau, eta, e, z2));
}

double gamma_star_psi(double z_star_modulus) {
  if (!(z_star_modulus >= 2.0 / 3.0)) {
    throw ArgumentError("gamma_star: |z_*| must be at least 2/3");
  }
  return std::acos(std::min(1.0, 2.0 / (3.0 * z_star_modulus)));
}

std::vector<ContourNode> build_contour(const ContourSpec& spec) {
  if (spec.nodes < 8) throw ArgumentError("build_contour: at least 8 nodes required");
  switch (spec.kind) {
    case ContourSpec::Kind::circle:
      if (!(spec.parameter > 0.0 && spec.parameter < 1.0)) {
        throw ArgumentError("build_contour: circle radius must lie in (0, 1)");
      }
      return circle_nodes(spec.parameter, spec.nodes);
    case ContourSpec::Kind::gamma_star:
      return gamma_star_nodes(spec.parameter, spec.nodes);
  }
  throw ArgumentError("build_contour: unknown contour kind");
}

SusyResult susy_trace(const SusyParams& params, const QuadSpec& quad) {
  validate(params, quad);
  const std::vector<ContourNode> contour = build_contour(quad.contour);
  const AGrid a_grid = build_a_grid(params, quad);
  TripleIntegral integral(params, quad, a_grid);

  SusyResult result;
  SusyDiagnostics& d = result.diagnostics;
  d.raw = integral.evaluate(contour);
  result.value = d.raw.real();
  d.im_residual = std::abs(d.raw.imag()) / std::abs(d.raw.real());
  d.a_max = a_grid.a_max;
  d.tail_estimate = a_grid.tail;
  d.contour_delta = std::numeric_limits<double>::quiet_NaN();
  if (quad.check_contour) {
    const int m = quad.contour.kind == ContourSpec::Kind::circle ? quad.contour.nodes : 64;
    const double inner = integral.evaluate(circle_nodes(0.4, m)).real();
    const double outer = integral.evaluate(circle_nodes(0.6, m)).real();
    d.contour_delta = std::abs(inner - outer) / std::abs(result.value);
    if (!(d.contour_delta <= quad.tol)) {
      throw AccuracyError("susy_trace: contour-independence check failed", inner, outer);
    }
  }
  d.evaluations = integral.evaluations();
  return result;
}

}  // namespace ginibre
