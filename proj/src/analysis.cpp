#include "lgd/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lgd/errors.hpp"

namespace lgd::analysis {

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ParameterError(std::string(name) + " must be positive and finite");
  }
}

void require_gamma(double gamma) {
  if (!(gamma >= 0.0 && gamma < 1.0)) throw ParameterError("gamma must lie in [0, 1)");
}

}  // namespace

double path_bound(double max_degree, double q, double gamma) {
  require_positive(q, "q");
  require_gamma(gamma);
  if (max_degree < 0) throw ParameterError("max degree must be non-negative");
  const double ratio = 2.0 * gamma * max_degree / q;
  if (ratio >= 1.0) {
    throw DomainError("path bound diverges: 2*gamma*D/q = " + std::to_string(ratio) + " >= 1");
  }
  return (0.5 * ratio) / (1.0 - ratio);
}

double path_bound_partial(double max_degree, double q, double gamma, int terms) {
  require_positive(q, "q");
  require_gamma(gamma);
  double sum = 0.0;
  double power = max_degree * gamma / q;  // l = 1 term
  for (int l = 1; l <= terms; ++l) {
    sum += power;
    power *= 2.0 * gamma * max_degree / q;
  }
  return sum;
}

double v0_bound(double max_degree, double q, double gamma) {
  require_positive(q, "q");
  require_gamma(gamma);
  if (max_degree < 0) throw ParameterError("max degree must be non-negative");
  const double move = gamma * (1.0 - max_degree / q) * std::pow(1.0 - 3.0 * gamma / q, max_degree);
  return 1.0 - move;
}

double delta_wrapup(double alpha, double gamma) {
  require_positive(alpha, "alpha");
  require_gamma(gamma);
  const double ratio = 2.0 * gamma / alpha;
  if (ratio >= 1.0) {
    throw DomainError("2*gamma/alpha = " + std::to_string(ratio) + " >= 1");
  }
  const double growth = std::exp(6.0 * gamma / alpha);
  return gamma / growth * (1.0 - (1.0 + growth / (1.0 - ratio)) / alpha);
}

ContractionReport combined_bound(double max_degree, double q, double gamma) {
  ContractionReport r;
  r.path_bound = path_bound(max_degree, q, gamma);
  r.v0_bound = v0_bound(max_degree, q, gamma);
  r.combined = r.path_bound + r.v0_bound;
  r.relaxation_valid = 3.0 * gamma / q <= 0.5;
  if (max_degree > 0) {
    r.delta = delta_wrapup(q / max_degree, gamma);
    r.feasible = r.delta > 0.0;
  }
  return r;
}

GammaOptimum optimize_gamma(double alpha) {
  require_positive(alpha, "alpha");
  // Open interval; delta_wrapup is undefined at gamma = alpha/2 and gamma is a
  // probability.
  const double hi = std::min(1.0, alpha / 2.0) * (1.0 - 1e-12);
  auto f = [alpha](double g) { return delta_wrapup(alpha, g); };

  constexpr int kGrid = 4000;
  int best = 1;
  double best_value = f(hi / kGrid);
  for (int i = 2; i < kGrid; ++i) {
    double v = f(hi * i / kGrid);
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  double a = hi * (best - 1) / kGrid;
  double b = hi * (best + 1) / kGrid;

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > 1e-9) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  GammaOptimum out;
  out.gamma = 0.5 * (a + b);
  out.delta = f(out.gamma);
  if (best_value > out.delta) {
    out.gamma = hi * best / kGrid;
    out.delta = best_value;
  }
  out.feasible = out.delta > 0.0;
  return out;
}

std::uint64_t mixing_bound(double delta, double n, double eps) {
  if (!(delta > 0.0 && delta < 1.0)) throw ParameterError("delta must lie in (0, 1)");
  if (!(n >= 1.0)) throw ParameterError("n must be at least 1");
  if (!(eps > 0.0 && eps < 1.0)) throw ParameterError("eps must lie in (0, 1)");
  return static_cast<std::uint64_t>(std::ceil(std::log(n / eps) / delta));
}

}  // namespace lgd::analysis
