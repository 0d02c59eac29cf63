#pragma once

#include <cstdint>
#include <vector>

namespace lgd::analysis {

// Closed-form contraction bounds for one coupled step from an adjacent pair.
// Degree and color count are taken as reals so that q = alpha * max_degree
// need not be integral.

/// Bound on the expected number of differing nodes other than the start node:
/// (gamma*D/q) / (1 - 2*gamma*D/q). Throws DomainError when 2*gamma*D/q >= 1.
double path_bound(double max_degree, double q, double gamma);

/// Partial sum of D^l (2 gamma/q)^(l-1) (gamma/q) for l = 1..terms.
double path_bound_partial(double max_degree, double q, double gamma, int terms);

/// Bound on the probability that the pair still differs at the start node:
/// 1 - gamma (1 - D/q) (1 - 3 gamma/q)^D.
double v0_bound(double max_degree, double q, double gamma);

/// Contraction margin in alpha-only form. Positive means the coupling
/// contracts. Throws DomainError when 2*gamma/alpha >= 1.
double delta_wrapup(double alpha, double gamma);

struct ContractionReport {
  double path_bound = 0;
  double v0_bound = 0;
  double combined = 0;
  double delta = 0;
  bool feasible = false;
  /// 3*gamma/q <= 1/2, where (1 - 3 gamma/q)^D >= exp(-6 gamma/alpha) holds.
  bool relaxation_valid = false;
};

ContractionReport combined_bound(double max_degree, double q, double gamma);

struct GammaOptimum {
  double gamma = 0;
  double delta = 0;
  bool feasible = false;
};

/// Maximizes delta_wrapup(alpha, .) over (0, min(1, alpha/2)): a coarse grid
/// brackets the peak, then golden-section search narrows it to 1e-9.
/// `feasible` is false when no positive delta was found.
GammaOptimum optimize_gamma(double alpha);

/// ceil(ln(n / eps) / delta): the path-coupling mixing bound with constant 1.
std::uint64_t mixing_bound(double delta, double n, double eps);

}  // namespace lgd::analysis
