#pragma once

#include <span>
#include <vector>

#include "mimicry/estimate.hpp"

namespace mimicry {

/// Largest D solved exactly; above it the binomial bound uses a normal
/// approximation with continuity correction.
inline constexpr std::size_t kExactDiscordantLimit = 200;

/// Upper bound on the one-sided p-value when hidden bias may shift the odds
/// of treatment within a pair by up to `gamma`: the tail of
/// Binomial(D, gamma / (1 + gamma)) at the larger discordant count. The
/// two-sided variant doubles it, capped at 1. Throws DomainError for
/// gamma < 1 or D = 0.
double worst_case_p(const PairedCounts& counts, double gamma, bool two_sided = false);

struct GammaStar {
  double gamma = 1.0;
  bool significant_at_baseline = false;  // worst_case_p at 1 below alpha
  bool capped = false;                   // still significant at the search ceiling
};

/// Bisection on [1, 100] for the largest gamma whose bound stays at or
/// below alpha.
GammaStar gamma_star(const PairedCounts& counts, double alpha = 0.05, bool two_sided = false,
                     double tolerance = 1e-3);

struct AmplificationPoint {
  double lambda = 0.0;
  double delta = 0.0;
};

/// Delta = (gamma * lambda - 1) / (lambda - gamma). Throws DomainError
/// unless lambda > gamma >= 1.
double amplification_delta(double gamma, double lambda);

/// Evaluates every grid point with lambda > gamma; other points are dropped.
std::vector<AmplificationPoint> amplification_curve(double gamma, std::span<const double> lambda_grid);

/// Geometric lambda grid from just above gamma to 20 * gamma.
std::vector<double> default_lambda_grid(double gamma, std::size_t points = 40);

struct GammaP {
  double gamma = 1.0;
  double p = 1.0;
};

struct SensitivityResult {
  GammaStar gamma_star;
  double alpha = 0.05;
  std::vector<GammaP> p_at;
  std::vector<AmplificationPoint> amplification;
};

/// gamma_star, the bound on an evenly spaced gamma grid, and the
/// amplification curve at gamma_star (empty when not significant).
SensitivityResult sensitivity_analysis(const PairedCounts& counts, double alpha = 0.05, std::size_t grid_points = 50,
                                       bool two_sided = false);

}  // namespace mimicry
