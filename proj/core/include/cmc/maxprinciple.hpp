#pragma once

/**
 * @file maxprinciple.hpp
 * @brief Omori-Yau sequence checks on charts and a heuristic test of
 * radial decay functions G.
 *
 * A sequence p_k satisfies the full conditions when, for k = 1..K,
 * u(p_k) > u* - 1/k, |grad u(p_k)| < 1/k and Delta u(p_k) < 1/k. The weak
 * conditions drop the gradient. Only bounded (periodic or compact) chart
 * domains can be searched; nothing here decides stochastic completeness.
 */

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "cmc/geometry.hpp"

namespace cmc {

enum class OYMode { Full, Weak };

std::string_view to_string(OYMode mode);

struct OYRecord {
  double value = 0.0;
  double grad_norm = 0.0;
  double laplacian = 0.0;
};

struct OYWitness {
  std::vector<ChartPoint> points;
  double sup_estimate = 0.0;
  std::vector<OYRecord> records;
  OYMode mode = OYMode::Weak;
};

struct OYPointCheck {
  OYRecord record;
  bool value_ok = false;
  bool gradient_ok = false;
  bool laplacian_ok = false;
  bool passed = false;
};

/// Recomputes the record at every p_k and applies the strict inequalities
/// with threshold 1/k (k 1-based). Throws DomainExceeded for points whose
/// stencil leaves the chart.
std::vector<OYPointCheck> verify_oy_points(const ImmersionChart& chart, const ScalarField& field,
                                           const OYWitness& witness, OYMode mode, double h = default_fd_step());

/// Grid search for a weak sequence. u* is the grid maximum; for each k the
/// candidate with the largest u that satisfies both weak conditions is
/// taken. `per_axis` holds one resolution per chart axis. Throws
/// SearchFailed with the best (u* - u, Delta u) pair when some k has no
/// admissible point.
OYWitness weak_oy_search(const ImmersionChart& chart, const ScalarField& field, std::span<const std::size_t> per_axis,
                         int K, double h = default_fd_step());

enum class DecayVerdict { LikelyDivergent, LikelyConvergent, Inconclusive };

std::string_view to_string(DecayVerdict v);

struct DecayReport {
  double G0 = 0.0;
  bool positive_at_zero = false;
  bool monotone_ok = false;
  double I_T = 0.0;
  double I_2T = 0.0;
  double I_4T = 0.0;
  /// (I(4T) - I(2T)) / (I(2T) - I(T)); empty when the denominator is not positive.
  std::optional<double> increment_ratio;
  double condition_iv_sup = 0.0;
  DecayVerdict verdict = DecayVerdict::Inconclusive;
};

inline constexpr double kDivergentRatio = 0.7;
inline constexpr double kConvergentRatio = 0.55;

/// Heuristic admissibility of G over [0, 4T] with `samples` grid intervals
/// per segment. I(x) is the integral of 1/sqrt(G) over [0, x]. When dG is
/// given it must also be >= -1e-12 on the grid. Requires T >= 8 and
/// samples >= 64; throws DomainError if G <= 0 at a sampled point.
DecayReport decay_admissible(const std::function<double(double)>& G,
                             const std::optional<std::function<double(double)>>& dG, double T,
                             std::size_t samples);

}  // namespace cmc
