#pragma once

/**
 * @file classify.hpp
 * @brief Which branch of the umbilical / equality / strict trichotomy a
 * catalog model realizes.
 */

#include <optional>

#include "cmc/catalog.hpp"

namespace cmc {

/// Where sup |Phi| comes from.
enum class SupSource {
  /// Closed forms for constant-|Phi| models, a numeric grid over one period
  /// for the unduloid.
  Default,
  /// Numeric shape data on a sample grid for every family.
  Numeric,
};

struct ClassifyOptions {
  double tol_class = 1e-7;
  SupSource source = SupSource::Default;
  /// Grid per axis for SupSource::Numeric on product models.
  std::size_t grid = 4;
  /// Number of s samples over one unduloid period.
  std::size_t unduloid_samples = 1024;
};

/// Surface-only report: inf K and the check inf K = H^2 + c (umbilical) or inf K <= 0.
struct SurfaceReport {
  double inf_K = 0.0;
  bool umbilical = false;
  bool holds = false;
};

struct ClassificationVerdict {
  Branch branch = Branch::Strict;
  double sup_phi = 0.0;
  double alpha_H = 0.0;
  double inf_S = 0.0;
  double scalar_bound = 0.0;
  bool attained = true;
  /// sup |Phi| = alpha_H within tolerance but not attained; branch is Strict.
  bool unattained_equality = false;
  std::optional<SurfaceReport> surface;
};

/// Throws NonElliptic when H^2 + c <= 0.
ClassificationVerdict classify(const ModelSpec& model, const ClassifyOptions& options = {});

}  // namespace cmc
