#pragma once

#include <stdexcept>
#include <string>

namespace cmc {

/// Base of every error raised by the library. Callers that only care about
/// "something went wrong" catch this; the CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CMC_DEFINE_ERROR(Name)            \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

CMC_DEFINE_ERROR(DomainError);
CMC_DEFINE_ERROR(NonConvergence);
CMC_DEFINE_ERROR(RankDeficient);
CMC_DEFINE_ERROR(SizeMismatch);
CMC_DEFINE_ERROR(DegenerateMetric);
CMC_DEFINE_ERROR(DomainExceeded);
CMC_DEFINE_ERROR(NonConstantMeanCurvature);
CMC_DEFINE_ERROR(NotSurface);
CMC_DEFINE_ERROR(NonOrthogonalChart);
CMC_DEFINE_ERROR(InvalidParameters);
CMC_DEFINE_ERROR(OutOfRange);
CMC_DEFINE_ERROR(NotTraceFree);
CMC_DEFINE_ERROR(NonElliptic);

#undef CMC_DEFINE_ERROR

/// Raised when a model spec string does not follow `family:key=value,...`.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::string token)
      : Error(message), token_(std::move(token)) {}
  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

/// Weak Omori-Yau search could not find a point for some k. Carries the
/// best (u* - u, laplacian) pair seen so the caller can judge how close it was.
class SearchFailed : public Error {
 public:
  SearchFailed(const std::string& message, double best_gap, double best_laplacian)
      : Error(message), best_gap_(best_gap), best_laplacian_(best_laplacian) {}
  double best_gap() const noexcept { return best_gap_; }
  double best_laplacian() const noexcept { return best_laplacian_; }

 private:
  double best_gap_;
  double best_laplacian_;
};

}  // namespace cmc
