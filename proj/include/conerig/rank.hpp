#pragma once

#include <string>

#include <Eigen/Core>

namespace conerig {

/// Singular values below rank_rel_tol * sigma_max (or below rank_abs_floor) count as zero.
inline constexpr double rank_rel_tol = 1e-9;
inline constexpr double rank_abs_floor = 1e-12;
/// Required ratio between the smallest kept and the largest dropped singular value.
inline constexpr double rank_min_gap = 10.0;

struct RankDecision {
  int rank = 0;
  Eigen::VectorXd singular_values;  // descending
  double threshold = 0.0;
  double gap_ratio = 0.0;           // +inf when nothing or only exact zeros were dropped
};

/// Throws IllConditioned (naming `context`) when the gap ratio is below rank_min_gap. The
/// relative threshold applies to max(sigma_max, scale).
RankDecision decide_rank(const Eigen::VectorXd& singular_values, const std::string& context, double scale = 0.0);

struct Subspace {
  Eigen::MatrixXd basis;  // orthonormal columns
  RankDecision decision;
  int dim() const { return static_cast<int>(basis.cols()); }
};

Subspace kernel(const Eigen::MatrixXd& m, const std::string& context);
Subspace range(const Eigen::MatrixXd& m, const std::string& context);

/// Rank of a complex matrix under the same rules.
RankDecision complex_rank(const Eigen::MatrixXcd& m, const std::string& context, double scale = 0.0);

}  // namespace conerig
