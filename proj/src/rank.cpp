#include <Eigen/SVD>
#include <limits>

#include "conerig/error.hpp"
#include "conerig/rank.hpp"

namespace conerig {

RankDecision decide_rank(const Eigen::VectorXd& sv, const std::string& context, double scale) {
  RankDecision d;
  d.singular_values = sv;
  const double smax = std::max(sv.size() ? sv.maxCoeff() : 0.0, scale);
  d.threshold = std::max(rank_rel_tol * smax, rank_abs_floor);
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] > d.threshold) ++d.rank;
  double dropped = 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] <= d.threshold) dropped = std::max(dropped, sv[i]);
  double kept = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] > d.threshold) kept = std::min(kept, sv[i]);
  if (d.rank == 0 || dropped == 0.0)
    d.gap_ratio = std::numeric_limits<double>::infinity();
  else
    d.gap_ratio = kept / dropped;
  if (d.gap_ratio < rank_min_gap)
    throw IllConditioned(context + ": singular values cluster at the rank threshold", d.gap_ratio);
  return d;
}

Subspace kernel(const Eigen::MatrixXd& m, const std::string& context) {
  Subspace s;
  if (m.rows() == 0) {
    s.basis = Eigen::MatrixXd::Identity(m.cols(), m.cols());
    s.decision = decide_rank(Eigen::VectorXd(), context);
    return s;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  s.decision = decide_rank(svd.singularValues(), context);
  s.basis = svd.matrixV().rightCols(m.cols() - s.decision.rank);
  return s;
}

Subspace range(const Eigen::MatrixXd& m, const std::string& context) {
  Subspace s;
  if (m.rows() == 0 || m.cols() == 0) {
    s.basis = Eigen::MatrixXd::Zero(m.rows(), 0);
    s.decision = decide_rank(Eigen::VectorXd(), context);
    return s;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU);
  s.decision = decide_rank(svd.singularValues(), context);
  s.basis = svd.matrixU().leftCols(s.decision.rank);
  return s;
}

RankDecision complex_rank(const Eigen::MatrixXcd& m, const std::string& context, double scale) {
  if (m.size() == 0) return decide_rank(Eigen::VectorXd(), context, scale);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return decide_rank(svd.singularValues(), context, scale);
}

}  // namespace conerig
