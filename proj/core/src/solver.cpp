#include "proxflow/solver.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>

namespace proxflow {

namespace {

Eigen::MatrixXd to_matrix(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw input_error("fista: empty design matrix");
  auto n = static_cast<Eigen::Index>(rows.size());
  auto d = static_cast<Eigen::Index>(rows.front().size());
  if (d == 0) throw input_error("fista: empty design row");
  Eigen::MatrixXd X(n, d);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<Eigen::Index>(rows[static_cast<std::size_t>(i)].size()) != d)
      throw input_error("fista: ragged design matrix");
    for (Eigen::Index j = 0; j < d; ++j) {
      double v = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (!std::isfinite(v)) throw input_error("fista: non-finite design entry");
      X(i, j) = v;
    }
  }
  return X;
}

double power_iteration_lipschitz(const Eigen::MatrixXd& X) {
  Eigen::Index d = X.cols();
  Eigen::VectorXd v = Eigen::VectorXd::Ones(d);
  for (Eigen::Index j = 0; j < d; ++j) v(j) += 0.01 * static_cast<double>(j % 7);
  v.normalize();
  double eig = 0.0;
  for (int it = 0; it < 30; ++it) {
    Eigen::VectorXd u = X.transpose() * (X * v);
    double norm = u.norm();
    if (norm <= 1e-300) return 1.0;
    eig = norm;
    v = u / norm;
  }
  return std::max(eig * 1.1, 1e-12);
}

}  // namespace

FistaResult fista(const LeastSquaresTask& task, FlowOptions opt) {
  Eigen::MatrixXd X = to_matrix(task.X);
  if (task.y.size() != static_cast<std::size_t>(X.rows()))
    throw input_error("fista: target length does not match the design");
  Eigen::VectorXd y(X.rows());
  for (Eigen::Index i = 0; i < X.rows(); ++i) {
    if (!std::isfinite(task.y[static_cast<std::size_t>(i)]))
      throw input_error("fista: non-finite target entry");
    y(i) = task.y[static_cast<std::size_t>(i)];
  }
  if (task.lambda < 0.0) throw input_error("fista: negative lambda");
  bool penalized = task.lambda > 0.0;
  if (penalized && task.penalty.dim() != static_cast<int>(X.cols()))
    throw input_error("fista: penalty dimension does not match the design");
  if (task.max_iters < 1) throw input_error("fista: max_iters must be positive");

  FistaResult out;
  out.lipschitz = power_iteration_lipschitz(X);
  double L = out.lipschitz;
  bool report_penalty = !penalized || std::isinf(task.p);
  out.smooth_only = !report_penalty;

  auto smooth = [&](const Eigen::VectorXd& w) {
    return 0.5 * (X * w - y).squaredNorm();
  };
  auto objective = [&](const Eigen::VectorXd& w) {
    double v = smooth(w);
    if (penalized && report_penalty) {
      std::vector<double> wv(w.data(), w.data() + w.size());
      v += task.lambda * penalty_value_linf(wv, task.penalty);
    }
    return v;
  };
  auto prox_step = [&](const Eigen::VectorXd& v) {
    Eigen::VectorXd z = v - (X.transpose() * (X * v - y)) / L;
    if (!penalized) return z;
    ProxProblem pb;
    pb.z.assign(z.data(), z.data() + z.size());
    pb.lambda = task.lambda / L;
    pb.p = task.p;
    pb.penalty = task.penalty;
    std::vector<double> w = prox(pb, opt).w;
    return Eigen::VectorXd(Eigen::Map<Eigen::VectorXd>(w.data(), z.size()));
  };

  Eigen::VectorXd w = Eigen::VectorXd::Zero(X.cols());
  Eigen::VectorXd momentum = w;
  double t = 1.0;
  double obj = objective(w);
  out.objective.push_back(obj);

  for (int it = 0; it < task.max_iters; ++it) {
    Eigen::VectorXd cand = prox_step(momentum);
    double cand_obj = objective(cand);
    if (cand_obj > obj) {
      // Momentum overshot: restart from the current iterate.
      ++out.restarts;
      t = 1.0;
      cand = prox_step(w);
      cand_obj = objective(cand);
      if (cand_obj > obj) {
        cand = w;  // numerically stuck, keep the best point
        cand_obj = obj;
      }
    }
    double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
    momentum = cand + ((t - 1.0) / t_next) * (cand - w);
    w = cand;
    t = t_next;
    out.objective.push_back(cand_obj);
    ++out.iterations;
    double drop = obj - cand_obj;
    obj = cand_obj;
    if (drop <= task.tolerance * std::max(1.0, std::abs(obj))) break;
  }

  Eigen::VectorXd fp = prox_step(w);
  out.fixed_point_residual = (w - fp).lpNorm<Eigen::Infinity>();
  out.w.assign(w.data(), w.data() + w.size());
  return out;
}

}  // namespace proxflow
