#include "proxflow/separable.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace proxflow {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double SeparablePiece::threshold() const {
  return std::pow(std::abs(z) / lambda, r);
}

double psi(double tau, const SeparablePiece& p) {
  if (tau < 0.0) throw input_error("psi: tau must be nonnegative");
  double az = std::abs(p.z);
  if (tau >= p.threshold()) return -0.5 * az * az;
  double t1r = std::pow(tau, 1.0 / p.r);
  return 0.5 * p.lambda * p.lambda * t1r * t1r - p.lambda * t1r * az;
}

double psi_prime(double tau, const SeparablePiece& p) {
  if (tau < 0.0) throw input_error("psi_prime: tau must be nonnegative");
  if (tau >= p.threshold()) return 0.0;
  return psi_prime_extended(tau, p);
}

double psi_prime_extended(double tau, const SeparablePiece& p) {
  double az = std::abs(p.z);
  if (tau <= 0.0) {
    if (p.r == 1.0) return p.lambda * p.lambda * tau - p.lambda * az;
    return az > 0.0 ? -kInf : 0.0;
  }
  double num = p.lambda * p.lambda * std::pow(tau, 1.0 / p.r) - p.lambda * az;
  return num / (p.r * std::pow(tau, 1.0 - 1.0 / p.r));
}

double phi(double alpha, const SeparablePiece& p) {
  if (alpha > 1e-15) throw input_error("phi: alpha must lie in (-inf, 0]");
  double T = p.threshold();
  if (p.z == 0.0) return 0.0;
  if (alpha >= 0.0) return T;
  if (alpha == -kInf) return 0.0;
  double az = std::abs(p.z);
  if (p.r == 1.0) {
    double t = (alpha + p.lambda * az) / (p.lambda * p.lambda);
    return std::clamp(t, 0.0, T);
  }
  if (p.r == 2.0) {
    double den = p.lambda * p.lambda - 2.0 * alpha;
    double t = p.lambda * p.lambda * p.z * p.z / (den * den);
    return std::clamp(t, 0.0, T);
  }
  double lo = 0.0, hi = T;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * (1.0 + hi); ++it) {
    double mid = 0.5 * (lo + hi);
    (psi_prime(mid, p) < alpha ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

BalanceResult balanced_alpha(const std::vector<SeparablePiece>& pieces, double c_tilde) {
  if (c_tilde < -1e-9) throw input_error("balanced_alpha: negative demand");
  double c = std::max(c_tilde, 0.0);
  std::vector<SeparablePiece> active;
  for (const auto& p : pieces)
    if (p.z != 0.0) active.push_back(p);
  if (active.empty()) return {0.0, c > 1e-12};

  double lambda = active.front().lambda;
  double r = active.front().r;
  double sumT = 0.0;
  for (const auto& p : active) sumT += p.threshold();
  if (c > sumT + 1e-12) return {0.0, true};

  if (r == 2.0) {
    if (c <= 1e-14) return {-kInf, false};
    double alpha = 0.5 * lambda * lambda * (1.0 - std::sqrt(sumT / c));
    return {std::min(alpha, 0.0), false};
  }

  if (r == 1.0) {
    // Piecewise-linear: kinks at -λ|z_i|; on [kink_m, kink_{m+1}] the first m
    // (largest-|z|) pieces are interior.
    std::vector<double> kinks;
    kinks.reserve(active.size());
    for (const auto& p : active) kinks.push_back(-lambda * std::abs(p.z));
    std::sort(kinks.begin(), kinks.end());
    if (c <= 1e-14) return {kinks.front(), false};
    double prefix = 0.0;
    for (std::size_t m = 1; m <= kinks.size(); ++m) {
      prefix += kinks[m - 1];
      double cand = (lambda * lambda * c + prefix) / static_cast<double>(m);
      if (cand < kinks[m - 1]) continue;  // not enough pieces active yet
      if (m < kinks.size() && cand > kinks[m]) continue;
      return {std::min(cand, 0.0), false};
    }
    return {0.0, false};  // c == sumT up to roundoff
  }

  auto total = [&](double alpha) {
    double s = 0.0;
    for (const auto& p : active) s += phi(alpha, p);
    return s;
  };
  double lo = -1.0;
  for (int k = 0; k < 80 && total(lo) > c; ++k) lo *= 2.0;
  double hi = 0.0;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    double v = total(mid);
    if (std::abs(v - c) <= 1e-8) return {mid, false};
    (v < c ? lo : hi) = mid;
  }
  throw numerical_error("balanced_alpha: bisection failed to reach tolerance");
}

double quad_phi(double alpha, const QuadPiece& p) {
  return alpha / (p.lambda * p.lambda) + p.center;
}

double balanced_alpha_quad(const std::vector<QuadPiece>& pieces, double c_tilde) {
  if (pieces.empty()) throw input_error("balanced_alpha_quad: empty set");
  double lambda = pieces.front().lambda;
  double centers = 0.0;
  for (const auto& p : pieces) centers += p.center;
  return lambda * lambda * (c_tilde - centers) / static_cast<double>(pieces.size());
}

}  // namespace proxflow
