#pragma once

#include <vector>

#include "proxflow/common.hpp"

namespace proxflow {

/// One coordinate of the separable dual objective: ψ(τ) = ½λ²τ^{2/r} −
/// λτ^{1/r}|z| on [0, T] and the constant −z²/2 beyond, T = (|z|/λ)^r.
struct SeparablePiece {
  double z = 0.0;
  double lambda = 1.0;
  double r = 1.0;

  double threshold() const;  // T = (|z|/λ)^r
};

/// ψ(τ). Throws input_error for τ < 0.
double psi(double tau, const SeparablePiece& piece);

/// ψ'(τ) on [0, T], 0 beyond T; −∞ at τ = 0 when r > 1 and z ≠ 0.
double psi_prime(double tau, const SeparablePiece& piece);

/// ψ' by its interior formula continued past T (used for the lower parameter
/// guess, which only needs "sufficiently small"). −∞ when undefined.
double psi_prime_extended(double tau, const SeparablePiece& piece);

/// φ(α) = inverse of ψ' clamped to [0, T]; φ(0) = T; φ(−∞) = 0.
/// Closed forms for r ∈ {1, 2}, monotone bisection otherwise.
/// Throws input_error for α > 0.
double phi(double alpha, const SeparablePiece& piece);

struct BalanceResult {
  double alpha = 0.0;
  /// Set when Σφ cannot reach the requested total anywhere on (−∞, 0]
  /// (demand above Σ threshold, or every z vanishes with positive demand).
  bool degenerate = false;
};

/// Solve Σ_i φ(α; piece_i) = c_tilde for α ∈ (−∞, 0]. Pieces with z = 0 are
/// inert (φ ≡ 0) and ignored. Exact for r ∈ {1, 2}; bisection (tol 1e−8,
/// ≤ 200 iterations) otherwise.
BalanceResult balanced_alpha(const std::vector<SeparablePiece>& pieces, double c_tilde);

/// Parametric capacities for the signed (shifted Lovász-extension) problem:
/// φ(α) = α/λ² + center, unclamped, with center = z/λ + β.
struct QuadPiece {
  double center = 0.0;
  double lambda = 1.0;
};

double quad_phi(double alpha, const QuadPiece& piece);

/// Solve Σ_i quad_phi(α; piece_i) = c_tilde exactly (always solvable).
double balanced_alpha_quad(const std::vector<QuadPiece>& pieces, double c_tilde);

}  // namespace proxflow
