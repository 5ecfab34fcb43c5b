#include <cmath>
#include <limits>

#include "doctest.h"
#include "proxflow/separable.hpp"

using namespace proxflow;

TEST_CASE("threshold and clamp endpoints") {
  SeparablePiece pc{2.0, 0.5, 1.0};
  CHECK(pc.threshold() == doctest::Approx(4.0));
  CHECK(phi(0.0, pc) == doctest::Approx(4.0));
  CHECK(phi(-std::numeric_limits<double>::infinity(), pc) == doctest::Approx(0.0));
  CHECK_THROWS_AS(phi(0.5, pc), input_error);
}

TEST_CASE("phi inverts psi_prime on the interior, r = 1") {
  SeparablePiece pc{3.0, 2.0, 1.0};
  for (double alpha : {-5.9, -4.0, -1.0, -0.25}) {
    double t = phi(alpha, pc);
    if (t > 0.0 && t < pc.threshold())
      CHECK(psi_prime(t, pc) == doctest::Approx(alpha).epsilon(1e-10));
  }
}

TEST_CASE("phi inverts psi_prime on the interior, r = 2") {
  SeparablePiece pc{3.0, 2.0, 2.0};
  for (double alpha : {-5.0, -2.0, -0.5}) {
    double t = phi(alpha, pc);
    if (t > 0.0 && t < pc.threshold())
      CHECK(psi_prime(t, pc) == doctest::Approx(alpha).epsilon(1e-10));
  }
}

TEST_CASE("phi inverts psi_prime via bisection for other r") {
  SeparablePiece pc{1.5, 1.0, 1.5};
  for (double alpha : {-3.0, -1.0, -0.2}) {
    double t = phi(alpha, pc);
    if (t > 0.0 && t < pc.threshold())
      CHECK(psi_prime(t, pc) == doctest::Approx(alpha).epsilon(1e-6));
  }
}

TEST_CASE("balanced_alpha hits the requested total") {
  std::vector<SeparablePiece> pcs = {{2.0, 1.0, 1.0}, {-1.0, 1.0, 1.0}, {0.5, 1.0, 1.0}};
  double demand = 1.7;
  auto res = balanced_alpha(pcs, demand);
  REQUIRE_FALSE(res.degenerate);
  double total = 0.0;
  for (const auto& pc : pcs) total += phi(res.alpha, pc);
  CHECK(total == doctest::Approx(demand).epsilon(1e-8));
}

TEST_CASE("balanced_alpha reports unreachable demand as degenerate") {
  std::vector<SeparablePiece> pcs = {{1.0, 1.0, 1.0}};  // threshold 1
  CHECK(balanced_alpha(pcs, 5.0).degenerate);
  CHECK(balanced_alpha({{0.0, 1.0, 1.0}}, 0.5).degenerate);
}

TEST_CASE("zero coordinates are inert") {
  std::vector<SeparablePiece> pcs = {{2.0, 1.0, 1.0}, {0.0, 1.0, 1.0}};
  auto res = balanced_alpha(pcs, 1.0);
  REQUIRE_FALSE(res.degenerate);
  CHECK(phi(res.alpha, pcs[0]) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("quadratic balance is exact and unclamped") {
  std::vector<QuadPiece> pcs = {{1.0, 2.0}, {-0.5, 2.0}, {0.25, 2.0}};
  double demand = -3.0;  // negative demands are fine: phi is unclamped
  double alpha = balanced_alpha_quad(pcs, demand);
  double total = 0.0;
  for (const auto& pc : pcs) total += quad_phi(alpha, pc);
  CHECK(total == doctest::Approx(demand).epsilon(1e-12));
}
