#include <cmath>
#include <random>

#include "doctest.h"
#include "proxflow/oracle.hpp"

using namespace proxflow;

TEST_CASE("brute_sfm finds extreme minimizers among ties") {
  // G(A) = 0 for A subset of {0,1}, 1 otherwise: minimizers form a lattice.
  auto G = [](const IndexSet& A) {
    for (int i : A)
      if (i > 1) return 1.0;
    return 0.0;
  };
  auto res = brute_sfm(G, 4);
  CHECK(res.value == doctest::Approx(0.0));
  CHECK(res.minimal == IndexSet{});
  CHECK(res.maximal == IndexSet{0, 1});
}

TEST_CASE("brute_sfm respects its size budget") {
  auto G = [](const IndexSet&) { return 0.0; };
  CHECK_THROWS_AS(brute_sfm(G, 30), capacity_error);
}

TEST_CASE("brute_mincut enumerates the whole optimal family") {
  // Two parallel unit paths: four optimal cuts.
  FlowNetwork net = FlowNetwork::empty(2);
  net.arcs = {
      {0, 2, Capacity::finite(1.0)}, {2, 1, Capacity::finite(1.0)},
      {0, 3, Capacity::finite(1.0)}, {3, 1, Capacity::finite(1.0)},
  };
  auto res = brute_mincut(net);
  CHECK(res.value == doctest::Approx(2.0));
  CHECK(res.optimal_sides.size() == 4);
}

TEST_CASE("fused dynamic program on known values") {
  auto w = fused_1d_oracle({3.0, 1.0}, {0.5});
  CHECK(w[0] == doctest::Approx(2.5));
  CHECK(w[1] == doctest::Approx(1.5));
  // Strong coupling fuses to the mean.
  auto w2 = fused_1d_oracle({3.0, 1.0}, {10.0});
  CHECK(w2[0] == doctest::Approx(2.0));
  CHECK(w2[1] == doctest::Approx(2.0));
  // Zero weight decouples.
  auto w3 = fused_1d_oracle({3.0, 1.0}, {0.0});
  CHECK(w3[0] == doctest::Approx(3.0));
  CHECK(w3[1] == doctest::Approx(1.0));
}

TEST_CASE("fused dynamic program satisfies the subgradient optimality test") {
  std::mt19937 rng(21);
  std::uniform_real_distribution<double> U(-2.0, 2.0);
  std::uniform_real_distribution<double> W(0.1, 1.5);
  for (int trial = 0; trial < 20; ++trial) {
    int d = 6;
    std::vector<double> z(static_cast<std::size_t>(d)), a(static_cast<std::size_t>(d - 1));
    for (auto& v : z) v = U(rng);
    for (auto& v : a) v = W(rng);
    auto w = fused_1d_oracle(z, a);
    // Compare against dense grid descent: w must beat small perturbations.
    auto objective = [&](const std::vector<double>& v) {
      double q = 0.0;
      for (int i = 0; i < d; ++i) {
        double dz = v[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(i)];
        q += 0.5 * dz * dz;
      }
      for (int i = 0; i + 1 < d; ++i)
        q += a[static_cast<std::size_t>(i)] *
             std::abs(v[static_cast<std::size_t>(i) + 1] - v[static_cast<std::size_t>(i)]);
      return q;
    };
    double base = objective(w);
    for (int i = 0; i < d; ++i) {
      for (double eps : {-1e-4, 1e-4, -0.05, 0.05}) {
        auto v = w;
        v[static_cast<std::size_t>(i)] += eps;
        CHECK(base <= objective(v) + 1e-10);
      }
    }
  }
}

TEST_CASE("decomposition reference solves a hand-checked instance") {
  // F(A) = min(|A|, 1) on d = 2 (one group over both), p = inf, lambda = 1:
  // tau splits F's unit between the coordinates by threshold order.
  ProxProblem pb;
  pb.z = {2.0, 0.25};
  pb.lambda = 1.0;
  pb.p = std::numeric_limits<double>::infinity();
  pb.penalty = SetFunction::group_cover(2, {{1.0, {0, 1}}});
  auto tau = decomposition_prox(pb);
  CHECK(tau[0] + tau[1] == doctest::Approx(1.0));
  auto w = decomposition_prox_w(pb);
  CHECK(w[0] == doctest::Approx(2.0 - tau[0]));
  CHECK(w[1] == doctest::Approx(std::max(0.25 - tau[1], 0.0)));
}

TEST_CASE("representation verifier accepts correct networks and rejects mutations") {
  auto f = SetFunction::hypergraph_cut(3, {{1.0, {0, 1, 2}}});
  auto net = represent(f);
  CHECK(verify_representation(net, f));
  auto broken = net;
  broken.offset += 0.5;
  CHECK_FALSE(verify_representation(broken, f));
}
