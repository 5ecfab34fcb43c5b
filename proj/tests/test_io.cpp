#include <sstream>

#include "doctest.h"
#include "proxflow/io.hpp"

using namespace proxflow;

TEST_CASE("groups round-trip through text") {
  std::istringstream in("# penalty\n1.0 0 1\n0.5 1 2 3\n\n2 4\n");
  auto groups = parse_groups(in);
  REQUIRE(groups.size() == 3);
  CHECK(groups[0].weight == doctest::Approx(1.0));
  CHECK(groups[1].members == IndexSet{1, 2, 3});
  std::ostringstream out;
  emit_groups(out, groups);
  std::istringstream in2(out.str());
  auto again = parse_groups(in2);
  REQUIRE(again.size() == 3);
  CHECK(again[2].weight == doctest::Approx(2.0));
  CHECK(again[2].members == IndexSet{4});
}

TEST_CASE("edges and hyperedges parse with validation") {
  std::istringstream in("0 1 0.5\n2 3 1.25\n");
  auto edges = parse_edges(in);
  REQUIRE(edges.size() == 2);
  CHECK(edges[1].weight == doctest::Approx(1.25));

  std::istringstream bad("0 1\n");
  CHECK_THROWS_WITH_AS(parse_edges(bad), "line 1: edge line must be 'i j weight'",
                       input_error);

  std::istringstream hin("1.5 0 1 2\n");
  auto hes = parse_hyperedges(hin);
  REQUIRE(hes.size() == 1);
  CHECK(hes[0].members == IndexSet{0, 1, 2});
}

TEST_CASE("vectors accept any line layout and full precision survives") {
  std::istringstream in("2 -0.5\n0 # trailing comment\n");
  auto v = parse_vector(in);
  CHECK(v == std::vector<double>{2.0, -0.5, 0.0});

  std::vector<double> precise = {1.0 / 3.0, -2.0 / 7.0};
  std::ostringstream out;
  emit_vector(out, precise);
  std::istringstream in2(out.str());
  CHECK(parse_vector(in2) == precise);
}

TEST_CASE("malformed numbers report the line") {
  std::istringstream in("1.0 0\nx 1\n");
  CHECK_THROWS_WITH_AS(parse_groups(in), "line 2: expected a number, got 'x'", input_error);
}

TEST_CASE("extended DIMACS round-trips a parametric network") {
  std::string text =
      "c a comment\n"
      "p pmax 5 5\n"
      "n 10 s\n"
      "n 20 t\n"
      "n 30 d 0\n"
      "n 40 d 1\n"
      "n 50 a\n"
      "a 10 30 param 0\n"
      "a 10 40 2.5\n"
      "a 30 50 inf\n"
      "a 50 20 1.5\n"
      "a 40 20 0.75\n";
  std::istringstream in(text);
  auto net = parse_dimacs(in);
  CHECK(net.node_count() == 5);
  CHECK(net.d == 2);
  CHECK(net.source() == 0);
  CHECK(net.sink() == 1);
  CHECK(net.aux_count() == 1);
  REQUIRE(net.arcs.size() == 5);
  CHECK(net.arcs[0].cap.kind == Capacity::Param);
  CHECK(net.arcs[2].cap.kind == Capacity::Infinite);

  std::ostringstream out;
  emit_dimacs(out, net);
  std::istringstream in2(out.str());
  auto again = parse_dimacs(in2);
  CHECK(again.node_count() == net.node_count());
  REQUIRE(again.arcs.size() == net.arcs.size());
  for (std::size_t k = 0; k < net.arcs.size(); ++k) {
    CHECK(again.arcs[k].tail == net.arcs[k].tail);
    CHECK(again.arcs[k].head == net.arcs[k].head);
    CHECK(again.arcs[k].cap.kind == net.arcs[k].cap.kind);
    CHECK(again.arcs[k].cap.value == net.arcs[k].cap.value);
  }
}

TEST_CASE("DIMACS validation catches structural errors") {
  auto expect_throw = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(parse_dimacs(in), input_error);
  };
  expect_throw("p pmax 2 0\nn 0 s\n");                              // node count off
  expect_throw("p pmax 2 0\nn 0 s\nn 1 s\n");                       // two sources
  expect_throw("p pmax 3 0\nn 0 s\nn 1 t\nn 1 d 0\n");              // duplicate id
  expect_throw("p pmax 3 0\nn 0 s\nn 1 t\nn 2 q\n");                // unknown kind
  expect_throw("p pmax 3 1\nn 0 s\nn 1 t\nn 2 d 0\na 0 9 1.0\n");   // undeclared node
  expect_throw("p pmax 3 1\nn 0 s\nn 1 t\nn 2 d 0\na 0 2 param 5\n");  // bad data index
  expect_throw("n 0 s\n");                                          // missing header
}
