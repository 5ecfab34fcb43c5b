#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "proxflow/io.hpp"
#include "proxflow/oracle.hpp"
#include "proxflow/prox.hpp"
#include "proxflow/solver.hpp"

using json = nlohmann::json;
using namespace proxflow;

namespace {

struct GlobalOpts {
  unsigned seed = 0;
  int threads = 0;  // 0: hardware concurrency
  double tolerance = 1e-12;

  FlowOptions flow() const { return FlowOptions{true, tolerance}; }
  int worker_count() const {
    if (threads > 0) return threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
  }
};

double parse_p(const std::string& s) {
  if (s == "inf" || s == "Inf" || s == "INF") return std::numeric_limits<double>::infinity();
  try {
    return std::stod(s);
  } catch (const std::exception&) {
    throw input_error("unrecognized value for --p: " + s);
  }
}

int required_dim(const std::vector<int>& indices, int at_least) {
  int d = at_least;
  for (int i : indices) d = std::max(d, i + 1);
  return d;
}

/// Penalty loaded from its spec file; d covers every referenced index and is
/// raised to `d_hint` when given (the length of z).
SetFunction load_penalty(const std::string& kind, const std::string& spec_path,
                         int d_hint) {
  std::istringstream in(read_file(spec_path));
  try {
    if (kind == "group") {
      auto groups = parse_groups(in);
      std::vector<int> all;
      for (const auto& g : groups) all.insert(all.end(), g.members.begin(), g.members.end());
      return SetFunction::group_cover(required_dim(all, std::max(d_hint, 1)), groups);
    }
    if (kind == "cut") {
      auto edges = parse_edges(in);
      std::vector<int> all;
      for (const auto& e : edges) {
        all.push_back(e.i);
        all.push_back(e.j);
      }
      return SetFunction::graph_cut(required_dim(all, std::max(d_hint, 1)), edges);
    }
    if (kind == "hypergraph") {
      auto hes = parse_hyperedges(in);
      std::vector<int> all;
      for (const auto& e : hes) all.insert(all.end(), e.members.begin(), e.members.end());
      return SetFunction::hypergraph_cut(required_dim(all, std::max(d_hint, 1)), hes);
    }
    if (kind == "cubic") {
      // One term per line: "coefficient v1 [v2 [v3]]"; the coefficient may be
      // negative, so groups-file parsing does not apply.
      CubicMobius cm;
      std::vector<int> all;
      std::string raw;
      for (int line = 1; std::getline(in, raw); ++line) {
        auto pos = raw.find('#');
        if (pos != std::string::npos) raw.erase(pos);
        std::istringstream ls(raw);
        double coeff;
        if (!(ls >> coeff)) {
          if (ls.eof()) continue;  // blank line
          throw input_error("line " + std::to_string(line) + ": bad coefficient");
        }
        std::vector<int> members;
        int v;
        while (ls >> v) {
          if (v < 0) throw input_error("line " + std::to_string(line) + ": bad index");
          members.push_back(v);
        }
        if (!ls.eof())
          throw input_error("line " + std::to_string(line) + ": malformed index");
        std::sort(members.begin(), members.end());
        if (std::adjacent_find(members.begin(), members.end()) != members.end())
          throw input_error("line " + std::to_string(line) + ": repeated index");
        all.insert(all.end(), members.begin(), members.end());
        if (members.size() == 1) {
          cm.c1[members[0]] += coeff;
        } else if (members.size() == 2) {
          cm.c2[{members[0], members[1]}] += coeff;
        } else if (members.size() == 3) {
          cm.c3[{members[0], members[1], members[2]}] += coeff;
        } else {
          throw input_error("line " + std::to_string(line) +
                            ": a term takes one to three distinct indices");
        }
      }
      return SetFunction::cubic_mobius(required_dim(all, std::max(d_hint, 1)), cm);
    }
    if (kind == "truncation") {
      // Single record: "y w1 w2 ... wd".
      auto vals = parse_vector(in);
      if (vals.size() < 2) throw input_error("truncation spec needs 'y w1 ... wd'");
      double y = vals.front();
      vals.erase(vals.begin());
      return SetFunction::weighted_truncation(vals, y);
    }
  } catch (const input_error& e) {
    throw input_error(spec_path + ": " + e.what());
  }
  throw input_error("unknown penalty kind '" + kind + "'");
}

std::vector<std::vector<double>> parse_csv_matrix(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string raw;
  for (int line = 1; std::getline(in, raw); ++line) {
    std::replace(raw.begin(), raw.end(), ',', ' ');
    auto pos = raw.find('#');
    if (pos != std::string::npos) raw.erase(pos);
    std::istringstream ls(raw);
    std::vector<double> row;
    double v;
    while (ls >> v) row.push_back(v);
    if (!ls.eof())
      throw input_error("line " + std::to_string(line) + ": malformed number");
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

void write_vector_file(const std::string& path, const std::vector<double>& v) {
  std::ostringstream out;
  emit_vector(out, v);
  write_file(path, out.str());
}

json chain_to_json(const CutChain& chain) {
  json j;
  j["sets"] = chain.sets;
  j["breakpoints"] = chain.breakpoints;
  j["set_values"] = chain.f_values;
  return j;
}

// ---------------------------------------------------------------------------
// prox

struct ProxArgs {
  std::string penalty, spec, p = "2", input, output, report;
  double lambda = 1.0;
};

int run_prox(const ProxArgs& a, const GlobalOpts& g) {
  std::istringstream zin(read_file(a.input));
  ProxProblem pb;
  pb.z = parse_vector(zin);
  pb.lambda = a.lambda;
  pb.p = parse_p(a.p);
  pb.penalty = load_penalty(a.penalty, a.spec, static_cast<int>(pb.z.size()));
  if (pb.penalty.dim() != static_cast<int>(pb.z.size()))
    throw input_error("penalty indices exceed the input vector length");

  ProxResult res = prox(pb, g.flow());
  if (!a.output.empty())
    write_vector_file(a.output, res.w);
  else
    emit_vector(std::cout, res.w);
  if (!a.report.empty()) {
    json j;
    j["w"] = res.w;
    j["tau"] = res.tau;
    j["chain"] = chain_to_json(res.chain);
    j["breakpoints"] = res.report.breakpoint_count;
    j["pushes"] = res.report.counters.pushes;
    j["relabels"] = res.report.counters.relabels;
    j["global_relabels"] = res.report.counters.global_relabels;
    j["wall_time_sec"] = res.report.wall_time_sec;
    j["alpha0"] = res.report.alpha0;
    j["beta"] = res.report.beta;
    j["shifted"] = res.report.shifted;
    write_file(a.report, j.dump(2) + "\n");
  }
  return 0;
}

// ---------------------------------------------------------------------------
// solve

struct SolveArgs {
  std::string design, target, penalty, spec, p = "2", output, report;
  double lambda = 1.0;
  int max_iters = 500;
  double ftol = 1e-8;
};

int run_solve(const SolveArgs& a, const GlobalOpts& g) {
  LeastSquaresTask task;
  task.X = parse_csv_matrix(read_file(a.design));
  if (task.X.empty()) throw input_error(a.design + ": empty design matrix");
  {
    std::istringstream yin(read_file(a.target));
    task.y = parse_vector(yin);
  }
  task.lambda = a.lambda;
  task.p = parse_p(a.p);
  task.max_iters = a.max_iters;
  task.tolerance = a.ftol;
  if (task.lambda > 0.0) {
    if (a.penalty.empty() || a.spec.empty())
      throw input_error("solve with lambda > 0 needs --penalty and --spec");
    task.penalty =
        load_penalty(a.penalty, a.spec, static_cast<int>(task.X.front().size()));
    if (task.penalty.dim() != static_cast<int>(task.X.front().size()))
      throw input_error("penalty indices exceed the design width");
  }

  FistaResult res = fista(task, g.flow());
  if (!a.output.empty())
    write_vector_file(a.output, res.w);
  else
    emit_vector(std::cout, res.w);
  if (!a.report.empty()) {
    json j;
    j["w"] = res.w;
    j["objective_trace"] = res.objective;
    j["iterations"] = res.iterations;
    j["restarts"] = res.restarts;
    j["lipschitz"] = res.lipschitz;
    j["fixed_point_residual"] = res.fixed_point_residual;
    j["objective_smooth_only"] = res.smooth_only;
    write_file(a.report, j.dump(2) + "\n");
  }
  return 0;
}

// ---------------------------------------------------------------------------
// mincut

struct MincutArgs {
  std::string network, phi, report;
};

int run_mincut(const MincutArgs& a, const GlobalOpts& g) {
  std::istringstream nin(read_file(a.network));
  FlowNetwork net = parse_dimacs(nin);
  Preflow pf(net, g.flow());
  if (!a.phi.empty()) {
    std::istringstream pin(read_file(a.phi));
    pf.set_param(parse_vector(pin));
  }
  double value = pf.solve();
  Cut cmin = pf.min_cut(CutSide::Minimal);
  Cut cmax = pf.min_cut(CutSide::Maximal);
  std::cout << "max-flow value " << value << "\n";
  std::cout << "minimal cut source side:";
  for (int v : cmin.source_side) std::cout << ' ' << v;
  std::cout << "\nmaximal cut source side:";
  for (int v : cmax.source_side) std::cout << ' ' << v;
  std::cout << "\n";
  if (!a.report.empty()) {
    json j;
    j["value"] = value;
    j["minimal_source_side"] = cmin.source_side;
    j["maximal_source_side"] = cmax.source_side;
    j["minimal_data"] = cmin.data;
    j["maximal_data"] = cmax.data;
    j["pushes"] = pf.counters().pushes;
    j["relabels"] = pf.counters().relabels;
    write_file(a.report, j.dump(2) + "\n");
  }
  return 0;
}

// ---------------------------------------------------------------------------
// paraflow

struct ParaflowArgs {
  std::string network, input, p = "2", output;
  double lambda = 1.0;
};

int run_paraflow(const ParaflowArgs& a, const GlobalOpts& g) {
  std::istringstream nin(read_file(a.network));
  FlowNetwork net = parse_dimacs(nin);
  // Parametric source arcs are re-attached by the solver; drop declared ones.
  std::erase_if(net.arcs, [](const Arc& arc) { return arc.cap.kind == Capacity::Param; });

  std::istringstream zin(read_file(a.input));
  std::vector<double> z = parse_vector(zin);
  if (static_cast<int>(z.size()) != net.d)
    throw input_error("input vector length does not match the network's data nodes");

  ParametricProblem para;
  para.network = net;
  para.caps = std::make_shared<PNormCaps>(z, a.lambda, conjugate_r(parse_p(a.p)));
  FlowOptions opt = g.flow();
  para.f_value = [net, opt](const IndexSet& A) { return represented_value(net, A, opt); };
  ParaResult res = solve_parametric(para, opt);

  json j;
  j["chain"] = chain_to_json(res.chain);
  j["tau"] = res.tau;
  j["alpha0"] = res.alpha0;
  j["pushes"] = res.counters.pushes;
  j["relabels"] = res.counters.relabels;
  j["global_relabels"] = res.counters.global_relabels;
  if (!a.output.empty())
    write_file(a.output, j.dump(2) + "\n");
  else
    std::cout << j.dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string penalty, spec, p = "2";
  double lambda = 1.0;
  int instances = 20;
};

int run_verify(const VerifyArgs& a, const GlobalOpts& g) {
  SetFunction f = load_penalty(a.penalty, a.spec, 1);
  int d = f.dim();
  bool ok = true;

  auto report = [&](const std::string& name, bool pass) {
    std::cout << (pass ? "pass" : "FAIL") << "  " << name << "\n";
    ok = ok && pass;
  };

  if (d <= 12) {
    report("submodular", is_submodular(f));
  } else {
    std::cout << "skip  submodular (d too large for the exhaustive check)\n";
  }

  bool repr_applicable = true;
  FlowNetwork net;
  try {
    net = represent(f);
  } catch (const input_error& e) {
    std::cout << "FAIL  representable: " << e.what() << "\n";
    repr_applicable = false;
    ok = false;
  }
  if (repr_applicable) {
    if (d + net.aux_count() <= 20) {
      report("representation identity", verify_representation(net, f));
    } else {
      std::cout << "skip  representation identity (network too large to enumerate)\n";
    }
  }

  if (d <= 10 && repr_applicable) {
    std::mt19937 rng(g.seed);
    std::uniform_real_distribution<double> U(-2.0, 2.0);
    double worst = 0.0;
    for (int k = 0; k < a.instances; ++k) {
      ProxProblem pb;
      pb.z.resize(static_cast<std::size_t>(d));
      for (auto& v : pb.z) v = U(rng);
      pb.lambda = a.lambda;
      pb.p = parse_p(a.p);
      pb.penalty = f;
      auto w_main = prox(pb, g.flow()).w;
      auto w_ref = decomposition_prox_w(pb);
      for (int i = 0; i < d; ++i)
        worst = std::max(worst, std::abs(w_main[static_cast<std::size_t>(i)] -
                                         w_ref[static_cast<std::size_t>(i)]));
    }
    report("prox matches the decomposition reference (err " + std::to_string(worst) + ")",
           worst <= 1e-6);
  } else if (repr_applicable) {
    std::cout << "skip  prox equivalence (d too large for the exhaustive reference)\n";
  }

  if (!ok) throw numerical_error("verification failed");
  return 0;
}

// ---------------------------------------------------------------------------
// bench

struct BenchArgs {
  std::string family = "group", dims = "100,200,400", p = "inf", output;
  double lambda = 1.0;
  int instances = 10;
};

struct BenchInstance {
  ProxProblem pb;
};

BenchInstance make_instance(const std::string& family, int d, unsigned seed, double lambda,
                            double p) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> U01(0.0, 1.0);
  BenchInstance inst;
  inst.pb.lambda = lambda;
  inst.pb.p = p;
  inst.pb.z.resize(static_cast<std::size_t>(d));
  for (auto& v : inst.pb.z) v = 2.0 * U01(rng) - 1.0;

  if (family == "group") {
    int lo = std::max(1, d / 20), hi = std::max(lo, d / 10);
    int ng = std::uniform_int_distribution<int>(lo, hi)(rng);
    std::vector<Group> groups;
    std::vector<char> covered(static_cast<std::size_t>(d), 0);
    for (int k = 0; k < ng; ++k) {
      Group gr;
      gr.weight = 0.5 + U01(rng);
      int size = std::uniform_int_distribution<int>(30, 100)(rng);
      size = std::min(size, d);
      std::vector<char> in_group(static_cast<std::size_t>(d), 0);
      while (static_cast<int>(gr.members.size()) < size) {
        int v = std::uniform_int_distribution<int>(0, d - 1)(rng);
        if (!in_group[static_cast<std::size_t>(v)]) {
          in_group[static_cast<std::size_t>(v)] = 1;
          gr.members.push_back(v);
          covered[static_cast<std::size_t>(v)] = 1;
        }
      }
      std::sort(gr.members.begin(), gr.members.end());
      groups.push_back(std::move(gr));
    }
    // Sweep uncovered coordinates into one extra group.
    Group rest;
    rest.weight = 1.0;
    for (int v = 0; v < d; ++v)
      if (!covered[static_cast<std::size_t>(v)]) rest.members.push_back(v);
    if (!rest.members.empty()) groups.push_back(std::move(rest));
    inst.pb.penalty = SetFunction::group_cover(d, std::move(groups));
    return inst;
  }
  if (family == "fused") {
    // Connected sparse graph: a random spanning chain plus ~d extra edges.
    std::vector<int> order(static_cast<std::size_t>(d));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<GraphCutEdge> edges;
    for (int i = 0; i + 1 < d; ++i)
      edges.push_back({order[static_cast<std::size_t>(i)],
                       order[static_cast<std::size_t>(i) + 1],
                       std::nextafter(U01(rng), 1.0)});
    for (int k = 0; k < d; ++k) {
      int i = std::uniform_int_distribution<int>(0, d - 1)(rng);
      int j = std::uniform_int_distribution<int>(0, d - 1)(rng);
      if (i != j) edges.push_back({i, j, std::nextafter(U01(rng), 1.0)});
    }
    inst.pb.penalty = SetFunction::graph_cut(d, std::move(edges));
    return inst;
  }
  throw input_error("unknown bench family '" + family + "'");
}

int run_bench(const BenchArgs& a, const GlobalOpts& g) {
  std::vector<int> dims;
  {
    std::istringstream in(a.dims);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      if (tok.empty()) continue;
      dims.push_back(static_cast<int>(std::stol(tok)));
    }
  }
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (dims[k] <= 0) throw input_error("bench dimensions must be positive");
    if (k > 0 && dims[k] <= dims[k - 1])
      throw input_error("bench dimensions must be increasing");
  }
  if (a.instances < 1) throw input_error("bench needs at least one instance per point");

  std::ostringstream csv;
  csv << "d,mean_time_sec,std_time_sec,mean_pushes,mean_relabels,mean_global_relabels,"
         "max_err_vs_reference\n";
  for (int d : dims) {
    std::vector<double> times(static_cast<std::size_t>(a.instances), 0.0);
    std::vector<FlowCounters> counters(static_cast<std::size_t>(a.instances));
    std::vector<double> errs(static_cast<std::size_t>(a.instances), 0.0);
    // The exhaustive reference is only tractable at small dimensions.
    bool check_reference = d <= 10;
    std::atomic<int> next{0};
    auto worker = [&]() {
      for (;;) {
        int k = next.fetch_add(1);
        if (k >= a.instances) return;
        BenchInstance inst = make_instance(a.family, d,
                                           g.seed + static_cast<unsigned>(d) * 1009u +
                                               static_cast<unsigned>(k),
                                           a.lambda, parse_p(a.p));
        auto t0 = std::chrono::steady_clock::now();
        ProxResult res = prox(inst.pb, g.flow());
        times[static_cast<std::size_t>(k)] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        counters[static_cast<std::size_t>(k)] = res.report.counters;
        if (check_reference) {
          auto w_ref = decomposition_prox_w(inst.pb);
          for (std::size_t i = 0; i < w_ref.size(); ++i)
            errs[static_cast<std::size_t>(k)] = std::max(
                errs[static_cast<std::size_t>(k)], std::abs(res.w[i] - w_ref[i]));
        }
      }
    };
    int nw = std::min(g.worker_count(), a.instances);
    std::vector<std::thread> pool;
    for (int w = 1; w < nw; ++w) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    double mean = std::accumulate(times.begin(), times.end(), 0.0) /
                  static_cast<double>(a.instances);
    double var = 0.0;
    for (double t : times) var += (t - mean) * (t - mean);
    var /= static_cast<double>(a.instances);
    double mp = 0.0, mr = 0.0, mg = 0.0;
    for (const auto& c : counters) {
      mp += static_cast<double>(c.pushes);
      mr += static_cast<double>(c.relabels);
      mg += static_cast<double>(c.global_relabels);
    }
    mp /= a.instances;
    mr /= a.instances;
    mg /= a.instances;
    csv << d << ',' << mean << ',' << std::sqrt(var) << ',' << mp << ',' << mr << ','
        << mg << ',';
    if (check_reference)
      csv << *std::max_element(errs.begin(), errs.end());
    csv << '\n';
  }
  if (!a.output.empty())
    write_file(a.output, csv.str());
  else
    std::cout << csv.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"structured-sparsity proximal operators via parametric max-flow"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--seed", g.seed, "RNG seed for randomized subcommands");
  app.add_option("--threads", g.threads, "worker threads (0 = hardware)");
  app.add_option("--tolerance", g.tolerance, "flow residual tolerance");

  ProxArgs pa;
  auto* prox_cmd = app.add_subcommand("prox", "proximal operator of a structured penalty");
  prox_cmd->add_option("--penalty", pa.penalty, "group|cut|hypergraph|cubic|truncation")
      ->required();
  prox_cmd->add_option("--spec", pa.spec, "penalty spec file")->required();
  prox_cmd->add_option("--p", pa.p, "norm degree: 2 or inf");
  prox_cmd->add_option("--lambda", pa.lambda, "regularization weight");
  prox_cmd->add_option("--input", pa.input, "z vector file")->required();
  prox_cmd->add_option("--output", pa.output, "w output file (default stdout)");
  prox_cmd->add_option("--report", pa.report, "JSON report file");

  SolveArgs sa;
  auto* solve_cmd = app.add_subcommand("solve", "FISTA regularized least squares");
  solve_cmd->add_option("--design", sa.design, "design matrix CSV")->required();
  solve_cmd->add_option("--target", sa.target, "target vector file")->required();
  solve_cmd->add_option("--penalty", sa.penalty, "group|cut|hypergraph|cubic|truncation");
  solve_cmd->add_option("--spec", sa.spec, "penalty spec file");
  solve_cmd->add_option("--p", sa.p, "norm degree: 2 or inf");
  solve_cmd->add_option("--lambda", sa.lambda, "regularization weight (0 = none)");
  solve_cmd->add_option("--max-iters", sa.max_iters, "iteration cap");
  solve_cmd->add_option("--ftol", sa.ftol, "relative objective change stop");
  solve_cmd->add_option("--output", sa.output, "w output file (default stdout)");
  solve_cmd->add_option("--report", sa.report, "JSON report file");

  MincutArgs ma;
  auto* mincut_cmd = app.add_subcommand("mincut", "max-flow / min-cut of a network file");
  mincut_cmd->add_option("--network", ma.network, "extended DIMACS file")->required();
  mincut_cmd->add_option("--phi", ma.phi, "parametric capacities by data index");
  mincut_cmd->add_option("--report", ma.report, "JSON report file");

  ParaflowArgs fa;
  auto* para_cmd = app.add_subcommand("paraflow", "full parametric cut chain");
  para_cmd->add_option("--network", fa.network, "extended DIMACS file")->required();
  para_cmd->add_option("--input", fa.input, "z vector file")->required();
  para_cmd->add_option("--p", fa.p, "norm degree: 2 or inf");
  para_cmd->add_option("--lambda", fa.lambda, "regularization weight");
  para_cmd->add_option("--output", fa.output, "JSON output file (default stdout)");

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "self-check a penalty spec");
  verify_cmd->add_option("--penalty", va.penalty, "group|cut|hypergraph|cubic|truncation")
      ->required();
  verify_cmd->add_option("--spec", va.spec, "penalty spec file")->required();
  verify_cmd->add_option("--p", va.p, "norm degree: 2 or inf");
  verify_cmd->add_option("--lambda", va.lambda, "regularization weight");
  verify_cmd->add_option("--instances", va.instances, "random prox instances");

  BenchArgs ba;
  auto* bench_cmd = app.add_subcommand("bench", "prox scaling benchmark, CSV output");
  bench_cmd->add_option("--family", ba.family, "group|fused");
  bench_cmd->add_option("--dims", ba.dims, "comma-separated increasing dimensions");
  bench_cmd->add_option("--instances", ba.instances, "instances per dimension");
  bench_cmd->add_option("--p", ba.p, "norm degree: 2 or inf");
  bench_cmd->add_option("--lambda", ba.lambda, "regularization weight");
  bench_cmd->add_option("--output", ba.output, "CSV output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (prox_cmd->parsed()) return run_prox(pa, g);
    if (solve_cmd->parsed()) return run_solve(sa, g);
    if (mincut_cmd->parsed()) return run_mincut(ma, g);
    if (para_cmd->parsed()) return run_paraflow(fa, g);
    if (verify_cmd->parsed()) return run_verify(va, g);
    if (bench_cmd->parsed()) return run_bench(ba, g);
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const capacity_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const numerical_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
