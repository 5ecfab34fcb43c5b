#include "proxflow/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

namespace proxflow {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  throw input_error("line " + std::to_string(line) + ": " + msg);
}

/// Strips a '#' comment and reports whether anything remains.
bool strip_comment(std::string& s) {
  auto pos = s.find('#');
  if (pos != std::string::npos) s.erase(pos);
  return s.find_first_not_of(" \t\r\n") != std::string::npos;
}

double to_real(const std::string& tok, int line) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(tok, &used);
  } catch (const std::exception&) {
    fail(line, "expected a number, got '" + tok + "'");
  }
  if (used != tok.size()) fail(line, "trailing characters in number '" + tok + "'");
  if (!std::isfinite(v)) fail(line, "non-finite number '" + tok + "'");
  return v;
}

int to_index(const std::string& tok, int line) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    fail(line, "expected an index, got '" + tok + "'");
  }
  if (used != tok.size() || v < 0) fail(line, "bad index '" + tok + "'");
  return static_cast<int>(v);
}

std::vector<std::string> tokens_of(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

}  // namespace

std::vector<Group> parse_groups(std::istream& in) {
  std::vector<Group> out;
  std::string raw;
  for (int line = 1; std::getline(in, raw); ++line) {
    if (!strip_comment(raw)) continue;
    auto toks = tokens_of(raw);
    if (toks.size() < 2) fail(line, "group needs a weight and at least one member");
    Group g;
    g.weight = to_real(toks[0], line);
    if (g.weight < 0.0) fail(line, "negative group weight");
    for (std::size_t k = 1; k < toks.size(); ++k)
      g.members.push_back(to_index(toks[k], line));
    out.push_back(std::move(g));
  }
  return out;
}

void emit_groups(std::ostream& out, const std::vector<Group>& groups) {
  out << std::setprecision(17);
  for (const auto& g : groups) {
    out << g.weight;
    for (int v : g.members) out << ' ' << v;
    out << '\n';
  }
}

std::vector<GraphCutEdge> parse_edges(std::istream& in) {
  std::vector<GraphCutEdge> out;
  std::string raw;
  for (int line = 1; std::getline(in, raw); ++line) {
    if (!strip_comment(raw)) continue;
    auto toks = tokens_of(raw);
    if (toks.size() != 3) fail(line, "edge line must be 'i j weight'");
    GraphCutEdge e;
    e.i = to_index(toks[0], line);
    e.j = to_index(toks[1], line);
    e.weight = to_real(toks[2], line);
    if (e.weight < 0.0) fail(line, "negative edge weight");
    out.push_back(e);
  }
  return out;
}

void emit_edges(std::ostream& out, const std::vector<GraphCutEdge>& edges) {
  out << std::setprecision(17);
  for (const auto& e : edges) out << e.i << ' ' << e.j << ' ' << e.weight << '\n';
}

std::vector<Hyperedge> parse_hyperedges(std::istream& in) {
  std::vector<Hyperedge> out;
  std::string raw;
  for (int line = 1; std::getline(in, raw); ++line) {
    if (!strip_comment(raw)) continue;
    auto toks = tokens_of(raw);
    if (toks.size() < 3) fail(line, "hyperedge needs a weight and two or more members");
    Hyperedge e;
    e.weight = to_real(toks[0], line);
    if (e.weight < 0.0) fail(line, "negative hyperedge weight");
    for (std::size_t k = 1; k < toks.size(); ++k)
      e.members.push_back(to_index(toks[k], line));
    out.push_back(std::move(e));
  }
  return out;
}

void emit_hyperedges(std::ostream& out, const std::vector<Hyperedge>& hyperedges) {
  out << std::setprecision(17);
  for (const auto& e : hyperedges) {
    out << e.weight;
    for (int v : e.members) out << ' ' << v;
    out << '\n';
  }
}

std::vector<double> parse_vector(std::istream& in) {
  std::vector<double> out;
  std::string raw;
  for (int line = 1; std::getline(in, raw); ++line) {
    if (!strip_comment(raw)) continue;
    for (const auto& tok : tokens_of(raw)) out.push_back(to_real(tok, line));
  }
  return out;
}

void emit_vector(std::ostream& out, const std::vector<double>& v) {
  out << std::setprecision(17);
  for (std::size_t i = 0; i < v.size(); ++i)
    out << v[i] << (i + 1 == v.size() ? '\n' : ' ');
}

FlowNetwork parse_dimacs(std::istream& in) {
  std::string raw;
  bool have_header = false;
  int n = 0, m = 0;
  std::map<int, int> id_map;  // file id -> internal id
  int source_id = -1, sink_id = -1;
  struct RawNode {
    int file_id;
    NodeId node;
  };
  std::vector<RawNode> raw_nodes;
  struct RawArc {
    int tail, head, line;
    Capacity cap;
  };
  std::vector<RawArc> raw_arcs;

  for (int line = 1; std::getline(in, raw); ++line) {
    auto toks = tokens_of(raw);
    if (toks.empty() || toks[0] == "c") continue;
    if (toks[0] == "p") {
      if (have_header) fail(line, "duplicate problem line");
      if (toks.size() != 4 || toks[1] != "pmax") fail(line, "expected 'p pmax <n> <m>'");
      n = to_index(toks[2], line);
      m = to_index(toks[3], line);
      have_header = true;
    } else if (toks[0] == "n") {
      if (!have_header) fail(line, "node line before the problem line");
      if (toks.size() < 3) fail(line, "node line must be 'n <id> s|t|a|d <data-index>'");
      int id = to_index(toks[1], line);
      if (id_map.count(id)) fail(line, "duplicate node id " + std::to_string(id));
      NodeId node;
      if (toks[2] == "s" && toks.size() == 3) {
        if (source_id >= 0) fail(line, "second source node");
        node = {NodeKind::Source, -1};
        source_id = id;
      } else if (toks[2] == "t" && toks.size() == 3) {
        if (sink_id >= 0) fail(line, "second sink node");
        node = {NodeKind::Sink, -1};
        sink_id = id;
      } else if (toks[2] == "a" && toks.size() == 3) {
        node = {NodeKind::Aux, -1};
      } else if (toks[2] == "d" && toks.size() == 4) {
        node = {NodeKind::Data, to_index(toks[3], line)};
      } else {
        fail(line, "node line must be 'n <id> s|t|a|d <data-index>'");
      }
      id_map.emplace(id, -1);
      raw_nodes.push_back({id, node});
    } else if (toks[0] == "a") {
      if (!have_header) fail(line, "arc line before the problem line");
      if (toks.size() < 4) fail(line, "arc line must be 'a <tail> <head> <cap>'");
      RawArc a;
      a.tail = to_index(toks[1], line);
      a.head = to_index(toks[2], line);
      a.line = line;
      if (toks[3] == "inf" && toks.size() == 4) {
        a.cap = Capacity::infinite();
      } else if (toks[3] == "param" && toks.size() == 5) {
        a.cap = Capacity::param(to_index(toks[4], line));
      } else if (toks.size() == 4) {
        double c = to_real(toks[3], line);
        if (c < 0.0) fail(line, "negative arc capacity");
        a.cap = Capacity::finite(c);
      } else {
        fail(line, "arc line must be 'a <tail> <head> <cap>|inf|param <data-index>'");
      }
      raw_arcs.push_back(a);
    } else {
      fail(line, "unknown record '" + toks[0] + "'");
    }
  }

  if (!have_header) throw input_error("missing 'p pmax' problem line");
  if (source_id < 0) throw input_error("missing source node");
  if (sink_id < 0) throw input_error("missing sink node");
  if (static_cast<int>(raw_nodes.size()) != n)
    throw input_error("node count disagrees with the problem line");
  if (static_cast<int>(raw_arcs.size()) != m)
    throw input_error("arc count disagrees with the problem line");

  // Internal layout: source 0, sink 1, others in declaration order.
  FlowNetwork net;
  net.nodes.push_back({NodeKind::Source, -1});
  net.nodes.push_back({NodeKind::Sink, -1});
  id_map[source_id] = 0;
  id_map[sink_id] = 1;
  int max_data = -1;
  int aux_ordinal = 0;
  for (const auto& rn : raw_nodes) {
    if (rn.node.kind == NodeKind::Source || rn.node.kind == NodeKind::Sink) continue;
    NodeId node = rn.node;
    if (node.kind == NodeKind::Data) {
      max_data = std::max(max_data, node.index);
    } else {
      node.index = aux_ordinal++;
    }
    id_map[rn.file_id] = static_cast<int>(net.nodes.size());
    net.nodes.push_back(node);
  }
  net.d = max_data + 1;
  for (std::size_t i = 2; i < net.nodes.size(); ++i) {
    const NodeId& node = net.nodes[i];
    if (node.kind == NodeKind::Data && net.find_data_node(node.index) != static_cast<int>(i))
      throw input_error("duplicate data index " + std::to_string(node.index));
  }
  for (const auto& ra : raw_arcs) {
    auto it_t = id_map.find(ra.tail);
    auto it_h = id_map.find(ra.head);
    if (it_t == id_map.end() || it_h == id_map.end())
      fail(ra.line, "arc references an undeclared node");
    if (ra.cap.kind == Capacity::Param && (ra.cap.data < 0 || ra.cap.data >= net.d))
      fail(ra.line, "parametric arc references an unknown data index");
    net.arcs.push_back({it_t->second, it_h->second, ra.cap});
  }
  return net;
}

void emit_dimacs(std::ostream& out, const FlowNetwork& net) {
  out << std::setprecision(17);
  out << "p pmax " << net.node_count() << ' ' << net.arcs.size() << '\n';
  for (int v = 0; v < net.node_count(); ++v) {
    const NodeId& node = net.nodes[static_cast<std::size_t>(v)];
    out << "n " << v << ' ';
    switch (node.kind) {
      case NodeKind::Source: out << 's'; break;
      case NodeKind::Sink: out << 't'; break;
      case NodeKind::Aux: out << 'a'; break;
      case NodeKind::Data: out << "d " << node.index; break;
    }
    out << '\n';
  }
  for (const auto& a : net.arcs) {
    out << "a " << a.tail << ' ' << a.head << ' ';
    switch (a.cap.kind) {
      case Capacity::Finite: out << a.cap.value; break;
      case Capacity::Infinite: out << "inf"; break;
      case Capacity::Param: out << "param " << a.cap.data; break;
    }
    out << '\n';
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error(path + ": cannot open for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error(path + ": cannot open for writing");
  out << content;
  if (!out) throw input_error(path + ": write failed");
}

}  // namespace proxflow
