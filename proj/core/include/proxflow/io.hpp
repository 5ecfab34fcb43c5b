#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "proxflow/netrep.hpp"

namespace proxflow {

/// Text loaders: whitespace-separated fields, '#' starts a comment, blank
/// lines ignored, 0-based indices. Malformed input throws input_error with
/// the 1-based line number.

/// One group per line: "weight v1 v2 ...".
std::vector<Group> parse_groups(std::istream& in);
void emit_groups(std::ostream& out, const std::vector<Group>& groups);

/// One edge per line: "i j a_ij".
std::vector<GraphCutEdge> parse_edges(std::istream& in);
void emit_edges(std::ostream& out, const std::vector<GraphCutEdge>& edges);

/// One hyperedge per line: "a_e v1 v2 ... vk".
std::vector<Hyperedge> parse_hyperedges(std::istream& in);
void emit_hyperedges(std::ostream& out, const std::vector<Hyperedge>& hyperedges);

/// Whitespace-separated reals, any line layout.
std::vector<double> parse_vector(std::istream& in);
void emit_vector(std::ostream& out, const std::vector<double>& v);

/// Extended DIMACS max-flow format:
///   p pmax <n> <m>
///   n <id> s | n <id> t | n <id> d <data-index> | n <id> a
///   a <tail> <head> <cap> | a <tail> <head> inf | a <tail> <head> param <data-index>
/// 'c' lines are comments. Node ids are remapped so the source becomes node 0
/// and the sink node 1; the constant offset is not part of the format.
FlowNetwork parse_dimacs(std::istream& in);
void emit_dimacs(std::ostream& out, const FlowNetwork& net);

/// File-based convenience wrappers; errors are prefixed with the path.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace proxflow
