#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "signhom/signed_graph.hpp"

namespace signhom {

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

/// Parses the line-oriented .sg format:
///
///   sg <n>
///   <u> <v> <+|->      (0 <= u < v < n)
///
/// Lines starting with '#' are comments and blank lines are ignored. A
/// `# name: <label>` comment sets the graph name.
SignedGraph read_sg(std::string_view text);

/// Normalized form: header, optional name comment, edges in lexicographic
/// order. read_sg(write_sg(g)) == g.
std::string write_sg(const SignedGraph& g);

SignedGraph load_sg(const std::filesystem::path& path);
void save_sg(const std::filesystem::path& path, const SignedGraph& g);

/// Graphviz rendering: positive edges solid, negative edges dashed.
std::string export_dot(const SignedGraph& g);

}  // namespace signhom
