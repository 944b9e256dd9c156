#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pwa/spectral.hpp"

namespace pwa {

enum class OperatorSource { edge_list_file, matrix_file, builtin };
enum class BuiltinKind { cycle, path, complete, diagonal, random_psd };

/// Where an operator comes from. Textual form (see parse_operator_spec):
///   cycle:N  path:N  complete:N  diagonal:v1,v2,...  random_psd:N[:seed]
///   edges:FILE  matrix:FILE
struct OperatorSpec {
  OperatorSource source = OperatorSource::builtin;
  BuiltinKind builtin = BuiltinKind::cycle;
  std::size_t n = 16;
  std::vector<double> spectrum;  // diagonal builtin
  std::uint64_t seed = 1;        // random_psd builtin
  std::string path;              // file sources
  OperatorKind kind = OperatorKind::raw_L;

  /// Builtins parameterized by N accept a size override.
  bool resizable() const;
  OperatorSpec with_size(std::size_t size) const;
  std::string describe() const;
};

OperatorSpec parse_operator_spec(const std::string& text, OperatorKind kind = OperatorKind::raw_L);

SymmetricOperator build_operator(const OperatorSpec& spec);

struct Edge {
  std::size_t u = 0, v = 0;
  double weight = 1.0;
};

/// Combinatorial Laplacian Deg − Adj; duplicate edges accumulate.
SymmetricOperator graph_laplacian(std::size_t n, const std::vector<Edge>& edges,
                                  OperatorKind kind = OperatorKind::raw_L);

/// Lines "u v [weight]", 0-based ids, '#' starts a comment. The node count
/// (one past the largest id) is stored in node_count when given.
std::vector<Edge> parse_edge_list(std::istream& in, std::size_t* node_count = nullptr);

/// Dense matrix as CSV rows (commas and/or whitespace separate values).
SymmetricOperator parse_matrix_csv(std::istream& in, OperatorKind kind);

}  // namespace pwa
