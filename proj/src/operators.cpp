#include "pwa/operators.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "pwa/errors.hpp"
#include "pwa/random.hpp"
#include "pwa/vector_io.hpp"

namespace pwa {

namespace {

std::size_t parse_size(const std::string& text) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &pos);
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "expected a size, got '" + text + "'");
  }
  if (pos != text.size()) throw Error(ErrorCode::ParseError, "expected a size, got '" + text + "'");
  return static_cast<std::size_t>(v);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  return in;
}

SymmetricOperator random_psd(std::size_t n, std::uint64_t seed, OperatorKind kind) {
  Rng rng(seed);
  std::vector<double> b(n * n);
  for (auto& x : b) x = rng.normal();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += b[i * n + k] * b[j * n + k];
      a[i * n + j] = a[j * n + i] = s / static_cast<double>(n);
    }
  return SymmetricOperator(n, std::move(a), kind);
}

}  // namespace

bool OperatorSpec::resizable() const {
  return source == OperatorSource::builtin && builtin != BuiltinKind::diagonal;
}

OperatorSpec OperatorSpec::with_size(std::size_t size) const {
  OperatorSpec s = *this;
  if (resizable()) s.n = size;
  return s;
}

std::string OperatorSpec::describe() const {
  switch (source) {
    case OperatorSource::edge_list_file: return "edges:" + path;
    case OperatorSource::matrix_file: return "matrix:" + path;
    case OperatorSource::builtin: break;
  }
  switch (builtin) {
    case BuiltinKind::cycle: return "cycle:" + std::to_string(n);
    case BuiltinKind::path: return "path:" + std::to_string(n);
    case BuiltinKind::complete: return "complete:" + std::to_string(n);
    case BuiltinKind::random_psd: return "random_psd:" + std::to_string(n) + ":" + std::to_string(seed);
    case BuiltinKind::diagonal: {
      std::string s = "diagonal:";
      for (std::size_t i = 0; i < spectrum.size(); ++i) s += (i ? "," : "") + format_double(spectrum[i]);
      return s;
    }
  }
  return "unknown";
}

OperatorSpec parse_operator_spec(const std::string& text, OperatorKind kind) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "operator spec needs 'kind:args': " + text);
  const std::string head = text.substr(0, colon), rest = text.substr(colon + 1);
  OperatorSpec s;
  s.kind = kind;
  if (head == "edges" || head == "matrix") {
    s.source = head == "edges" ? OperatorSource::edge_list_file : OperatorSource::matrix_file;
    s.path = rest;
    return s;
  }
  s.source = OperatorSource::builtin;
  if (head == "cycle" || head == "path" || head == "complete") {
    s.builtin = head == "cycle" ? BuiltinKind::cycle : head == "path" ? BuiltinKind::path : BuiltinKind::complete;
    s.n = parse_size(rest);
  } else if (head == "random_psd") {
    s.builtin = BuiltinKind::random_psd;
    const auto parts = split(rest, ':');
    if (parts.empty() || parts.size() > 2) throw Error(ErrorCode::ParseError, "random_psd:N[:seed]");
    s.n = parse_size(parts[0]);
    if (parts.size() == 2) s.seed = parse_size(parts[1]);
  } else if (head == "diagonal") {
    s.builtin = BuiltinKind::diagonal;
    for (const auto& v : split(rest, ',')) s.spectrum.push_back(parse_double(v));
    s.n = s.spectrum.size();
  } else {
    throw Error(ErrorCode::ParseError, "unknown operator kind '" + head + "'");
  }
  return s;
}

SymmetricOperator graph_laplacian(std::size_t n, const std::vector<Edge>& edges, OperatorKind kind) {
  if (n == 0) throw Error(ErrorCode::BadDimension, "graph needs at least one node");
  std::vector<double> a(n * n, 0.0);
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) throw Error(ErrorCode::BadDimension, "edge endpoint out of range");
    a[e.u * n + e.v] -= e.weight;
    a[e.v * n + e.u] -= e.weight;
    a[e.u * n + e.u] += e.weight;
    a[e.v * n + e.v] += e.weight;
  }
  return SymmetricOperator(n, std::move(a), kind);
}

std::vector<Edge> parse_edge_list(std::istream& in, std::size_t* node_count) {
  std::vector<Edge> edges;
  std::size_t nodes = 0;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    auto fail = [&](const std::string& why) {
      throw Error(ErrorCode::ParseError, "edge list line " + std::to_string(lineno) + ": " + why);
    };
    if (tok.size() < 2 || tok.size() > 3) fail("expected 'u v [weight]'");
    Edge e;
    try {
      e.u = parse_size(tok[0]);
      e.v = parse_size(tok[1]);
      if (tok.size() == 3) e.weight = parse_double(tok[2]);
    } catch (const Error& err) {
      fail(err.what());
    }
    if (e.u == e.v) fail("self-loops are not allowed");
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) fail("weights must be positive");
    nodes = std::max(nodes, std::max(e.u, e.v) + 1);
    edges.push_back(e);
  }
  if (node_count) *node_count = nodes;
  return edges;
}

SymmetricOperator parse_matrix_csv(std::istream& in, OperatorKind kind) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    std::vector<double> row;
    for (std::string t; ls >> t;) row.push_back(parse_double(t));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  const std::size_t n = rows.size();
  if (n == 0) throw Error(ErrorCode::ParseError, "matrix file is empty");
  std::vector<double> a;
  a.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw Error(ErrorCode::BadDimension, "matrix is not square");
    a.insert(a.end(), r.begin(), r.end());
  }
  return SymmetricOperator(n, std::move(a), kind);
}

SymmetricOperator build_operator(const OperatorSpec& spec) {
  switch (spec.source) {
    case OperatorSource::edge_list_file: {
      auto in = open_input(spec.path);
      std::size_t n = 0;
      const auto edges = parse_edge_list(in, &n);
      return graph_laplacian(n, edges, spec.kind);
    }
    case OperatorSource::matrix_file: {
      auto in = open_input(spec.path);
      return parse_matrix_csv(in, spec.kind);
    }
    case OperatorSource::builtin: break;
  }
  const std::size_t n = spec.n;
  if (n == 0) throw Error(ErrorCode::BadDimension, "operator dimension must be positive");
  std::vector<Edge> edges;
  switch (spec.builtin) {
    case BuiltinKind::cycle:
      if (n < 3) throw Error(ErrorCode::BadDimension, "cycle needs at least 3 nodes");
      for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1.0});
      return graph_laplacian(n, edges, spec.kind);
    case BuiltinKind::path:
      for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
      return graph_laplacian(n, edges, spec.kind);
    case BuiltinKind::complete:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j, 1.0});
      return graph_laplacian(n, edges, spec.kind);
    case BuiltinKind::diagonal: {
      std::vector<double> a(n * n, 0.0);
      for (std::size_t i = 0; i < n; ++i) a[i * n + i] = spec.spectrum.at(i);
      return SymmetricOperator(n, std::move(a), spec.kind);
    }
    case BuiltinKind::random_psd:
      return random_psd(n, spec.seed, spec.kind);
  }
  throw Error(ErrorCode::ParseError, "unknown builtin operator");
}

}  // namespace pwa
