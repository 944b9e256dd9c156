#include "pwa/vector_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pwa/errors.hpp"

namespace pwa {

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& text) {
  std::size_t b = text.find_first_not_of(" \t\r\n");
  std::size_t e = text.find_last_not_of(" \t\r\n");
  if (b == std::string::npos) throw Error(ErrorCode::ParseError, "empty number");
  const char* first = text.data() + b;
  const char* last = text.data() + e + 1;
  if (*first == '+') ++first;
  double v = 0.0;
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last)
    throw Error(ErrorCode::ParseError, "not a number: '" + text + "'");
  return v;
}

VectorFormat vector_format_from_string(const std::string& name) {
  if (name == "csv") return VectorFormat::csv;
  if (name == "json") return VectorFormat::json;
  throw Error(ErrorCode::UnsupportedFormat, "unknown vector format '" + name + "'");
}

VectorFormat vector_format_for_path(const std::string& path) {
  const auto dot = path.rfind('.');
  return dot != std::string::npos && path.substr(dot) == ".json" ? VectorFormat::json : VectorFormat::csv;
}

HilbertVector read_vector(std::istream& in, VectorFormat format) {
  std::vector<Complex> entries;
  if (format == VectorFormat::json) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
    if (!j.is_array()) throw Error(ErrorCode::ParseError, "vector JSON must be an array of [re, im] pairs");
    for (const auto& p : j) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
        throw Error(ErrorCode::ParseError, "vector JSON entries must be [re, im] pairs");
      entries.emplace_back(p[0].get<double>(), p[1].get<double>());
    }
    return HilbertVector(std::move(entries));
  }
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto comma = line.find(',');
    try {
      if (comma == std::string::npos) {
        entries.emplace_back(parse_double(line), 0.0);
      } else {
        entries.emplace_back(parse_double(line.substr(0, comma)), parse_double(line.substr(comma + 1)));
      }
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, "vector CSV line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return HilbertVector(std::move(entries));
}

void write_vector(std::ostream& out, const HilbertVector& v, VectorFormat format) {
  if (format == VectorFormat::json) {
    out << '[';
    for (std::size_t i = 0; i < v.size(); ++i)
      out << (i ? "," : "") << '[' << format_double(v[i].real()) << ',' << format_double(v[i].imag()) << ']';
    out << "]\n";
    return;
  }
  for (std::size_t i = 0; i < v.size(); ++i)
    out << format_double(v[i].real()) << ',' << format_double(v[i].imag()) << '\n';
}

HilbertVector load_vector(const std::string& path, VectorFormat format, std::optional<std::size_t> expected_dim) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  auto v = read_vector(in, format);
  if (expected_dim && v.size() != *expected_dim)
    throw Error(ErrorCode::DimensionMismatch, "vector has " + std::to_string(v.size()) + " entries, expected " +
                                                  std::to_string(*expected_dim));
  return v;
}

void save_vector(const std::string& path, const HilbertVector& v, VectorFormat format) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  write_vector(out, v, format);
}

}  // namespace pwa
