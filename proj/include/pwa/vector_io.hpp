#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "pwa/spectral.hpp"

namespace pwa {

// CSV: one "re,im" row per entry. JSON: array of [re, im] pairs. Numbers are
// written in shortest round-trip form, so save → load is exact.
enum class VectorFormat { csv, json };

VectorFormat vector_format_from_string(const std::string& name);
/// By extension: .json → json, anything else → csv.
VectorFormat vector_format_for_path(const std::string& path);

HilbertVector read_vector(std::istream& in, VectorFormat format);
void write_vector(std::ostream& out, const HilbertVector& v, VectorFormat format);

/// Throws DimensionMismatch when expected_dim is set and differs.
HilbertVector load_vector(const std::string& path, VectorFormat format,
                          std::optional<std::size_t> expected_dim = std::nullopt);
void save_vector(const std::string& path, const HilbertVector& v, VectorFormat format);

/// Shortest representation that parses back to the same double.
std::string format_double(double x);
double parse_double(const std::string& text);

}  // namespace pwa
