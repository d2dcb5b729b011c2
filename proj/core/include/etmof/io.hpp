#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "etmof/shape.hpp"

namespace etmof {

/// Shortest round-trippable decimal form; all numeric emission goes through
/// this so identical doubles always produce identical bytes.
std::string format_double(double v);

using HeaderFields = std::vector<std::pair<std::string, std::string>>;

/// Plain-text point set: '#'-prefixed header lines, then one
/// whitespace-separated objective vector per line.
void write_front_file(const std::filesystem::path& path,
                      const std::vector<Objectives>& points, const HeaderFields& header);
std::vector<Objectives> read_front_file(const std::filesystem::path& path);

void write_reference_front(const std::filesystem::path& path, const ReferenceFront& front);

/// Whitespace-separated reals; throws std::runtime_error on anything else.
std::vector<double> read_vector_file(const std::filesystem::path& path);

void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Flat "key = value" files (the meta/config idiom of the harness).
void write_key_values(const std::filesystem::path& path, const HeaderFields& fields);
std::map<std::string, std::string> read_key_values(const std::filesystem::path& path);

} // namespace etmof
