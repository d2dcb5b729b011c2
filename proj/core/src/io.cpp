#include "etmof/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace etmof {
namespace {

std::string trim(const std::string& s) {
  const std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path.string());
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path.string());
  return out;
}

} // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_front_file(const std::filesystem::path& path,
                      const std::vector<Objectives>& points, const HeaderFields& header) {
  std::ofstream out = open_out(path);
  for (const auto& [k, v] : header) out << "# " << k << " " << v << "\n";
  for (const auto& p : points) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) out << " ";
      out << format_double(p[i]);
    }
    out << "\n";
  }
}

std::vector<Objectives> read_front_file(const std::filesystem::path& path) {
  std::ifstream in = open_in(path);
  std::vector<Objectives> points;
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::istringstream row(t);
    Objectives p;
    double v;
    while (row >> v) p.push_back(v);
    if (!row.eof()) throw std::runtime_error("malformed numeric row in " + path.string());
    points.push_back(std::move(p));
  }
  return points;
}

void write_reference_front(const std::filesystem::path& path, const ReferenceFront& front) {
  HeaderFields header;
  if (front.shape) header.emplace_back("shape", std::string(shape_tag(*front.shape)));
  header.emplace_back("m", std::to_string(front.m));
  header.emplace_back("count", std::to_string(front.points.size()));
  write_front_file(path, front.points, header);
}

std::vector<double> read_vector_file(const std::filesystem::path& path) {
  std::ifstream in = open_in(path);
  std::vector<double> values;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    double v;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      throw std::runtime_error("not a number in " + path.string() + ": '" + token + "'");
    }
    if (used != token.size()) {
      throw std::runtime_error("not a number in " + path.string() + ": '" + token + "'");
    }
    values.push_back(v);
  }
  return values;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  open_out(path) << text;
}

void write_key_values(const std::filesystem::path& path, const HeaderFields& fields) {
  std::ofstream out = open_out(path);
  for (const auto& [k, v] : fields) out << k << " = " << v << "\n";
}

std::map<std::string, std::string> read_key_values(const std::filesystem::path& path) {
  std::ifstream in = open_in(path);
  std::map<std::string, std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const std::size_t eq = t.find('=');
    if (eq == std::string::npos) continue;
    out[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
  }
  return out;
}

} // namespace etmof
