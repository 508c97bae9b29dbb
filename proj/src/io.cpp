#include "sqsample/io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "sqsample/errors.hpp"

namespace sq {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  for (;;) {
    const auto pos = s.find(sep);
    parts.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return parts;
}

std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  std::ostringstream os;
  os << "line " << line << ": " << what;
  throw Error(ErrorCode::ParseError, os.str());
}

double to_double(std::string_view token, std::size_t line) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    parse_fail(line, "not a number: '" + std::string(token) + "'");
  }
  return value;
}

void write_line(std::ostream& out, const char* fmt, const Vec3& v) {
  char buf[128];
  std::snprintf(buf, sizeof buf, fmt, v.x(), v.y(), v.z());
  out << buf;
}

void write_ply(std::ostream& out, std::span<const Vec3> points, std::span<const Vec3> normals) {
  out << "ply\nformat ascii 1.0\nelement vertex " << points.size() << '\n'
      << "property float x\nproperty float y\nproperty float z\n";
  if (!normals.empty()) out << "property float nx\nproperty float ny\nproperty float nz\n";
  out << "end_header\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (normals.empty()) {
      write_line(out, "%.9g %.9g %.9g\n", points[i]);
    } else {
      write_line(out, "%.9g %.9g %.9g ", points[i]);
      write_line(out, "%.9g %.9g %.9g\n", normals[i]);
    }
  }
}

void write_obj(std::ostream& out, std::span<const Vec3> points, std::span<const Vec3> normals) {
  for (const auto& p : points) write_line(out, "v %.17g %.17g %.17g\n", p);
  for (const auto& n : normals) write_line(out, "vn %.17g %.17g %.17g\n", n);
}

void write_csv(std::ostream& out, std::span<const Vec3> points, std::span<const Vec3> normals) {
  out << (normals.empty() ? "x,y,z\n" : "x,y,z,nx,ny,nz\n");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (normals.empty()) {
      write_line(out, "%.17g,%.17g,%.17g\n", points[i]);
    } else {
      write_line(out, "%.17g,%.17g,%.17g,", points[i]);
      write_line(out, "%.17g,%.17g,%.17g\n", normals[i]);
    }
  }
}

// Column positions of x, y, z, nx, ny, nz; -1 when absent.
using Columns = std::array<int, 6>;
constexpr std::array<std::string_view, 6> kColumnNames = {"x", "y", "z", "nx", "ny", "nz"};

void check_columns(const Columns& cols, std::size_t line) {
  for (int i = 0; i < 3; ++i) {
    if (cols[i] < 0) parse_fail(line, "missing column '" + std::string(kColumnNames[i]) + "'");
  }
  const bool any_normal = cols[3] >= 0 || cols[4] >= 0 || cols[5] >= 0;
  const bool all_normal = cols[3] >= 0 && cols[4] >= 0 && cols[5] >= 0;
  if (any_normal && !all_normal) parse_fail(line, "incomplete normal columns");
}

void take_row(const std::vector<double>& values, const Columns& cols, PointCloud& cloud) {
  cloud.points.emplace_back(values[cols[0]], values[cols[1]], values[cols[2]]);
  if (cols[3] >= 0) cloud.normals.emplace_back(values[cols[3]], values[cols[4]], values[cols[5]]);
}

PointCloud read_ply(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next = [&]() -> bool {
    if (!std::getline(in, line)) return false;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  };

  if (!next() || trim(line) != "ply") parse_fail(line_no, "missing 'ply' magic");
  std::size_t vertex_count = 0;
  bool in_vertex = false;
  bool seen_vertex = false;
  bool ascii = false;
  int property_index = 0;
  Columns cols;
  cols.fill(-1);
  for (;;) {
    if (!next()) parse_fail(line_no, "unterminated header");
    const auto w = words(line);
    if (w.empty() || w[0] == "comment" || w[0] == "obj_info") continue;
    if (w[0] == "end_header") break;
    if (w[0] == "format") {
      if (w.size() < 2 || w[1] != "ascii") parse_fail(line_no, "only ascii PLY is supported");
      ascii = true;
    } else if (w[0] == "element") {
      if (w.size() < 3) parse_fail(line_no, "bad element line");
      in_vertex = w[1] == "vertex";
      if (in_vertex) {
        // Vertices must come first for this reader.
        if (seen_vertex) parse_fail(line_no, "duplicate vertex element");
        seen_vertex = true;
        vertex_count = static_cast<std::size_t>(to_double(w[2], line_no));
      } else if (!seen_vertex) {
        parse_fail(line_no, "vertex element must come first");
      }
    } else if (w[0] == "property") {
      if (!in_vertex) continue;
      if (w.size() < 3 || w[1] == "list") parse_fail(line_no, "unsupported vertex property");
      const auto it = std::find(kColumnNames.begin(), kColumnNames.end(), w[2]);
      if (it != kColumnNames.end()) cols[static_cast<std::size_t>(it - kColumnNames.begin())] = property_index;
      ++property_index;
    }
  }
  if (!ascii) parse_fail(line_no, "missing format line");
  check_columns(cols, line_no);

  PointCloud cloud;
  cloud.points.reserve(vertex_count);
  std::vector<double> values;
  for (std::size_t i = 0; i < vertex_count; ++i) {
    if (!next()) parse_fail(line_no, "fewer vertices than declared");
    const auto w = words(line);
    if (static_cast<int>(w.size()) < property_index) parse_fail(line_no, "short vertex record");
    values.clear();
    for (int k = 0; k < property_index; ++k) values.push_back(to_double(w[k], line_no));
    take_row(values, cols, cloud);
  }
  return cloud;
}

PointCloud read_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  Columns cols;
  cols.fill(-1);
  std::size_t width = 0;
  PointCloud cloud;
  std::vector<double> values;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    const auto fields = split(line, ',');
    if (width == 0) {
      width = fields.size();
      for (std::size_t i = 0; i < fields.size(); ++i) {
        const auto it = std::find(kColumnNames.begin(), kColumnNames.end(), lower(fields[i]));
        if (it != kColumnNames.end()) cols[static_cast<std::size_t>(it - kColumnNames.begin())] = static_cast<int>(i);
      }
      check_columns(cols, line_no);
      continue;
    }
    if (fields.size() != width) parse_fail(line_no, "wrong number of fields");
    values.clear();
    for (auto f : fields) values.push_back(to_double(f, line_no));
    take_row(values, cols, cloud);
  }
  if (width == 0) parse_fail(line_no, "missing header");
  return cloud;
}

PointCloud read_obj(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  PointCloud cloud;
  while (std::getline(in, line)) {
    ++line_no;
    const auto w = words(line);
    if (w.empty()) continue;
    if (w[0] != "v" && w[0] != "vn") continue;
    if (w.size() < 4) parse_fail(line_no, "short vertex record");
    const Vec3 v(to_double(w[1], line_no), to_double(w[2], line_no), to_double(w[3], line_no));
    (w[0] == "v" ? cloud.points : cloud.normals).push_back(v);
  }
  if (!cloud.normals.empty() && cloud.normals.size() != cloud.points.size()) {
    parse_fail(line_no, "normal count does not match vertex count");
  }
  return cloud;
}

}  // namespace

std::optional<ExportFormat> parse_format(std::string_view name) {
  const std::string n = lower(name);
  if (n == "ply") return ExportFormat::PlyAscii;
  if (n == "obj") return ExportFormat::Obj;
  if (n == "csv") return ExportFormat::Csv;
  return std::nullopt;
}

std::optional<ExportFormat> format_for_path(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  if (ext.empty()) return std::nullopt;
  return parse_format(std::string_view(ext).substr(1));
}

void write_cloud(std::ostream& out, std::span<const Vec3> points, std::span<const Vec3> normals,
                 ExportFormat format) {
  if (!normals.empty() && normals.size() != points.size()) {
    throw Error(ErrorCode::InvalidConfig, "normal count does not match point count");
  }
  switch (format) {
    case ExportFormat::PlyAscii: write_ply(out, points, normals); break;
    case ExportFormat::Obj: write_obj(out, points, normals); break;
    case ExportFormat::Csv: write_csv(out, points, normals); break;
  }
}

void write_cloud_file(const std::filesystem::path& path, std::span<const Vec3> points,
                      std::span<const Vec3> normals, ExportFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "' for writing");
  write_cloud(out, points, normals, format);
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "failed writing '" + path.string() + "'");
}

PointCloud read_cloud(std::istream& in, ExportFormat format) {
  switch (format) {
    case ExportFormat::PlyAscii: return read_ply(in);
    case ExportFormat::Obj: return read_obj(in);
    case ExportFormat::Csv: return read_csv(in);
  }
  throw Error(ErrorCode::ParseError, "unknown format");
}

PointCloud read_cloud_file(const std::filesystem::path& path) {
  const auto format = format_for_path(path);
  if (!format) throw Error(ErrorCode::ParseError, "unknown point cloud extension: '" + path.string() + "'");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
  return read_cloud(in, *format);
}

}  // namespace sq
