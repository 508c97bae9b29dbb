#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sqsample/errors.hpp"
#include "sqsample/math.hpp"

namespace sq {

enum class ExportFormat {
  PlyAscii,  // x y z nx ny nz, 9 significant digits
  Obj,       // v / vn records, 17 significant digits
  Csv,       // x,y,z,nx,ny,nz, 17 significant digits
};

/// "ply", "obj" or "csv".
std::optional<ExportFormat> parse_format(std::string_view name);
/// From the file extension, case-insensitive.
std::optional<ExportFormat> format_for_path(const std::filesystem::path& path);

struct PointCloud {
  std::vector<Vec3> points;
  std::vector<Vec3> normals;  // empty or one per point
};

/// Writes points with optional normals (pass an empty span to omit them).
void write_cloud(std::ostream& out, std::span<const Vec3> points, std::span<const Vec3> normals,
                 ExportFormat format);

/// Throws Error(IoError) when the file cannot be written.
void write_cloud_file(const std::filesystem::path& path, std::span<const Vec3> points,
                      std::span<const Vec3> normals, ExportFormat format);

/// Throws Error(ParseError) on malformed input.
PointCloud read_cloud(std::istream& in, ExportFormat format);

/// Format from the extension. Throws Error(IoError) when the file cannot be
/// opened and Error(ParseError) for unknown extensions or malformed content.
PointCloud read_cloud_file(const std::filesystem::path& path);

}  // namespace sq
