#include "cubesurf/mesh.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <numbers>

#include "cubesurf/error.hpp"

namespace cubesurf {

Vec3 MeshTriangle::normal() const {
  Vec3 n = cross(b - a, c - a);
  double len = norm(n);
  return len > 0 ? n / len : Vec3{0, 0, 0};
}

namespace {

// Unit frame perpendicular to dir, chosen from the least-aligned axis for
// stability.
void perpendicular_frame(const Vec3& dir, Vec3& u, Vec3& v) {
  Vec3 axis{1, 0, 0};
  double ax = std::abs(dir.x), ay = std::abs(dir.y), az = std::abs(dir.z);
  if (ay <= ax && ay <= az)
    axis = {0, 1, 0};
  else if (az <= ax && az <= ay)
    axis = {0, 0, 1};
  u = normalized(cross(dir, axis));
  v = cross(dir, u);
}

void append_prism(std::vector<MeshTriangle>& out, const Vec3& p, const Vec3& q, double r,
                  BeamProfile profile) {
  Vec3 d = q - p;
  double len = norm(d);
  if (len <= kEpsGeom) fail(ErrorCode::DegenerateEdge, "projected edge collapsed to a point");
  Vec3 t = d / len;
  Vec3 u, v;
  perpendicular_frame(t, u, v);

  int sides = profile == BeamProfile::square ? 4 : 8;
  // Ring radius keeps the prism's flat faces at distance r from the axis.
  double offset = std::numbers::pi / sides;
  double ring_radius = r / std::cos(offset);

  std::vector<Vec3> ring(static_cast<size_t>(sides));
  for (int k = 0; k < sides; ++k) {
    double angle = offset + 2.0 * std::numbers::pi * k / sides;
    ring[static_cast<size_t>(k)] = u * (ring_radius * std::cos(angle)) + v * (ring_radius * std::sin(angle));
  }

  auto tri = [&](const Vec3& a, const Vec3& b, const Vec3& c) {
    out.push_back({a, b, c, MeshTriangle::Source::edge_beam});
  };

  for (int k = 0; k < sides; ++k) {
    const Vec3& rk = ring[static_cast<size_t>(k)];
    const Vec3& rn = ring[static_cast<size_t>((k + 1) % sides)];
    tri(p + rk, p + rn, q + rn);
    tri(p + rk, q + rn, q + rk);
  }
  for (int k = 1; k + 1 < sides; ++k) {
    tri(p + ring[0], p + ring[static_cast<size_t>(k + 1)], p + ring[static_cast<size_t>(k)]);
    tri(q + ring[0], q + ring[static_cast<size_t>(k)], q + ring[static_cast<size_t>(k + 1)]);
  }
}

void append_panel(std::vector<MeshTriangle>& out, const Quad& corners, double r) {
  Vec3 n = cross(corners[1] - corners[0], corners[2] - corners[0]);
  double len = norm(n);
  if (len <= kEpsGeom) fail(ErrorCode::DegenerateFace, "projected face collapsed");
  Vec3 offset = (n / len) * (r / 2.0);

  Quad top, bottom;
  for (int k = 0; k < 4; ++k) {
    top[static_cast<size_t>(k)] = corners[static_cast<size_t>(k)] + offset;
    bottom[static_cast<size_t>(k)] = corners[static_cast<size_t>(k)] - offset;
  }

  auto tri = [&](const Vec3& a, const Vec3& b, const Vec3& c) {
    out.push_back({a, b, c, MeshTriangle::Source::face_panel});
  };

  tri(top[0], top[1], top[2]);
  tri(top[0], top[2], top[3]);
  tri(bottom[0], bottom[2], bottom[1]);
  tri(bottom[0], bottom[3], bottom[2]);
  for (int k = 0; k < 4; ++k) {
    int kn = (k + 1) % 4;
    tri(bottom[static_cast<size_t>(k)], bottom[static_cast<size_t>(kn)], top[static_cast<size_t>(kn)]);
    tri(bottom[static_cast<size_t>(k)], top[static_cast<size_t>(kn)], top[static_cast<size_t>(k)]);
  }
}

void format_double(std::string& out, double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  out += buf;
}

}  // namespace

BeamMesh build_beam_mesh(const ProjectedScene& scene, const CubicalComplex& complex,
                         double beam_radius, bool panels, BeamProfile profile) {
  if (beam_radius <= 0) fail(ErrorCode::BadFormat, "beam radius must be positive");
  BeamMesh mesh;
  for (int e = 0; e < complex.edge_count(); ++e) {
    const auto& seg = scene.edge_segments[static_cast<size_t>(e)];
    append_prism(mesh.triangles, seg[0], seg[1], beam_radius, profile);
  }
  if (panels)
    for (int f = 0; f < complex.face_count(); ++f)
      append_panel(mesh.triangles, scene.face_corners[static_cast<size_t>(f)], beam_radius);
  return mesh;
}

void write_stl_binary(const BeamMesh& mesh, const std::filesystem::path& path) {
  static_assert(std::endian::native == std::endian::little, "binary STL writer assumes little-endian");
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::IoError, "cannot open " + path.string() + " for writing");

  char header[80] = {};
  std::memcpy(header, "cubesurf beam mesh", 18);
  out.write(header, sizeof(header));

  std::uint32_t count = static_cast<std::uint32_t>(mesh.triangles.size());
  out.write(reinterpret_cast<const char*>(&count), 4);

  for (const MeshTriangle& tri : mesh.triangles) {
    float record[12] = {};
    Vec3 n = tri.normal();
    const Vec3* points[4] = {&n, &tri.a, &tri.b, &tri.c};
    for (int i = 0; i < 4; ++i) {
      record[3 * i + 0] = static_cast<float>(points[i]->x);
      record[3 * i + 1] = static_cast<float>(points[i]->y);
      record[3 * i + 2] = static_cast<float>(points[i]->z);
    }
    out.write(reinterpret_cast<const char*>(record), sizeof(record));
    std::uint16_t attribute = 0;
    out.write(reinterpret_cast<const char*>(&attribute), 2);
  }
  if (!out) fail(ErrorCode::IoError, "short write to " + path.string());
}

void write_obj(const BeamMesh& mesh, const std::filesystem::path& path) {
  std::string text;
  for (const MeshTriangle& tri : mesh.triangles) {
    for (const Vec3* p : {&tri.a, &tri.b, &tri.c}) {
      text += "v ";
      format_double(text, p->x);
      text += ' ';
      format_double(text, p->y);
      text += ' ';
      format_double(text, p->z);
      text += '\n';
    }
  }
  for (size_t i = 0; i < mesh.triangles.size(); ++i) {
    size_t base = 3 * i;
    text += "f " + std::to_string(base + 1) + ' ' + std::to_string(base + 2) + ' ' +
            std::to_string(base + 3) + '\n';
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
  out << text;
  if (!out) fail(ErrorCode::IoError, "short write to " + path.string());
}

void write_obj_scene(const ProjectedScene& scene, const CubicalComplex& complex,
                     const std::filesystem::path& path) {
  std::string text;
  for (const Vec3& p : scene.vertex_points) {
    text += "v ";
    format_double(text, p.x);
    text += ' ';
    format_double(text, p.y);
    text += ' ';
    format_double(text, p.z);
    text += '\n';
  }
  for (int f = 0; f < complex.face_count(); ++f) {
    const auto& corners = complex.face_corners(f);
    text += "f";
    for (int k = 0; k < 4; ++k) text += ' ' + std::to_string(corners[static_cast<size_t>(k)] + 1);
    text += '\n';
  }
  for (int e = 0; e < complex.edge_count(); ++e) {
    const auto& ends = complex.edge_endpoints(e);
    text += "l " + std::to_string(ends[0] + 1) + ' ' + std::to_string(ends[1] + 1) + '\n';
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
  out << text;
  if (!out) fail(ErrorCode::IoError, "short write to " + path.string());
}

}  // namespace cubesurf
