#pragma once

#include <array>
#include <cmath>
#include <optional>

namespace cubesurf {

// Degeneracy / coincidence tolerance for all geometric predicates, in scene
// units.
inline constexpr double kEpsGeom = 1e-9;

struct Vec3 {
  double x = 0, y = 0, z = 0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }

  friend bool operator==(const Vec3&, const Vec3&) = default;
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm2(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(norm2(v)); }
inline Vec3 normalized(const Vec3& v) { return v / norm(v); }

using Vec4 = std::array<double, 4>;
using Vec5 = std::array<double, 5>;
using Mat5 = std::array<std::array<double, 5>, 5>;

using Quad = std::array<Vec3, 4>;

struct SegmentClearance {
  double distance = 0;
  Vec3 point_a, point_b;  // realizing closest points on the two segments
};

// Minimum distance between two closed segments, clamped closest-point
// computation. Throws DegenerateEdge when a segment is shorter than
// kEpsGeom.
SegmentClearance segment_clearance(const Vec3& a0, const Vec3& a1, const Vec3& b0, const Vec3& b1);

// Intersection verdict for two planar quadrilaterals given as corners in
// cyclic order. Pairs sharing an edge never intersect by convention. When
// the quads share exactly one complex vertex, its image is passed in
// `shared_vertex` and contact confined to that point does not count; any
// intersection extending beyond it does. Each quad is split along the fixed
// 0-2 diagonal; verdicts combine transversal triangle-pair contact and
// coplanar overlap of positive area. Throws DegenerateFace when a quad's
// corners are collinear within tolerance.
bool faces_intersect(const Quad& a, const Quad& b, bool share_edge,
                     const std::optional<Vec3>& shared_vertex);

}  // namespace cubesurf
