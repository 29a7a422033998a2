#include "cubesurf/projection.hpp"

#include <cmath>
#include <numbers>

#include "cubesurf/error.hpp"

namespace cubesurf {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double wrap_angle(double radians) {
  double w = std::fmod(radians, kTwoPi);
  if (w < 0) w += kTwoPi;
  if (w >= kTwoPi) w = 0;  // fmod rounding can land exactly on 2*pi
  return w;
}

EmbeddingState wrap_state(const EmbeddingState& state) {
  EmbeddingState out = state;
  for (double& a : out.phi) a = wrap_angle(a);
  return out;
}

Mat5 rotation_matrix(const std::array<double, 10>& phi) {
  Mat5 m{};
  for (int i = 0; i < 5; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1.0;

  for (size_t k = 0; k < kRotationPlanes.size(); ++k) {
    int i = kRotationPlanes[k][0];
    int j = kRotationPlanes[k][1];
    double angle = wrap_angle(phi[k]);
    double c = std::cos(angle);
    double s = std::sin(angle);
    // Left-multiply by the plane rotation G(i,j,angle): row i and row j of
    // the accumulated matrix are mixed, e_i -> cos*e_i + sin*e_j.
    for (int col = 0; col < 5; ++col) {
      double vi = m[static_cast<size_t>(i)][static_cast<size_t>(col)];
      double vj = m[static_cast<size_t>(j)][static_cast<size_t>(col)];
      m[static_cast<size_t>(i)][static_cast<size_t>(col)] = c * vi - s * vj;
      m[static_cast<size_t>(j)][static_cast<size_t>(col)] = s * vi + c * vj;
    }
  }
  return m;
}

Vec5 apply_matrix(const Mat5& m, const Vec5& p) {
  Vec5 out{};
  for (int r = 0; r < 5; ++r) {
    double acc = 0;
    for (int c = 0; c < 5; ++c) acc += m[static_cast<size_t>(r)][static_cast<size_t>(c)] * p[static_cast<size_t>(c)];
    out[static_cast<size_t>(r)] = acc;
  }
  return out;
}

std::vector<double> perspective_project(std::span<const double> point, double d, double c,
                                        ScreenFrom screen_from, double denom_floor) {
  if (point.size() < 2) fail(ErrorCode::InvalidK, "projection needs at least two coordinates");
  double last = point[point.size() - 1];
  double denom = d - last;
  if (denom < denom_floor)
    fail(ErrorCode::BehindCamera, "point at depth " + std::to_string(last) +
                                      " is behind the camera at distance " + std::to_string(d));
  double scale = screen_from == ScreenFrom::camera ? c : d - c;
  std::vector<double> out(point.size() - 1);
  for (size_t i = 0; i + 1 < point.size(); ++i) out[i] = scale * point[i] / denom;
  return out;
}

Vec4 project_5_to_4(const Vec5& p, double d, const ProjectionConstants& constants) {
  auto q = perspective_project(std::span<const double>(p.data(), 5), d, constants.c5,
                               constants.screen_from, constants.denom_floor);
  return {q[0], q[1], q[2], q[3]};
}

Vec3 project_4_to_3(const Vec4& p, double d, const ProjectionConstants& constants) {
  auto q = perspective_project(std::span<const double>(p.data(), 4), d, constants.c4,
                               constants.screen_from, constants.denom_floor);
  return {q[0], q[1], q[2]};
}

double world_radius() { return std::sqrt(5.0) / 2.0; }

double min_d5(const ProjectionConstants& constants) {
  return constants.c5 + world_radius() + 0.1;
}

double min_d4(const EmbeddingState& state, const ProjectionConstants& constants) {
  // The 5->4 stage maps the centered cube into a ball of radius
  // c5 * R / (d5 - R); the 4D camera must clear it.
  double r = world_radius();
  double scale = constants.screen_from == ScreenFrom::camera ? constants.c5 : state.d5 - constants.c5;
  return scale * r / (state.d5 - r) + 0.1;
}

bool state_valid(const EmbeddingState& state, const ProjectionConstants& constants) {
  if (!(state.d5 >= min_d5(constants))) return false;
  if (!(state.d4 >= min_d4(state, constants))) return false;
  return true;
}

ProjectedScene apply_state(const CubicalComplex& complex, const EmbeddingState& state,
                           const ProjectionConstants& constants) {
  if (complex.ambient() > 5)
    fail(ErrorCode::MixedAmbient,
         "projection supports ambient dimension <= 5, got " + std::to_string(complex.ambient()));
  // The state guard covers every possible rotation, so a violating state is
  // rejected before any vertex is projected.
  if (!(state.d5 >= min_d5(constants)))
    fail(ErrorCode::BehindCamera, "d5 = " + std::to_string(state.d5) + " is below the guard " +
                                      std::to_string(min_d5(constants)));

  Mat5 rot = rotation_matrix(state.phi);

  ProjectedScene scene;
  scene.vertex_points.resize(static_cast<size_t>(complex.vertex_count()));
  for (int v = 0; v < complex.vertex_count(); ++v) {
    const CellCode& code = complex.vertices()[static_cast<size_t>(v)];
    Vec5 p{};
    for (int i = 0; i < 5; ++i) {
      double coord = (i < complex.ambient() && (code.bit_mask() & (1u << i))) ? 1.0 : 0.0;
      p[static_cast<size_t>(i)] = coord - 0.5;
    }
    Vec5 rotated = apply_matrix(rot, p);
    Vec4 q4;
    Vec3 q3;
    try {
      q4 = project_5_to_4(rotated, state.d5, constants);
      q3 = project_4_to_3(q4, state.d4, constants);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::BehindCamera)
        fail(ErrorCode::BehindCamera, "vertex " + code.word() + ": " + e.what());
      throw;
    }
    scene.vertex_points[static_cast<size_t>(v)] = q3;
  }

  scene.face_corners.resize(static_cast<size_t>(complex.face_count()));
  for (int f = 0; f < complex.face_count(); ++f) {
    const auto& corners = complex.face_corners(f);
    for (int k = 0; k < 4; ++k)
      scene.face_corners[static_cast<size_t>(f)][static_cast<size_t>(k)] =
          scene.vertex_points[static_cast<size_t>(corners[static_cast<size_t>(k)])];
  }
  scene.edge_segments.resize(static_cast<size_t>(complex.edge_count()));
  for (int e = 0; e < complex.edge_count(); ++e) {
    const auto& ends = complex.edge_endpoints(e);
    scene.edge_segments[static_cast<size_t>(e)] = {scene.vertex_points[static_cast<size_t>(ends[0])],
                                                   scene.vertex_points[static_cast<size_t>(ends[1])]};
  }
  return scene;
}

}  // namespace cubesurf
