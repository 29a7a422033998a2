#pragma once

#include <array>
#include <span>
#include <vector>

#include "cubesurf/complex.hpp"
#include "cubesurf/geometry.hpp"

namespace cubesurf {

// The twelve parameters of an embedding: camera distances for the 5D and 4D
// projection stages plus one rotation angle per coordinate plane of R^5.
struct EmbeddingState {
  double d5 = 0;
  double d4 = 0;
  std::array<double, 10> phi{};

  friend bool operator==(const EmbeddingState&, const EmbeddingState&) = default;
};

// Whether the projection screen sits at distance c from the camera or from
// the origin; the two conventions differ by a reparameterization of d.
enum class ScreenFrom { camera, origin };

struct ProjectionConstants {
  double c5 = 1.0;
  double c4 = 10.0;
  ScreenFrom screen_from = ScreenFrom::camera;
  double denom_floor = 1e-6;
};

// The ten rotation planes (i,j), 0 <= i < j <= 4, in the fixed composition
// order used by rotation_matrix.
inline constexpr std::array<std::array<int, 2>, 10> kRotationPlanes = {
    {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

double wrap_angle(double radians);  // into [0, 2*pi)
EmbeddingState wrap_state(const EmbeddingState& state);

// Product of ten plane rotations applied in lexicographic plane order;
// always orthogonal with determinant +1. Angles are wrapped before use so
// projection results are invariant under wrap_state.
Mat5 rotation_matrix(const std::array<double, 10>& phi);

Vec5 apply_matrix(const Mat5& m, const Vec5& p);

// Pinhole projection dropping the last coordinate: q_i = scale * p_i /
// (d - p_last), camera at distance d on the last axis. Throws BehindCamera
// when the denominator falls below the floor.
std::vector<double> perspective_project(std::span<const double> point, double d, double c,
                                        ScreenFrom screen_from = ScreenFrom::camera,
                                        double denom_floor = 1e-6);
Vec4 project_5_to_4(const Vec5& p, double d, const ProjectionConstants& constants);
Vec3 project_4_to_3(const Vec4& p, double d, const ProjectionConstants& constants);

// Half-diagonal of the centered unit 5-cube.
double world_radius();

// Camera-distance guards keeping every vertex strictly in front of both
// cameras.
double min_d5(const ProjectionConstants& constants);
double min_d4(const EmbeddingState& state, const ProjectionConstants& constants);
bool state_valid(const EmbeddingState& state, const ProjectionConstants& constants);

// Image of a complex under a state: vertex positions in R^3 plus derived
// face corner quads (cyclic order) and edge segments, indexed like the
// complex's cell lists.
struct ProjectedScene {
  std::vector<Vec3> vertex_points;
  std::vector<Quad> face_corners;
  std::vector<std::array<Vec3, 2>> edge_segments;
};

// Center the cube at the origin, rotate in R^5, then project through both
// camera stages. Complexes with ambient dimension below 5 are zero-padded.
ProjectedScene apply_state(const CubicalComplex& complex, const EmbeddingState& state,
                           const ProjectionConstants& constants = {});

}  // namespace cubesurf
