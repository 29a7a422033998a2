#pragma once

#include <filesystem>
#include <vector>

#include "cubesurf/complex.hpp"
#include "cubesurf/geometry.hpp"
#include "cubesurf/projection.hpp"

namespace cubesurf {

enum class BeamProfile { square, octagon };

struct MeshTriangle {
  enum class Source { edge_beam, face_panel };

  Vec3 a, b, c;
  Source source = Source::edge_beam;

  // Right-hand-rule normal from the vertex winding.
  Vec3 normal() const;
};

struct BeamMesh {
  std::vector<MeshTriangle> triangles;
};

// Turn every projected edge into a closed prism of half-width r aligned to
// the segment (12 triangles for the square profile, 28 for the octagon).
// With panels enabled each face also becomes a thin slab: two triangles per
// side plus a rim. Vertex ordering is deterministic.
BeamMesh build_beam_mesh(const ProjectedScene& scene, const CubicalComplex& complex,
                         double beam_radius, bool panels = false,
                         BeamProfile profile = BeamProfile::square);

// Binary STL: 80-byte zero-padded header, little-endian uint32 triangle
// count, then 50 bytes per triangle; file size is exactly 84 + 50 * count.
void write_stl_binary(const BeamMesh& mesh, const std::filesystem::path& path);

// Text OBJ with v/f records, full decimal precision.
void write_obj(const BeamMesh& mesh, const std::filesystem::path& path);

// Scene OBJ: projected vertices, quadrilateral faces, and edge polylines
// (`l` records).
void write_obj_scene(const ProjectedScene& scene, const CubicalComplex& complex,
                     const std::filesystem::path& path);

}  // namespace cubesurf
