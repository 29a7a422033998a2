#pragma once

#include <array>
#include <vector>

#include "cubesurf/cell.hpp"

namespace cubesurf {

// A two-dimensional cubical complex: a face set inside Q^n together with the
// derived edge and vertex skeleta and their incidence maps. Immutable after
// construction; safe to share read-only across threads.
class CubicalComplex {
public:
  CubicalComplex() = default;  // the empty complex

  // Faces must all have exactly two stars and a common ambient dimension.
  static CubicalComplex from_faces(std::vector<CellCode> faces);

  int ambient() const { return n_; }
  bool empty() const { return faces_.empty(); }

  const std::vector<CellCode>& faces() const { return faces_; }
  const std::vector<CellCode>& edges() const { return edges_; }
  const std::vector<CellCode>& vertices() const { return vertices_; }

  int face_count() const { return static_cast<int>(faces_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }

  // Index of a cell in the sorted cell lists, -1 when absent.
  int face_index(const CellCode& f) const;
  int edge_index(const CellCode& e) const;
  int vertex_index(const CellCode& v) const;

  // Boundary edges of a face, ordered to match consecutive corner pairs.
  const std::array<int, 4>& face_edges(int f) const { return face_edges_[static_cast<size_t>(f)]; }
  // The four corners of a face in cyclic order around the quadrilateral.
  const std::array<int, 4>& face_corners(int f) const { return face_corners_[static_cast<size_t>(f)]; }
  const std::array<int, 2>& edge_endpoints(int e) const { return edge_endpoints_[static_cast<size_t>(e)]; }

  const std::vector<int>& edge_faces(int e) const { return edge_faces_[static_cast<size_t>(e)]; }
  const std::vector<int>& vertex_edges(int v) const { return vertex_edges_[static_cast<size_t>(v)]; }
  const std::vector<int>& vertex_faces(int v) const { return vertex_faces_[static_cast<size_t>(v)]; }

  bool faces_share_edge(int f, int g) const;
  // Index of the unique vertex shared by two faces, or -1. Faces sharing an
  // edge share two vertices and also return -1 here.
  int shared_face_vertex(int f, int g) const;
  bool edges_share_vertex(int e, int f) const;

private:
  int n_ = 0;
  std::vector<CellCode> faces_, edges_, vertices_;
  std::vector<std::array<int, 4>> face_edges_, face_corners_;
  std::vector<std::array<int, 2>> edge_endpoints_;
  std::vector<std::vector<int>> edge_faces_, vertex_edges_, vertex_faces_;
};

struct IncidenceCardinalities {
  std::vector<int> faces_per_edge;     // F_e, indexed like edges()
  std::vector<int> faces_per_vertex;   // F_v, indexed like vertices()
  std::vector<int> edges_per_vertex;   // E_v
};

IncidenceCardinalities incidence_counts(const CubicalComplex& complex);

}  // namespace cubesurf
