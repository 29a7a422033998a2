#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubesurf/complex.hpp"

namespace cubesurf {

// The vertex figure of v: a graph whose nodes are the edges of the complex
// incident to v, with a link between two nodes whenever some face contains
// both. Nodes hold edge indices of the owning complex; links index into
// `node_edges`.
struct VertexFigure {
  std::vector<int> node_edges;
  std::vector<std::pair<int, int>> links;

  // One cycle through all nodes: connected, every node degree 2, >= 3 nodes.
  bool single_cycle() const;
};

VertexFigure vertex_figure(const CubicalComplex& complex, int vertex_index);
VertexFigure vertex_figure(const CubicalComplex& complex, const CellCode& vertex);

struct ClosedSurfaceReport {
  bool closed = false;
  std::vector<int> bad_edges;     // edges with F_e != 2
  std::vector<int> bad_vertices;  // vertices whose figure is not a single cycle
};

// Closed iff every edge lies in exactly two faces and every vertex figure is
// a single cycle. The empty complex reports closed = false.
ClosedSurfaceReport check_closed_surface(const CubicalComplex& complex);
bool is_closed_surface(const CubicalComplex& complex);

int euler_characteristic(const CubicalComplex& complex);

// Connectivity of the face-adjacency graph (faces adjacent iff they share an
// edge). The empty complex is not connected.
bool is_connected(const CubicalComplex& complex);

// Requires a connected closed surface; decides whether a consistent
// orientation of all faces exists.
bool is_orientable(const CubicalComplex& complex);

struct SurfaceClass {
  bool connected = false;
  bool closed = false;
  std::optional<bool> orientable;  // set for connected closed surfaces
  int euler_characteristic = 0;
  std::optional<int> genus;        // orientable: chi = 2 - 2g
  std::optional<int> demigenus;    // non-orientable: chi = 2 - k
};

SurfaceClass classify(const CubicalComplex& complex);

// Minimum over the 2^n * n! cube symmetries (coordinate permutations and
// reflections) of the sorted face list; equal strings iff the complexes are
// isomorphic as subcomplexes of Q^n.
std::string canonical_signature(const CubicalComplex& complex);

}  // namespace cubesurf
