#include "cubesurf/complex.hpp"

#include <algorithm>

#include "cubesurf/error.hpp"

namespace cubesurf {

namespace {

int sorted_index(const std::vector<CellCode>& cells, const CellCode& c) {
  auto it = std::lower_bound(cells.begin(), cells.end(), c);
  if (it == cells.end() || !(*it == c)) return -1;
  return static_cast<int>(it - cells.begin());
}

}  // namespace

CubicalComplex CubicalComplex::from_faces(std::vector<CellCode> faces) {
  CubicalComplex c;
  if (faces.empty()) return c;

  c.n_ = faces.front().ambient();
  for (const CellCode& f : faces) {
    if (f.ambient() != c.n_)
      fail(ErrorCode::MixedAmbient, "cell " + f.word() + " has ambient dimension " +
                                        std::to_string(f.ambient()) + ", expected " + std::to_string(c.n_));
    if (f.dimension() != 2)
      fail(ErrorCode::MixedDimension, "cell " + f.word() + " has dimension " +
                                          std::to_string(f.dimension()) + ", faces need exactly 2 stars");
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  c.faces_ = std::move(faces);

  for (const CellCode& f : c.faces_) {
    for (const CellCode& e : boundary_cells(f, 1)) c.edges_.push_back(e);
    for (const CellCode& v : boundary_cells(f, 0)) c.vertices_.push_back(v);
  }
  std::sort(c.edges_.begin(), c.edges_.end());
  c.edges_.erase(std::unique(c.edges_.begin(), c.edges_.end()), c.edges_.end());
  std::sort(c.vertices_.begin(), c.vertices_.end());
  c.vertices_.erase(std::unique(c.vertices_.begin(), c.vertices_.end()), c.vertices_.end());

  c.edge_faces_.resize(c.edges_.size());
  c.vertex_edges_.resize(c.vertices_.size());
  c.vertex_faces_.resize(c.vertices_.size());
  c.face_edges_.resize(c.faces_.size());
  c.face_corners_.resize(c.faces_.size());
  c.edge_endpoints_.resize(c.edges_.size());

  for (size_t ei = 0; ei < c.edges_.size(); ++ei) {
    auto ends = boundary_cells(c.edges_[ei], 0);
    for (int side = 0; side < 2; ++side) {
      int vi = sorted_index(c.vertices_, ends[static_cast<size_t>(side)]);
      c.edge_endpoints_[ei][static_cast<size_t>(side)] = vi;
      c.vertex_edges_[static_cast<size_t>(vi)].push_back(static_cast<int>(ei));
    }
  }

  for (size_t fi = 0; fi < c.faces_.size(); ++fi) {
    const CellCode& f = c.faces_[fi];
    int si = -1, sj = -1;
    for (int i = 0; i < c.n_; ++i)
      if (f.star_mask() & (1u << i)) (si < 0 ? si : sj) = i;

    // Corners in cyclic order: (0,0) -> (1,0) -> (1,1) -> (0,1) on the two
    // star coordinates.
    constexpr int kOrder[4][2] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    std::array<int, 4> corners;
    for (int k = 0; k < 4; ++k) {
      std::uint8_t bits = f.bit_mask();
      if (kOrder[k][0]) bits |= std::uint8_t(1u << si);
      if (kOrder[k][1]) bits |= std::uint8_t(1u << sj);
      CellCode v = CellCode::from_masks(c.n_, 0, bits);
      corners[static_cast<size_t>(k)] = sorted_index(c.vertices_, v);
    }
    c.face_corners_[fi] = corners;

    for (int k = 0; k < 4; ++k) {
      int a = corners[static_cast<size_t>(k)];
      int b = corners[static_cast<size_t>((k + 1) % 4)];
      const CellCode& va = c.vertices_[static_cast<size_t>(a)];
      const CellCode& vb = c.vertices_[static_cast<size_t>(b)];
      std::uint8_t diff = va.bit_mask() ^ vb.bit_mask();
      CellCode e = CellCode::from_masks(c.n_, diff, va.bit_mask());
      int ei = sorted_index(c.edges_, e);
      c.face_edges_[fi][static_cast<size_t>(k)] = ei;
      c.edge_faces_[static_cast<size_t>(ei)].push_back(static_cast<int>(fi));
    }
    for (int corner : corners) c.vertex_faces_[static_cast<size_t>(corner)].push_back(static_cast<int>(fi));
  }

  return c;
}

int CubicalComplex::face_index(const CellCode& f) const { return sorted_index(faces_, f); }
int CubicalComplex::edge_index(const CellCode& e) const { return sorted_index(edges_, e); }
int CubicalComplex::vertex_index(const CellCode& v) const { return sorted_index(vertices_, v); }

bool CubicalComplex::faces_share_edge(int f, int g) const {
  for (int ef : face_edges(f))
    for (int eg : face_edges(g))
      if (ef == eg) return true;
  return false;
}

int CubicalComplex::shared_face_vertex(int f, int g) const {
  int found = -1;
  int count = 0;
  for (int vf : face_corners(f))
    for (int vg : face_corners(g))
      if (vf == vg) {
        found = vf;
        ++count;
      }
  return count == 1 ? found : -1;
}

bool CubicalComplex::edges_share_vertex(int e, int f) const {
  const auto& a = edge_endpoints(e);
  const auto& b = edge_endpoints(f);
  return a[0] == b[0] || a[0] == b[1] || a[1] == b[0] || a[1] == b[1];
}

IncidenceCardinalities incidence_counts(const CubicalComplex& complex) {
  IncidenceCardinalities out;
  out.faces_per_edge.reserve(static_cast<size_t>(complex.edge_count()));
  for (int e = 0; e < complex.edge_count(); ++e)
    out.faces_per_edge.push_back(static_cast<int>(complex.edge_faces(e).size()));
  out.faces_per_vertex.reserve(static_cast<size_t>(complex.vertex_count()));
  out.edges_per_vertex.reserve(static_cast<size_t>(complex.vertex_count()));
  for (int v = 0; v < complex.vertex_count(); ++v) {
    out.faces_per_vertex.push_back(static_cast<int>(complex.vertex_faces(v).size()));
    out.edges_per_vertex.push_back(static_cast<int>(complex.vertex_edges(v).size()));
  }
  return out;
}

}  // namespace cubesurf
