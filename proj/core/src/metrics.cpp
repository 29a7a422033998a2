#include "cubesurf/metrics.hpp"

#include <algorithm>
#include <limits>

#include "cubesurf/error.hpp"

namespace cubesurf {

int face_intersections(const ProjectedScene& scene, const CubicalComplex& complex,
                       std::vector<std::pair<int, int>>* offending) {
  int count = 0;
  int nf = complex.face_count();
  for (int i = 0; i < nf; ++i) {
    for (int j = i + 1; j < nf; ++j) {
      if (complex.faces_share_edge(i, j)) continue;
      std::optional<Vec3> shared;
      int sv = complex.shared_face_vertex(i, j);
      if (sv >= 0) shared = scene.vertex_points[static_cast<size_t>(sv)];
      bool hit;
      try {
        hit = faces_intersect(scene.face_corners[static_cast<size_t>(i)],
                              scene.face_corners[static_cast<size_t>(j)], false, shared);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::DegenerateFace)
          fail(ErrorCode::DegenerateFace, "face pair (" + complex.faces()[static_cast<size_t>(i)].word() +
                                              ", " + complex.faces()[static_cast<size_t>(j)].word() + "): " +
                                              e.what());
        throw;
      }
      if (hit) {
        ++count;
        if (offending) offending->emplace_back(i, j);
      }
    }
  }
  return count;
}

int edge_overlaps(const ProjectedScene& scene, const CubicalComplex& complex,
                  const WidthConfig& width, std::vector<std::pair<int, int>>* offending) {
  int count = 0;
  int ne = complex.edge_count();
  for (int i = 0; i < ne; ++i) {
    for (int j = i + 1; j < ne; ++j) {
      bool adjacent = complex.edges_share_vertex(i, j);
      if (adjacent && !width.count_adjacent_edges) continue;
      if (adjacent) {
        ++count;
        if (offending) offending->emplace_back(i, j);
        continue;
      }
      const auto& a = scene.edge_segments[static_cast<size_t>(i)];
      const auto& b = scene.edge_segments[static_cast<size_t>(j)];
      double clearance;
      try {
        clearance = segment_clearance(a[0], a[1], b[0], b[1]).distance;
      } catch (const Error& e) {
        if (e.code() == ErrorCode::DegenerateEdge)
          fail(ErrorCode::DegenerateEdge, "edge pair (" + complex.edges()[static_cast<size_t>(i)].word() +
                                              ", " + complex.edges()[static_cast<size_t>(j)].word() + "): " +
                                              e.what());
        throw;
      }
      if (clearance < 2.0 * width.beam_radius) {
        ++count;
        if (offending) offending->emplace_back(i, j);
      }
    }
  }
  return count;
}

double total_clearance(const ProjectedScene& scene, const CubicalComplex& complex) {
  double sum = 0;
  int ne = complex.edge_count();
  for (int i = 0; i < ne; ++i) {
    for (int j = i + 1; j < ne; ++j) {
      const auto& a = scene.edge_segments[static_cast<size_t>(i)];
      const auto& b = scene.edge_segments[static_cast<size_t>(j)];
      if (complex.edges_share_vertex(i, j)) continue;  // touching segments contribute zero
      sum += segment_clearance(a[0], a[1], b[0], b[1]).distance;
    }
  }
  return sum;
}

MetricsReport compute_metrics(const ProjectedScene& scene, const CubicalComplex& complex,
                              const WidthConfig& width, bool collect_pairs) {
  MetricsReport report;
  std::vector<std::pair<int, int>> face_pairs, edge_pairs;
  report.intersections = face_intersections(scene, complex, collect_pairs ? &face_pairs : nullptr);
  report.overlaps = edge_overlaps(scene, complex, width, collect_pairs ? &edge_pairs : nullptr);
  report.total_clearance = total_clearance(scene, complex);
  if (collect_pairs) {
    for (auto [i, j] : face_pairs)
      report.face_pairs.emplace_back(complex.faces()[static_cast<size_t>(i)],
                                     complex.faces()[static_cast<size_t>(j)]);
    for (auto [i, j] : edge_pairs)
      report.edge_pairs.emplace_back(complex.edges()[static_cast<size_t>(i)],
                                     complex.edges()[static_cast<size_t>(j)]);
  }
  return report;
}

double default_beam_radius(const ProjectedScene& scene) {
  if (scene.vertex_points.empty()) return 0.0;
  Vec3 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
          std::numeric_limits<double>::infinity()};
  Vec3 hi = -lo;
  for (const Vec3& p : scene.vertex_points) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
  }
  return 0.02 * norm(hi - lo);
}

}  // namespace cubesurf
