#pragma once

#include <utility>
#include <vector>

#include "cubesurf/complex.hpp"
#include "cubesurf/geometry.hpp"
#include "cubesurf/projection.hpp"

namespace cubesurf {

struct WidthConfig {
  double beam_radius = 0.0;  // r > 0, in projected scene units
  // Literal reading of the overlap count: edge pairs sharing a complex
  // vertex have clearance zero and would always count. Off by default.
  bool count_adjacent_edges = false;
};

struct MetricsReport {
  int intersections = 0;      // face pairs crossing transversely or overlapping
  int overlaps = 0;           // edge pairs with clearance below 2r
  double total_clearance = 0;
  std::vector<std::pair<CellCode, CellCode>> face_pairs;
  std::vector<std::pair<CellCode, CellCode>> edge_pairs;
};

// Count of unordered face pairs whose projections intersect; pairs sharing
// a complex edge are skipped before testing. Offending pairs are appended
// when a sink is given.
int face_intersections(const ProjectedScene& scene, const CubicalComplex& complex,
                       std::vector<std::pair<int, int>>* offending = nullptr);

// Count of unordered edge pairs, excluding pairs sharing a complex vertex,
// whose projected segments come strictly closer than twice the beam radius.
int edge_overlaps(const ProjectedScene& scene, const CubicalComplex& complex,
                  const WidthConfig& width, std::vector<std::pair<int, int>>* offending = nullptr);

// Sum of pairwise segment clearances over all unordered edge pairs,
// adjacent pairs included (their clearance is zero).
double total_clearance(const ProjectedScene& scene, const CubicalComplex& complex);

MetricsReport compute_metrics(const ProjectedScene& scene, const CubicalComplex& complex,
                              const WidthConfig& width, bool collect_pairs = true);

// Default beam radius: 0.02 times the scene bounding-box diagonal.
double default_beam_radius(const ProjectedScene& scene);

}  // namespace cubesurf
