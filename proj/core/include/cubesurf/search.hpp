#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cubesurf/complex.hpp"
#include "cubesurf/surface.hpp"

namespace cubesurf {

enum class SearchMode { exhaustive, randomized };

// Optional constraints a found surface must satisfy; unset fields match
// anything.
struct SurfaceFilter {
  std::optional<bool> orientable;
  std::optional<int> euler_characteristic;
  std::optional<int> genus;
  std::optional<int> demigenus;

  bool matches(const SurfaceClass& sc) const;
};

struct SearchOptions {
  int ambient = 5;
  int max_faces = 80;
  SearchMode mode = SearchMode::randomized;
  std::uint64_t seed = 0;
  std::optional<SurfaceFilter> target;

  // Randomized mode: total node budget, per-restart node cap, and how many
  // matching surfaces to collect before returning.
  std::uint64_t max_steps = 200000;
  std::uint64_t restart_steps = 8192;
  int max_results = 1;

  // Exhaustive mode refuses ambient >= 5 unless this is set; the full Q^5
  // census is a long-running stretch computation.
  bool allow_large_exhaustive = false;
};

struct SearchOutcome {
  std::vector<CubicalComplex> surfaces;
  std::uint64_t steps = 0;
};

// Backtracking search for connected closed surfaces in the two-skeleton of
// Q^n. Exhaustive mode enumerates every isomorphism type with at most
// max_faces faces (deduplicated by canonical signature); randomized mode
// returns the first max_results surfaces matching the target filter, and
// throws BudgetExceeded when it finds none within max_steps.
SearchOutcome enumerate_closed_surfaces(const SearchOptions& options);

}  // namespace cubesurf
