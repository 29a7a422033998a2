#include "cubesurf/search.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "cubesurf/error.hpp"
#include "cubesurf/rng.hpp"

namespace cubesurf {

bool SurfaceFilter::matches(const SurfaceClass& sc) const {
  if (orientable && (!sc.orientable || *sc.orientable != *orientable)) return false;
  if (euler_characteristic && sc.euler_characteristic != *euler_characteristic) return false;
  if (genus && (!sc.genus || *sc.genus != *genus)) return false;
  if (demigenus && (!sc.demigenus || *sc.demigenus != *demigenus)) return false;
  return true;
}

namespace {

// Incidence tables of the full two-skeleton of Q^n, indexed by position in
// the sorted cell lists.
struct AmbientTables {
  std::vector<CellCode> faces;
  std::vector<CellCode> edges;
  std::vector<std::array<int, 4>> face_edges;
  std::vector<std::vector<int>> edge_faces;

  explicit AmbientTables(int n) {
    faces = full_skeleton(n, 2);
    edges = full_skeleton(n, 1);
    edge_faces.resize(edges.size());
    face_edges.resize(faces.size());
    for (size_t f = 0; f < faces.size(); ++f) {
      auto boundary = boundary_cells(faces[f], 1);
      for (int k = 0; k < 4; ++k) {
        auto it = std::lower_bound(edges.begin(), edges.end(), boundary[static_cast<size_t>(k)]);
        int e = static_cast<int>(it - edges.begin());
        face_edges[f][static_cast<size_t>(k)] = e;
        edge_faces[static_cast<size_t>(e)].push_back(static_cast<int>(f));
      }
    }
  }
};

struct Searcher {
  const SearchOptions& options;
  AmbientTables tables;
  std::vector<char> chosen;
  std::vector<int> chosen_faces;
  std::vector<std::uint8_t> edge_count;
  int open_edges = 0;
  std::uint64_t steps = 0;
  std::uint64_t restart_step_limit = 0;
  bool stop = false;

  Rng rng;
  std::set<std::string> seen_signatures;
  std::vector<CubicalComplex> results;

  explicit Searcher(const SearchOptions& opts)
      : options(opts),
        tables(opts.ambient),
        chosen(tables.faces.size(), 0),
        edge_count(tables.edges.size(), 0),
        rng(opts.seed) {}

  bool addable(int f) const {
    if (chosen[static_cast<size_t>(f)]) return false;
    for (int e : tables.face_edges[static_cast<size_t>(f)])
      if (edge_count[static_cast<size_t>(e)] >= 2) return false;
    return true;
  }

  void add_face(int f) {
    chosen[static_cast<size_t>(f)] = 1;
    chosen_faces.push_back(f);
    for (int e : tables.face_edges[static_cast<size_t>(f)]) {
      std::uint8_t& c = edge_count[static_cast<size_t>(e)];
      ++c;
      open_edges += (c == 1) ? 1 : -1;
    }
  }

  void remove_face(int f) {
    chosen[static_cast<size_t>(f)] = 0;
    chosen_faces.pop_back();
    for (int e : tables.face_edges[static_cast<size_t>(f)]) {
      std::uint8_t& c = edge_count[static_cast<size_t>(e)];
      open_edges -= (c == 1) ? 1 : -1;
      --c;
    }
  }

  int smallest_open_edge() const {
    for (size_t e = 0; e < edge_count.size(); ++e)
      if (edge_count[e] == 1) return static_cast<int>(e);
    return -1;
  }

  void handle_complete() {
    std::vector<CellCode> cells;
    cells.reserve(chosen_faces.size());
    for (int f : chosen_faces) cells.push_back(tables.faces[static_cast<size_t>(f)]);
    CubicalComplex complex = CubicalComplex::from_faces(std::move(cells));

    // Edge closure holds by construction; the vertex figures still need
    // checking (pinched vertices slip through F_e == 2).
    if (!check_closed_surface(complex).closed) return;

    if (options.mode == SearchMode::exhaustive) {
      std::string sig = canonical_signature(complex);
      if (!seen_signatures.insert(sig).second) return;
      if (!options.target || options.target->matches(classify(complex)))
        results.push_back(std::move(complex));
      return;
    }

    if (options.target && !options.target->matches(classify(complex))) return;
    results.push_back(std::move(complex));
    if (static_cast<int>(results.size()) >= options.max_results) stop = true;
  }

  void dfs() {
    if (stop) return;
    ++steps;
    if (options.mode == SearchMode::randomized &&
        (steps >= restart_step_limit || steps >= options.max_steps)) {
      stop = true;
      return;
    }

    if (open_edges == 0) {
      handle_complete();
      return;
    }

    // Lower bound: each further face closes at most four open edges.
    int remaining = options.max_faces - static_cast<int>(chosen_faces.size());
    if (open_edges > 4 * remaining) return;

    int e = smallest_open_edge();
    std::vector<int> candidates;
    for (int f : tables.edge_faces[static_cast<size_t>(e)])
      if (addable(f)) candidates.push_back(f);
    if (options.mode == SearchMode::randomized) rng.shuffle(candidates);

    for (int f : candidates) {
      add_face(f);
      dfs();
      remove_face(f);
      if (stop) return;
    }
  }

  SearchOutcome run_exhaustive() {
    // Every isomorphism class has a representative containing the minimal
    // face of Q^n: the symmetry group acts transitively on faces, so the
    // search is rooted there once instead of at all faces.
    add_face(0);
    dfs();
    remove_face(0);
    return {std::move(results), steps};
  }

  SearchOutcome run_randomized() {
    std::uint64_t total = 0;
    while (total < options.max_steps && static_cast<int>(results.size()) < options.max_results) {
      steps = 0;
      stop = false;
      restart_step_limit = std::min(options.restart_steps, options.max_steps - total);
      int seed_face = rng.below(static_cast<int>(tables.faces.size()));
      add_face(seed_face);
      dfs();
      remove_face(seed_face);
      total += steps;
      bool enough = static_cast<int>(results.size()) >= options.max_results;
      if (enough) break;
    }
    if (results.empty())
      fail(ErrorCode::BudgetExceeded,
           "randomized search found no matching surface within " + std::to_string(options.max_steps) + " steps");
    return {std::move(results), total};
  }
};

}  // namespace

SearchOutcome enumerate_closed_surfaces(const SearchOptions& options) {
  if (options.ambient < 2 || options.ambient > CellCode::kMaxAmbient)
    fail(ErrorCode::InvalidK, "ambient dimension must be in [2, 8]");
  if (options.mode == SearchMode::exhaustive && options.ambient >= 5 && !options.allow_large_exhaustive)
    fail(ErrorCode::ExhaustiveTooLarge,
         "exhaustive search in dimension >= 5 must be requested explicitly");

  Searcher searcher(options);
  if (options.mode == SearchMode::exhaustive) return searcher.run_exhaustive();
  return searcher.run_randomized();
}

}  // namespace cubesurf
