// Acceptance suite: one criterion per entry, one PASS/FAIL line each.
// Run with no arguments for all criteria or pass criterion numbers.
#define DOCTEST_CONFIG_DISABLE
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cubesurf/error.hpp"
#include "cubesurf/io.hpp"
#include "cubesurf/mesh.hpp"
#include "cubesurf/metrics.hpp"
#include "cubesurf/optimizer.hpp"
#include "cubesurf/projection.hpp"
#include "cubesurf/rng.hpp"
#include "cubesurf/search.hpp"
#include "cubesurf/surface.hpp"
#include "oracles.hpp"

using namespace cubesurf;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Seconds = std::chrono::duration<double>;

Outcome pass(std::string detail) { return {true, std::move(detail)}; }
Outcome failure(std::string detail) { return {false, std::move(detail)}; }

CubicalComplex cube_boundary_5d() {
  return CubicalComplex::from_faces(boundary_cells(CellCode::parse("***00", 5), 2));
}

int worker_count() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 4 : static_cast<int>(std::min(n, 16u));
}

// ---- criterion 1: Q^5 skeleton counts ------------------------------------

Outcome criterion_skeleton_counts() {
  size_t v = full_skeleton(5, 0).size();
  size_t e = full_skeleton(5, 1).size();
  size_t f = full_skeleton(5, 2).size();
  if (v == 32 && e == 80 && f == 80)
    return pass("Q^5 skeleton has 32 vertices / 80 edges / 80 faces");
  std::ostringstream out;
  out << "got " << v << "/" << e << "/" << f << ", expected 32/80/80";
  return failure(out.str());
}

// ---- criterion 2: 40 cube boundaries classify as spheres ------------------

Outcome criterion_cube_boundaries() {
  auto cubes = full_skeleton(5, 3);
  if (cubes.size() != 40) return failure("expected 40 3-cells in Q^5");
  for (const CellCode& cube : cubes) {
    SurfaceClass sc = classify(CubicalComplex::from_faces(boundary_cells(cube, 2)));
    bool ok = sc.connected && sc.closed && sc.orientable && *sc.orientable &&
              sc.euler_characteristic == 2 && sc.genus && *sc.genus == 0;
    if (!ok) return failure("boundary of " + cube.word() + " did not classify as a sphere");
  }
  return pass("all 40 axis-aligned 3-cube boundaries are connected closed genus-0 spheres");
}

// ---- criterion 3: Q^3 census against the powerset oracle ------------------

Outcome criterion_q3_census() {
  SearchOptions opts;
  opts.ambient = 3;
  opts.max_faces = 6;
  opts.mode = SearchMode::exhaustive;
  SearchOutcome search = enumerate_closed_surfaces(opts);

  auto brute = oracles::closed_surfaces_by_powerset(3);
  if (search.surfaces.size() != 1 || brute.size() != 1)
    return failure("expected exactly one closed surface from both routes, got " +
                   std::to_string(search.surfaces.size()) + " (search) and " +
                   std::to_string(brute.size()) + " (powerset oracle)");
  if (canonical_signature(search.surfaces[0]) != canonical_signature(brute[0]))
    return failure("search result does not match the powerset oracle");
  if (search.surfaces[0].face_count() != 6) return failure("the Q^3 sphere should have 6 faces");
  return pass("both routes find exactly the 6-face boundary sphere over all 64 subsets");
}

// ---- criterion 4: tesseract genus bound ----------------------------------

Outcome criterion_q4_bound() {
  SearchOptions opts;
  opts.ambient = 4;
  opts.max_faces = 24;
  opts.mode = SearchMode::exhaustive;
  SearchOutcome search = enumerate_closed_surfaces(opts);

  int tori = 0;
  for (const CubicalComplex& c : search.surfaces) {
    SurfaceClass sc = classify(c);
    if (!sc.orientable || !*sc.orientable)
      return failure("found a non-orientable closed surface in Q^4");
    if (*sc.genus >= 2) return failure("found genus >= 2 in Q^4");
    if (*sc.genus == 1) ++tori;
  }
  if (tori == 0) return failure("no orientable chi = 0 surface found in Q^4");
  std::ostringstream out;
  out << search.surfaces.size() << " isomorphism types, " << tori
      << " torus type(s), maximum genus 1";
  return pass(out.str());
}

// ---- criterion 5: Q^5 genus/demigenus bounds over 10k random seeds --------

Outcome criterion_q5_bounds() {
  constexpr int kSeeds = 10000;
  std::atomic<int> next{0};
  std::atomic<int> produced{0};
  std::atomic<int> max_genus{0};
  std::atomic<int> max_demigenus{0};
  std::atomic<bool> violated{false};
  std::mutex detail_mutex;
  std::string violation;

  auto worker = [&]() {
    while (true) {
      int seed = next.fetch_add(1);
      if (seed >= kSeeds || violated.load()) return;
      SearchOptions opts;
      opts.ambient = 5;
      opts.max_faces = 80;
      opts.mode = SearchMode::randomized;
      opts.seed = static_cast<std::uint64_t>(seed);
      opts.max_steps = 20000;
      opts.max_results = 1;
      SearchOutcome outcome;
      try {
        outcome = enumerate_closed_surfaces(opts);
      } catch (const Error&) {
        continue;  // budget exhausted; nothing produced for this seed
      }
      for (const CubicalComplex& c : outcome.surfaces) {
        SurfaceClass sc = classify(c);
        produced.fetch_add(1);
        if (sc.genus) {
          int g = *sc.genus;
          int old = max_genus.load();
          while (g > old && !max_genus.compare_exchange_weak(old, g)) {
          }
          if (g > 5) {
            violated = true;
            std::lock_guard<std::mutex> lock(detail_mutex);
            violation = "seed " + std::to_string(seed) + " produced genus " + std::to_string(g);
          }
        } else if (sc.demigenus) {
          int k = *sc.demigenus;
          int old = max_demigenus.load();
          while (k > old && !max_demigenus.compare_exchange_weak(old, k)) {
          }
          if (k > 8) {
            violated = true;
            std::lock_guard<std::mutex> lock(detail_mutex);
            violation = "seed " + std::to_string(seed) + " produced demigenus " + std::to_string(k);
          }
        } else {
          violated = true;
          std::lock_guard<std::mutex> lock(detail_mutex);
          violation = "seed " + std::to_string(seed) + " produced an unclassified surface";
        }
      }
    }
  };

  std::vector<std::thread> threads;
  for (int i = 0; i < worker_count(); ++i) threads.emplace_back(worker);
  for (auto& t : threads) t.join();

  if (violated) return failure(violation);
  if (produced < kSeeds / 2)
    return failure("only " + std::to_string(produced.load()) + " surfaces produced; search broken?");
  std::ostringstream out;
  out << produced.load() << " surfaces from " << kSeeds << " seeds, max genus "
      << max_genus.load() << " <= 5, max demigenus " << max_demigenus.load()
      << " <= 8 (full 2690-type census not attempted)";
  return pass(out.str());
}

// ---- criterion 6: geometry kernel versus dense oracles --------------------

Outcome criterion_geometry_kernel() {
  // Segment clearance against the 1001 x 1001 grid oracle.
  Rng rng(2024);
  struct Pair {
    Vec3 a0, a1, b0, b1;
  };
  std::vector<Pair> pairs;
  for (int i = 0; i < 1000; ++i) {
    auto pt = [&]() { return Vec3{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)}; };
    pairs.push_back({pt(), pt(), pt(), pt()});
  }

  std::atomic<int> next{0};
  std::vector<double> errors(pairs.size(), 0.0);
  auto seg_worker = [&]() {
    while (true) {
      int i = next.fetch_add(1);
      if (i >= static_cast<int>(pairs.size())) return;
      const Pair& p = pairs[static_cast<size_t>(i)];
      double expected = oracles::segment_distance_by_grid(p.a0, p.a1, p.b0, p.b1, 1001);
      double got = segment_clearance(p.a0, p.a1, p.b0, p.b1).distance;
      errors[static_cast<size_t>(i)] = std::abs(expected - got);
    }
  };
  std::vector<std::thread> threads;
  for (int i = 0; i < worker_count(); ++i) threads.emplace_back(seg_worker);
  for (auto& t : threads) t.join();
  double worst = 0;
  for (double e : errors) worst = std::max(worst, e);
  if (worst >= 1e-4)
    return failure("segment clearance error " + std::to_string(worst) + " >= 1e-4");

  // Face intersection against the Monte-Carlo membership oracle.
  Rng qrng(77);
  auto random_unit = [&](Rng& r) {
    double z = r.uniform(-1.0, 1.0);
    double theta = r.uniform(0.0, 2.0 * std::numbers::pi);
    double rad = std::sqrt(std::max(0.0, 1.0 - z * z));
    return Vec3{rad * std::cos(theta), rad * std::sin(theta), z};
  };
  auto random_quad = [&](Rng& r) {
    while (true) {
      std::array<std::array<double, 2>, 4> pts;
      for (auto& p : pts) {
        double angle = r.uniform(0.0, 2.0 * std::numbers::pi);
        double radius = std::sqrt(r.uniform(0.04, 1.0));
        p = {radius * std::cos(angle), radius * std::sin(angle)};
      }
      std::array<double, 2> center{(pts[0][0] + pts[1][0] + pts[2][0] + pts[3][0]) / 4,
                                   (pts[0][1] + pts[1][1] + pts[2][1] + pts[3][1]) / 4};
      std::sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) {
        return std::atan2(a[1] - center[1], a[0] - center[0]) <
               std::atan2(b[1] - center[1], b[0] - center[0]);
      });
      bool convex = true;
      for (int i = 0; i < 4 && convex; ++i) {
        const auto& o = pts[static_cast<size_t>(i)];
        const auto& a = pts[static_cast<size_t>((i + 1) % 4)];
        const auto& b = pts[static_cast<size_t>((i + 3) % 4)];
        if ((a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]) <= 0.02) convex = false;
      }
      if (!convex) continue;
      Vec3 origin{r.uniform(-0.8, 0.8), r.uniform(-0.8, 0.8), r.uniform(-0.8, 0.8)};
      Vec3 n = random_unit(r);
      Vec3 helper = std::abs(n.x) < 0.8 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
      Vec3 u = normalized(cross(n, helper));
      Vec3 v = cross(n, u);
      Quad quad;
      for (int i = 0; i < 4; ++i)
        quad[static_cast<size_t>(i)] =
            origin + u * pts[static_cast<size_t>(i)][0] + v * pts[static_cast<size_t>(i)][1];
      return quad;
    }
  };

  int disagreements = 0;
  int hits = 0;
  for (int trial = 0; trial < 500; ++trial) {
    Quad a = random_quad(qrng);
    Quad b = random_quad(qrng);
    bool got = faces_intersect(a, b, false, std::nullopt);
    bool expected = oracles::quads_intersect_by_sampling(a, b, std::nullopt);
    if (got != expected) ++disagreements;
    if (got) ++hits;
  }
  if (disagreements > 0)
    return failure(std::to_string(disagreements) + " of 500 quad-pair verdicts disagree");

  std::ostringstream out;
  out << "max segment-clearance error " << worst << " < 1e-4 on 1000 pairs; 500/500 quad"
      << " verdicts match (" << hits << " intersecting)";
  return pass(out.str());
}

// ---- criterion 7: rotation and projection checks --------------------------

Outcome criterion_rotation_projection() {
  Rng rng(555);
  CubicalComplex cube = cube_boundary_5d();
  ProjectionConstants constants;

  double worst_orth = 0, worst_iso = 0, worst_plane = 0;
  int states_checked = 0;
  while (states_checked < 1000) {
    std::array<double, 10> phi;
    for (double& a : phi) a = rng.uniform(0.0, 2.0 * std::numbers::pi);
    Mat5 m = rotation_matrix(phi);

    for (size_t i = 0; i < 5; ++i)
      for (size_t j = 0; j < 5; ++j) {
        double acc = 0;
        for (size_t k = 0; k < 5; ++k) acc += m[k][i] * m[k][j];
        worst_orth = std::max(worst_orth, std::abs(acc - (i == j ? 1.0 : 0.0)));
      }

    Vec5 p, q;
    for (size_t i = 0; i < 5; ++i) {
      p[i] = rng.uniform(-1.0, 1.0);
      q[i] = rng.uniform(-1.0, 1.0);
    }
    auto dist = [](const Vec5& a, const Vec5& b) {
      double acc = 0;
      for (size_t i = 0; i < 5; ++i) acc += (a[i] - b[i]) * (a[i] - b[i]);
      return std::sqrt(acc);
    };
    worst_iso = std::max(worst_iso,
                         std::abs(dist(apply_matrix(m, p), apply_matrix(m, q)) - dist(p, q)));

    EmbeddingState s;
    s.d5 = rng.uniform(min_d5(constants), min_d5(constants) + 5.0);
    s.d4 = rng.uniform(2.0, 14.0);
    s.phi = phi;
    if (!state_valid(s, constants)) continue;
    ProjectedScene scene = apply_state(cube, s, constants);
    for (const Quad& quad : scene.face_corners) {
      Vec3 n = cross(quad[1] - quad[0], quad[2] - quad[0]);
      double len = norm(n);
      if (len == 0) return failure("degenerate projected face");
      worst_plane = std::max(worst_plane, std::abs(dot(n / len, quad[3] - quad[0])));
    }
    ++states_checked;
  }

  if (worst_orth >= 1e-9) return failure("orthogonality residual " + std::to_string(worst_orth));
  if (worst_iso >= 1e-9) return failure("isometry residual " + std::to_string(worst_iso));
  if (worst_plane >= 1e-7) return failure("coplanarity residual " + std::to_string(worst_plane));
  std::ostringstream out;
  out << "1000 states: orthogonality " << worst_orth << " < 1e-9, isometry " << worst_iso
      << " < 1e-9, face coplanarity " << worst_plane << " < 1e-7";
  return pass(out.str());
}

// ---- criterion 8: verbatim reward fidelity --------------------------------

Outcome criterion_reward_fidelity() {
  RewardConfig verbatim;
  verbatim.sign_mode = SignMode::verbatim;
  auto close = [](double a, double b) { return std::abs(a - b) < 1e-12; };

  verbatim.sigma_prop = 0;
  if (!close(reward_r1(5, 0, verbatim), 10.0)) return failure("R1 branch 1");
  if (!close(reward_r1(10, 12, verbatim), 0.2)) return failure("R1 branch 2");

  verbatim.sigma_prop = 3;
  if (!close(reward_r2(3, 0, 7, verbatim), 10.0)) return failure("R2 branch 1");
  verbatim.sigma_prop = 0;
  if (!close(reward_r2(0, 19, 15, verbatim), (15.0 - 19.0) / 19.0)) return failure("R2 branch 2");
  if (!close(reward_r2(1, 19, 15, verbatim), 0.0)) return failure("R2 branch 3");

  if (!close(reward_r3(100.0, 90.0, SignMode::verbatim), 0.1)) return failure("R3");
  if (!close(reward_r3(100.0, 100.0, SignMode::verbatim), 0.0)) return failure("R3 no-change");

  std::vector<double> history{100, 95, 97};
  if (!close(reward_r4(90, history, SignMode::verbatim), 1.0)) return failure("R4 new minimum");
  std::vector<double> two{100, 95};
  if (!close(reward_r4(95, two, SignMode::verbatim), 0.0)) return failure("R4 tie");
  if (!close(reward_r4(90, {}, SignMode::verbatim), 0.0)) return failure("R4 empty history");

  RewardBreakdown parts{10, 10, 0.1, 1};
  if (!close(parts.weighted_total({1, 1, 1, 1}), 21.1)) return failure("component sum");
  if (!close(parts.weighted_total({1, 1, 0, 0}), 20.0)) return failure("component masking");

  return pass("printed formulas reproduced on all substitution examples within 1e-12");
}

// ---- criteria 9 and 10: optimization outcomes ------------------------------

struct SeedSummary {
  int seed = 0;
  int intersections = -1;
  int overlaps = -1;
  bool reached = false;
  int steps = 0;
};

Outcome run_optimization_gate(const CubicalComplex& complex, int sigma_prop, int step_budget,
                              const char* label) {
  OptimizeBudget budget;
  budget.steps_per_episode = 512;
  budget.episodes = (step_budget + budget.steps_per_episode - 1) / budget.steps_per_episode;
  budget.stop_sigma = sigma_prop;
  budget.early_stop = true;

  RewardConfig rewards;
  rewards.sigma_prop = sigma_prop;
  rewards.sign_mode = SignMode::corrected;

  std::array<SeedSummary, 5> summaries;
  std::vector<std::thread> threads;
  for (int seed = 0; seed < 5; ++seed) {
    threads.emplace_back([&, seed]() {
      AgentPolicy policy;
      policy.kind = AgentPolicy::Kind::greedy_lookahead;
      policy.exploration = 0.1;
      policy.seed = static_cast<std::uint64_t>(seed);
      OptimizeResult result = optimize(complex, std::nullopt, policy, budget, rewards);
      SeedSummary& s = summaries[static_cast<size_t>(seed)];
      s.seed = seed;
      s.intersections = result.best_metrics.intersections;
      s.overlaps = result.best_metrics.overlaps;
      s.reached = result.best_metrics.intersections <= sigma_prop && result.best_metrics.overlaps == 0;
      s.steps = result.steps_taken;
    });
  }
  for (auto& t : threads) t.join();

  std::ostringstream out;
  int reached = 0;
  for (const SeedSummary& s : summaries) {
    if (s.reached) ++reached;
    out << " seed" << s.seed << ":(" << s.intersections << "," << s.overlaps << ")@"
        << s.steps;
  }
  if (reached == 0)
    return failure(std::string(label) + " never reached the target;" + out.str());
  return pass(std::to_string(reached) + "/5 seeds reached sigma <= " + std::to_string(sigma_prop) +
              " with zero overlaps on " + label + ";" + out.str());
}

Outcome criterion_torus_optimization() {
  SearchOptions opts;
  opts.ambient = 4;
  opts.max_faces = 24;
  opts.mode = SearchMode::exhaustive;
  SurfaceFilter torus;
  torus.orientable = true;
  torus.euler_characteristic = 0;
  opts.target = torus;
  SearchOutcome search = enumerate_closed_surfaces(opts);
  if (search.surfaces.empty()) return failure("no torus found by search");
  return run_optimization_gate(search.surfaces.front(), 0, 20000, "the searched torus");
}

Outcome criterion_projective_plane_optimization() {
  SearchOptions opts;
  opts.ambient = 5;
  opts.max_faces = 40;
  opts.mode = SearchMode::randomized;
  opts.seed = 1;
  opts.max_steps = 2000000;
  SurfaceFilter projective;
  projective.orientable = false;
  projective.euler_characteristic = 1;
  opts.target = projective;
  SearchOutcome search = enumerate_closed_surfaces(opts);
  if (search.surfaces.empty()) return failure("no projective plane found by search");
  return run_optimization_gate(search.surfaces.front(), 3, 50000, "the searched projective plane");
}

// ---- criterion 11: export integrity ----------------------------------------

Outcome criterion_export_integrity() {
  CubicalComplex cube = cube_boundary_5d();
  EmbeddingState s;
  s.d5 = 4.0;
  s.d4 = 9.0;
  s.phi = {0.3, 0.7, 1.1, 0.2, 0.9, 1.5, 2.2, 0.1, 0.4, 2.8};
  ProjectedScene scene = apply_state(cube, s);

  auto dir = std::filesystem::temp_directory_path();

  BeamMesh wire = build_beam_mesh(scene, cube, 0.01);
  if (wire.triangles.size() != 144) return failure("cube wireframe should have 144 triangles");

  auto stl_path = dir / "cubesurf_acceptance.stl";
  write_stl_binary(wire, stl_path);
  auto stl_size = std::filesystem::file_size(stl_path);
  if (stl_size != 84u + 50u * wire.triangles.size())
    return failure("STL size " + std::to_string(stl_size) + " != 84 + 50 * count");

  std::ifstream stl(stl_path, std::ios::binary);
  stl.seekg(80);
  std::uint32_t count = 0;
  stl.read(reinterpret_cast<char*>(&count), 4);
  if (count != wire.triangles.size()) return failure("STL count field mismatch");

  BeamMesh tiny;
  tiny.triangles.push_back({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}});
  tiny.triangles.push_back({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}});
  auto tiny_path = dir / "cubesurf_acceptance_tiny.stl";
  write_stl_binary(tiny, tiny_path);
  if (std::filesystem::file_size(tiny_path) != 184)
    return failure("2-triangle STL should be 184 bytes");

  auto obj_path = dir / "cubesurf_acceptance.obj";
  write_obj_scene(scene, cube, obj_path);
  std::ifstream obj(obj_path);
  std::vector<Vec3> verts;
  std::string tag;
  while (obj >> tag) {
    if (tag == "v") {
      Vec3 p;
      obj >> p.x >> p.y >> p.z;
      verts.push_back(p);
    } else {
      std::string rest;
      std::getline(obj, rest);
    }
  }
  if (verts.size() != scene.vertex_points.size()) return failure("OBJ vertex count mismatch");
  for (size_t i = 0; i < verts.size(); ++i)
    if (!(verts[i] == scene.vertex_points[i]))
      return failure("OBJ vertex " + std::to_string(i) + " did not round-trip exactly");

  std::ostringstream out;
  out << "STL sizes exact (184 and " << stl_size << " bytes), count field echoes, OBJ"
      << " coordinates round-trip bit-exactly";
  return pass(out.str());
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
  double time_limit_seconds;  // 0 = no stated limit
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> criteria = {
      {1, "hypercube combinatorics", criterion_skeleton_counts, 1.0},
      {2, "closed-surface oracle", criterion_cube_boundaries, 1.0},
      {3, "Q^3 census", criterion_q3_census, 1.0},
      {4, "tesseract bound", criterion_q4_bound, 0.0},
      {5, "Q^5 bounds", criterion_q5_bounds, 0.0},
      {6, "geometry kernel", criterion_geometry_kernel, 30.0},
      {7, "rotation/projection", criterion_rotation_projection, 10.0},
      {8, "reward fidelity", criterion_reward_fidelity, 0.0},
      {9, "torus optimization", criterion_torus_optimization, 0.0},
      {10, "projective-plane optimization", criterion_projective_plane_optimization, 0.0},
      {11, "export integrity", criterion_export_integrity, 0.0},
  };

  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failures = 0;
  for (const Criterion& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = failure(std::string("exception: ") + e.what());
    }
    double elapsed = Seconds(std::chrono::steady_clock::now() - start).count();
    if (outcome.pass && c.time_limit_seconds > 0 && elapsed > c.time_limit_seconds) {
      outcome.pass = false;
      outcome.detail += " [exceeded the " + std::to_string(c.time_limit_seconds) + "s budget]";
    }
    std::printf("criterion %2d %s (%.2fs) %s: %s\n", c.id, outcome.pass ? "PASS" : "FAIL", elapsed,
                c.title, outcome.detail.c_str());
    std::fflush(stdout);
    if (!outcome.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
