#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubesurf/error.hpp"
#include "cubesurf/io.hpp"
#include "cubesurf/mesh.hpp"
#include "cubesurf/metrics.hpp"
#include "cubesurf/optimizer.hpp"
#include "cubesurf/projection.hpp"
#include "cubesurf/search.hpp"
#include "cubesurf/surface.hpp"

using namespace cubesurf;

namespace {

// `--state` accepts either a file path or an inline record.
EmbeddingState load_state(const std::string& arg) {
  if (std::filesystem::exists(arg)) return read_state_file(arg);
  return parse_state(arg);
}

SurfaceFilter parse_target(const std::string& spec) {
  SurfaceFilter filter;
  if (spec == "sphere") {
    filter.orientable = true;
    filter.genus = 0;
    return filter;
  }
  if (spec == "torus") {
    filter.orientable = true;
    filter.genus = 1;
    return filter;
  }
  if (spec == "projective-plane") {
    filter.orientable = false;
    filter.demigenus = 1;
    return filter;
  }
  if (spec == "klein-bottle") {
    filter.orientable = false;
    filter.demigenus = 2;
    return filter;
  }

  size_t start = 0;
  while (start <= spec.size()) {
    size_t comma = spec.find(',', start);
    std::string item = spec.substr(start, comma == std::string::npos ? comma : comma - start);
    size_t eq = item.find('=');
    if (eq == std::string::npos)
      fail(ErrorCode::BadFormat, "target item '" + item + "' is not key=value");
    std::string key = item.substr(0, eq);
    int value = std::atoi(item.c_str() + eq + 1);
    if (key == "orientable")
      filter.orientable = value != 0;
    else if (key == "chi")
      filter.euler_characteristic = value;
    else if (key == "genus")
      filter.genus = value;
    else if (key == "demigenus")
      filter.demigenus = value;
    else
      fail(ErrorCode::BadFormat, "unknown target key '" + key + "'");
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return filter;
}

nlohmann::json classification_json(const CubicalComplex& complex, const SurfaceClass& sc,
                                   const ClosedSurfaceReport& report) {
  nlohmann::json j;
  j["faces"] = complex.face_count();
  j["edges"] = complex.edge_count();
  j["vertices"] = complex.vertex_count();
  j["connected"] = sc.connected;
  j["closed"] = sc.closed;
  j["chi"] = sc.euler_characteristic;
  if (sc.orientable) j["orientable"] = *sc.orientable;
  if (sc.genus) j["genus"] = *sc.genus;
  if (sc.demigenus) j["demigenus"] = *sc.demigenus;
  auto bad_edges = nlohmann::json::array();
  for (int e : report.bad_edges) bad_edges.push_back(complex.edges()[static_cast<size_t>(e)].word());
  auto bad_vertices = nlohmann::json::array();
  for (int v : report.bad_vertices)
    bad_vertices.push_back(complex.vertices()[static_cast<size_t>(v)].word());
  j["violations"] = {{"edges", bad_edges}, {"vertices", bad_vertices}};
  return j;
}

std::string describe_class(const SurfaceClass& sc) {
  std::string out;
  out += sc.connected ? "connected" : "not connected";
  out += sc.closed ? "; closed" : "; not closed";
  out += "; \xcf\x87=" + std::to_string(sc.euler_characteristic);
  if (sc.orientable) out += *sc.orientable ? "; orientable" : "; non-orientable";
  if (sc.genus) out += "; genus " + std::to_string(*sc.genus);
  if (sc.demigenus) out += "; demigenus " + std::to_string(*sc.demigenus);
  return out;
}

int run_check(const std::string& path, bool json) {
  CubicalComplex complex = read_complex_file(path);
  ClosedSurfaceReport report = check_closed_surface(complex);
  SurfaceClass sc = classify(complex);

  if (json) {
    std::cout << classification_json(complex, sc, report).dump() << "\n";
    return report.closed ? 0 : 1;
  }

  if (report.closed) {
    std::string line = "closed surface: yes; \xcf\x87=" + std::to_string(sc.euler_characteristic);
    if (sc.orientable) line += *sc.orientable ? "; orientable" : "; non-orientable";
    if (sc.genus) line += "; genus " + std::to_string(*sc.genus);
    if (sc.demigenus) line += "; demigenus " + std::to_string(*sc.demigenus);
    std::cout << line << "\n";
    return 0;
  }

  std::cout << "closed surface: no\n";
  for (int e : report.bad_edges)
    std::cout << "  edge " << complex.edges()[static_cast<size_t>(e)].word() << " lies in "
              << complex.edge_faces(e).size() << " faces (need 2)\n";
  for (int v : report.bad_vertices)
    std::cout << "  vertex " << complex.vertices()[static_cast<size_t>(v)].word()
              << " has a non-cyclic vertex figure\n";
  return 1;
}

int run_classify(const std::string& path, bool json) {
  CubicalComplex complex = read_complex_file(path);
  SurfaceClass sc = classify(complex);
  if (json) {
    std::cout << classification_json(complex, sc, check_closed_surface(complex)).dump() << "\n";
  } else {
    std::cout << describe_class(sc) << "\n";
  }
  return 0;
}

struct SearchArgs {
  int dim = 5;
  int max_faces = 80;
  bool exhaustive = false;
  bool census = false;
  std::uint64_t seed = 0;
  std::uint64_t budget = 200000;
  int count = 1;
  std::string target;
  std::string out_dir = "surfaces";
};

int run_search(const SearchArgs& args, bool json) {
  SearchOptions opts;
  opts.ambient = args.dim;
  opts.max_faces = args.max_faces;
  opts.mode = args.exhaustive ? SearchMode::exhaustive : SearchMode::randomized;
  opts.seed = args.seed;
  opts.max_steps = args.budget;
  opts.max_results = args.count;
  opts.allow_large_exhaustive = args.census;
  if (!args.target.empty()) opts.target = parse_target(args.target);

  SearchOutcome outcome = enumerate_closed_surfaces(opts);
  auto names = write_search_results(outcome.surfaces, args.out_dir);

  if (json) {
    nlohmann::json j;
    j["found"] = outcome.surfaces.size();
    j["steps"] = outcome.steps;
    j["directory"] = args.out_dir;
    auto arr = nlohmann::json::array();
    for (size_t i = 0; i < outcome.surfaces.size(); ++i) {
      SurfaceClass sc = classify(outcome.surfaces[i]);
      nlohmann::json entry;
      entry["file"] = names[i];
      entry["faces"] = outcome.surfaces[i].face_count();
      entry["chi"] = sc.euler_characteristic;
      if (sc.orientable) entry["orientable"] = *sc.orientable;
      if (sc.genus) entry["genus"] = *sc.genus;
      if (sc.demigenus) entry["demigenus"] = *sc.demigenus;
      arr.push_back(entry);
    }
    j["surfaces"] = arr;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "found " << outcome.surfaces.size() << " surface(s) in " << outcome.steps
              << " steps; written to " << args.out_dir << "/\n";
    for (size_t i = 0; i < outcome.surfaces.size(); ++i)
      std::cout << "  " << names[i] << ": " << outcome.surfaces[i].face_count() << " faces, "
                << describe_class(classify(outcome.surfaces[i])) << "\n";
  }
  return 0;
}

struct MetricsArgs {
  std::string complex_path;
  std::string state;
  double radius = 0;
  bool count_adjacent = false;
};

int run_metrics(const MetricsArgs& args, bool json) {
  CubicalComplex complex = read_complex_file(args.complex_path);
  EmbeddingState state = load_state(args.state);
  ProjectedScene scene = apply_state(complex, state);
  WidthConfig width;
  width.beam_radius = args.radius > 0 ? args.radius : default_beam_radius(scene);
  width.count_adjacent_edges = args.count_adjacent;
  MetricsReport report = compute_metrics(scene, complex, width);

  if (json) {
    std::cout << metrics_report_json(report) << "\n";
  } else {
    std::cout << "sigma=" << report.intersections << " overlaps=" << report.overlaps
              << " L=" << report.total_clearance << " (r=" << width.beam_radius << ")\n";
    for (const auto& [a, b] : report.face_pairs)
      std::cout << "  faces " << a.word() << " x " << b.word() << "\n";
    for (const auto& [a, b] : report.edge_pairs)
      std::cout << "  edges " << a.word() << " x " << b.word() << "\n";
  }
  return 0;
}

struct OptimizeArgs {
  std::string complex_path;
  std::string s0;
  int sigma_prop = 0;
  std::string agent = "greedy";
  std::string sign_mode = "corrected";
  std::uint64_t seed = 0;
  int episodes = 64;
  int steps = 512;
  int total_budget = 0;  // when set, overrides the episode count
  int stop_sigma = -1;
  double exploration = 0.1;
  double learning_rate = 0.1;
  double gamma = 0.9;
  double radius = 0;
  std::string log_path;
  std::string out_path;
};

int run_optimize(const OptimizeArgs& args, bool json) {
  CubicalComplex complex = read_complex_file(args.complex_path);

  std::optional<EmbeddingState> s0;
  if (!args.s0.empty()) s0 = load_state(args.s0);

  AgentPolicy policy;
  if (args.agent == "greedy" || args.agent == "greedy_lookahead")
    policy.kind = AgentPolicy::Kind::greedy_lookahead;
  else if (args.agent == "q" || args.agent == "q_learning")
    policy.kind = AgentPolicy::Kind::q_learning;
  else
    fail(ErrorCode::BadFormat, "unknown agent '" + args.agent + "'");
  policy.exploration = args.exploration;
  policy.learning_rate = args.learning_rate;
  policy.seed = args.seed;

  RewardConfig rewards;
  rewards.sigma_prop = args.sigma_prop;
  rewards.gamma = args.gamma;
  if (args.sign_mode == "corrected")
    rewards.sign_mode = SignMode::corrected;
  else if (args.sign_mode == "verbatim")
    rewards.sign_mode = SignMode::verbatim;
  else
    fail(ErrorCode::BadFormat, "sign mode must be corrected or verbatim");

  OptimizeBudget budget;
  budget.episodes = args.episodes;
  budget.steps_per_episode = args.steps;
  if (args.total_budget > 0)
    budget.episodes = (args.total_budget + args.steps - 1) / args.steps;
  budget.stop_sigma = args.stop_sigma >= 0 ? args.stop_sigma : args.sigma_prop;

  std::optional<double> radius;
  if (args.radius > 0) radius = args.radius;

  OptimizeResult result = optimize(complex, s0, policy, budget, rewards, {}, radius);

  if (!args.log_path.empty()) write_episode_log(result.log, args.log_path);
  if (!args.out_path.empty()) {
    std::ofstream out(args.out_path, std::ios::binary);
    if (!out) fail(ErrorCode::IoError, "cannot open " + args.out_path);
    out << format_state_text(result.best_state) << "\n";
  }

  if (json) {
    nlohmann::json j;
    j["best_state"] = nlohmann::json::parse(format_state_json(result.best_state));
    j["sigma"] = result.best_metrics.intersections;
    j["overlaps"] = result.best_metrics.overlaps;
    j["total_clearance"] = result.best_metrics.total_clearance;
    j["initial_sigma"] = result.initial_metrics.intersections;
    j["initial_overlaps"] = result.initial_metrics.overlaps;
    j["steps"] = result.steps_taken;
    j["reached_stop"] = result.reached_stop;
    j["beam_radius"] = result.beam_radius;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "initial sigma=" << result.initial_metrics.intersections
              << " overlaps=" << result.initial_metrics.overlaps << "\n";
    std::cout << "best    sigma=" << result.best_metrics.intersections
              << " overlaps=" << result.best_metrics.overlaps
              << " L=" << result.best_metrics.total_clearance << " after " << result.steps_taken
              << " steps (r=" << result.beam_radius << ")\n";
    std::cout << "best state: " << format_state_text(result.best_state) << "\n";
  }
  return 0;
}

struct ExportArgs {
  std::string complex_path;
  std::string state;
  double radius = 0;
  bool panels = false;
  bool scene_mode = false;
  std::string profile = "square";
  std::string out_path;
};

int run_export(const ExportArgs& args) {
  CubicalComplex complex = read_complex_file(args.complex_path);
  EmbeddingState state = load_state(args.state);
  ProjectedScene scene = apply_state(complex, state);
  double radius = args.radius > 0 ? args.radius : default_beam_radius(scene);

  std::filesystem::path out = args.out_path;
  std::string ext = out.extension().string();
  if (args.scene_mode) {
    if (ext != ".obj") fail(ErrorCode::BadFormat, "scene export writes .obj files");
    write_obj_scene(scene, complex, out);
    std::cerr << "wrote scene " << out.string() << "\n";
    return 0;
  }

  BeamProfile profile;
  if (args.profile == "square")
    profile = BeamProfile::square;
  else if (args.profile == "octagon")
    profile = BeamProfile::octagon;
  else
    fail(ErrorCode::BadFormat, "profile must be square or octagon");

  BeamMesh mesh = build_beam_mesh(scene, complex, radius, args.panels, profile);
  if (ext == ".stl")
    write_stl_binary(mesh, out);
  else if (ext == ".obj")
    write_obj(mesh, out);
  else
    fail(ErrorCode::BadFormat, "output must end in .stl or .obj");
  std::cerr << "wrote " << mesh.triangles.size() << " triangles to " << out.string() << " (r="
            << radius << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cubical surfaces in hypercubes: verification, search, embedding optimization, export"};
  app.set_config("--config", "", "read options from an INI file");
  app.require_subcommand(1);

  bool json = false;
  app.add_flag("--json", json, "machine-readable JSON output");

  std::string check_path;
  auto* check = app.add_subcommand("check", "closed-surface report for a complex file");
  check->fallthrough();
  check->add_option("complex", check_path, "complex file")->required();

  std::string classify_path;
  auto* classify_cmd = app.add_subcommand("classify", "connectivity / orientability / genus report");
  classify_cmd->fallthrough();
  classify_cmd->add_option("complex", classify_path, "complex file")->required();

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "search Q^n for closed surfaces");
  search->fallthrough();
  search->add_option("--dim", search_args.dim, "ambient dimension")->check(CLI::Range(2, 8));
  search->add_option("--max-faces", search_args.max_faces, "face budget per surface");
  search->add_flag("--exhaustive", search_args.exhaustive, "enumerate all isomorphism types");
  search->add_flag("--census", search_args.census,
                   "allow exhaustive mode in dimension >= 5 (long-running)");
  search->add_option("--seed", search_args.seed, "randomized mode seed");
  search->add_option("--budget", search_args.budget, "randomized mode step budget");
  search->add_option("--count", search_args.count, "surfaces to collect in randomized mode");
  search->add_option("--target", search_args.target,
                     "filter: sphere|torus|projective-plane|klein-bottle or key=value list "
                     "(orientable, chi, genus, demigenus)");
  search->add_option("-o,--out", search_args.out_dir, "output directory");

  MetricsArgs metrics_args;
  auto* metrics = app.add_subcommand("metrics", "face intersections and edge overlaps at a state");
  metrics->fallthrough();
  metrics->add_option("complex", metrics_args.complex_path, "complex file")->required();
  metrics->add_option("--state", metrics_args.state, "state file or inline record")->required();
  metrics->add_option("-r,--radius", metrics_args.radius, "beam radius (default 2% of bbox)");
  metrics->add_flag("--count-adjacent-edges", metrics_args.count_adjacent,
                    "count vertex-sharing edge pairs too");

  OptimizeArgs optimize_args;
  auto* opt = app.add_subcommand("optimize", "minimize intersections and overlaps");
  opt->fallthrough();
  opt->add_option("complex", optimize_args.complex_path, "complex file")->required();
  opt->add_option("--s0", optimize_args.s0, "initial state file or inline record");
  opt->add_option("--sigma-prop", optimize_args.sigma_prop, "proposed intersection target");
  opt->add_option("--agent", optimize_args.agent, "greedy|q_learning");
  opt->add_option("--sign-mode", optimize_args.sign_mode, "corrected|verbatim");
  opt->add_option("--seed", optimize_args.seed, "run seed");
  opt->add_option("--episodes", optimize_args.episodes, "episode count");
  opt->add_option("--steps", optimize_args.steps, "steps per episode");
  opt->add_option("--budget", optimize_args.total_budget,
                  "total step budget (overrides --episodes)");
  opt->add_option("--stop-sigma", optimize_args.stop_sigma,
                  "early-stop threshold (default: sigma-prop)");
  opt->add_option("--exploration", optimize_args.exploration, "random action probability");
  opt->add_option("--learning-rate", optimize_args.learning_rate, "q_learning step size");
  opt->add_option("--gamma", optimize_args.gamma, "discount factor");
  opt->add_option("-r,--radius", optimize_args.radius, "beam radius (default 2% of bbox)");
  opt->add_option("--log", optimize_args.log_path, "episode log (JSON lines)");
  opt->add_option("--out", optimize_args.out_path, "best state output file");

  ExportArgs export_args;
  auto* exp = app.add_subcommand("export", "write a printable mesh (.stl/.obj)");
  exp->fallthrough();
  exp->add_option("complex", export_args.complex_path, "complex file")->required();
  exp->add_option("--state", export_args.state, "state file or inline record")->required();
  exp->add_option("-r,--radius", export_args.radius, "beam radius (default 2% of bbox)");
  exp->add_flag("--panels", export_args.panels, "emit thin face panels too");
  exp->add_flag("--scene", export_args.scene_mode, "raw scene OBJ (quads + edge polylines)");
  exp->add_option("--profile", export_args.profile, "beam cross-section: square|octagon");
  exp->add_option("-o,--out", export_args.out_path, "output path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return run_check(check_path, json);
    if (classify_cmd->parsed()) return run_classify(classify_path, json);
    if (search->parsed()) return run_search(search_args, json);
    if (metrics->parsed()) return run_metrics(metrics_args, json);
    if (opt->parsed()) return run_optimize(optimize_args, json);
    if (exp->parsed()) return run_export(export_args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::IoError ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
