#include "cubesurf/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cubesurf/error.hpp"
#include "cubesurf/surface.hpp"

namespace cubesurf {

namespace {

std::string trimmed(std::string_view line) {
  size_t begin = line.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return "";
  size_t end = line.find_last_not_of(" \t\r\n");
  return std::string(line.substr(begin, end - begin + 1));
}

std::string format_full(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

double parse_double(const std::string& token, const char* what) {
  try {
    size_t used = 0;
    double v = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    fail(ErrorCode::BadFormat, std::string("cannot parse ") + what + " value '" + token + "'");
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) fail(ErrorCode::IoError, "error reading " + path.string());
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
  out << text;
  if (!out) fail(ErrorCode::IoError, "short write to " + path.string());
}

}  // namespace

CubicalComplex parse_complex_text(std::string_view text) {
  std::vector<CellCode> faces;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    std::string line = trimmed(raw);
    if (line.empty() || line[0] == '#') continue;
    faces.push_back(CellCode::parse(line, static_cast<int>(line.size())));
  }
  return CubicalComplex::from_faces(std::move(faces));
}

CubicalComplex read_complex_file(const std::filesystem::path& path) {
  return parse_complex_text(read_text_file(path));
}

std::string format_complex_text(const CubicalComplex& complex) {
  std::string out;
  for (const CellCode& f : complex.faces()) {
    out += f.word();
    out += '\n';
  }
  return out;
}

void write_complex_file(const CubicalComplex& complex, const std::filesystem::path& path) {
  write_text_file(path, format_complex_text(complex));
}

EmbeddingState parse_state(std::string_view text) {
  std::string body = trimmed(text);
  if (body.empty()) fail(ErrorCode::BadFormat, "empty state record");

  EmbeddingState state;
  if (body.front() == '{') {
    nlohmann::json j = nlohmann::json::parse(body, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.is_object() || !j.contains("d5") || !j.contains("d4") ||
        !j.contains("phi") || !j["phi"].is_array() || j["phi"].size() != 10)
      fail(ErrorCode::BadFormat, "state JSON needs keys d5, d4 and a 10-entry phi array");
    state.d5 = j["d5"].get<double>();
    state.d4 = j["d4"].get<double>();
    for (size_t i = 0; i < 10; ++i) state.phi[i] = j["phi"][i].get<double>();
    return state;
  }

  std::istringstream in(body);
  std::string token;
  bool have_d5 = false, have_d4 = false, have_phi = false;
  while (in >> token) {
    if (token.rfind("d5=", 0) == 0) {
      state.d5 = parse_double(token.substr(3), "d5");
      have_d5 = true;
    } else if (token.rfind("d4=", 0) == 0) {
      state.d4 = parse_double(token.substr(3), "d4");
      have_d4 = true;
    } else if (token.rfind("phi=", 0) == 0) {
      std::string list = token.substr(4);
      size_t start = 0;
      int count = 0;
      while (start <= list.size()) {
        size_t comma = list.find(',', start);
        std::string item = list.substr(start, comma == std::string::npos ? comma : comma - start);
        if (count >= 10) fail(ErrorCode::BadFormat, "phi list needs exactly 10 angles");
        state.phi[static_cast<size_t>(count++)] = parse_double(item, "phi");
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      if (count != 10) fail(ErrorCode::BadFormat, "phi list needs exactly 10 angles");
      have_phi = true;
    } else {
      fail(ErrorCode::BadFormat, "unexpected state token '" + token + "'");
    }
  }
  if (!have_d5 || !have_d4 || !have_phi)
    fail(ErrorCode::BadFormat, "state record needs d5=, d4= and phi= fields");
  return state;
}

EmbeddingState read_state_file(const std::filesystem::path& path) {
  return parse_state(read_text_file(path));
}

std::string format_state_text(const EmbeddingState& state) {
  std::string out = "d5=" + format_full(state.d5) + " d4=" + format_full(state.d4) + " phi=";
  for (size_t i = 0; i < state.phi.size(); ++i) {
    if (i) out += ',';
    out += format_full(state.phi[i]);
  }
  return out;
}

std::string format_state_json(const EmbeddingState& state) {
  nlohmann::json j;
  j["d5"] = state.d5;
  j["d4"] = state.d4;
  j["phi"] = state.phi;
  return j.dump();
}

std::string metrics_report_json(const MetricsReport& report) {
  nlohmann::json j;
  j["sigma"] = report.intersections;
  j["overlaps"] = report.overlaps;
  j["total_clearance"] = report.total_clearance;
  auto pairs = nlohmann::json::array();
  for (const auto& [a, b] : report.face_pairs) pairs.push_back({a.word(), b.word()});
  j["face_pairs"] = pairs;
  pairs = nlohmann::json::array();
  for (const auto& [a, b] : report.edge_pairs) pairs.push_back({a.word(), b.word()});
  j["edge_pairs"] = pairs;
  return j.dump();
}

std::string episode_step_json(const EpisodeStep& step) {
  nlohmann::json j;
  j["t"] = step.t;
  j["action_index"] = step.action_index;
  nlohmann::json state;
  state["d5"] = step.state.d5;
  state["d4"] = step.state.d4;
  state["phi"] = step.state.phi;
  j["state"] = state;
  j["sigma"] = step.intersections;
  j["overlaps"] = step.overlaps;
  j["L"] = step.total_clearance;
  j["r1"] = step.parts.r1;
  j["r2"] = step.parts.r2;
  j["r3"] = step.parts.r3;
  j["r4"] = step.parts.r4;
  j["reward"] = step.reward;
  return j.dump();
}

void write_episode_log(std::span<const EpisodeStep> log, const std::filesystem::path& path) {
  std::string text;
  for (const EpisodeStep& step : log) {
    text += episode_step_json(step);
    text += '\n';
  }
  write_text_file(path, text);
}

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

std::vector<std::string> write_search_results(std::span<const CubicalComplex> surfaces,
                                               const std::filesystem::path& directory) {
  std::error_code ec;
  std::filesystem::create_directories(directory, ec);
  if (ec) fail(ErrorCode::IoError, "cannot create " + directory.string() + ": " + ec.message());

  std::vector<std::string> names;
  std::string manifest = "# faces\tchi\torientable\tgenus_or_demigenus\tsignature\tfile\n";
  for (size_t i = 0; i < surfaces.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof(name), "surface_%03zu.txt", i);
    write_complex_file(surfaces[i], directory / name);
    names.emplace_back(name);

    SurfaceClass sc = classify(surfaces[i]);
    int genus_or_demigenus = sc.genus ? *sc.genus : (sc.demigenus ? *sc.demigenus : 0);
    char hash[24];
    std::snprintf(hash, sizeof(hash), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(canonical_signature(surfaces[i]))));
    manifest += std::to_string(surfaces[i].face_count()) + '\t' +
                std::to_string(sc.euler_characteristic) + '\t' +
                (sc.orientable && *sc.orientable ? "1" : "0") + '\t' +
                std::to_string(genus_or_demigenus) + '\t' + hash + '\t' + name + '\n';
  }
  write_text_file(directory / "manifest.tsv", manifest);
  return names;
}

}  // namespace cubesurf
