#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "cubesurf/complex.hpp"
#include "cubesurf/metrics.hpp"
#include "cubesurf/optimizer.hpp"
#include "cubesurf/projection.hpp"

namespace cubesurf {

// Complex text format: one cell word per line, '#' starts a comment, blank
// lines ignored; all cell lines share one length (the ambient dimension)
// and carry exactly two stars.
CubicalComplex parse_complex_text(std::string_view text);
CubicalComplex read_complex_file(const std::filesystem::path& path);
std::string format_complex_text(const CubicalComplex& complex);
void write_complex_file(const CubicalComplex& complex, const std::filesystem::path& path);

// Embedding state records: single-line `d5=<v> d4=<v> phi=<v1>,...,<v10>`
// or a JSON object with the same keys. parse_state sniffs the format.
EmbeddingState parse_state(std::string_view text);
EmbeddingState read_state_file(const std::filesystem::path& path);
std::string format_state_text(const EmbeddingState& state);
std::string format_state_json(const EmbeddingState& state);

std::string metrics_report_json(const MetricsReport& report);

// Episode log records, one JSON object per line.
std::string episode_step_json(const EpisodeStep& step);
void write_episode_log(std::span<const EpisodeStep> log, const std::filesystem::path& path);

std::uint64_t fnv1a64(std::string_view text);

// Search output: one complex file per surface plus a manifest line per
// surface (face count, Euler characteristic, orientable flag, genus or
// demigenus, signature hash, file name).
std::vector<std::string> write_search_results(std::span<const CubicalComplex> surfaces,
                                               const std::filesystem::path& directory);

}  // namespace cubesurf
