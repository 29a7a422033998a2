#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cubesurf/complex.hpp"
#include "cubesurf/metrics.hpp"
#include "cubesurf/projection.hpp"

namespace cubesurf {

// One move: add `amount` to a single state coordinate (0 = d5, 1 = d4,
// 2..11 = the ten angles).
struct Action {
  int index = 0;
  int coordinate = 0;
  double amount = 0;
};

inline constexpr double kDefaultDistanceStep = 0.5;

double default_angle_step();  // pi / 180

// The 24 actions: +/- the distance step on d5 and d4, +/- the angle step on
// each of the ten angles, in that order.
std::vector<Action> action_set(double distance_step = kDefaultDistanceStep, double angle_step = -1);

EmbeddingState apply_action(const EmbeddingState& state, const Action& action);

// Whether reward terms follow the printed difference quotients (verbatim) or
// flip them so that reductions are rewarded (corrected).
enum class SignMode { verbatim, corrected };

struct RewardConfig {
  int sigma_prop = 0;             // proposed face-intersection target
  double gamma = 0.9;             // discount factor, [0, 1)
  SignMode sign_mode = SignMode::corrected;
  std::array<double, 4> weights = {1, 1, 1, 1};
};

double reward_r1(int sigma_s, int sigma_next, const RewardConfig& cfg);
double reward_r2(int sigma_next, int overlaps_s, int overlaps_next, const RewardConfig& cfg);
double reward_r3(double clearance_s, double clearance_next, SignMode mode);
// R4 compares the current state's clearance total against the history of
// earlier ones; 0 when the history is empty.
double reward_r4(double clearance_s, std::span<const double> earlier, SignMode mode);

struct RewardBreakdown {
  double r1 = 0, r2 = 0, r3 = 0, r4 = 0;
  double weighted_total(const std::array<double, 4>& weights) const {
    return weights[0] * r1 + weights[1] * r2 + weights[2] * r3 + weights[3] * r4;
  }
};

struct MetricsSummary {
  int intersections = 0;
  int overlaps = 0;
  double total_clearance = 0;
};

struct HistoryRecord {
  int t = 0;
  int action_index = -1;          // -1 for the initial state record
  bool accepted = true;
  EmbeddingState state;
  MetricsSummary metrics;
  RewardBreakdown parts;
  double reward = 0;
};

// Deterministic environment over one complex: transitions are
// s' = wrap_state(s + a); moves violating the camera guards are rejected
// in-band with a fixed -1 penalty and leave the state unchanged.
class MdpEnv {
public:
  MdpEnv(const CubicalComplex& complex, ProjectionConstants projection, RewardConfig rewards,
         WidthConfig width, const EmbeddingState& initial);

  const EmbeddingState& state() const { return state_; }
  const MetricsSummary& metrics() const { return metrics_; }
  int t() const { return t_; }
  const RewardConfig& reward_config() const { return rewards_; }

  struct Candidate {
    bool valid = false;
    EmbeddingState state;
    MetricsSummary metrics;
    RewardBreakdown parts;
    double reward = -1;  // rejection penalty when invalid
  };

  // Evaluate one action from the current state without committing.
  Candidate probe(const Action& action) const;

  // Commit an action (reusing a probe when available); returns the appended
  // history record.
  const HistoryRecord& step(const Action& action);
  const HistoryRecord& step(const Action& action, const Candidate& candidate);

  const std::vector<HistoryRecord>& history() const { return history_; }

private:
  MetricsSummary evaluate_metrics(const EmbeddingState& s) const;

  const CubicalComplex& complex_;
  ProjectionConstants projection_;
  RewardConfig rewards_;
  WidthConfig width_;
  EmbeddingState state_;
  MetricsSummary metrics_;
  int t_ = 0;
  std::optional<double> best_earlier_clearance_;  // running min (verbatim) or max (corrected)
  std::vector<HistoryRecord> history_;
};

struct AgentPolicy {
  enum class Kind { greedy_lookahead, q_learning };
  Kind kind = Kind::greedy_lookahead;
  double exploration = 0.1;     // probability of a uniform random action
  double learning_rate = 0.1;   // q_learning only
  std::uint64_t seed = 0;
};

struct OptimizeBudget {
  int episodes = 64;
  int steps_per_episode = 512;
  // Stop as soon as some visited state reaches intersections <= stop_sigma
  // and zero overlaps.
  int stop_sigma = 0;
  bool early_stop = true;
};

struct EpisodeStep {
  int t = 0;  // global step counter across episodes
  int action_index = -1;
  bool accepted = true;  // false for guard-rejected moves (not serialized)
  EmbeddingState state;
  int intersections = 0;
  int overlaps = 0;
  double total_clearance = 0;
  RewardBreakdown parts;
  double reward = 0;
};

struct OptimizeResult {
  EmbeddingState best_state;
  MetricsReport best_metrics;
  MetricsSummary initial_metrics;
  std::vector<EpisodeStep> log;
  int steps_taken = 0;
  bool reached_stop = false;
  double beam_radius = 0;
};

// Run the configured agent and return the best state ever visited, ordered
// by fewest intersections, then fewest overlaps, then clearance total
// (larger wins in corrected mode, smaller in verbatim). When `initial` is
// given every episode starts there, otherwise episodes draw fresh initial
// states from the seeded sampler.
OptimizeResult optimize(const CubicalComplex& complex, std::optional<EmbeddingState> initial,
                        const AgentPolicy& policy, const OptimizeBudget& budget,
                        const RewardConfig& rewards, const ProjectionConstants& projection = {},
                        std::optional<double> beam_radius = std::nullopt);

// The default initial-state sampler: fixed safe camera distances, angles
// uniform in [0, 2*pi).
EmbeddingState sample_initial_state(const ProjectionConstants& constants, class Rng& rng);

}  // namespace cubesurf
