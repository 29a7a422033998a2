#include "cubesurf/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cubesurf/error.hpp"
#include "cubesurf/rng.hpp"

namespace cubesurf {

double default_angle_step() { return std::numbers::pi / 180.0; }

std::vector<Action> action_set(double distance_step, double angle_step) {
  if (angle_step < 0) angle_step = default_angle_step();
  std::vector<Action> actions;
  actions.reserve(24);
  int index = 0;
  for (int coord = 0; coord < 12; ++coord) {
    double step = coord < 2 ? distance_step : angle_step;
    actions.push_back({index++, coord, step});
    actions.push_back({index++, coord, -step});
  }
  return actions;
}

EmbeddingState apply_action(const EmbeddingState& state, const Action& action) {
  EmbeddingState out = state;
  if (action.coordinate == 0)
    out.d5 += action.amount;
  else if (action.coordinate == 1)
    out.d4 += action.amount;
  else
    out.phi[static_cast<size_t>(action.coordinate - 2)] += action.amount;
  return wrap_state(out);
}

double reward_r1(int sigma_s, int sigma_next, const RewardConfig& cfg) {
  if (sigma_next <= cfg.sigma_prop) return 10.0 * (1 - sigma_next + cfg.sigma_prop);
  double denom = std::max(sigma_s, 1);
  double diff = cfg.sign_mode == SignMode::verbatim ? sigma_next - sigma_s : sigma_s - sigma_next;
  return diff / denom;
}

double reward_r2(int sigma_next, int overlaps_s, int overlaps_next, const RewardConfig& cfg) {
  if (sigma_next > cfg.sigma_prop) return 0.0;
  if (overlaps_s == 0) return 10.0 * (1 - sigma_next + cfg.sigma_prop);
  double diff = cfg.sign_mode == SignMode::verbatim ? overlaps_next - overlaps_s
                                                    : overlaps_s - overlaps_next;
  return diff / overlaps_s;
}

double reward_r3(double clearance_s, double clearance_next, SignMode mode) {
  if (clearance_s <= kEpsGeom)
    fail(ErrorCode::ZeroClearanceTotal, "total clearance vanished; R3 undefined");
  double diff = mode == SignMode::verbatim ? clearance_s - clearance_next
                                           : clearance_next - clearance_s;
  return diff / clearance_s;
}

double reward_r4(double clearance_s, std::span<const double> earlier, SignMode mode) {
  if (earlier.empty()) return 0.0;
  if (mode == SignMode::verbatim) {
    double best = *std::min_element(earlier.begin(), earlier.end());
    return clearance_s < best ? 1.0 : 0.0;
  }
  double best = *std::max_element(earlier.begin(), earlier.end());
  return clearance_s > best ? 1.0 : 0.0;
}

namespace {

double reward_r4_running(double clearance_s, const std::optional<double>& best_earlier, SignMode mode) {
  if (!best_earlier) return 0.0;
  return (mode == SignMode::verbatim ? clearance_s < *best_earlier : clearance_s > *best_earlier)
             ? 1.0
             : 0.0;
}

}  // namespace

MdpEnv::MdpEnv(const CubicalComplex& complex, ProjectionConstants projection, RewardConfig rewards,
               WidthConfig width, const EmbeddingState& initial)
    : complex_(complex),
      projection_(projection),
      rewards_(rewards),
      width_(width),
      state_(wrap_state(initial)) {
  if (!state_valid(state_, projection_))
    fail(ErrorCode::InvalidInitialState, "initial state violates the camera-distance guard");
  metrics_ = evaluate_metrics(state_);
  HistoryRecord start;
  start.t = 0;
  start.state = state_;
  start.metrics = metrics_;
  history_.push_back(start);
}

MetricsSummary MdpEnv::evaluate_metrics(const EmbeddingState& s) const {
  ProjectedScene scene = apply_state(complex_, s, projection_);
  MetricsReport report = compute_metrics(scene, complex_, width_, /*collect_pairs=*/false);
  return {report.intersections, report.overlaps, report.total_clearance};
}

MdpEnv::Candidate MdpEnv::probe(const Action& action) const {
  Candidate cand;
  cand.state = apply_action(state_, action);
  if (!state_valid(cand.state, projection_)) {
    cand.state = state_;
    cand.metrics = metrics_;
    return cand;  // rejected, reward stays at the -1 penalty
  }
  // Degenerate projected geometry is treated like a guard violation.
  try {
    cand.metrics = evaluate_metrics(cand.state);
  } catch (const Error&) {
    cand.state = state_;
    cand.metrics = metrics_;
    return cand;
  }
  cand.valid = true;
  cand.parts.r1 = reward_r1(metrics_.intersections, cand.metrics.intersections, rewards_);
  cand.parts.r2 = reward_r2(cand.metrics.intersections, metrics_.overlaps, cand.metrics.overlaps,
                            rewards_);
  cand.parts.r3 = reward_r3(metrics_.total_clearance, cand.metrics.total_clearance,
                            rewards_.sign_mode);
  cand.parts.r4 = reward_r4_running(metrics_.total_clearance, best_earlier_clearance_,
                                    rewards_.sign_mode);
  cand.reward = cand.parts.weighted_total(rewards_.weights);
  return cand;
}

const HistoryRecord& MdpEnv::step(const Action& action) { return step(action, probe(action)); }

const HistoryRecord& MdpEnv::step(const Action& action, const Candidate& candidate) {
  double departed_clearance = metrics_.total_clearance;

  HistoryRecord record;
  record.t = ++t_;
  record.action_index = action.index;
  record.accepted = candidate.valid;
  if (candidate.valid) {
    state_ = candidate.state;
    metrics_ = candidate.metrics;
    record.parts = candidate.parts;
  }
  record.state = state_;
  record.metrics = metrics_;
  record.reward = candidate.valid ? candidate.reward : -1.0;
  history_.push_back(record);

  if (rewards_.sign_mode == SignMode::verbatim)
    best_earlier_clearance_ = best_earlier_clearance_
                                  ? std::min(*best_earlier_clearance_, departed_clearance)
                                  : departed_clearance;
  else
    best_earlier_clearance_ = best_earlier_clearance_
                                  ? std::max(*best_earlier_clearance_, departed_clearance)
                                  : departed_clearance;
  return history_.back();
}

EmbeddingState sample_initial_state(const ProjectionConstants& constants, Rng& rng) {
  EmbeddingState s;
  s.d5 = constants.c5 + world_radius() + 1.0;
  s.d4 = constants.c4 / 2.0 + std::sqrt(5.0);
  for (double& a : s.phi) a = rng.uniform(0.0, 2.0 * std::numbers::pi);
  return s;
}

namespace {

// Lexicographic: fewer intersections, then fewer overlaps, then clearance
// total (direction depends on the sign mode).
bool better_than(const MetricsSummary& a, const MetricsSummary& b, SignMode mode) {
  if (a.intersections != b.intersections) return a.intersections < b.intersections;
  if (a.overlaps != b.overlaps) return a.overlaps < b.overlaps;
  if (mode == SignMode::corrected) return a.total_clearance > b.total_clearance;
  return a.total_clearance < b.total_clearance;
}

// Linear value function over sin/cos angle features and normalized camera
// distances.
struct QFeatures {
  static constexpr int kDim = 23;

  static std::array<double, kDim> extract(const EmbeddingState& s) {
    std::array<double, kDim> f{};
    f[0] = 1.0;
    f[1] = s.d5 / 10.0;
    f[2] = s.d4 / 10.0;
    for (int i = 0; i < 10; ++i) {
      f[static_cast<size_t>(3 + 2 * i)] = std::sin(s.phi[static_cast<size_t>(i)]);
      f[static_cast<size_t>(4 + 2 * i)] = std::cos(s.phi[static_cast<size_t>(i)]);
    }
    return f;
  }
};

class QTable {
public:
  explicit QTable(int actions) : weights_(static_cast<size_t>(actions)) {}

  double value(int action, const std::array<double, QFeatures::kDim>& f) const {
    const auto& w = weights_[static_cast<size_t>(action)];
    double acc = 0;
    for (int i = 0; i < QFeatures::kDim; ++i) acc += w[static_cast<size_t>(i)] * f[static_cast<size_t>(i)];
    return acc;
  }

  int best_action(const std::array<double, QFeatures::kDim>& f) const {
    int best = 0;
    double best_value = value(0, f);
    for (int a = 1; a < static_cast<int>(weights_.size()); ++a) {
      double v = value(a, f);
      if (v > best_value) {
        best_value = v;
        best = a;
      }
    }
    return best;
  }

  void update(int action, const std::array<double, QFeatures::kDim>& f, double target_error,
              double learning_rate) {
    auto& w = weights_[static_cast<size_t>(action)];
    for (int i = 0; i < QFeatures::kDim; ++i)
      w[static_cast<size_t>(i)] += learning_rate * target_error * f[static_cast<size_t>(i)];
  }

private:
  std::vector<std::array<double, QFeatures::kDim>> weights_;
};

}  // namespace

OptimizeResult optimize(const CubicalComplex& complex, std::optional<EmbeddingState> initial,
                        const AgentPolicy& policy, const OptimizeBudget& budget,
                        const RewardConfig& rewards, const ProjectionConstants& projection,
                        std::optional<double> beam_radius) {
  if (initial && !state_valid(*initial, projection))
    fail(ErrorCode::InvalidInitialState, "s0 violates the camera-distance guard");

  Rng rng(policy.seed);
  std::vector<Action> actions = action_set();

  // The beam radius stays fixed for the whole run so overlap counts remain
  // comparable across states; derive it from the first initial state.
  EmbeddingState first_state = initial ? *initial : sample_initial_state(projection, rng);
  WidthConfig width;
  width.beam_radius =
      beam_radius ? *beam_radius : default_beam_radius(apply_state(complex, first_state, projection));

  OptimizeResult result;
  result.beam_radius = width.beam_radius;

  QTable qtable(static_cast<int>(actions.size()));

  std::optional<MetricsSummary> best;
  EmbeddingState best_state;
  int t_global = 0;
  bool stop = false;

  auto consider = [&](const EmbeddingState& s, const MetricsSummary& m) {
    if (!best || better_than(m, *best, rewards.sign_mode)) {
      best = m;
      best_state = s;
    }
    if (budget.early_stop && m.intersections <= budget.stop_sigma && m.overlaps == 0) stop = true;
  };

  for (int episode = 0; episode < budget.episodes && !stop; ++episode) {
    EmbeddingState start;
    if (episode == 0)
      start = first_state;
    else
      start = initial ? *initial : sample_initial_state(projection, rng);

    MdpEnv env(complex, projection, rewards, width, start);
    if (episode == 0) result.initial_metrics = env.metrics();
    consider(env.state(), env.metrics());

    for (int step = 0; step < budget.steps_per_episode && !stop; ++step) {
      int chosen;
      MdpEnv::Candidate chosen_candidate;
      bool have_candidate = false;

      if (policy.kind == AgentPolicy::Kind::greedy_lookahead) {
        std::vector<MdpEnv::Candidate> candidates(actions.size());
        for (size_t a = 0; a < actions.size(); ++a) candidates[a] = env.probe(actions[a]);
        if (rng.uniform() < policy.exploration) {
          chosen = rng.below(static_cast<int>(actions.size()));
        } else {
          chosen = 0;
          for (size_t a = 1; a < actions.size(); ++a)
            if (candidates[a].reward > candidates[static_cast<size_t>(chosen)].reward)
              chosen = static_cast<int>(a);
        }
        chosen_candidate = candidates[static_cast<size_t>(chosen)];
        have_candidate = true;
      } else {
        auto features = QFeatures::extract(env.state());
        chosen = rng.uniform() < policy.exploration ? rng.below(static_cast<int>(actions.size()))
                                                    : qtable.best_action(features);
        chosen_candidate = env.probe(actions[static_cast<size_t>(chosen)]);
        have_candidate = true;

        auto next_features = QFeatures::extract(chosen_candidate.valid ? chosen_candidate.state
                                                                       : env.state());
        double reward = chosen_candidate.valid ? chosen_candidate.reward : -1.0;
        double next_best = qtable.value(qtable.best_action(next_features), next_features);
        double td_error = reward + rewards.gamma * next_best - qtable.value(chosen, features);
        qtable.update(chosen, features, td_error, policy.learning_rate);
      }

      const HistoryRecord& record = have_candidate
                                        ? env.step(actions[static_cast<size_t>(chosen)], chosen_candidate)
                                        : env.step(actions[static_cast<size_t>(chosen)]);

      EpisodeStep log_entry;
      log_entry.t = t_global++;
      log_entry.action_index = record.action_index;
      log_entry.accepted = record.accepted;
      log_entry.state = record.state;
      log_entry.intersections = record.metrics.intersections;
      log_entry.overlaps = record.metrics.overlaps;
      log_entry.total_clearance = record.metrics.total_clearance;
      log_entry.parts = record.parts;
      log_entry.reward = record.reward;
      result.log.push_back(log_entry);

      consider(env.state(), env.metrics());
    }
  }

  result.steps_taken = t_global;
  result.reached_stop = stop;
  result.best_state = best_state;
  ProjectedScene best_scene = apply_state(complex, best_state, projection);
  result.best_metrics = compute_metrics(best_scene, complex, width, /*collect_pairs=*/true);
  return result;
}

}  // namespace cubesurf
