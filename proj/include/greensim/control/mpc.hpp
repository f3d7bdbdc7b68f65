#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "greensim/types.hpp"

namespace greensim::control {

enum class PredictionSource { rnn, plant_model };

std::string_view to_string(PredictionSource s);
std::optional<PredictionSource> prediction_source_from_string(std::string_view name);

struct MpcConfig {
    int horizon = 6;
    std::vector<double> candidate_levels = {0.0, 0.25, 0.5, 0.75, 1.0};
    double weight_tracking = 1.0;
    double weight_effort = 0.05;
    PredictionSource prediction_source = PredictionSource::plant_model;
    // joint enumerations larger than this fall back to per-actuator passes
    std::uint64_t enumeration_budget = 2'000'000;

    void validate() const;
    bool operator==(const MpcConfig&) const = default;
};

// One-step prediction model used for planning. `state` is an opaque vector
// (a model may carry hidden state inside it); `tracked` projects it onto the
// channel values compared against the setpoints. Must be a pure function of
// its arguments. A model failure (throw) surfaces from mpc_plan as a
// planner-unavailable runtime error, which the supervisor treats as "fall
// back to PID".
class PlanModel {
public:
    virtual ~PlanModel() = default;
    virtual std::vector<double> advance(const std::vector<double>& state,
                                        const std::vector<double>& commands,
                                        int stage) const = 0;
    virtual std::vector<double> tracked(const std::vector<double>& state) const {
        return state;
    }
};

struct MpcPlan {
    std::vector<double> first_commands;          // one per actuator
    std::vector<std::vector<double>> sequence;   // horizon x actuator_count
    double cost = 0.0;
};

// Minimizes sum_t [ weight_tracking * ||tracked - setpoint||^2
//                 + weight_effort   * ||u_t||^2 ]
// over the candidate grid. Within the enumeration budget the search is
// exhaustive in lexicographic order (ascending levels, stage-major), so ties
// resolve to the lexicographically smallest command sequence and the result
// matches brute-force enumeration exactly. Beyond the budget, actuators are
// optimized one at a time in two coordinate passes with the others held
// fixed.
MpcPlan mpc_plan(const MpcConfig& cfg, const std::vector<double>& initial_state,
                 const std::vector<double>& setpoints, const PlanModel& model,
                 int actuator_count);

}  // namespace greensim::control
