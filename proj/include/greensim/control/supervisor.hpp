#pragma once

#include <array>
#include <string>

#include "greensim/plant.hpp"
#include "greensim/types.hpp"

namespace greensim::control {

enum class Strategy { pid, mpc, fuzzy };

std::string_view to_string(Strategy s);
std::optional<Strategy> strategy_from_string(std::string_view name);

struct SupervisorContext {
    bool planner_available = false;
    // predictor validation MSE on normalized channels; +inf until trained
    double prediction_mse = std::numeric_limits<double>::infinity();
    double confidence_mse_max = 0.05;

    bool have_prediction = false;
    double predicted_temp_trend = 0.0;  // degC per tick, next-step forecast minus current
    double humidity = 50.0;             // %RH, current cleaned reading
    double humidity_low_crossover = 200.0 / 7.0;  // low/medium membership crossing

    // |setpoint - measured| / tolerance_band for each actuator's channel
    std::array<double, plant::kActuatorCount> normalized_error{};
    double extreme_error_factor = 10.0;  // beyond this multiple, force PID

    void validate() const;
};

struct StrategyChoice {
    Strategy strategy = Strategy::pid;
    std::string rationale;
};

using StrategyTable = std::array<StrategyChoice, plant::kActuatorCount>;

// Rule-ordered arbitration, every actuator gets exactly one strategy:
//   1. planner unavailable or error out of nominal range -> PID
//   2. heater/ventilator -> MPC when the predictor validation MSE is within
//      the confidence cutoff
//   3. irrigator -> fuzzy when the predicted temperature trend is positive
//      and humidity sits below the "low" crossover
//   4. PID otherwise (lamp and fertilizer_doser always land here)
StrategyTable supervisor_select(const SupervisorContext& ctx);

}  // namespace greensim::control
