#include "greensim/control/supervisor.hpp"

#include <cmath>

namespace greensim::control {

std::string_view to_string(Strategy s) {
    switch (s) {
        case Strategy::pid: return "pid";
        case Strategy::mpc: return "mpc";
        case Strategy::fuzzy: return "fuzzy";
    }
    fail_runtime("unknown strategy");
}

std::optional<Strategy> strategy_from_string(std::string_view name) {
    if (name == "pid") return Strategy::pid;
    if (name == "mpc") return Strategy::mpc;
    if (name == "fuzzy") return Strategy::fuzzy;
    return std::nullopt;
}

void SupervisorContext::validate() const {
    // prediction_mse may be +inf (untrained predictor); NaN is a contract breach
    if (std::isnan(prediction_mse)) fail_validation("supervisor context: prediction_mse is NaN");
    if (!std::isfinite(confidence_mse_max) || !std::isfinite(predicted_temp_trend) ||
        !std::isfinite(humidity) || !std::isfinite(humidity_low_crossover) ||
        !std::isfinite(extreme_error_factor)) {
        fail_validation("supervisor context: non-finite field");
    }
    for (double e : normalized_error) {
        if (std::isnan(e)) fail_validation("supervisor context: channel error is NaN");
    }
}

StrategyTable supervisor_select(const SupervisorContext& ctx) {
    ctx.validate();

    StrategyTable table;
    const bool confident =
        ctx.planner_available && ctx.prediction_mse <= ctx.confidence_mse_max;

    for (plant::Actuator a : plant::kAllActuators) {
        const auto idx = static_cast<std::size_t>(a);
        StrategyChoice choice;

        if (ctx.normalized_error[idx] > ctx.extreme_error_factor) {
            choice.strategy = Strategy::pid;
            choice.rationale = "error out of nominal range; PID fallback";
            table[idx] = choice;
            continue;
        }

        switch (a) {
            case plant::Actuator::heater:
            case plant::Actuator::ventilator:
                if (confident) {
                    choice.strategy = Strategy::mpc;
                    choice.rationale = "prediction confidence within cutoff; planner available";
                } else {
                    choice.strategy = Strategy::pid;
                    choice.rationale = ctx.planner_available
                                           ? "prediction confidence above cutoff"
                                           : "planner unavailable";
                }
                break;
            case plant::Actuator::irrigator:
                if (ctx.have_prediction && ctx.predicted_temp_trend > 0.0 &&
                    ctx.humidity < ctx.humidity_low_crossover) {
                    choice.strategy = Strategy::fuzzy;
                    choice.rationale = "predicted temperature rising and humidity low";
                } else {
                    choice.strategy = Strategy::pid;
                    choice.rationale = "fuzzy rule conditions not met";
                }
                break;
            case plant::Actuator::fertilizer_doser:
                choice.strategy = Strategy::pid;
                choice.rationale = "fertilization schedule (growth-stage model feedforward)";
                break;
            case plant::Actuator::lamp:
                choice.strategy = Strategy::pid;
                choice.rationale = "light tracking";
                break;
        }
        table[idx] = choice;
    }
    return table;
}

}  // namespace greensim::control
