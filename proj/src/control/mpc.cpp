#include "greensim/control/mpc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace greensim::control {

std::string_view to_string(PredictionSource s) {
    switch (s) {
        case PredictionSource::rnn: return "rnn";
        case PredictionSource::plant_model: return "plant_model";
    }
    fail_runtime("unknown prediction source");
}

std::optional<PredictionSource> prediction_source_from_string(std::string_view name) {
    if (name == "rnn") return PredictionSource::rnn;
    if (name == "plant_model") return PredictionSource::plant_model;
    return std::nullopt;
}

void MpcConfig::validate() const {
    if (horizon < 1) fail_validation("MPC horizon must be >= 1");
    if (candidate_levels.empty()) fail_validation("MPC candidate levels must be non-empty");
    for (double v : candidate_levels) {
        if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
            fail_validation("MPC candidate levels must lie in [0,1]");
        }
    }
    if (!std::isfinite(weight_tracking) || weight_tracking < 0.0 ||
        !std::isfinite(weight_effort) || weight_effort < 0.0) {
        fail_validation("MPC weights must be finite and >= 0");
    }
}

namespace {

struct SearchContext {
    const MpcConfig* cfg;
    const PlanModel* model;
    const std::vector<double>* setpoints;
    std::vector<double> levels;  // ascending
    int actuators = 0;

    double best_cost = std::numeric_limits<double>::infinity();
    bool have_best = false;
    std::vector<std::vector<double>> best_seq;
    std::vector<std::vector<double>> cur_seq;

    // per-actuator mode: only `free_actuator` varies, the rest follow `held`
    int free_actuator = -1;
    const std::vector<std::vector<double>>* held = nullptr;
};

double stage_cost(const SearchContext& ctx, const std::vector<double>& next_state,
                  const std::vector<double>& commands) {
    const auto tracked = ctx.model->tracked(next_state);
    if (tracked.size() != ctx.setpoints->size()) {
        fail_runtime("planner unavailable: model tracked size mismatch");
    }
    double track = 0.0;
    for (std::size_t i = 0; i < tracked.size(); ++i) {
        const double d = tracked[i] - (*ctx.setpoints)[i];
        track += d * d;
    }
    double effort = 0.0;
    for (double u : commands) effort += u * u;
    return ctx.cfg->weight_tracking * track + ctx.cfg->weight_effort * effort;
}

// Depth-first over stages; per stage the actuator-command tuple is enumerated
// in lexicographic order, so the first minimum found is the lexicographically
// smallest one. Costs accumulate left to right, matching a brute-force oracle
// that sums stage costs in sequence order.
void search_stage(SearchContext& ctx, const std::vector<double>& state, int stage,
                  double cost_so_far) {
    if (stage == ctx.cfg->horizon) {
        if (!ctx.have_best || cost_so_far < ctx.best_cost) {
            ctx.best_cost = cost_so_far;
            ctx.best_seq = ctx.cur_seq;
            ctx.have_best = true;
        }
        return;
    }

    std::vector<double> commands(static_cast<std::size_t>(ctx.actuators), 0.0);
    if (ctx.free_actuator >= 0) {
        commands = (*ctx.held)[static_cast<std::size_t>(stage)];
    }

    const auto enumerate = [&](auto&& self, int slot) -> void {
        if (ctx.free_actuator < 0 && slot < ctx.actuators) {
            for (double level : ctx.levels) {
                commands[static_cast<std::size_t>(slot)] = level;
                self(self, slot + 1);
            }
            return;
        }
        if (ctx.free_actuator >= 0 && slot == 0) {
            for (double level : ctx.levels) {
                commands[static_cast<std::size_t>(ctx.free_actuator)] = level;
                self(self, ctx.actuators);
            }
            return;
        }
        // full command tuple chosen for this stage
        const auto next_state = ctx.model->advance(state, commands, stage);
        const double c = cost_so_far + stage_cost(ctx, next_state, commands);
        ctx.cur_seq[static_cast<std::size_t>(stage)] = commands;
        search_stage(ctx, next_state, stage + 1, c);
    };
    enumerate(enumerate, 0);
}

double power_count(std::size_t levels, std::uint64_t exponent, std::uint64_t cap) {
    double n = 1.0;
    for (std::uint64_t i = 0; i < exponent; ++i) {
        n *= static_cast<double>(levels);
        if (n > static_cast<double>(cap)) return n;
    }
    return n;
}

}  // namespace

MpcPlan mpc_plan(const MpcConfig& cfg, const std::vector<double>& initial_state,
                 const std::vector<double>& setpoints, const PlanModel& model,
                 int actuator_count) {
    cfg.validate();
    if (actuator_count < 1) fail_validation("MPC needs at least one actuator");
    for (double v : initial_state) {
        if (!std::isfinite(v)) fail_runtime("planner unavailable: non-finite initial state");
    }

    SearchContext ctx;
    ctx.cfg = &cfg;
    ctx.model = &model;
    ctx.setpoints = &setpoints;
    ctx.levels = cfg.candidate_levels;
    std::sort(ctx.levels.begin(), ctx.levels.end());
    ctx.levels.erase(std::unique(ctx.levels.begin(), ctx.levels.end()), ctx.levels.end());
    ctx.actuators = actuator_count;
    ctx.cur_seq.assign(static_cast<std::size_t>(cfg.horizon),
                       std::vector<double>(static_cast<std::size_t>(actuator_count), 0.0));

    MpcPlan plan;
    const auto run_search = [&]() {
        try {
            search_stage(ctx, initial_state, 0, 0.0);
        } catch (const Error&) {
            throw;
        } catch (const std::exception& e) {
            fail_runtime(std::string("planner unavailable: ") + e.what());
        }
        if (!ctx.have_best || !std::isfinite(ctx.best_cost)) {
            fail_runtime("planner unavailable: no finite-cost plan");
        }
    };

    const double joint =
        power_count(ctx.levels.size(),
                    static_cast<std::uint64_t>(cfg.horizon) *
                        static_cast<std::uint64_t>(actuator_count),
                    cfg.enumeration_budget);
    if (joint <= static_cast<double>(cfg.enumeration_budget)) {
        run_search();
        plan.sequence = ctx.best_seq;
        plan.cost = ctx.best_cost;
    } else {
        // coordinate passes: optimize one actuator at a time against the
        // current best plan for the others
        std::vector<std::vector<double>> held(
            static_cast<std::size_t>(cfg.horizon),
            std::vector<double>(static_cast<std::size_t>(actuator_count), 0.0));
        double cost = std::numeric_limits<double>::infinity();
        for (int pass = 0; pass < 2; ++pass) {
            for (int a = 0; a < actuator_count; ++a) {
                ctx.free_actuator = a;
                ctx.held = &held;
                ctx.have_best = false;
                ctx.best_cost = std::numeric_limits<double>::infinity();
                run_search();
                held = ctx.best_seq;
                cost = ctx.best_cost;
            }
        }
        plan.sequence = held;
        plan.cost = cost;
    }

    plan.first_commands = plan.sequence.front();
    return plan;
}

}  // namespace greensim::control
