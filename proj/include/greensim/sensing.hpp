#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "greensim/types.hpp"

namespace greensim::sensing {

enum class FaultKind { stuck, spike, dropout, drift };

std::string_view to_string(FaultKind k);
std::optional<FaultKind> fault_kind_from_string(std::string_view name);

// Scheduled fault, active for ticks in [start_tick, end_tick).
struct FaultWindow {
    std::int64_t start_tick = 0;
    std::int64_t end_tick = 0;
    FaultKind kind = FaultKind::stuck;
    double parameter = 0.0;

    bool active_at(std::int64_t tick) const { return tick >= start_tick && tick < end_tick; }
    bool operator==(const FaultWindow&) const = default;
};

struct SensorSpec {
    std::string id;
    Channel channel = Channel::air_temp;
    double noise_sd = 0.0;     // channel units, >= 0
    double bias = 0.0;         // channel units
    double resolution = 0.01;  // quantization step, > 0
    std::vector<FaultWindow> fault_schedule;

    void validate() const;
    const FaultWindow* active_fault(std::int64_t tick) const;
    bool operator==(const SensorSpec&) const = default;
};

enum class Quality { ok, suspect, failed };

std::string_view to_string(Quality q);

struct SensorReading {
    std::string sensor_id;
    std::int64_t tick = 0;
    Channel channel = Channel::air_temp;
    double value = 0.0;
    Quality quality = Quality::ok;

    bool operator==(const SensorReading&) const = default;
};

// Rounds to the nearest multiple of `resolution`. Values already on the grid
// (up to 1e-9*resolution) pass through unchanged so that replayed fixture
// values survive bit-exactly.
double quantize(double value, double resolution);

// One measurement of the ground truth.
//
// Clean path: value = quantize(truth[channel] + bias + noise, resolution)
// with noise ~ N(0, noise_sd) drawn from a counter-based stream keyed by
// (seed, sensor id, tick) - reproducible regardless of call order.
//
// Fault overrides (quality becomes `suspect`, or `failed` for dropout):
//   stuck:   value = parameter
//   spike:   value = clean + sign * parameter * noise_sd * (1 + u), u in [0,1)
//   dropout: quality = failed, value = last good value (or clean if none yet)
//   drift:   value = clean + parameter * ticks_since_fault_start
SensorReading sample(const EnvState& truth, const SensorSpec& spec, Tick tick,
                     std::uint64_t seed,
                     std::optional<double> last_good = std::nullopt);

// Sensor with per-run memory of its last good value (for dropout holds).
class VirtualSensor {
public:
    explicit VirtualSensor(SensorSpec spec) : spec_(std::move(spec)) { spec_.validate(); }

    SensorReading sample(const EnvState& truth, Tick tick, std::uint64_t seed);
    const SensorSpec& spec() const { return spec_; }

private:
    SensorSpec spec_;
    std::optional<double> last_good_;
};

// One reading per spec, order-stable by id. Throws on duplicate ids.
std::vector<SensorReading> sensor_suite(const std::vector<SensorSpec>& specs,
                                        const EnvState& truth, Tick tick, std::uint64_t seed);

// Stateful counterpart used by the simulation loop.
class SensorSuite {
public:
    explicit SensorSuite(const std::vector<SensorSpec>& specs);

    std::vector<SensorReading> sample_all(const EnvState& truth, Tick tick, std::uint64_t seed);
    const std::vector<VirtualSensor>& sensors() const { return sensors_; }

private:
    std::vector<VirtualSensor> sensors_;  // sorted by id
};

}  // namespace greensim::sensing
