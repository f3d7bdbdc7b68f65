#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace greensim {

// Every error raised by the library. `kind` maps 1:1 onto the C API status codes.
class Error : public std::runtime_error {
public:
    enum class Kind { parse, validation, io, runtime };

    Error(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

[[noreturn]] inline void fail_parse(const std::string& msg) { throw Error(Error::Kind::parse, msg); }
[[noreturn]] inline void fail_validation(const std::string& msg) { throw Error(Error::Kind::validation, msg); }
[[noreturn]] inline void fail_io(const std::string& msg) { throw Error(Error::Kind::io, msg); }
[[noreturn]] inline void fail_runtime(const std::string& msg) { throw Error(Error::Kind::runtime, msg); }

// Logical simulation time. One tick is `seconds_per_tick` seconds of modeled
// time (60 s unless the scenario overrides it); the index advances by one per
// simulation step.
struct Tick {
    std::int64_t index = 0;
    double seconds_per_tick = 60.0;

    double seconds() const { return static_cast<double>(index) * seconds_per_tick; }
    Tick next() const { return {index + 1, seconds_per_tick}; }

    bool operator==(const Tick&) const = default;
};

enum class Channel : int {
    air_temp = 0,
    air_humidity,
    soil_temp,
    soil_moisture,
    co2,
    light,
    wind,
    air_pressure,
    soil_ph,
};

inline constexpr int kChannelCount = 9;

inline constexpr std::array<Channel, kChannelCount> kAllChannels = {
    Channel::air_temp,  Channel::air_humidity, Channel::soil_temp,
    Channel::soil_moisture, Channel::co2,      Channel::light,
    Channel::wind,      Channel::air_pressure, Channel::soil_ph,
};

std::string_view to_string(Channel c);
std::optional<Channel> channel_from_string(std::string_view name);

// Hard physical clamp range per channel. The plant never lets a state field
// leave this interval, which is what keeps arbitrarily long runs alive under
// extreme controller output.
struct ChannelLimits {
    double lo;
    double hi;
};

ChannelLimits channel_limits(Channel c);

// Ground-truth greenhouse environment at one tick.
//
// Units: air_temp/soil_temp degC, air_humidity %RH, soil_moisture raw counts
// (the ~3000 scale of the capacitive probe; kept dimensionless), co2 ppm,
// light lux, wind m/s, air_pressure hPa, soil_ph pH.
struct EnvState {
    double air_temp = 18.0;
    double air_humidity = 55.0;
    double soil_temp = 18.0;
    double soil_moisture = 2900.0;
    double co2 = 450.0;
    double light = 5000.0;
    double wind = 0.5;
    double air_pressure = 1013.25;
    double soil_ph = 6.5;

    double get(Channel c) const;
    void set(Channel c, double v);

    bool all_finite() const;
    // true when every field sits inside its physical clamp range
    bool within_limits() const;

    bool operator==(const EnvState&) const = default;
};

// Per-channel scalar table (setpoints, tolerance bands, weights).
struct ChannelMap {
    std::array<double, kChannelCount> values{};

    double get(Channel c) const { return values[static_cast<int>(c)]; }
    void set(Channel c, double v) { values[static_cast<int>(c)] = v; }

    bool operator==(const ChannelMap&) const = default;
};

enum class GrowthStage { seedling, vegetative, fruiting };

std::string_view to_string(GrowthStage s);
std::optional<GrowthStage> growth_stage_from_string(std::string_view name);

// Mapping of the stage enum onto the real-valued growth fraction G used by the
// fertilization model: seedling 0.2, vegetative 0.5, fruiting 0.9.
double growth_fraction(GrowthStage s);

struct CropProfile {
    std::string name = "tomato";
    ChannelMap targets;          // per-channel setpoint, EnvState units
    ChannelMap tolerance_band;   // per-channel half-width, > 0
    GrowthStage growth_stage = GrowthStage::vegetative;
    double water_requirement = 0.5;  // liters/tick
    double nutrient_demand = 1.0;    // dimensionless, >= 0

    double growth_g() const { return growth_fraction(growth_stage); }

    bool operator==(const CropProfile&) const = default;
};

}  // namespace greensim
