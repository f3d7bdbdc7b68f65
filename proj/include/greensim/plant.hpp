#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "greensim/types.hpp"

namespace greensim::plant {

enum class Actuator : int {
    heater = 0,
    ventilator,
    irrigator,
    fertilizer_doser,
    lamp,
};

inline constexpr int kActuatorCount = 5;

inline constexpr std::array<Actuator, kActuatorCount> kAllActuators = {
    Actuator::heater, Actuator::ventilator, Actuator::irrigator,
    Actuator::fertilizer_doser, Actuator::lamp,
};

std::string_view to_string(Actuator a);
std::optional<Actuator> actuator_from_string(std::string_view name);

struct ActuatorCommand {
    Actuator actuator = Actuator::heater;
    double magnitude = 0.0;  // clamped to [0,1]
    std::int64_t tick = 0;

    bool operator==(const ActuatorCommand&) const = default;
};

// Effect magnitude per unit command, one scalar per actuator.
struct ActuatorGains {
    double heater = 0.25;        // degC added per tick at u=1 (before thermal inertia)
    double ventilator = 0.20;    // fraction of indoor/outdoor gap exchanged per tick at u=1
    double irrigator = 12.0;     // soil-moisture counts per tick at u=1
    double fertilizer_doser = 1.0;  // pH depression scale, paired with ph_fert_effect
    double lamp = 8000.0;        // lux added per tick at u=1

    bool operator==(const ActuatorGains&) const = default;
};

// Coefficients of the first-order linear mixing dynamics.
//
// Per-channel update laws (u_* are command magnitudes in [0,1], all
// coefficients non-negative, every result clamped to channel_limits):
//
//   air_temp'     = T + (g_heat*u_heat - g_vent*u_vent*(T - T_out)
//                        - envelope_loss_coeff*(T - T_out)) / thermal_inertia
//   air_humidity' = H + irrigation_humidity_ratio*g_irr*u_irr
//                     - (g_vent*u_vent + humidity_decay)*(H - ambient_humidity)
//   soil_temp'    = S + soil_couple*(air_temp - S)
//   soil_moisture'= M + g_irr*u_irr - moisture_evap
//   co2'          = C + (g_vent*u_vent + co2_leak)*(ambient_co2 - C)
//                     - co2_consumption_rate
//   light'        = L + light_coupling*(light_transmittance*L_out - L) + g_lamp*u_lamp
//   wind'         = W + wind_coupling*(W_out - W)
//   air_pressure' = P + pressure_coupling*(P_out - P)
//   soil_ph'      = pH + ph_recovery*(ph_neutral - pH) - ph_fert_effect*g_doser*u_doser
//
// With all coupling/loss/decay coefficients at zero and zero commands the
// state is a fixed point of the update.
struct PlantParams {
    double thermal_inertia = 20.0;       // ticks, >= 1
    double envelope_loss_coeff = 0.08;   // per tick, indoor->outdoor heat leak
    double humidity_decay = 0.02;        // per tick, drift toward ambient_humidity
    double co2_consumption_rate = 0.4;   // ppm per tick consumed by the crop
    double co2_leak = 0.004;             // per tick, drift toward ambient_co2
    double ambient_humidity = 40.0;      // %RH outside-air equivalent
    double ambient_co2 = 420.0;          // ppm outside air
    double soil_couple = 0.02;           // per tick, soil temp approach to air temp
    double moisture_evap = 1.5;          // counts per tick evaporation/uptake
    double irrigation_humidity_ratio = 0.05;  // %RH per soil-moisture count irrigated
    double light_transmittance = 0.7;    // envelope optical factor
    double light_coupling = 1.0;         // per tick, approach to transmitted light
    double wind_coupling = 0.5;          // per tick, approach to outdoor wind
    double pressure_coupling = 1.0;      // per tick, approach to outdoor pressure
    double ph_recovery = 0.001;          // per tick, approach to ph_neutral
    double ph_neutral = 6.8;
    double ph_fert_effect = 0.02;        // pH per unit doser command (acidifying)
    ActuatorGains gains;

    void validate() const;  // throws Error(validation)
    bool operator==(const PlantParams&) const = default;
};

struct WeatherSample {
    double outdoor_temp = 15.0;   // degC
    double outdoor_light = 10000.0;  // lux
    double wind = 2.0;            // m/s, >= 0
    double pressure = 1013.25;    // hPa

    bool all_finite() const;
    bool operator==(const WeatherSample&) const = default;
};

// Advances the ground truth by one tick. Pure function: identical inputs give
// identical outputs, and the result always satisfies the EnvState invariants.
EnvState step(const EnvState& state, const std::vector<ActuatorCommand>& commands,
              const WeatherSample& weather, const PlantParams& params);

enum class WeatherProfile { constant, diurnal, heatwave };

std::string_view to_string(WeatherProfile p);
std::optional<WeatherProfile> weather_profile_from_string(std::string_view id);

// Deterministic exogenous weather. `constant` is a fixed documented sample;
// `diurnal` is sinusoidal with a 24 h period; `heatwave` is the diurnal track
// plus a +8 degC offset between 24 h and 48 h of simulated time. The seed is
// accepted for interface stability but the shipped profiles are closed-form.
WeatherSample weather_profile(WeatherProfile id, Tick tick, std::uint64_t seed);
WeatherSample weather_profile(std::string_view id, Tick tick, std::uint64_t seed);

// Documented constants of the shipped profiles.
namespace weather_constants {
inline constexpr double kConstantTemp = 15.0;
inline constexpr double kConstantLight = 10000.0;
inline constexpr double kConstantWind = 2.0;
inline constexpr double kConstantPressure = 1013.25;
inline constexpr double kDiurnalMeanTemp = 15.0;
inline constexpr double kDiurnalTempAmplitude = 5.0;
inline constexpr double kDiurnalPeakLux = 50000.0;
inline constexpr double kHeatwaveOffset = 8.0;
inline constexpr double kHeatwaveStartSeconds = 86400.0;   // 24 h
inline constexpr double kHeatwaveEndSeconds = 172800.0;    // 48 h
}  // namespace weather_constants

}  // namespace greensim::plant
