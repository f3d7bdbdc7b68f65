#include "greensim/plant.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace greensim::plant {

namespace {

constexpr std::array<std::string_view, kActuatorCount> kActuatorNames = {
    "heater", "ventilator", "irrigator", "fertilizer_doser", "lamp",
};

double clamp_channel(Channel c, double v) {
    const auto lim = channel_limits(c);
    return std::clamp(v, lim.lo, lim.hi);
}

void check_coeff(double v, std::string_view name) {
    if (!std::isfinite(v) || v < 0.0) {
        fail_validation("plant parameter '" + std::string(name) + "' must be finite and >= 0");
    }
}

}  // namespace

std::string_view to_string(Actuator a) { return kActuatorNames[static_cast<int>(a)]; }

std::optional<Actuator> actuator_from_string(std::string_view name) {
    for (int i = 0; i < kActuatorCount; ++i) {
        if (kActuatorNames[i] == name) return static_cast<Actuator>(i);
    }
    return std::nullopt;
}

void PlantParams::validate() const {
    if (!std::isfinite(thermal_inertia) || thermal_inertia < 1.0) {
        fail_validation("plant parameter 'thermal_inertia' must be >= 1");
    }
    check_coeff(envelope_loss_coeff, "envelope_loss_coeff");
    check_coeff(humidity_decay, "humidity_decay");
    check_coeff(co2_consumption_rate, "co2_consumption_rate");
    check_coeff(co2_leak, "co2_leak");
    check_coeff(ambient_humidity, "ambient_humidity");
    check_coeff(ambient_co2, "ambient_co2");
    check_coeff(soil_couple, "soil_couple");
    check_coeff(moisture_evap, "moisture_evap");
    check_coeff(irrigation_humidity_ratio, "irrigation_humidity_ratio");
    check_coeff(light_transmittance, "light_transmittance");
    check_coeff(light_coupling, "light_coupling");
    check_coeff(wind_coupling, "wind_coupling");
    check_coeff(pressure_coupling, "pressure_coupling");
    check_coeff(ph_recovery, "ph_recovery");
    check_coeff(ph_neutral, "ph_neutral");
    check_coeff(ph_fert_effect, "ph_fert_effect");
    check_coeff(gains.heater, "gains.heater");
    check_coeff(gains.ventilator, "gains.ventilator");
    check_coeff(gains.irrigator, "gains.irrigator");
    check_coeff(gains.fertilizer_doser, "gains.fertilizer_doser");
    check_coeff(gains.lamp, "gains.lamp");
}

bool WeatherSample::all_finite() const {
    return std::isfinite(outdoor_temp) && std::isfinite(outdoor_light) &&
           std::isfinite(wind) && std::isfinite(pressure) && wind >= 0.0;
}

EnvState step(const EnvState& state, const std::vector<ActuatorCommand>& commands,
              const WeatherSample& weather, const PlantParams& params) {
    std::array<double, kActuatorCount> u{};
    for (const auto& cmd : commands) {
        u[static_cast<int>(cmd.actuator)] = std::clamp(cmd.magnitude, 0.0, 1.0);
    }
    const double u_heat = u[static_cast<int>(Actuator::heater)];
    const double u_vent = u[static_cast<int>(Actuator::ventilator)];
    const double u_irr = u[static_cast<int>(Actuator::irrigator)];
    const double u_doser = u[static_cast<int>(Actuator::fertilizer_doser)];
    const double u_lamp = u[static_cast<int>(Actuator::lamp)];
    const ActuatorGains& g = params.gains;

    EnvState next = state;

    const double temp_gap = state.air_temp - weather.outdoor_temp;
    next.air_temp = state.air_temp +
                    (g.heater * u_heat - g.ventilator * u_vent * temp_gap -
                     params.envelope_loss_coeff * temp_gap) /
                        params.thermal_inertia;

    const double hum_gap = state.air_humidity - params.ambient_humidity;
    next.air_humidity = state.air_humidity +
                        params.irrigation_humidity_ratio * g.irrigator * u_irr -
                        (g.ventilator * u_vent + params.humidity_decay) * hum_gap;

    next.soil_temp = state.soil_temp + params.soil_couple * (state.air_temp - state.soil_temp);

    next.soil_moisture = state.soil_moisture + g.irrigator * u_irr - params.moisture_evap;

    next.co2 = state.co2 +
               (g.ventilator * u_vent + params.co2_leak) * (params.ambient_co2 - state.co2) -
               params.co2_consumption_rate;

    next.light = state.light +
                 params.light_coupling *
                     (params.light_transmittance * weather.outdoor_light - state.light) +
                 g.lamp * u_lamp;

    next.wind = state.wind + params.wind_coupling * (weather.wind - state.wind);

    next.air_pressure =
        state.air_pressure + params.pressure_coupling * (weather.pressure - state.air_pressure);

    next.soil_ph = state.soil_ph + params.ph_recovery * (params.ph_neutral - state.soil_ph) -
                   params.ph_fert_effect * g.fertilizer_doser * u_doser;

    for (Channel c : kAllChannels) {
        next.set(c, clamp_channel(c, next.get(c)));
    }
    return next;
}

std::string_view to_string(WeatherProfile p) {
    switch (p) {
        case WeatherProfile::constant: return "constant";
        case WeatherProfile::diurnal: return "diurnal";
        case WeatherProfile::heatwave: return "heatwave";
    }
    fail_runtime("unknown weather profile");
}

std::optional<WeatherProfile> weather_profile_from_string(std::string_view id) {
    if (id == "constant") return WeatherProfile::constant;
    if (id == "diurnal") return WeatherProfile::diurnal;
    if (id == "heatwave") return WeatherProfile::heatwave;
    return std::nullopt;
}

WeatherSample weather_profile(WeatherProfile id, Tick tick, std::uint64_t seed) {
    namespace wc = weather_constants;
    (void)seed;  // shipped profiles are closed-form

    if (id == WeatherProfile::constant) {
        return {wc::kConstantTemp, wc::kConstantLight, wc::kConstantWind, wc::kConstantPressure};
    }

    const double seconds = tick.seconds();
    const double day_fraction =
        (seconds - std::floor(seconds / 86400.0) * 86400.0) / 86400.0;  // [0,1)
    const double hour = day_fraction * 24.0;

    WeatherSample s;
    // warmest at 15:00, coldest at 03:00
    s.outdoor_temp = wc::kDiurnalMeanTemp +
                     wc::kDiurnalTempAmplitude *
                         std::sin(2.0 * std::numbers::pi * (hour - 9.0) / 24.0);
    // daylight between 06:00 and 18:00, peak at noon
    s.outdoor_light = (hour >= 6.0 && hour <= 18.0)
                          ? wc::kDiurnalPeakLux * std::sin(std::numbers::pi * (hour - 6.0) / 12.0)
                          : 0.0;
    s.wind = 2.0 + 1.5 * std::sin(2.0 * std::numbers::pi * hour / 24.0);
    s.pressure = wc::kConstantPressure;

    if (id == WeatherProfile::heatwave && seconds >= wc::kHeatwaveStartSeconds &&
        seconds < wc::kHeatwaveEndSeconds) {
        s.outdoor_temp += wc::kHeatwaveOffset;
    }
    return s;
}

WeatherSample weather_profile(std::string_view id, Tick tick, std::uint64_t seed) {
    const auto p = weather_profile_from_string(id);
    if (!p) fail_validation("unknown weather profile '" + std::string(id) + "'");
    return weather_profile(*p, tick, seed);
}

}  // namespace greensim::plant
