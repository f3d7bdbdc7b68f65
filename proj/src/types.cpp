#include "greensim/types.hpp"

namespace greensim {

namespace {

constexpr std::array<std::string_view, kChannelCount> kChannelNames = {
    "air_temp", "air_humidity", "soil_temp", "soil_moisture", "co2",
    "light",    "wind",         "air_pressure", "soil_ph",
};

constexpr std::array<ChannelLimits, kChannelCount> kLimits = {{
    {-40.0, 80.0},      // air_temp
    {0.0, 100.0},       // air_humidity
    {-40.0, 80.0},      // soil_temp
    {0.0, 5000.0},      // soil_moisture
    {0.0, 5000.0},      // co2
    {0.0, 200000.0},    // light
    {0.0, 60.0},        // wind
    {300.0, 1200.0},    // air_pressure
    {0.0, 14.0},        // soil_ph
}};

}  // namespace

std::string_view to_string(Channel c) { return kChannelNames[static_cast<int>(c)]; }

std::optional<Channel> channel_from_string(std::string_view name) {
    for (int i = 0; i < kChannelCount; ++i) {
        if (kChannelNames[i] == name) return static_cast<Channel>(i);
    }
    return std::nullopt;
}

ChannelLimits channel_limits(Channel c) { return kLimits[static_cast<int>(c)]; }

double EnvState::get(Channel c) const {
    switch (c) {
        case Channel::air_temp: return air_temp;
        case Channel::air_humidity: return air_humidity;
        case Channel::soil_temp: return soil_temp;
        case Channel::soil_moisture: return soil_moisture;
        case Channel::co2: return co2;
        case Channel::light: return light;
        case Channel::wind: return wind;
        case Channel::air_pressure: return air_pressure;
        case Channel::soil_ph: return soil_ph;
    }
    fail_runtime("unknown channel");
}

void EnvState::set(Channel c, double v) {
    switch (c) {
        case Channel::air_temp: air_temp = v; return;
        case Channel::air_humidity: air_humidity = v; return;
        case Channel::soil_temp: soil_temp = v; return;
        case Channel::soil_moisture: soil_moisture = v; return;
        case Channel::co2: co2 = v; return;
        case Channel::light: light = v; return;
        case Channel::wind: wind = v; return;
        case Channel::air_pressure: air_pressure = v; return;
        case Channel::soil_ph: soil_ph = v; return;
    }
    fail_runtime("unknown channel");
}

bool EnvState::all_finite() const {
    for (Channel c : kAllChannels) {
        if (!std::isfinite(get(c))) return false;
    }
    return true;
}

bool EnvState::within_limits() const {
    for (Channel c : kAllChannels) {
        const auto lim = channel_limits(c);
        const double v = get(c);
        if (!(v >= lim.lo && v <= lim.hi)) return false;
    }
    return true;
}

std::string_view to_string(GrowthStage s) {
    switch (s) {
        case GrowthStage::seedling: return "seedling";
        case GrowthStage::vegetative: return "vegetative";
        case GrowthStage::fruiting: return "fruiting";
    }
    fail_runtime("unknown growth stage");
}

std::optional<GrowthStage> growth_stage_from_string(std::string_view name) {
    if (name == "seedling") return GrowthStage::seedling;
    if (name == "vegetative") return GrowthStage::vegetative;
    if (name == "fruiting") return GrowthStage::fruiting;
    return std::nullopt;
}

double growth_fraction(GrowthStage s) {
    switch (s) {
        case GrowthStage::seedling: return 0.2;
        case GrowthStage::vegetative: return 0.5;
        case GrowthStage::fruiting: return 0.9;
    }
    fail_runtime("unknown growth stage");
}

}  // namespace greensim
