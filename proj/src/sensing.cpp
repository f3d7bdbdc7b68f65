#include "greensim/sensing.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "greensim/rng.hpp"

namespace greensim::sensing {

namespace {

// Distinct substream per sensor id, keyed off the run seed.
std::uint64_t sensor_key(std::uint64_t seed, std::string_view id) {
    return rng::mix(rng::mix(seed, rng::hash_str("sensor")), rng::hash_str(id));
}

}  // namespace

std::string_view to_string(FaultKind k) {
    switch (k) {
        case FaultKind::stuck: return "stuck";
        case FaultKind::spike: return "spike";
        case FaultKind::dropout: return "dropout";
        case FaultKind::drift: return "drift";
    }
    fail_runtime("unknown fault kind");
}

std::optional<FaultKind> fault_kind_from_string(std::string_view name) {
    if (name == "stuck") return FaultKind::stuck;
    if (name == "spike") return FaultKind::spike;
    if (name == "dropout") return FaultKind::dropout;
    if (name == "drift") return FaultKind::drift;
    return std::nullopt;
}

std::string_view to_string(Quality q) {
    switch (q) {
        case Quality::ok: return "ok";
        case Quality::suspect: return "suspect";
        case Quality::failed: return "failed";
    }
    fail_runtime("unknown quality");
}

void SensorSpec::validate() const {
    if (id.empty()) fail_validation("sensor id must be non-empty");
    if (!std::isfinite(noise_sd) || noise_sd < 0.0) {
        fail_validation("sensor '" + id + "': noise_sd must be finite and >= 0");
    }
    if (!std::isfinite(bias)) fail_validation("sensor '" + id + "': bias must be finite");
    if (!std::isfinite(resolution) || resolution <= 0.0) {
        fail_validation("sensor '" + id + "': resolution must be > 0");
    }
    for (const auto& f : fault_schedule) {
        if (!std::isfinite(f.parameter)) {
            fail_validation("sensor '" + id + "': fault parameter must be finite");
        }
        if (f.end_tick < f.start_tick) {
            fail_validation("sensor '" + id + "': fault window end before start");
        }
    }
}

const FaultWindow* SensorSpec::active_fault(std::int64_t tick) const {
    for (const auto& f : fault_schedule) {
        if (f.active_at(tick)) return &f;
    }
    return nullptr;
}

double quantize(double value, double resolution) {
    const double q = std::round(value / resolution) * resolution;
    if (std::abs(q - value) < resolution * 1e-9) return value;  // already on the grid
    return q;
}

SensorReading sample(const EnvState& truth, const SensorSpec& spec, Tick tick,
                     std::uint64_t seed, std::optional<double> last_good) {
    const std::uint64_t key = sensor_key(seed, spec.id);
    const auto t = static_cast<std::uint64_t>(tick.index);

    const double noise =
        spec.noise_sd > 0.0 ? spec.noise_sd * rng::normal_at(key, t, 0) : 0.0;
    const double clean = quantize(truth.get(spec.channel) + spec.bias + noise, spec.resolution);

    SensorReading r{spec.id, tick.index, spec.channel, clean, Quality::ok};

    const FaultWindow* fault = spec.active_fault(tick.index);
    if (fault == nullptr) return r;

    switch (fault->kind) {
        case FaultKind::stuck:
            r.value = fault->parameter;
            r.quality = Quality::suspect;
            break;
        case FaultKind::spike: {
            const double scale = 1.0 + rng::uniform_at(key, t, 1);
            const double sign = rng::uniform_at(key, t, 2) < 0.5 ? -1.0 : 1.0;
            r.value = clean + sign * fault->parameter * spec.noise_sd * scale;
            r.quality = Quality::suspect;
            break;
        }
        case FaultKind::dropout:
            r.value = last_good.value_or(clean);
            r.quality = Quality::failed;
            break;
        case FaultKind::drift:
            r.value = clean + fault->parameter *
                                  static_cast<double>(tick.index - fault->start_tick);
            r.quality = Quality::suspect;
            break;
    }
    return r;
}

SensorReading VirtualSensor::sample(const EnvState& truth, Tick tick, std::uint64_t seed) {
    SensorReading r = sensing::sample(truth, spec_, tick, seed, last_good_);
    if (r.quality != Quality::failed) last_good_ = r.value;
    return r;
}

std::vector<SensorReading> sensor_suite(const std::vector<SensorSpec>& specs,
                                        const EnvState& truth, Tick tick, std::uint64_t seed) {
    SensorSuite suite(specs);
    return suite.sample_all(truth, tick, seed);
}

SensorSuite::SensorSuite(const std::vector<SensorSpec>& specs) {
    std::set<std::string> seen;
    for (const auto& spec : specs) {
        if (!seen.insert(spec.id).second) {
            fail_validation("duplicate sensor id '" + spec.id + "'");
        }
    }
    std::vector<SensorSpec> sorted = specs;
    std::sort(sorted.begin(), sorted.end(),
              [](const SensorSpec& a, const SensorSpec& b) { return a.id < b.id; });
    sensors_.reserve(sorted.size());
    for (auto& spec : sorted) sensors_.emplace_back(std::move(spec));
}

std::vector<SensorReading> SensorSuite::sample_all(const EnvState& truth, Tick tick,
                                                   std::uint64_t seed) {
    std::vector<SensorReading> out;
    out.reserve(sensors_.size());
    for (auto& s : sensors_) out.push_back(s.sample(truth, tick, seed));
    return out;
}

}  // namespace greensim::sensing
