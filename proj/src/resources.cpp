#include "greensim/resources.hpp"

#include <algorithm>
#include <cmath>

namespace greensim::resources {

namespace {

void check(double k, const char* name) {
    if (!std::isfinite(k) || k < 0.0) {
        fail_validation(std::string("resource coefficient '") + name +
                        "' must be finite and >= 0");
    }
}

void check_input(double v, const char* name) {
    if (!std::isfinite(v)) fail_validation(std::string("resource input '") + name + "' not finite");
}

}  // namespace

void EnergyModel::validate() const {
    check(k1, "k1");
    check(k2, "k2");
    check(k3, "k3");
}

void IrrigationModel::validate() const {
    check(k4, "k4");
    check(k5, "k5");
}

void FertilizationModel::validate() const {
    check(k6, "k6");
    check(k7, "k7");
}

double energy_demand(const EnergyModel& m, double delta_t, double light, double wind) {
    m.validate();
    check_input(delta_t, "delta_t");
    check_input(light, "light");
    check_input(wind, "wind");
    return std::max(0.0, m.k1 * delta_t + m.k2 * light + m.k3 * wind);
}

double irrigation_demand(const IrrigationModel& m, double soil_moisture_deficit,
                         double crop_water_req) {
    m.validate();
    check_input(soil_moisture_deficit, "soil_moisture_deficit");
    check_input(crop_water_req, "crop_water_req");
    return std::max(0.0, m.k4 * soil_moisture_deficit + m.k5 * crop_water_req);
}

double fertilization_rate(const FertilizationModel& m, double growth_stage_g,
                          double soil_nutrient_n) {
    m.validate();
    if (!(growth_stage_g >= 0.0 && growth_stage_g <= 1.0)) {
        fail_validation("growth stage G must lie in [0,1]");
    }
    check_input(soil_nutrient_n, "soil_nutrient_n");
    return std::max(0.0, m.k6 * growth_stage_g + m.k7 * soil_nutrient_n);
}

}  // namespace greensim::resources
