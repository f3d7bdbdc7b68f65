#pragma once

#include "greensim/types.hpp"

namespace greensim::resources {

// Linear demand models. All coefficients are finite and >= 0 (enforced at
// construction) and every output is clamped at zero: the linear forms can go
// negative (indoor colder than outdoor, saturated soil) and negative demand
// is physically meaningless.

struct EnergyModel {
    double k1 = 0.0;  // per degC of indoor-outdoor gap
    double k2 = 0.0;  // per lux
    double k3 = 0.0;  // per m/s

    void validate() const;
    bool operator==(const EnergyModel&) const = default;
};

struct IrrigationModel {
    double k4 = 0.0;  // per soil-moisture count of deficit
    double k5 = 0.0;  // per liter/tick of crop demand

    void validate() const;
    bool operator==(const IrrigationModel&) const = default;
};

struct FertilizationModel {
    double k6 = 0.0;  // per unit growth fraction
    double k7 = 0.0;  // per unit soil nutrient level

    void validate() const;
    bool operator==(const FertilizationModel&) const = default;
};

// max(0, k1*deltaT + k2*light + k3*wind); deltaT = indoor - outdoor.
double energy_demand(const EnergyModel& m, double delta_t, double light, double wind);

// max(0, k4*deltaM + k5*crop_water_req); deltaM = target - current moisture,
// so a dry soil gives a positive deficit.
double irrigation_demand(const IrrigationModel& m, double soil_moisture_deficit,
                         double crop_water_req);

// max(0, k6*G + k7*N), G in [0,1].
double fertilization_rate(const FertilizationModel& m, double growth_stage_g,
                          double soil_nutrient_n);

}  // namespace greensim::resources
