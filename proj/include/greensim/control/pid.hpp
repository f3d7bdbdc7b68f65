#pragma once

#include <utility>

#include "greensim/types.hpp"

namespace greensim::control {

// Classic PID with clamped integral and conditional-integration anti-windup:
// the integral is not accumulated when the raw output is saturated and the
// current error pushes further into saturation.
struct PidState {
    double kp = 0.0;
    double ki = 0.0;
    double kd = 0.0;
    double integral = 0.0;         // accumulated error*seconds
    double prev_error = 0.0;
    bool has_prev_error = false;   // derivative is 0 on the first call
    double output_lo = 0.0;
    double output_hi = 1.0;
    double integral_lo = -1e6;
    double integral_hi = 1e6;

    void validate() const;
    bool operator==(const PidState&) const = default;
};

struct PidResult {
    double command = 0.0;
    PidState state;
};

// e = setpoint - measured; command = clamp(kp*e + ki*integral' + kd*de/dt).
PidResult pid_step(const PidState& s, double setpoint, double measured, double dt_seconds);

}  // namespace greensim::control
