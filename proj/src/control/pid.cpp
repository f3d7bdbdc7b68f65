#include "greensim/control/pid.hpp"

#include <algorithm>
#include <cmath>

namespace greensim::control {

void PidState::validate() const {
    if (!std::isfinite(kp) || !std::isfinite(ki) || !std::isfinite(kd)) {
        fail_validation("PID gains must be finite");
    }
    if (!(output_lo < output_hi)) fail_validation("PID output limits require lo < hi");
    if (!(integral_lo < integral_hi)) fail_validation("PID integral limits require lo < hi");
}

PidResult pid_step(const PidState& s, double setpoint, double measured, double dt_seconds) {
    s.validate();
    if (!(dt_seconds > 0.0)) fail_validation("PID dt must be > 0");

    const double e = setpoint - measured;
    const double derivative = s.has_prev_error ? (e - s.prev_error) / dt_seconds : 0.0;

    double integral = std::clamp(s.integral + e * dt_seconds, s.integral_lo, s.integral_hi);
    double raw = s.kp * e + s.ki * integral + s.kd * derivative;

    const bool pushing_high = raw > s.output_hi && e > 0.0;
    const bool pushing_low = raw < s.output_lo && e < 0.0;
    if (pushing_high || pushing_low) {
        integral = s.integral;  // anti-windup: hold the integral
        raw = s.kp * e + s.ki * integral + s.kd * derivative;
    }

    PidResult out;
    out.command = std::clamp(raw, s.output_lo, s.output_hi);
    out.state = s;
    out.state.integral = integral;
    out.state.prev_error = e;
    out.state.has_prev_error = true;
    return out;
}

}  // namespace greensim::control
