#include "greensim/pipeline.hpp"

#include <algorithm>
#include <cmath>

namespace greensim::pipeline {

void SeriesWindow::validate() const {
    if (values.size() != ticks.size()) {
        fail_validation("series window: values/ticks length mismatch");
    }
    for (std::size_t i = 1; i < ticks.size(); ++i) {
        if (ticks[i] <= ticks[i - 1]) fail_validation("series window: ticks not strictly increasing");
    }
    for (double v : values) {
        if (!std::isfinite(v)) fail_validation("series window: non-finite value");
    }
}

std::size_t OutlierFlags::count() const {
    return static_cast<std::size_t>(std::count(flags.begin(), flags.end(), true));
}

double mean(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

double population_sd(const std::vector<double>& v) {
    const double m = mean(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return std::sqrt(s / static_cast<double>(v.size()));
}

double quantile(std::vector<double> values, double q) {
    std::sort(values.begin(), values.end());
    const double pos = q * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = static_cast<std::size_t>(std::ceil(pos));
    if (lo == hi) return values[lo];
    const double frac = pos - static_cast<double>(lo);
    return values[lo] + frac * (values[hi] - values[lo]);
}

OutlierFlags detect_outliers_zscore(const SeriesWindow& w, double threshold) {
    w.validate();
    if (w.size() < 2) fail_validation("z-score detection needs a window of at least 2 points");
    if (!(threshold > 0.0)) fail_validation("z-score threshold must be > 0");

    OutlierFlags out;
    out.method = OutlierMethod::zscore;
    out.threshold_used = threshold;
    out.flags.assign(w.size(), false);

    const double m = mean(w.values);
    const double sd = population_sd(w.values);
    if (sd == 0.0) return out;  // constant window: zero deviations everywhere

    for (std::size_t i = 0; i < w.size(); ++i) {
        out.flags[i] = std::abs((w.values[i] - m) / sd) > threshold;
    }
    return out;
}

OutlierFlags detect_outliers_iqr(const SeriesWindow& w) {
    w.validate();
    if (w.size() < 4) fail_validation("IQR detection needs a window of at least 4 points");

    const double q1 = quantile(w.values, 0.25);
    const double q3 = quantile(w.values, 0.75);
    const double iqr = q3 - q1;
    const double ul = q3 + 1.5 * iqr;
    const double ll = q1 - 1.5 * iqr;

    OutlierFlags out;
    out.method = OutlierMethod::iqr;
    out.threshold_used = 1.5;
    out.flags.assign(w.size(), false);
    for (std::size_t i = 0; i < w.size(); ++i) {
        out.flags[i] = w.values[i] > ul || w.values[i] < ll;
    }
    return out;
}

SeriesWindow repair(const SeriesWindow& w, const OutlierFlags& flags, RepairPolicy policy) {
    w.validate();
    if (flags.flags.size() != w.size()) fail_validation("repair: flags not aligned to window");

    const std::size_t n = w.size();
    if (static_cast<std::size_t>(std::count(flags.flags.begin(), flags.flags.end(), true)) == n) {
        fail_validation("repair: all points flagged, nothing to anchor repair");
    }

    if (policy == RepairPolicy::drop) {
        SeriesWindow out;
        out.channel = w.channel;
        for (std::size_t i = 0; i < n; ++i) {
            if (!flags.flags[i]) {
                out.values.push_back(w.values[i]);
                out.ticks.push_back(w.ticks[i]);
            }
        }
        return out;
    }

    SeriesWindow out = w;
    if (policy == RepairPolicy::hold_last) {
        // leading flagged run backfills from the first unflagged point
        std::size_t first_ok = 0;
        while (flags.flags[first_ok]) ++first_ok;
        double last = w.values[first_ok];
        for (std::size_t i = 0; i < n; ++i) {
            if (flags.flags[i]) {
                out.values[i] = last;
            } else {
                last = w.values[i];
            }
        }
        return out;
    }

    // interpolate
    for (std::size_t i = 0; i < n;) {
        if (!flags.flags[i]) {
            ++i;
            continue;
        }
        std::size_t run_end = i;  // [i, run_end] flagged
        while (run_end + 1 < n && flags.flags[run_end + 1]) ++run_end;

        const bool has_left = i > 0;
        const bool has_right = run_end + 1 < n;
        if (has_left && has_right) {
            const std::size_t l = i - 1;
            const std::size_t r = run_end + 1;
            const double t0 = static_cast<double>(w.ticks[l]);
            const double t1 = static_cast<double>(w.ticks[r]);
            for (std::size_t k = i; k <= run_end; ++k) {
                const double frac = (static_cast<double>(w.ticks[k]) - t0) / (t1 - t0);
                out.values[k] = w.values[l] + frac * (w.values[r] - w.values[l]);
            }
        } else {
            // boundary run: nearest unflagged value
            const double anchor = has_left ? w.values[i - 1] : w.values[run_end + 1];
            for (std::size_t k = i; k <= run_end; ++k) out.values[k] = anchor;
        }
        i = run_end + 1;
    }
    return out;
}

void NormParams::validate() const {
    if (!std::isfinite(a) || !std::isfinite(b)) fail_validation("normalization params must be finite");
    if (kind == NormKind::minmax && !(b > a)) fail_validation("min-max params require max > min");
    if (kind == NormKind::zscore && !(b > 0.0)) fail_validation("z-score params require sigma > 0");
}

NormParams fit_norm(const SeriesWindow& w, NormKind kind) {
    w.validate();
    if (w.size() < 2) fail_validation("normalization fit needs a window of at least 2 points");

    NormParams p;
    p.kind = kind;
    if (kind == NormKind::minmax) {
        const auto [mn, mx] = std::minmax_element(w.values.begin(), w.values.end());
        if (!(*mx > *mn)) {
            fail_validation("degenerate statistics: constant window, min-max undefined");
        }
        p.a = *mn;
        p.b = *mx;
    } else {
        const double m = mean(w.values);
        const double sd = population_sd(w.values);
        if (!(sd > 0.0)) {
            fail_validation("degenerate statistics: constant window, z-score undefined");
        }
        p.a = m;
        p.b = sd;
    }
    return p;
}

double apply_norm(double x, const NormParams& p) {
    p.validate();
    if (p.kind == NormKind::minmax) return (x - p.a) / (p.b - p.a);
    return (x - p.a) / p.b;
}

double invert_norm(double y, const NormParams& p) {
    p.validate();
    if (p.kind == NormKind::minmax) return p.a + y * (p.b - p.a);
    return p.a + y * p.b;
}

}  // namespace greensim::pipeline
