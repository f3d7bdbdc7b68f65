#pragma once

#include <cstdint>
#include <vector>

#include "greensim/types.hpp"

namespace greensim::pipeline {

// Ordered slice of one channel's series, ticks strictly increasing.
struct SeriesWindow {
    Channel channel = Channel::air_temp;
    std::vector<double> values;
    std::vector<std::int64_t> ticks;

    std::size_t size() const { return values.size(); }
    void validate() const;  // equal lengths, strictly increasing ticks, finite values
};

enum class OutlierMethod { zscore, iqr };

struct OutlierFlags {
    std::vector<bool> flags;
    OutlierMethod method = OutlierMethod::zscore;
    double threshold_used = 0.0;

    std::size_t count() const;
};

// Population (1/n) statistics; the convention used throughout the pipeline.
double mean(const std::vector<double>& v);
double population_sd(const std::vector<double>& v);

// Quartile by linear interpolation between order statistics at position
// q*(n-1), zero-indexed, over a sorted copy.
double quantile(std::vector<double> values, double q);

// flags[i] = |(v_i - mean) / sd| > threshold. A constant window (sd = 0)
// yields all-false flags. Requires size >= 2 and threshold > 0.
OutlierFlags detect_outliers_zscore(const SeriesWindow& w, double threshold);

// Boxplot rule: flag v_i > Q3 + 1.5*IQR or v_i < Q1 - 1.5*IQR. Requires
// size >= 4. threshold_used carries the 1.5 multiplier.
OutlierFlags detect_outliers_iqr(const SeriesWindow& w);

enum class RepairPolicy { interpolate, hold_last, drop };

// interpolate: flagged runs replaced by linear interpolation (in tick time)
// between the nearest unflagged neighbors; boundary runs take the nearest
// unflagged value. hold_last: previous unflagged value (leading runs backfill
// from the first unflagged). drop: flagged points removed, ticks shrink.
// Throws when every point is flagged.
SeriesWindow repair(const SeriesWindow& w, const OutlierFlags& flags, RepairPolicy policy);

enum class NormKind { minmax, zscore };

// minmax: a = x_min, b = x_max (b > a). zscore: a = mu, b = sigma (b > 0).
struct NormParams {
    NormKind kind = NormKind::minmax;
    double a = 0.0;
    double b = 1.0;

    void validate() const;
    bool operator==(const NormParams&) const = default;
};

// Fits on the window; a constant window raises a degenerate-statistics error.
NormParams fit_norm(const SeriesWindow& w, NormKind kind);

// Exact formula application; min-max output is NOT clamped for x outside the
// fit range.
double apply_norm(double x, const NormParams& p);
double invert_norm(double y, const NormParams& p);

}  // namespace greensim::pipeline
