#pragma once

#include <map>
#include <optional>

namespace diffscope::scaling {

struct PowerLawFit {
    double gamma = 0.0;      // -slope of the log-log regression
    double log_alpha = 0.0;  // intercept (natural log)
    double r2 = 0.0;
    int k_min = 1;
    int points_used = 0;
};

/// OLS on (log k, log p_k) over degrees k >= k_min with nonzero counts;
/// k = 0 is always excluded. p_k is normalized over k >= 1. Returns nullopt
/// with fewer than 3 usable points or zero variance in log k.
std::optional<PowerLawFit> fit_power_law(const std::map<int, int>& degree_hist, int k_min);

}  // namespace diffscope::scaling
