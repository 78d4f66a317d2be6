#include "diffscope/scaling.hpp"

#include <cmath>
#include <vector>

namespace diffscope::scaling {

std::optional<PowerLawFit> fit_power_law(const std::map<int, int>& degree_hist, int k_min) {
    if (k_min < 1) k_min = 1;

    double total = 0.0;
    for (const auto& [k, count] : degree_hist)
        if (k >= 1 && count > 0) total += count;
    if (total <= 0.0) return std::nullopt;

    std::vector<double> xs, ys;
    for (const auto& [k, count] : degree_hist) {
        if (k < k_min || count <= 0) continue;
        xs.push_back(std::log(static_cast<double>(k)));
        ys.push_back(std::log(static_cast<double>(count) / total));
    }
    if (xs.size() < 3) return std::nullopt;

    size_t npts = xs.size();
    double mean_x = 0.0, mean_y = 0.0;
    for (size_t i = 0; i < npts; ++i) {
        mean_x += xs[i];
        mean_y += ys[i];
    }
    mean_x /= npts;
    mean_y /= npts;

    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (size_t i = 0; i < npts; ++i) {
        double dx = xs[i] - mean_x;
        double dy = ys[i] - mean_y;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) return std::nullopt;

    double slope = sxy / sxx;
    PowerLawFit fit;
    fit.gamma = -slope;
    fit.log_alpha = mean_y - slope * mean_x;
    fit.k_min = k_min;
    fit.points_used = static_cast<int>(npts);
    if (syy == 0.0) {
        fit.r2 = slope == 0.0 ? 0.0 : 1.0;  // flat data, flat fit: r2 = 0 by convention
    } else {
        double ss_res = syy - sxy * sxy / sxx;
        fit.r2 = 1.0 - ss_res / syy;
    }
    return fit;
}

}  // namespace diffscope::scaling
