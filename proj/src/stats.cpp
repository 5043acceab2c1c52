#include "qbank/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qbank {

CorrelationDraw draw_correlation_params(RngStream& stream) {
    CorrelationDraw d;
    const double magnitude = stream.uniform(0.5, 0.8);
    d.population_r = stream.coin_flip() ? magnitude : -magnitude;
    d.sample_size = static_cast<int>(stream.uniform_int(50, 200));
    return d;
}

SampleXY sample_bivariate_normal(const CorrelationDraw& d, RngStream& stream) {
    SampleXY s;
    s.x.reserve(static_cast<std::size_t>(d.sample_size));
    s.y.reserve(static_cast<std::size_t>(d.sample_size));
    const double r = d.population_r;
    const double residual_scale = std::sqrt(1.0 - r * r);
    for (int i = 0; i < d.sample_size; ++i) {
        const double x = stream.normal();
        const double e = stream.normal();
        s.x.push_back(x);
        s.y.push_back(r * x + residual_scale * e);
    }
    return s;
}

double sample_correlation(const SampleXY& s) {
    const std::size_t n = s.size();
    if (n < 2 || s.y.size() != n)
        throw std::invalid_argument("sample_correlation: need at least two pairs");
    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_x += s.x[i];
        mean_y += s.y[i];
    }
    mean_x /= static_cast<double>(n);
    mean_y /= static_cast<double>(n);
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = s.x[i] - mean_x;
        const double dy = s.y[i] - mean_y;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw std::invalid_argument("sample_correlation: zero-variance coordinate");
    const double r = sxy / std::sqrt(sxx * syy);
    return std::clamp(r, -1.0, 1.0);
}

SampleXY shift_to_first_quadrant(const SampleXY& s) {
    SampleXY out = s;
    if (!out.x.empty()) {
        const double min_x = *std::min_element(out.x.begin(), out.x.end());
        if (min_x < 0.0)
            for (auto& v : out.x) v -= min_x;
    }
    if (!out.y.empty()) {
        const double min_y = *std::min_element(out.y.begin(), out.y.end());
        if (min_y < 0.0)
            for (auto& v : out.y) v -= min_y;
    }
    return out;
}

Rational dice_sum_probability(int target) {
    if (target < 2 || target > 12)
        throw std::invalid_argument("dice_sum_probability: target must be in [2, 12]");
    std::int64_t favorable = 0;
    for (int a = 1; a <= 6; ++a)
        for (int b = 1; b <= 6; ++b)
            if (a + b == target) ++favorable;
    return rational_reduce(favorable, 36);
}

double z_score(double x, double mu, double sigma) {
    if (sigma <= 0.0) throw std::invalid_argument("z_score: sigma must be positive");
    return (x - mu) / sigma;
}

} // namespace qbank
