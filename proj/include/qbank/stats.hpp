#pragma once

/// Sampling and small statistical oracles behind the question generators:
/// correlated bivariate normal draws, Pearson correlation, exact dice-sum
/// probabilities, and z-scores.

#include <cstdint>
#include <vector>

#include "qbank/rational.hpp"
#include "qbank/rng.hpp"

namespace qbank {

struct SampleXY {
    std::vector<double> x;
    std::vector<double> y;

    std::size_t size() const { return x.size(); }
};

struct CorrelationDraw {
    double population_r = 0.0; // |r| in [0.5, 0.8], sign by coin flip
    int sample_size = 0;       // integer-uniform on [50, 200]
};

CorrelationDraw draw_correlation_params(RngStream& stream);

/// n pairs with population correlation d.population_r, standard normal
/// marginals, built as y = r*x + sqrt(1 - r^2) * e for independent x, e.
SampleXY sample_bivariate_normal(const CorrelationDraw& d, RngStream& stream);

/// Pearson correlation. Throws std::invalid_argument for n < 2 or a
/// zero-variance coordinate.
double sample_correlation(const SampleXY& s);

/// Translates so min(x) >= 0 and min(y) >= 0; correlation is unchanged.
SampleXY shift_to_first_quadrant(const SampleXY& s);

/// Exact probability that two fair dice sum to target, by enumerating all 36
/// ordered outcomes. target must lie in [2, 12].
Rational dice_sum_probability(int target);

/// (x - mu) / sigma; sigma must be positive.
double z_score(double x, double mu, double sigma);

} // namespace qbank
