#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace paradot
{
//! Least-squares line y = slope * x + intercept.
struct LineFit
{
    double slope = 0;
    double intercept = 0;
};

// Ordinary least squares; requires at least two distinct abscissae.
LineFit fit_line(std::span<double const> x, std::span<double const> y);

// Least-squares slope of log(y) against log(x).
double log_log_slope(std::span<double const> x, std::span<double const> y);

/*!
 * Correctly rounded sum of doubles (Shewchuk partials).
 *
 * The result does not depend on summation order, so two routes that add the
 * same multiset of terms agree bit for bit.
 */
double exact_sum(std::span<double const> values);

//---------------------------------------------------------------------------//
/*!
 * Seeded generator with portable bounded draws.
 *
 * std::mt19937_64 output is fully specified by the standard but the
 * std::*_distribution adaptors are not, so draws are derived here to keep
 * results bit-identical across standard libraries.
 */
class Rng
{
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    //! Uniform integer in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound);

    //! Uniform double in [0, 1) with 53 random bits.
    double unit();

    //! Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    //! Standard normal via Box-Muller.
    double normal();

  private:
    std::mt19937_64 engine_;
};

// First `count` entries of a seeded Fisher-Yates shuffle of [0, population).
std::vector<std::uint64_t>
sample_without_replacement(Rng& rng, std::uint64_t population, std::uint64_t count);

}  // namespace paradot
