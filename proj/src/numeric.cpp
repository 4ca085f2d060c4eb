#include "paradot/numeric.hpp"

#include <cmath>
#include <numbers>
#include <unordered_map>

#include "paradot/errors.hpp"

namespace paradot
{
LineFit fit_line(std::span<double const> x, std::span<double const> y)
{
    if (x.size() != y.size())
        throw DimensionMismatch("fit_line: x and y differ in length");
    if (x.size() < 2)
        throw InvalidArgument("fit_line: need at least two points");

    double const n = static_cast<double>(x.size());
    double mean_x = 0, mean_y = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        mean_x += x[i];
        mean_y += y[i];
    }
    mean_x /= n;
    mean_y /= n;

    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        sxx += (x[i] - mean_x) * (x[i] - mean_x);
        sxy += (x[i] - mean_x) * (y[i] - mean_y);
    }
    if (sxx == 0)
        throw InvalidArgument("fit_line: abscissae are all equal");

    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = mean_y - fit.slope * mean_x;
    return fit;
}

double log_log_slope(std::span<double const> x, std::span<double const> y)
{
    std::vector<double> lx, ly;
    lx.reserve(x.size());
    ly.reserve(y.size());
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i)
    {
        if (!(x[i] > 0) || !(y[i] > 0))
            throw InvalidArgument("log_log_slope: values must be positive");
        lx.push_back(std::log(x[i]));
        ly.push_back(std::log(y[i]));
    }
    return fit_line(lx, ly).slope;
}

double exact_sum(std::span<double const> values)
{
    // Shewchuk's algorithm: maintain non-overlapping partials whose exact sum
    // equals the exact sum of the inputs, then round once.
    std::vector<double> partials;
    for (double x : values)
    {
        std::size_t used = 0;
        for (double y : partials)
        {
            if (std::fabs(x) < std::fabs(y))
                std::swap(x, y);
            double const hi = x + y;
            double const lo = y - (hi - x);
            if (lo != 0)
                partials[used++] = lo;
            x = hi;
        }
        partials.resize(used);
        partials.push_back(x);
    }
    if (partials.empty())
        return 0.0;

    // Sum from the top, correcting for half-way cases as in fsum.
    std::size_t n = partials.size();
    double hi = partials[--n];
    double lo = 0;
    while (n > 0)
    {
        double const x = hi;
        double const y = partials[--n];
        hi = x + y;
        lo = y - (hi - x);
        if (lo != 0)
            break;
    }
    if (n > 0 && ((lo < 0 && partials[n - 1] < 0) || (lo > 0 && partials[n - 1] > 0)))
    {
        double const y = lo * 2;
        double const x = hi + y;
        if (y == x - hi)
            hi = x;
    }
    return hi;
}

std::uint64_t Rng::below(std::uint64_t bound)
{
    if (bound == 0)
        throw InvalidArgument("Rng::below: bound must be positive");
    // Reject the incomplete top block so every residue is equally likely.
    std::uint64_t const limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t draw;
    do
    {
        draw = engine_();
    } while (draw >= limit);
    return draw % bound;
}

double Rng::unit()
{
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal()
{
    double u1;
    do
    {
        u1 = unit();
    } while (u1 == 0.0);
    double const u2 = unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<std::uint64_t>
sample_without_replacement(Rng& rng, std::uint64_t population, std::uint64_t count)
{
    if (count > population)
        throw InvalidArgument("sample larger than population");

    // Sparse Fisher-Yates: only displaced slots are stored.
    std::unordered_map<std::uint64_t, std::uint64_t> swapped;
    auto slot = [&](std::uint64_t i) {
        auto it = swapped.find(i);
        return it == swapped.end() ? i : it->second;
    };

    std::vector<std::uint64_t> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i)
    {
        std::uint64_t const j = i + rng.below(population - i);
        std::uint64_t const vi = slot(i);
        std::uint64_t const vj = slot(j);
        out.push_back(vj);
        swapped[j] = vi;
    }
    return out;
}

}  // namespace paradot
