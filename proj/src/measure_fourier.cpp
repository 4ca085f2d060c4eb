#include "paradot/measure_fourier.hpp"

#include <numbers>

namespace paradot
{
std::complex<double> fourier_at(AtomicMeasure const& mu, Point const& xi)
{
    if (mu.dim() != xi.dim())
        throw DimensionMismatch("measure and frequency differ in dimension");
    std::vector<double> re, im;
    for (std::size_t i = 0; i < mu.size(); ++i)
    {
        double const phase = -2 * std::numbers::pi * dot(mu.point(i), xi);
        double const c = std::cos(phase), s = std::sin(phase);
        for (double w : mu.weight_parts(i))
        {
            re.push_back(w * c);
            im.push_back(w * s);
        }
    }
    return {exact_sum(re), exact_sum(im)};
}

double pushforward_identity_residual(AtomicMeasure const& mu, Point const& y, double t)
{
    auto const nu = pushforward_dot(mu, y);
    Point ty = y;
    ty *= t;
    return std::abs(fourier_at(nu, Point{t}) - fourier_at(mu, ty));
}

}  // namespace paradot
