#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <type_traits>
#include <vector>

#include "paradot/errors.hpp"
#include "paradot/numeric.hpp"
#include "paradot/point.hpp"

namespace paradot
{
//! Projected values closer than this merge into one atom (float mode).
inline constexpr double kMergeTolerance = 1e-12;

/*!
 * Finite probability measure sum w_i delta_{x_i}.
 *
 * Each atom keeps the individual weights that were merged into it so that
 * sums over the measure see the same terms before and after a push-forward.
 */
template<class T>
class BasicAtomicMeasure
{
  public:
    BasicAtomicMeasure() = default;

    //! Validate nonnegative weights with unit total mass (1e-12 in float mode).
    BasicAtomicMeasure(std::vector<BasicPoint<T>> points, std::vector<T> weights)
    {
        if (points.size() != weights.size())
            throw DimensionMismatch("points and weights differ in length");
        if (points.empty())
            throw InvalidArgument("measure needs at least one atom");
        for (std::size_t i = 0; i < points.size(); ++i)
        {
            if (weights[i] < 0)
                throw InvalidArgument("weights must be nonnegative");
            this->add_atom(std::move(points[i]), {weights[i]});
        }
        T const mass = this->total_mass();
        bool ok;
        if constexpr (std::is_floating_point_v<T>)
            ok = std::fabs(mass - 1) <= 1e-12;
        else
            ok = mass == 1;
        if (!ok)
            throw InvalidArgument("weights must sum to 1");
    }

    std::size_t size() const { return points_.size(); }
    std::size_t dim() const { return points_.empty() ? 0 : points_.front().dim(); }
    BasicPoint<T> const& point(std::size_t i) const { return points_[i]; }
    std::vector<T> const& weight_parts(std::size_t i) const { return parts_[i]; }

    T weight(std::size_t i) const { return sum(parts_[i]); }

    T total_mass() const
    {
        std::vector<T> all;
        for (auto const& p : parts_)
            all.insert(all.end(), p.begin(), p.end());
        return sum(all);
    }

    //! Append without normalization checks (used when building push-forwards).
    void add_atom(BasicPoint<T> point, std::vector<T> parts)
    {
        if (!points_.empty() && point.dim() != points_.front().dim())
            throw DimensionMismatch("atom dimension differs from the measure");
        points_.push_back(std::move(point));
        parts_.push_back(std::move(parts));
    }

  private:
    std::vector<BasicPoint<T>> points_;
    std::vector<std::vector<T>> parts_;

    static T sum(std::vector<T> const& v)
    {
        if constexpr (std::is_same_v<T, double>)
            return exact_sum(v);
        else
            return std::accumulate(v.begin(), v.end(), T(0));
    }
};

using AtomicMeasure = BasicAtomicMeasure<double>;
using RationalAtomicMeasure = BasicAtomicMeasure<Rational>;

/*!
 * Push-forward under x -> x·y: atoms (x·y, w) on the line.
 *
 * Equal projections merge (exactly in rational mode, within the merge
 * tolerance in float mode, anchored at the smallest value of a run).
 */
template<class T>
BasicAtomicMeasure<T> pushforward_dot(BasicAtomicMeasure<T> const& mu, BasicPoint<T> const& y)
{
    if (mu.dim() != y.dim())
        throw DimensionMismatch("measure and direction differ in dimension");
    std::vector<T> values(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i)
        values[i] = dot(mu.point(i), y);
    std::vector<std::size_t> order(mu.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    BasicAtomicMeasure<T> out;
    std::size_t k = 0;
    while (k < order.size())
    {
        T const anchor = values[order[k]];
        std::vector<T> parts;
        for (; k < order.size(); ++k)
        {
            T const v = values[order[k]];
            bool same;
            if constexpr (std::is_floating_point_v<T>)
                same = v - anchor <= kMergeTolerance;
            else
                same = v == anchor;
            if (!same)
                break;
            auto const& w = mu.weight_parts(order[k]);
            parts.insert(parts.end(), w.begin(), w.end());
        }
        out.add_atom(BasicPoint<T>{anchor}, std::move(parts));
    }
    return out;
}

//! sum w exp(-2 pi i x·xi), with real and imaginary parts summed exactly.
std::complex<double> fourier_at(AtomicMeasure const& mu, Point const& xi);

//! |FT(push-forward)(t) - FT(mu)(t y)|.
double pushforward_identity_residual(AtomicMeasure const& mu, Point const& y, double t);

}  // namespace paradot
