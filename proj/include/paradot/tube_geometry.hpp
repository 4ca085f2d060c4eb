#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "paradot/point.hpp"

namespace paradot
{
//---------------------------------------------------------------------------//
/*!
 * Hypersurface written in polar form x = r(u) u over a set of unit directions.
 *
 * The domain predicate decides which directions belong to K; the radius bounds
 * are either supplied by the caller or estimated by sampling K.
 */
class PolarSurface
{
  public:
    using RadiusFn = std::function<double(Point const&)>;
    using DomainFn = std::function<bool(Point const&)>;

    //! Estimate the radius bounds by sampling the domain.
    PolarSurface(std::size_t dim, RadiusFn radius, DomainFn domain);

    //! Use known radius bounds.
    PolarSurface(std::size_t dim, RadiusFn radius, DomainFn domain,
                 double r_min, double r_max);

    std::size_t dim() const { return dim_; }
    bool in_domain(Point const& u) const { return domain_(u); }
    double radius(Point const& u) const { return radius_(u); }
    double r_min() const { return r_min_; }
    double r_max() const { return r_max_; }

  private:
    std::size_t dim_;
    RadiusFn radius_;
    DomainFn domain_;
    double r_min_ = 0;
    double r_max_ = 0;

    void validate() const;
};

// Sphere |x - c| = rho with the origin strictly inside.
PolarSurface sphere_around_origin(Point const& center, double radius);

/*!
 * Near half of a sphere that does not contain the origin.
 *
 * Directions within \c margin radians of the tangent cone are excised so the
 * radius function stays smooth up to the boundary.
 */
PolarSurface visible_sphere(Point const& center, double radius, double margin);

// Axis-aligned ellipsoid sum ((x_i - c_i) / s_i)^2 = 1 containing the origin.
PolarSurface axis_ellipsoid(Point const& center, Point const& semi_axes);

//---------------------------------------------------------------------------//
//! Two-sided tube of radius delta about the ray through the origin along e.
struct Tube
{
    Point direction;
    double radius = 0;

    Tube(Point direction, double radius);
};

struct TubeSampleOptions
{
    //! Number of cap directions sampled (at least 1000).
    int resolution = 4096;
    //! Angular cap radius; defaults to 4 delta / r_min.
    std::optional<double> cap_radius;
};

//! Surface points in the tube, from dense sampling of the direction cap about e.
std::vector<Point> tube_intersection(PolarSurface const& surface, Tube const& tube,
                                     TubeSampleOptions const& options = {});

//! max - min of x·e over the sampled intersection; 0 when it is empty.
double intersection_extent(PolarSurface const& surface, Tube const& tube,
                           TubeSampleOptions const& options = {});

//! Number of radius-2 delta balls in a greedy cover of the sampled intersection.
int cover_count(PolarSurface const& surface, Tube const& tube,
                TubeSampleOptions const& options = {});

/*!
 * Greedy cover of a point cloud by balls of radius 2 delta centred at points.
 *
 * Points are swept by their projection on the tube axis; each ball is centred
 * at the furthest point still within 2 delta of the first uncovered one.
 */
int greedy_ball_cover(std::span<Point const> points, Tube const& tube);

//---------------------------------------------------------------------------//
//! Geometry of the tube tangent to a sphere that excludes the origin.
struct TangentCap
{
    //! Unit tangent direction in the plane of the origin and the centre.
    Point direction;
    //! Extent of the sphere-tube intersection along the direction.
    double extent = 0;
    //! Circle parameters (about the centre) where the distance reaches delta.
    double theta_lo = 0;
    double theta_hi = 0;
};

/*!
 * Tangent tube cap, solved by root finding on the planar section.
 *
 * Requires |center| > radius (OriginInside otherwise) and delta < radius / 10.
 */
TangentCap tangent_cap(Point const& center, double radius, double delta);

inline double tangent_cap_extent(Point const& center, double radius, double delta)
{
    return tangent_cap(center, radius, delta).extent;
}

//! Dense samples of the section circle lying inside the tangent tube.
std::vector<Point> tangent_cap_samples(Point const& center, double radius, double delta,
                                       int count);

}  // namespace paradot
