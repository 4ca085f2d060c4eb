#include "paradot/tube_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>

#include <boost/math/tools/roots.hpp>

#include "paradot/errors.hpp"
#include "paradot/numeric.hpp"

namespace paradot
{
namespace
{
constexpr std::uint64_t kSamplingSeed = 0x7ab3c0ffee;
constexpr int kBoundSamples = 4096;

double norm(Point const& p)
{
    return std::sqrt(squared_norm(p));
}

Point unit_axis(std::size_t dim, std::size_t axis)
{
    Point p(dim);
    p[axis] = 1;
    return p;
}

// Orthonormal basis of the complement of the unit vector e (Gram-Schmidt on
// the coordinate axes, skipping the one most aligned with e).
std::vector<Point> orthonormal_complement(Point const& e)
{
    std::size_t const dim = e.dim();
    std::size_t skip = 0;
    for (std::size_t i = 1; i < dim; ++i)
        if (std::fabs(e[i]) > std::fabs(e[skip]))
            skip = i;

    std::vector<Point> basis{e};
    for (std::size_t i = 0; i < dim; ++i)
    {
        if (i == skip)
            continue;
        Point v = unit_axis(dim, i);
        for (auto const& b : basis)
            v -= dot(v, b) * b;
        v *= 1 / norm(v);
        basis.push_back(std::move(v));
    }
    basis.erase(basis.begin());
    return basis;
}

Point random_unit(Rng& rng, std::size_t dim)
{
    Point p(dim);
    double n = 0;
    while (!(n > 1e-12))
    {
        for (auto& c : p)
            c = rng.normal();
        n = norm(p);
    }
    p *= 1 / n;
    return p;
}

// Directions spread over the whole sphere, for radius bound estimates.
std::vector<Point> sphere_directions(std::size_t dim)
{
    std::vector<Point> out;
    if (dim == 2)
    {
        for (int k = 0; k < kBoundSamples; ++k)
        {
            double const phi = 2 * std::numbers::pi * k / kBoundSamples;
            out.push_back(Point{std::cos(phi), std::sin(phi)});
        }
        return out;
    }
    for (std::size_t i = 0; i < dim; ++i)
    {
        out.push_back(unit_axis(dim, i));
        out.push_back(-1.0 * unit_axis(dim, i));
    }
    Rng rng(kSamplingSeed);
    for (int k = 0; k < kBoundSamples; ++k)
        out.push_back(random_unit(rng, dim));
    return out;
}

// Unit directions within angle cap of e.
std::vector<Point> cap_directions(Point const& e, double cap, int resolution)
{
    std::size_t const dim = e.dim();
    auto const basis = orthonormal_complement(e);
    auto direction = [&](double theta, Point const& v) {
        return std::cos(theta) * e + std::sin(theta) * v;
    };

    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(resolution) + 1);
    if (dim == 2)
    {
        for (int k = 0; k < resolution; ++k)
        {
            double const theta = -cap + 2 * cap * k / (resolution - 1);
            out.push_back(direction(theta, basis[0]));
        }
    }
    else if (dim == 3)
    {
        int const rings = static_cast<int>(std::ceil(std::sqrt(resolution)));
        int const azimuths = (resolution + rings - 1) / rings;
        out.push_back(e);
        for (int i = 1; i < rings; ++i)
        {
            double const theta = cap * i / (rings - 1);
            for (int j = 0; j < azimuths; ++j)
            {
                double const phi = 2 * std::numbers::pi * j / azimuths;
                Point v = std::cos(phi) * basis[0] + std::sin(phi) * basis[1];
                out.push_back(direction(theta, v));
            }
        }
    }
    else
    {
        Rng rng(kSamplingSeed);
        out.push_back(e);
        for (int k = 1; k < resolution; ++k)
        {
            double const theta = cap * rng.unit();
            Point v(dim);
            Point const w = random_unit(rng, dim - 1);
            for (std::size_t i = 0; i + 1 < dim; ++i)
                v += w[i] * basis[i];
            out.push_back(direction(theta, v));
        }
    }
    return out;
}

double perp_distance(Point const& x, Point const& e)
{
    Point const perp = x - dot(x, e) * e;
    return norm(perp);
}
}  // namespace

//---------------------------------------------------------------------------//
PolarSurface::PolarSurface(std::size_t dim, RadiusFn radius, DomainFn domain)
    : dim_(dim), radius_(std::move(radius)), domain_(std::move(domain))
{
    if (dim_ < 2)
        throw InvalidArgument("polar surface needs dimension >= 2");
    double lo = INFINITY, hi = 0;
    for (auto const& u : sphere_directions(dim_))
    {
        if (!domain_(u))
            continue;
        double const r = radius_(u);
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    if (hi == 0)
        throw EmptyDomain("no sampled direction lies in the surface domain");
    r_min_ = lo;
    r_max_ = hi;
    this->validate();
}

PolarSurface::PolarSurface(std::size_t dim, RadiusFn radius, DomainFn domain,
                           double r_min, double r_max)
    : dim_(dim)
    , radius_(std::move(radius))
    , domain_(std::move(domain))
    , r_min_(r_min)
    , r_max_(r_max)
{
    if (dim_ < 2)
        throw InvalidArgument("polar surface needs dimension >= 2");
    this->validate();
}

void PolarSurface::validate() const
{
    if (!(r_min_ > 0) || !(r_max_ >= r_min_) || !std::isfinite(r_max_))
        throw InvalidArgument("radius function must be positive and bounded");
}

PolarSurface sphere_around_origin(Point const& center, double radius)
{
    double const dist = norm(center);
    if (!(radius > dist))
        throw InvalidArgument("origin must lie strictly inside the sphere");
    double const gap = radius * radius - dist * dist;
    auto r = [center, gap](Point const& u) {
        double const b = dot(u, center);
        return b + std::sqrt(b * b + gap);
    };
    return PolarSurface(
        center.dim(), r, [](Point const&) { return true; }, radius - dist,
        radius + dist);
}

PolarSurface visible_sphere(Point const& center, double radius, double margin)
{
    double const dist = norm(center);
    if (!(dist > radius))
        throw OriginInside("origin must lie outside the sphere");
    double const beta = std::asin(radius / dist);
    if (!(margin > 0 && margin < beta))
        throw InvalidArgument("margin must lie in (0, half-angle of the tangent cone)");

    Point axis = center;
    axis *= 1 / dist;
    double const cos_limit = std::cos(beta - margin);
    double const power = dist * dist - radius * radius;
    // Near root of r^2 - 2 b r + power = 0, written without cancellation.
    auto r = [center, power](Point const& u) {
        double const b = dot(u, center);
        return power / (b + std::sqrt(std::max(b * b - power, 0.0)));
    };
    auto domain = [axis, cos_limit](Point const& u) { return dot(u, axis) >= cos_limit; };

    double const b_edge = dist * cos_limit;
    double const r_edge = power / (b_edge + std::sqrt(b_edge * b_edge - power));
    return PolarSurface(center.dim(), r, domain, dist - radius, r_edge);
}

PolarSurface axis_ellipsoid(Point const& center, Point const& semi_axes)
{
    if (center.dim() != semi_axes.dim())
        throw DimensionMismatch("centre and semi-axes differ in dimension");
    double c_term = -1;
    for (std::size_t i = 0; i < center.dim(); ++i)
    {
        if (!(semi_axes[i] > 0))
            throw InvalidArgument("semi-axes must be positive");
        c_term += (center[i] / semi_axes[i]) * (center[i] / semi_axes[i]);
    }
    if (!(c_term < 0))
        throw InvalidArgument("origin must lie strictly inside the ellipsoid");

    // A r^2 - 2 B r + C = 0 with C < 0 has exactly one positive root.
    auto r = [center, semi_axes, c_term](Point const& u) {
        double a = 0, b = 0;
        for (std::size_t i = 0; i < u.dim(); ++i)
        {
            double const inv = 1 / (semi_axes[i] * semi_axes[i]);
            a += u[i] * u[i] * inv;
            b += u[i] * center[i] * inv;
        }
        return (b + std::sqrt(b * b - a * c_term)) / a;
    };
    return PolarSurface(center.dim(), r, [](Point const&) { return true; });
}

//---------------------------------------------------------------------------//
Tube::Tube(Point dir, double delta) : direction(std::move(dir)), radius(delta)
{
    if (std::fabs(norm(direction) - 1) > 1e-12)
        throw InvalidArgument("tube direction must be a unit vector");
    if (!(radius > 0))
        throw InvalidArgument("tube radius must be positive");
}

std::vector<Point> tube_intersection(PolarSurface const& surface, Tube const& tube,
                                     TubeSampleOptions const& options)
{
    if (tube.direction.dim() != surface.dim())
        throw DimensionMismatch("tube and surface dimensions differ");
    if (options.resolution < 1000)
        throw InvalidArgument("resolution must be at least 1000");
    double cap = options.cap_radius.value_or(4 * tube.radius / surface.r_min());
    if (!(cap > 0))
        throw InvalidArgument("cap radius must be positive");
    cap = std::min(cap, std::numbers::pi);

    std::vector<Point> hits;
    bool any_in_domain = false;
    for (auto const& u : cap_directions(tube.direction, cap, options.resolution))
    {
        if (!surface.in_domain(u))
            continue;
        any_in_domain = true;
        Point x = u;
        x *= surface.radius(u);
        if (dot(x, tube.direction) > 0 && perp_distance(x, tube.direction) < tube.radius)
            hits.push_back(std::move(x));
    }
    if (!any_in_domain)
        throw EmptyDomain("no cap direction lies in the surface domain");
    return hits;
}

double intersection_extent(PolarSurface const& surface, Tube const& tube,
                           TubeSampleOptions const& options)
{
    auto const hits = tube_intersection(surface, tube, options);
    if (hits.empty())
        return 0;
    double lo = INFINITY, hi = -INFINITY;
    for (auto const& x : hits)
    {
        double const t = dot(x, tube.direction);
        lo = std::min(lo, t);
        hi = std::max(hi, t);
    }
    return hi - lo;
}

int cover_count(PolarSurface const& surface, Tube const& tube,
                TubeSampleOptions const& options)
{
    auto const hits = tube_intersection(surface, tube, options);
    return greedy_ball_cover(hits, tube);
}

int greedy_ball_cover(std::span<Point const> points, Tube const& tube)
{
    std::size_t const n = points.size();
    double const ball = 2 * tube.radius;
    std::vector<double> proj(n);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        proj[i] = dot(points[i], tube.direction);
        order[i] = i;
    }
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return proj[a] < proj[b]; });

    std::vector<bool> covered(n, false);
    int count = 0;
    for (std::size_t k = 0; k < n; ++k)
    {
        std::size_t const first = order[k];
        if (covered[first])
            continue;
        // Push the centre as far forward as the first point allows.
        std::size_t centre = first;
        for (std::size_t m = k + 1; m < n && proj[order[m]] - proj[first] <= ball; ++m)
        {
            if (norm(points[order[m]] - points[first]) <= ball)
                centre = order[m];
        }
        for (std::size_t m = k; m < n && proj[order[m]] - proj[centre] <= ball; ++m)
        {
            if (!covered[order[m]] && norm(points[order[m]] - points[centre]) <= ball)
                covered[order[m]] = true;
        }
        ++count;
    }
    return count;
}

//---------------------------------------------------------------------------//
namespace
{
struct Section
{
    Point u1, u2;
    double dist = 0;
    double beta = 0;

    // Circle point at parameter theta, in (u1, u2) coordinates.
    double px(double theta, double radius) const { return dist + radius * std::cos(theta); }
    double py(double theta, double radius) const { return radius * std::sin(theta); }

    Point embed(double x, double y) const { return x * u1 + y * u2; }
};

Section make_section(Point const& center, double radius, double delta)
{
    if (center.dim() < 2)
        throw InvalidArgument("tangent cap needs dimension >= 2");
    Section s;
    s.dist = norm(center);
    if (!(s.dist > radius))
        throw OriginInside("origin lies inside or on the sphere");
    if (!(delta > 0 && delta < radius / 10))
        throw InvalidArgument("tangent cap requires 0 < delta < radius / 10");
    s.u1 = center;
    s.u1 *= 1 / s.dist;
    s.u2 = orthonormal_complement(s.u1).front();
    s.beta = std::asin(radius / s.dist);
    return s;
}
}  // namespace

TangentCap tangent_cap(Point const& center, double radius, double delta)
{
    Section const s = make_section(center, radius, delta);
    double const ex = std::cos(s.beta), ey = std::sin(s.beta);

    auto gap = [&](double theta) {
        return std::fabs(s.px(theta, radius) * ey - s.py(theta, radius) * ex) - delta;
    };
    auto solve = [&](double lo, double hi) {
        boost::math::tools::eps_tolerance<double> tol(50);
        std::uintmax_t iters = 200;
        auto const bracket = boost::math::tools::toms748_solve(gap, lo, hi, tol, iters);
        return 0.5 * (bracket.first + bracket.second);
    };

    double const theta_t = std::numbers::pi / 2 + s.beta;
    double const half = std::numbers::pi / 2;
    TangentCap cap;
    cap.theta_lo = solve(theta_t - half, theta_t);
    cap.theta_hi = solve(theta_t, theta_t + half);
    cap.direction = s.embed(ex, ey);

    auto proj = [&](double theta) {
        return s.px(theta, radius) * ex + s.py(theta, radius) * ey;
    };
    cap.extent = std::fabs(proj(cap.theta_hi) - proj(cap.theta_lo));
    return cap;
}

std::vector<Point> tangent_cap_samples(Point const& center, double radius, double delta,
                                       int count)
{
    if (count < 2)
        throw InvalidArgument("need at least two samples");
    TangentCap const cap = tangent_cap(center, radius, delta);
    Section const s = make_section(center, radius, delta);
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k)
    {
        double const theta = cap.theta_lo + (cap.theta_hi - cap.theta_lo) * k / (count - 1);
        out.push_back(s.embed(s.px(theta, radius), s.py(theta, radius)));
    }
    return out;
}

}  // namespace paradot
