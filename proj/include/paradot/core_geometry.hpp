#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "paradot/errors.hpp"
#include "paradot/point.hpp"

namespace paradot
{
//! Inputs with ||x|^2 + a_d| below this are rejected as singular.
inline constexpr double kSingularEpsilon = 1e-12;

namespace detail
{
template<class T>
bool is_near_zero(T const& value, double eps)
{
    if constexpr (std::is_floating_point_v<T>)
        return !(std::fabs(value) >= eps);
    else
        return value == 0;
}

template<class T>
void require_compatible(BasicPoint<T> const& x_bar,
                        BasicTranslationVector<T> const& a)
{
    if (x_bar.dim() != a.a_bar.dim())
    {
        throw DimensionMismatch("point has dimension "
                                + std::to_string(x_bar.dim())
                                + " but translation expects "
                                + std::to_string(a.a_bar.dim()));
    }
}

template<class T>
T checked_weight(BasicPoint<T> const& x_bar,
                 BasicTranslationVector<T> const& a,
                 double eps)
{
    require_compatible(x_bar, a);
    T w = squared_norm(x_bar) + a.a_d;
    if (is_near_zero(w, eps))
        throw SingularInput("|x|^2 + a_d vanishes: point lies on the singularity");
    return w;
}
}  // namespace detail

//---------------------------------------------------------------------------//
// EXACT FORMULAS (templated on double or Rational)
//---------------------------------------------------------------------------//
/*!
 * Lift x_bar onto the translated paraboloid: (x_bar + a_bar, |x_bar|^2 + a_d).
 */
template<class T>
BasicPoint<T>
lift(BasicPoint<T> const& x_bar, BasicTranslationVector<T> const& a)
{
    detail::require_compatible(x_bar, a);
    std::vector<T> out;
    out.reserve(x_bar.dim() + 1);
    for (std::size_t i = 0; i < x_bar.dim(); ++i)
        out.push_back(x_bar[i] + a.a_bar[i]);
    out.push_back(squared_norm(x_bar) + a.a_d);
    return BasicPoint<T>(std::move(out));
}

/*!
 * Transformation map x_bar -> -(x_bar + a_bar) / (2(|x_bar|^2 + a_d)).
 *
 * Pinned dot products at lift(x_bar) become scaled squared distances pinned
 * at this image point.
 */
template<class T>
BasicPoint<T> transform_map(BasicPoint<T> const& x_bar,
                            BasicTranslationVector<T> const& a,
                            double eps = kSingularEpsilon)
{
    T const w = detail::checked_weight(x_bar, a, eps);
    T const factor = T(-1) / (T(2) * w);
    BasicPoint<T> out = x_bar + a.a_bar;
    out *= factor;
    return out;
}

//! Additive constant h(a, x_bar) left over after completing the square.
template<class T>
T h_offset(BasicPoint<T> const& x_bar,
           BasicTranslationVector<T> const& a,
           double eps = kSingularEpsilon)
{
    T const w = detail::checked_weight(x_bar, a, eps);
    T const xx = squared_norm(x_bar);
    T const shifted = squared_norm(x_bar + a.a_bar);
    return (dot(a.a_bar, x_bar) + squared_norm(a.a_bar) + a.a_d * xx
            + a.a_d * a.a_d)
           - shifted / (T(4) * w);
}

/*!
 * Residual of the dot-product/pinned-distance identity.
 *
 * lift(x)·lift(y) - [(|x|^2 + a_d) |T_a(x) - y|^2 + h(a, x)]; identically
 * zero, so exact arithmetic must return 0.
 */
template<class T>
T identity_residual(BasicPoint<T> const& x_bar,
                    BasicPoint<T> const& y_bar,
                    BasicTranslationVector<T> const& a,
                    double eps = kSingularEpsilon)
{
    T const w = detail::checked_weight(x_bar, a, eps);
    detail::require_compatible(y_bar, a);
    T const lhs = dot(lift(x_bar, a), lift(y_bar, a));
    T const rhs = w * squared_norm(transform_map(x_bar, a, eps) - y_bar)
                  + h_offset(x_bar, a, eps);
    return lhs - rhs;
}

/*!
 * Closed-form Jacobian determinant of the transformation map.
 *
 * 2 (-1 / (2(|x|^2 + a_d)))^d [ sum (x_i + a_i)^2 - |a_bar|^2 - a_d ], where d
 * is the ambient dimension. Vanishes exactly on the degenerate sphere
 * |x_bar + a_bar|^2 = |a_bar|^2 + a_d.
 */
template<class T>
T jacobian_closed(BasicPoint<T> const& x_bar,
                  BasicTranslationVector<T> const& a,
                  double eps = kSingularEpsilon)
{
    T const w = detail::checked_weight(x_bar, a, eps);
    T const z = T(-1) / (T(2) * w);
    T z_pow(1);
    for (std::size_t i = 0; i < a.ambient_dim(); ++i)
        z_pow *= z;
    T const bracket = squared_norm(x_bar + a.a_bar) - a.cylinder_radius_sq();
    return T(2) * z_pow * bracket;
}

//---------------------------------------------------------------------------//
// NUMERICAL ORACLES AND REGION GEOMETRY (double only)
//---------------------------------------------------------------------------//
/*!
 * Determinant of the central-difference Jacobian of the transformation map.
 *
 * Requires | |x|^2 + a_d | >= 10 * step so every stencil point stays off the
 * singularity.
 */
double jacobian_numeric(Point const& x_bar, TranslationVector const& a, double step);

//! Where the origin sits relative to the singular sphere.
enum class OriginPosition
{
    inside,
    on,
    outside,
    no_singularity,
};

char const* to_string(OriginPosition pos);

//! Projection of the singular set: sphere of radius sqrt(-a_d) about a_bar.
struct SingularSphere
{
    Point center;
    double radius = 0;
    //! Distance sqrt(|a_bar|^2 + a_d) from the origin to the tangent part,
    //! present only when the origin is outside the sphere.
    std::optional<double> tangent_radius;
};

/*!
 * Hyperplane containing the degenerate region.
 *
 * y_d = 2(|a_bar|^2 + a_d) - 2 a_bar·y_bar, stored as normal·y = offset with
 * the unnormalized normal (2 a_1, ..., 2 a_{d-1}, 1).
 */
struct DegenerateHyperplane
{
    double cylinder_radius_sq = 0;
    Point hyperplane_normal;
    double hyperplane_offset = 0;
    //! Distance from the origin to the plane: 2c / sqrt(4|a_bar|^2 + 1).
    double canonical_distance = 0;
};

struct RegionReport
{
    std::optional<SingularSphere> singularity;
    OriginPosition origin_position = OriginPosition::no_singularity;
    std::optional<DegenerateHyperplane> degenerate;
    //! Remarks on removable single-point cases (a_d = 0 or c = 0).
    std::vector<std::string> notes;
};

//! Classify the singular and degenerate regions for a + P_d, d >= 3.
RegionReport region_report(TranslationVector const& a, int d);

//! Generic distance from a point to {y : normal·y = offset}.
double distance_to_hyperplane(Point const& normal, double offset, Point const& point);

/*!
 * Point of the degenerate region D above the cylinder direction \c unit_dir.
 *
 * The cylinder point y_bar = sqrt(c) u is lifted as (y_bar, |y_bar - a_bar|^2
 * + a_d); requires c = |a_bar|^2 + a_d > 0 and |u| = 1.
 */
Point degenerate_region_point(TranslationVector const& a, Point const& unit_dir);

//---------------------------------------------------------------------------//
/*!
 * Dense d x d matrix asserted orthogonal at construction.
 */
class OrthogonalMatrix
{
  public:
    //! Orthogonality tolerance on entries of g^T g - I.
    static constexpr double tolerance = 1e-12;

    static OrthogonalMatrix identity(std::size_t dim);

    //! Validate and wrap row-major entries.
    OrthogonalMatrix(std::size_t dim, std::vector<double> row_major);

    std::size_t dim() const { return dim_; }
    double operator()(std::size_t row, std::size_t col) const
    {
        return entries_[row * dim_ + col];
    }

    Point apply(Point const& v) const;

    //! Largest entry of |g^T g - I|.
    double orthogonality_defect() const;
    double determinant() const;

  private:
    std::size_t dim_;
    std::vector<double> entries_;
};

/*!
 * Reflection carrying the degenerate hyperplane to {z : z_d = canonical}.
 *
 * A single Householder reflection maps the hyperplane's unit normal to e_d;
 * det = -1 unless a_bar = 0, in which case the identity is returned. Throws
 * DegenerateAbsent when |a_bar|^2 + a_d <= 0.
 */
OrthogonalMatrix rotation_to_canonical(TranslationVector const& a, int d);

}  // namespace paradot
