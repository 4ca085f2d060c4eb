#include "paradot/core_geometry.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace paradot
{
namespace
{
void require_ambient(TranslationVector const& a, int d)
{
    if (d < 3)
        throw InvalidArgument("region geometry requires d >= 3");
    if (a.ambient_dim() != static_cast<std::size_t>(d))
    {
        throw DimensionMismatch("translation has ambient dimension "
                                + std::to_string(a.ambient_dim())
                                + ", expected " + std::to_string(d));
    }
}
}  // namespace

double jacobian_numeric(Point const& x_bar, TranslationVector const& a, double step)
{
    if (!(step > 0))
        throw InvalidArgument("finite-difference step must be positive");
    detail::require_compatible(x_bar, a);
    double const w = squared_norm(x_bar) + a.a_d;
    if (!(std::fabs(w) >= 10 * step))
        throw SingularInput("point within 10*step of the singularity");

    std::size_t const n = x_bar.dim();
    Eigen::MatrixXd jac(n, n);
    for (std::size_t j = 0; j < n; ++j)
    {
        Point plus = x_bar;
        Point minus = x_bar;
        plus[j] += step;
        minus[j] -= step;
        Point const fp = transform_map(plus, a);
        Point const fm = transform_map(minus, a);
        for (std::size_t i = 0; i < n; ++i)
            jac(i, j) = (fp[i] - fm[i]) / (2 * step);
    }
    double const det = jac.determinant();
    if (!std::isfinite(det))
        throw NonFiniteResult("finite-difference Jacobian is not finite");
    return det;
}

char const* to_string(OriginPosition pos)
{
    switch (pos)
    {
        case OriginPosition::inside:
            return "inside";
        case OriginPosition::on:
            return "on";
        case OriginPosition::outside:
            return "outside";
        case OriginPosition::no_singularity:
            return "no-singularity";
    }
    return "unknown";
}

RegionReport region_report(TranslationVector const& a, int d)
{
    require_ambient(a, d);
    RegionReport report;

    double const abar_sq = squared_norm(a.a_bar);
    double const c = abar_sq + a.a_d;

    if (a.a_d < 0)
    {
        SingularSphere sphere;
        sphere.center = a.a_bar;
        sphere.radius = std::sqrt(-a.a_d);

        // Compare |a_bar|^2 with -a_d; both sides are O(|a|^2).
        double const scale = std::max({1.0, abar_sq, -a.a_d});
        if (std::fabs(c) <= 1e-12 * scale)
            report.origin_position = OriginPosition::on;
        else if (c < 0)
            report.origin_position = OriginPosition::inside;
        else
        {
            report.origin_position = OriginPosition::outside;
            sphere.tangent_radius = std::sqrt(c);
        }
        report.singularity = std::move(sphere);
    }
    else if (a.a_d == 0)
    {
        report.notes.emplace_back(
            "a_d = 0: singular set is the single point -a_bar, removable");
    }

    if (c > 0)
    {
        DegenerateHyperplane plane;
        plane.cylinder_radius_sq = c;
        plane.hyperplane_normal = Point(a.ambient_dim());
        for (std::size_t i = 0; i < a.a_bar.dim(); ++i)
            plane.hyperplane_normal[i] = 2 * a.a_bar[i];
        plane.hyperplane_normal[a.a_bar.dim()] = 1;
        plane.hyperplane_offset = 2 * c;
        plane.canonical_distance = 2 * c / std::sqrt(4 * abar_sq + 1);
        report.degenerate = std::move(plane);
    }
    else if (c == 0)
    {
        report.notes.emplace_back(
            "|a_bar|^2 + a_d = 0: degenerate set is a single point, removable");
    }
    return report;
}

double distance_to_hyperplane(Point const& normal, double offset, Point const& point)
{
    double const norm = std::sqrt(squared_norm(normal));
    if (!(norm > 0))
        throw InvalidArgument("hyperplane normal must be nonzero");
    return std::fabs(dot(normal, point) - offset) / norm;
}

Point degenerate_region_point(TranslationVector const& a, Point const& unit_dir)
{
    detail::require_compatible(unit_dir, a);
    double const c = a.cylinder_radius_sq();
    if (!(c > 0))
        throw DegenerateAbsent("degenerate region is empty or a single point");

    Point y_bar = unit_dir;
    y_bar *= std::sqrt(c);
    // y_bar = x_bar + a_bar with x_bar on the degenerate sphere.
    return lift(y_bar - a.a_bar, a);
}

//---------------------------------------------------------------------------//
OrthogonalMatrix OrthogonalMatrix::identity(std::size_t dim)
{
    std::vector<double> entries(dim * dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i)
        entries[i * dim + i] = 1.0;
    return OrthogonalMatrix(dim, std::move(entries));
}

OrthogonalMatrix::OrthogonalMatrix(std::size_t dim, std::vector<double> row_major)
    : dim_(dim), entries_(std::move(row_major))
{
    if (entries_.size() != dim_ * dim_)
        throw DimensionMismatch("matrix entries do not match dimension");
    if (orthogonality_defect() > tolerance)
        throw InvalidArgument("matrix is not orthogonal within 1e-12");
}

Point OrthogonalMatrix::apply(Point const& v) const
{
    if (v.dim() != dim_)
        throw DimensionMismatch("vector dimension does not match matrix");
    Point out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
    {
        double acc = 0;
        for (std::size_t j = 0; j < dim_; ++j)
            acc += (*this)(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

double OrthogonalMatrix::orthogonality_defect() const
{
    double worst = 0;
    for (std::size_t i = 0; i < dim_; ++i)
    {
        for (std::size_t j = 0; j < dim_; ++j)
        {
            double acc = 0;
            for (std::size_t k = 0; k < dim_; ++k)
                acc += (*this)(k, i) * (*this)(k, j);
            worst = std::max(worst, std::fabs(acc - (i == j ? 1.0 : 0.0)));
        }
    }
    return worst;
}

double OrthogonalMatrix::determinant() const
{
    Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> const>
        m(entries_.data(), dim_, dim_);
    return m.determinant();
}

OrthogonalMatrix rotation_to_canonical(TranslationVector const& a, int d)
{
    require_ambient(a, d);
    double const abar_sq = squared_norm(a.a_bar);
    if (!(abar_sq + a.a_d > 0))
        throw DegenerateAbsent("|a_bar|^2 + a_d <= 0: no degenerate hyperplane");

    std::size_t const n = a.ambient_dim();
    if (abar_sq == 0)
        return OrthogonalMatrix::identity(n);

    // Householder vector v = n_hat - e_d with n = (2 a_bar, 1). The last
    // component 1/|n| - 1 is rewritten to avoid cancellation for small a_bar.
    double const norm = std::sqrt(4 * abar_sq + 1);
    std::vector<double> v(n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        v[i] = 2 * a.a_bar[i] / norm;
    v[n - 1] = -4 * abar_sq / (norm * (1 + norm));
    double const v_sq = -2 * v[n - 1];

    std::vector<double> entries(n * n);
    for (std::size_t i = 0; i < n; ++i)
    {
        for (std::size_t j = 0; j < n; ++j)
            entries[i * n + j] = (i == j ? 1.0 : 0.0) - 2 * v[i] * v[j] / v_sq;
    }
    return OrthogonalMatrix(n, std::move(entries));
}

}  // namespace paradot
