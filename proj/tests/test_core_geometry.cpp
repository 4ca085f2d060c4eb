#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "paradot/core_geometry.hpp"
#include "paradot/numeric.hpp"

using namespace paradot;

namespace
{
Point random_point(Rng& rng, std::size_t dim, double lo, double hi)
{
    Point p(dim);
    for (auto& c : p)
        c = rng.uniform(lo, hi);
    return p;
}

Rational random_rational(Rng& rng)
{
    auto const num = static_cast<long long>(rng.below(41)) - 20;
    auto const den = static_cast<long long>(rng.below(9)) + 1;
    return Rational(num, den);
}

RationalPoint random_rational_point(Rng& rng, std::size_t dim)
{
    RationalPoint p(dim);
    for (auto& c : p)
        c = random_rational(rng);
    return p;
}
}  // namespace

TEST_CASE("lift places points on the translated paraboloid")
{
    CHECK(lift(Point{1, 0}, TranslationVector(Point{0, 0}, 0)) == Point{1, 0, 1});
    CHECK(lift(Point{0, 0}, TranslationVector(Point{2, 3}, 5)) == Point{2, 3, 5});
    CHECK(lift(Point{1, 2}, TranslationVector(Point{1, 1}, -1)) == Point{2, 3, 4});
    CHECK_THROWS_AS(lift(Point{1, 2, 3}, TranslationVector(Point{1, 1}, 0)),
                    DimensionMismatch);
}

TEST_CASE("transform_map values and singular inputs")
{
    CHECK(transform_map(Point{1, 0}, TranslationVector(Point{0, 0}, 0))
          == Point{-0.5, 0});
    CHECK(transform_map(Point{1, 0}, TranslationVector(Point{0, 0}, 1))
          == Point{-0.25, 0});
    CHECK_THROWS_AS(transform_map(Point{0, 0}, TranslationVector(Point{0, 0}, 0)),
                    SingularInput);
    // Just inside the epsilon band.
    CHECK_THROWS_AS(transform_map(Point{0, 0}, TranslationVector(Point{0, 0}, 5e-13)),
                    SingularInput);
    // Exact mode rejects only exact zeros.
    RationalTranslationVector tiny(RationalPoint{0, 0}, Rational(1, 1000000000));
    CHECK_NOTHROW(transform_map(RationalPoint{0, 0}, tiny));
}

TEST_CASE("h_offset hand-evaluated cases")
{
    TranslationVector zero(Point{0, 0}, 0);
    CHECK(h_offset(Point{1, 0}, zero) == doctest::Approx(-0.25));
    CHECK(h_offset(Point{3, -7}, zero) == doctest::Approx(-0.25));

    // 1 + 1 - 1/8: the a_d^2 term contributes.
    CHECK(h_offset(RationalPoint{1, 0}, RationalTranslationVector(RationalPoint{0, 0}, 1))
          == Rational(15, 8));
    // Cross-check against the identity with y = 0: lift dot = 2, w |T - y|^2 = 1/8.
    CHECK(identity_residual(RationalPoint{1, 0}, RationalPoint{0, 0},
                            RationalTranslationVector(RationalPoint{0, 0}, 1))
          == 0);
    CHECK(h_offset(RationalPoint{0, 0}, RationalTranslationVector(RationalPoint{1, 0}, 1))
          == Rational(7, 4));
}

TEST_CASE("identity residual against direct dot products")
{
    TranslationVector zero(Point{0, 0}, 0);
    // dot((1,0,1),(0,1,1)) = 1 and dot((1,0,1),(1,0,1)) = 2
    CHECK(dot(lift(Point{1, 0}, zero), lift(Point{0, 1}, zero)) == 1.0);
    CHECK(identity_residual(Point{1, 0}, Point{0, 1}, zero) == doctest::Approx(0).epsilon(1e-15));
    CHECK(identity_residual(Point{1, 0}, Point{1, 0}, zero) == doctest::Approx(0).epsilon(1e-15));

    SUBCASE("randomized float inputs")
    {
        Rng rng(20240601);
        double worst = 0;
        int accepted = 0;
        while (accepted < 1000)
        {
            std::size_t const dim = 2 + rng.below(3);
            Point x = random_point(rng, dim, -2, 2);
            Point y = random_point(rng, dim, -2, 2);
            TranslationVector a(random_point(rng, dim, -2, 2), rng.uniform(-2, 2));
            if (std::fabs(squared_norm(x) + a.a_d) <= 0.1)
                continue;
            ++accepted;
            double const direct = oracle::expanded_lift_dot(x, y, a);
            CHECK(dot(lift(x, a), lift(y, a)) == doctest::Approx(direct).epsilon(1e-12));
            worst = std::max(worst, std::fabs(identity_residual(x, y, a)));
        }
        CHECK(worst < 1e-9);
    }

    SUBCASE("exact rationals vanish identically")
    {
        Rng rng(7);
        int accepted = 0;
        while (accepted < 200)
        {
            std::size_t const dim = 2 + rng.below(3);
            RationalPoint x = random_rational_point(rng, dim);
            RationalPoint y = random_rational_point(rng, dim);
            RationalTranslationVector a(random_rational_point(rng, dim), random_rational(rng));
            if (squared_norm(x) + a.a_d == 0)
                continue;
            ++accepted;
            CHECK(identity_residual(x, y, a) == 0);
            CHECK(dot(lift(x, a), lift(y, a)) == oracle::expanded_lift_dot(x, y, a));
        }
    }
}

TEST_CASE("closed-form Jacobian examples")
{
    CHECK(jacobian_closed(RationalPoint{1, 0}, RationalTranslationVector(RationalPoint{0, 0}, 0))
          == Rational(-1, 4));
    CHECK(jacobian_closed(RationalPoint{0, 1}, RationalTranslationVector(RationalPoint{1, 0}, 0))
          == Rational(-1, 4));

    TranslationVector a(Point{0, 0}, 0);
    CHECK(jacobian_numeric(Point{1, 0}, a, 1e-5) == doctest::Approx(-0.25).epsilon(4e-6));

    TranslationVector a4(Point{0, 0, 0}, 1);
    Point x4{1, 1, 1};
    double const closed4 = jacobian_closed(x4, a4);
    CHECK(closed4 == doctest::Approx(4.0 / 4096.0));
    CHECK(std::fabs(jacobian_numeric(x4, a4, 1e-5) - closed4) <= 1e-5 * std::fabs(closed4));
}

TEST_CASE("Jacobian vanishes on the degenerate sphere")
{
    // a = ((1,0),0): sphere |x + (1,0)| = 1; x = (0,0) is excluded (singular), use (-1,1).
    TranslationVector a(Point{1, 0}, 0);
    Point on_sphere{-1, 1};
    CHECK(jacobian_closed(on_sphere, a) == 0.0);
    CHECK(std::fabs(jacobian_numeric(on_sphere, a, 1e-5)) < 1e-6);

    // Exact zero locus: choose y on a rational sphere and set a_d accordingly.
    Rng rng(99);
    int checked = 0;
    while (checked < 100)
    {
        std::size_t const dim = 2 + rng.below(3);
        RationalPoint abar = random_rational_point(rng, dim);
        RationalPoint y = random_rational_point(rng, dim);
        Rational const a_d = squared_norm(y) - squared_norm(abar);
        RationalTranslationVector ra(abar, a_d);
        RationalPoint x = y - abar;
        if (squared_norm(x) + a_d == 0)
            continue;
        ++checked;
        CHECK(jacobian_closed(x, ra) == 0);
        // Off the sphere the closed form does not vanish.
        RationalPoint x_off = x;
        x_off[0] += Rational(1, 3);
        if (squared_norm(x_off) + a_d != 0)
        {
            bool const on = squared_norm(x_off + abar) == ra.cylinder_radius_sq();
            CHECK((jacobian_closed(x_off, ra) == 0) == on);
        }
    }
}

TEST_CASE("closed form agrees with the analytic derivative matrix")
{
    Rng rng(4242);
    for (int trial = 0; trial < 300; ++trial)
    {
        std::size_t const dim = 2 + rng.below(3);
        Point x = random_point(rng, dim, -2, 2);
        TranslationVector a(random_point(rng, dim, -2, 2), rng.uniform(-2, 2));
        if (trial % 3 == 0)
            x[0] = 0;  // a_11 = 0 branch, not covered by the row reduction
        if (trial % 5 == 0)
            x[0] = -a.a_bar[0];
        if (std::fabs(squared_norm(x) + a.a_d) < 0.2)
            continue;
        double const ref = oracle::gauss_det(oracle::analytic_jacobian_matrix(x, a));
        double const closed = jacobian_closed(x, a);
        CHECK(closed == doctest::Approx(ref).epsilon(1e-10).scale(1e-12));
    }
}

TEST_CASE("finite-difference oracle tracks the closed form")
{
    Rng rng(31337);
    int accepted = 0;
    while (accepted < 300)
    {
        std::size_t const dim = 2 + rng.below(3);
        Point x = random_point(rng, dim, -1.5, 1.5);
        TranslationVector a(random_point(rng, dim, -1.5, 1.5), rng.uniform(-1.5, 1.5));
        if (std::fabs(squared_norm(x) + a.a_d) < 0.5)
            continue;
        ++accepted;
        double const closed = jacobian_closed(x, a);
        double const numeric = jacobian_numeric(x, a, 1e-5);
        CHECK(std::fabs(closed - numeric) <= std::max(1e-5 * std::fabs(closed), 1e-9));
    }
    CHECK_THROWS_AS(jacobian_numeric(Point{0, 0}, TranslationVector(Point{0, 0}, 5e-5), 1e-5),
                    SingularInput);
}

TEST_CASE("nonvanishing Jacobian gives local injectivity")
{
    Rng rng(5150);
    TranslationVector a(Point{0.5, -0.3}, 0.2);
    double const rho = 0.1;
    int pairs = 0;
    while (pairs < 2000)
    {
        Point x1 = random_point(rng, 2, -2, 2);
        double const dist_sphere
            = std::fabs(std::sqrt(squared_norm(x1 + a.a_bar)) - std::sqrt(a.cylinder_radius_sq()));
        if (dist_sphere < rho || std::fabs(squared_norm(x1) + a.a_d) < rho)
            continue;
        Point offset = random_point(rng, 2, -1, 1);
        double const len = std::sqrt(squared_norm(offset));
        if (len == 0)
            continue;
        offset *= rng.uniform(1e-9, rho / 10) / len;
        Point x2 = x1 + offset;
        ++pairs;
        CHECK(transform_map(x1, a) != transform_map(x2, a));
    }
}

TEST_CASE("region report classification")
{
    SUBCASE("origin outside the singular sphere")
    {
        auto r = region_report(TranslationVector(Point{3, 0}, -4), 3);
        REQUIRE(r.singularity);
        CHECK(r.singularity->center == Point{3, 0});
        CHECK(r.singularity->radius == doctest::Approx(2));
        CHECK(r.origin_position == OriginPosition::outside);
        REQUIRE(r.singularity->tangent_radius);
        CHECK(*r.singularity->tangent_radius == doctest::Approx(std::sqrt(5.0)));
        REQUIRE(r.degenerate);
        CHECK(r.degenerate->cylinder_radius_sq == doctest::Approx(5));
    }
    SUBCASE("a_d = 0 reports no singularity")
    {
        auto r = region_report(TranslationVector(Point{1, 0}, 0), 3);
        CHECK_FALSE(r.singularity);
        CHECK(r.origin_position == OriginPosition::no_singularity);
        CHECK_FALSE(r.notes.empty());
        REQUIRE(r.degenerate);
        CHECK(r.degenerate->hyperplane_normal == Point{2, 0, 1});
        CHECK(r.degenerate->hyperplane_offset == doctest::Approx(2));
        double const expected = 2 / std::sqrt(5.0);
        CHECK(r.degenerate->canonical_distance == doctest::Approx(expected).epsilon(1e-15));
        CHECK(std::fabs(oracle::origin_plane_distance(r.degenerate->hyperplane_normal,
                                                      r.degenerate->hyperplane_offset)
                        - expected)
              < 1e-12);
    }
    SUBCASE("origin inside, no degenerate region")
    {
        auto r = region_report(TranslationVector(Point{0, 0}, -1), 3);
        REQUIRE(r.singularity);
        CHECK(r.singularity->radius == doctest::Approx(1));
        CHECK(r.origin_position == OriginPosition::inside);
        CHECK_FALSE(r.degenerate);
    }
    SUBCASE("origin on the sphere")
    {
        auto r = region_report(TranslationVector(Point{0.6, 0.8}, -1), 3);
        CHECK(r.origin_position == OriginPosition::on);
    }
    CHECK_THROWS_AS(region_report(TranslationVector(Point{1}, 0), 2), InvalidArgument);
    CHECK_THROWS_AS(region_report(TranslationVector(Point{1, 0}, 0), 4), DimensionMismatch);
}

TEST_CASE("degenerate region lies on the reported hyperplane")
{
    Rng rng(8);
    for (int trial = 0; trial < 50; ++trial)
    {
        std::size_t const dim = 2 + rng.below(3);
        TranslationVector a(random_point(rng, dim, -2, 2), rng.uniform(-1, 3));
        if (!(a.cylinder_radius_sq() > 0.01))
            continue;
        auto report = region_report(a, static_cast<int>(dim + 1));
        REQUIRE(report.degenerate);
        for (int k = 0; k < 20; ++k)
        {
            Point u(dim);
            for (auto& c : u)
                c = rng.normal();
            u *= 1 / std::sqrt(squared_norm(u));
            Point y = degenerate_region_point(a, u);
            double const lhs = dot(report.degenerate->hyperplane_normal, y);
            CHECK(std::fabs(lhs - report.degenerate->hyperplane_offset) < 1e-12 * 16);
            // Jacobian of the underlying x_bar vanishes (up to rounding).
            Point x_bar(dim);
            for (std::size_t i = 0; i < dim; ++i)
                x_bar[i] = y[i] - a.a_bar[i];
            if (std::fabs(squared_norm(x_bar) + a.a_d) > 0.1)
                CHECK(std::fabs(jacobian_closed(x_bar, a)) < 1e-9);
        }
    }
}

TEST_CASE("rotation to canonical form")
{
    SUBCASE("axis-aligned normal gives the identity")
    {
        auto g = rotation_to_canonical(TranslationVector(Point{0, 0}, 1), 3);
        CHECK(g.apply(Point{0.3, -4, 2}) == Point{0.3, -4, 2});
        CHECK(g.determinant() == doctest::Approx(1));
    }
    SUBCASE("a = ((1,0),0) maps H to z_3 = 2/sqrt(5)")
    {
        TranslationVector a(Point{1, 0}, 0);
        auto g = rotation_to_canonical(a, 3);
        CHECK(g.orthogonality_defect() < 1e-12);
        CHECK(std::fabs(std::fabs(g.determinant()) - 1) < 1e-12);
        Rng rng(11);
        for (int k = 0; k < 100; ++k)
        {
            double const y1 = rng.uniform(-5, 5), y2 = rng.uniform(-5, 5);
            Point h{y1, y2, 2 - 2 * y1};
            CHECK(std::fabs(g.apply(h)[2] - 2 / std::sqrt(5.0)) < 1e-10);
        }
    }
    SUBCASE("dot products are preserved")
    {
        Rng rng(12);
        for (int trial = 0; trial < 30; ++trial)
        {
            std::size_t const dim = 2 + rng.below(3);
            TranslationVector a(random_point(rng, dim, -3, 3), rng.uniform(0.1, 2));
            auto g = rotation_to_canonical(a, static_cast<int>(dim + 1));
            Point u = random_point(rng, dim + 1, -1, 1);
            Point v = random_point(rng, dim + 1, -1, 1);
            CHECK(std::fabs(dot(g.apply(u), g.apply(v)) - dot(u, v)) < 1e-12);
        }
    }
    SUBCASE("tiny a_bar stays accurate")
    {
        TranslationVector a(Point{1e-9, 0}, 1);
        auto g = rotation_to_canonical(a, 3);
        CHECK(g.orthogonality_defect() < 1e-12);
    }
    CHECK_THROWS_AS(rotation_to_canonical(TranslationVector(Point{0, 0}, -1), 3),
                    DegenerateAbsent);
    CHECK_THROWS_AS(OrthogonalMatrix(2, {1, 1, 0, 1}), InvalidArgument);
}
