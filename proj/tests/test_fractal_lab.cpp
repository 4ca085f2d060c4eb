#include "doctest.h"

#include <cmath>
#include <set>

#include "paradot/errors.hpp"
#include "paradot/fractal_lab.hpp"
#include "paradot/numeric.hpp"

using namespace paradot;

namespace
{
// Distinct (lifted) dot products of exact cell centres, by brute force.
std::set<Rational> rational_dot_values(std::uint64_t q, std::size_t dim, bool lifted)
{
    std::vector<RationalPoint> centers;
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < dim; ++k)
        total *= q + 1;
    for (std::uint64_t i = 0; i < total; ++i)
    {
        RationalPoint c(dim);
        std::uint64_t rest = i;
        for (std::size_t k = 0; k < dim; ++k)
        {
            c[k] = Rational(static_cast<long long>(rest % (q + 1)), static_cast<long long>(q));
            rest /= q + 1;
        }
        centers.push_back(c);
    }
    std::set<Rational> out;
    for (auto const& a : centers)
    {
        for (auto const& b : centers)
        {
            Rational v = dot(a, b);
            if (lifted)
                v += squared_norm(a) * squared_norm(b);
            out.insert(v);
        }
    }
    return out;
}

// Closed boxes of side 2^-j met by the depth-2 set with q = (2, 16), s = 1/3,
// counted by enumerating unit cells of the 2^-12 grid.
std::uint64_t oracle_box_count(int j)
{
    // Level 1: n/2 +- 1/8, level 2: n/16 +- 1/4096, in units of 2^-12.
    std::vector<std::pair<long, long>> level1;
    for (long n = 0; n <= 2; ++n)
        level1.push_back({std::max(0L, 2048 * n - 512), std::min(4096L, 2048 * n + 512)});
    std::set<long> boxes;
    long const side = 1L << (12 - j);
    for (auto [a, b] : level1)
    {
        for (long n = 0; n <= 16; ++n)
        {
            long const lo = std::max(a, 256 * n - 1);
            long const hi = std::min(b, 256 * n + 1);
            for (long u = lo; u < hi; ++u)
                boxes.insert(u / side);
        }
    }
    return boxes.size();
}
}  // namespace

TEST_CASE("q-sequence")
{
    LatticeApproxParams p{.s = 1.0 / 3.0, .q = 2, .dim = 2, .depth = 3};
    CHECK(q_sequence(p) == std::vector<std::uint64_t>{2, 16, 65536});
    p.s = 0.25;
    p.depth = 2;
    CHECK(q_sequence(p) == std::vector<std::uint64_t>{2, 32});
    p.q_sequence = std::vector<std::uint64_t>{3, 4, 17};
    p.depth = 3;
    CHECK(q_sequence(p) == std::vector<std::uint64_t>{3, 4, 17});
    p.q_sequence = std::vector<std::uint64_t>{3, 4, 16};
    CHECK_THROWS_AS(q_sequence(p), InvalidArgument);
    p.q_sequence.reset();
    p.q = 1000;
    p.depth = 4;
    CHECK_THROWS_AS(q_sequence(p), ScaleOverflow);
    CHECK_THROWS_AS(q_sequence({.s = 1.5}), InvalidArgument);
}

TEST_CASE("build_level examples")
{
    auto cells = build_level({.s = 1.0 / 3.0, .q = 3, .dim = 1}, 1);
    REQUIRE(cells.size() == 4);
    CHECK(cells.half_width() == doctest::Approx(1.0 / 27.0).epsilon(1e-14));
    for (std::uint64_t i = 0; i < 4; ++i)
        CHECK(cells.center(i)[0] == doctest::Approx(i / 3.0));

    CHECK(build_level({.s = 1.0 / 3.0, .q = 3, .dim = 2}, 1).size() == 16);

    auto tenth = build_level({.s = 0.49, .q = 10, .dim = 2}, 1);
    CHECK(tenth.size() == 121);
    CHECK(tenth.half_width() == doctest::Approx(std::pow(10.0, -1 / 0.49)));

    // Every cell lies within the padded unit cube.
    for (std::uint64_t i = 0; i < tenth.size(); ++i)
    {
        for (double c : tenth.center(i))
        {
            CHECK(c - tenth.half_width() >= -tenth.half_width());
            CHECK(c + tenth.half_width() <= 1 + tenth.half_width());
        }
    }
    CHECK_THROWS_AS(build_level({.s = 0.5, .q = 2, .depth = 1}, 2), InvalidArgument);
    CHECK_THROWS_AS(CellSet(1, 1000000, 0.001, 2), ScaleOverflow);
}

TEST_CASE("Euclidean dot cover")
{
    SUBCASE("s = 1/3, q = 3, dim = 2 against exact centres")
    {
        auto cells = build_level({.s = 1.0 / 3.0, .q = 3, .dim = 2}, 1);
        auto cover = dot_cover_euclidean(cells);
        auto exact = rational_dot_values(3, 2, false);
        CHECK(cover.lattice_count == exact.size());
        CHECK(cover.lattice_count == 16);
        for (auto const& v : exact)
        {
            Rational const scaled = v * 9;
            CHECK(denominator(scaled) == 1);
            CHECK(scaled >= 0);
            CHECK(scaled <= 18);
            CHECK(cover.contains(v.convert_to<double>()));
        }
        double const c1 = euclidean_cover_radius(2, 1.0 / 27) * 27;
        CHECK(cover.count <= 19);
        CHECK(cover.total_length <= 19 * 2 * c1 / 27 + 1e-12);
        CHECK(c1 <= 2 * (2 + 1));
    }
    SUBCASE("single interval")
    {
        auto cover = merge_intervals({{-0.1, 0.1}});
        CHECK(cover.count == 1);
        CHECK(cover.total_length == doctest::Approx(0.2));
        CHECK(cover.contains(0));
        CHECK_FALSE(cover.contains(0.2));
    }
    SUBCASE("merging is canonical")
    {
        auto cover = merge_intervals({{2, 3}, {0, 1}, {0.5, 1.5}, {1.5, 1.75}, {3, 3}});
        REQUIRE(cover.count == 2);
        CHECK(cover.intervals[0].lo == 0);
        CHECK(cover.intervals[0].hi == 1.75);
        CHECK(cover.total_length == doctest::Approx(2.75));
    }
}

TEST_CASE("paraboloid dot cover")
{
    auto cells = build_level({.s = 0.2, .q = 3, .dim = 2}, 1);
    auto cover = dot_cover_paraboloid(cells);
    auto exact = rational_dot_values(3, 2, true);
    CHECK(cover.lattice_count == exact.size());
    CHECK(cover.lattice_count == 55);
    CHECK(cover.lattice_count <= paraboloid_count_bound(2, 3));
    for (auto const& v : exact)
        CHECK(denominator(Rational(v * 81)) == 1);
}

TEST_CASE("cover soundness and count bounds")
{
    for (std::uint64_t q : {3, 10, 31})
    {
        for (double s : {0.2, 0.4, 0.55})
        {
            auto cells = build_level({.s = s, .q = q, .dim = 2}, 1);
            auto euc = dot_cover_euclidean(cells);
            CHECK(euc.lattice_count <= euclidean_count_bound(2, q));
            CHECK(euc.count <= euc.lattice_count);
            auto r = check_cover_soundness(cells, euc, false, 10000, 17 + q);
            CHECK(r.misses == 0);

            auto par = dot_cover_paraboloid(cells);
            CHECK(par.lattice_count <= paraboloid_count_bound(2, q));
            auto rp = check_cover_soundness(cells, par, true, 10000, 23 + q);
            CHECK(rp.misses == 0);
        }
    }
    // Corners attain the extreme bound |x·y - c·e| = dim h (2 + h) up to clipping.
    CHECK(euclidean_cover_radius(3, 0.01) == doctest::Approx(3 * 0.01 * 2.01));
}

TEST_CASE("Euclidean cover scaling")
{
    std::vector<double> qs{3, 10, 31, 100};
    for (double s : {0.4, 0.45, 0.55})
    {
        std::vector<double> lengths;
        for (double q : qs)
        {
            auto cells = build_level({.s = s, .q = static_cast<std::uint64_t>(q), .dim = 2}, 1);
            lengths.push_back(dot_cover_euclidean(cells).lattice_length);
        }
        CHECK(std::fabs(log_log_slope(qs, lengths) - (2 - 1 / s)) < 0.1);
    }
}

TEST_CASE("paraboloid lattice count stays below the q^4 bound")
{
    std::vector<double> qs{3, 10, 31};
    std::vector<double> counts;
    for (double q : qs)
    {
        auto cells = build_level({.s = 0.3, .q = static_cast<std::uint64_t>(q), .dim = 2}, 1);
        counts.push_back(static_cast<double>(dot_cover_paraboloid(cells).lattice_count));
    }
    CHECK(log_log_slope(qs, counts) < 4);
}

TEST_CASE("every centre dot product is a lattice point")
{
    Rng rng(5);
    for (int trial = 0; trial < 200; ++trial)
    {
        auto const q = static_cast<long long>(2 + rng.below(50));
        RationalPoint a(3), b(3);
        for (std::size_t k = 0; k < 3; ++k)
        {
            a[k] = Rational(static_cast<long long>(rng.below(q + 1)), q);
            b[k] = Rational(static_cast<long long>(rng.below(q + 1)), q);
        }
        CHECK(denominator(Rational(dot(a, b) * q * q)) == 1);
        Rational const lifted = dot(a, b) + squared_norm(a) * squared_norm(b);
        CHECK(denominator(Rational(lifted * q * q * q * q)) == 1);
    }
}

TEST_CASE("box counting")
{
    LatticeApproxParams p{.s = 1.0 / 3.0, .q = 2, .dim = 2, .depth = 2};
    auto const factor = lattice_factor(p);
    CHECK(factor.size() == 11);
    auto const scales = resolved_dyadic_scales(p);
    REQUIRE(scales.size() == 13);
    std::vector<double> x, y;
    for (int j = 0; j <= 12; ++j)
    {
        auto const n = box_count_1d(factor, scales[static_cast<std::size_t>(j)]);
        CHECK(n == oracle_box_count(j));
        x.push_back(j * std::log(2.0));
        y.push_back(2 * std::log(static_cast<double>(n)));
    }
    double const est = box_dimension_estimate(p);
    CHECK(est == doctest::Approx(fit_line(x, y).slope).epsilon(1e-12));
    CHECK(std::fabs(est - 2.0 / 3.0) < 0.1);

    SUBCASE("full square")
    {
        std::vector<Interval> unit{{0, 1}};
        std::vector<double> sc;
        for (int j = 0; j <= 10; ++j)
            sc.push_back(std::ldexp(1.0, -j));
        CHECK(box_dimension_of(unit, 2, sc) == doctest::Approx(2).epsilon(1e-12));
    }
    SUBCASE("deeper levels move toward s dim")
    {
        LatticeApproxParams one = p;
        one.depth = 1;
        double const e1 = std::fabs(box_dimension_estimate(one) - 2.0 / 3.0);
        double const e2 = std::fabs(est - 2.0 / 3.0);
        CHECK(e2 < e1);
    }
    SUBCASE("s close to 1/2 in three dimensions")
    {
        LatticeApproxParams near{.s = 0.49, .q = 2, .dim = 3, .depth = 2};
        double const e = box_dimension_estimate(near);
        CHECK(e > 3 * 0.49);
        CHECK(e < 3);
    }
    SUBCASE("too few scales")
    {
        std::vector<double> coarse{1, 0.5, 1e-9};
        CHECK_THROWS_AS(box_dimension_estimate(p, coarse), InsufficientScales);
    }
}

TEST_CASE("parabola identity")
{
    CHECK(parabola_identity_check(1.0, 1.0) == 0);
    CHECK(parabola_identity_check(0.0, 3.7) == 0);
    CHECK(parabola_identity_check(Rational(2, 7), Rational(-5, 3)) == 0);
    Rng rng(77);
    double worst = 0;
    for (int k = 0; k < 10000; ++k)
    {
        double const x = rng.uniform(-1, 1), y = rng.uniform(-1, 1);
        worst = std::max(worst, std::fabs(parabola_identity_check(x, y)));
    }
    CHECK(worst < 1e-12);
}
