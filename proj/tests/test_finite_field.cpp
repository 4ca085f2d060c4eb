#include "doctest.h"

#include <set>

#include "paradot/errors.hpp"
#include "paradot/finite_field.hpp"
#include "paradot/numeric.hpp"

using namespace paradot;

namespace
{
// Ordered-pair enumeration over all points, no early exit.
std::set<std::uint64_t> ordered_dot_set(FpPointSet const& e)
{
    std::uint64_t const p = e.field().p();
    std::set<std::uint64_t> out;
    for (std::size_t i = 0; i < e.size(); ++i)
    {
        for (std::size_t j = 0; j < e.size(); ++j)
        {
            std::uint64_t v = 0;
            for (std::size_t k = 0; k < e.dim(); ++k)
                v = (v + e.point(i)[k] * e.point(j)[k]) % p;
            out.insert(v);
        }
    }
    return out;
}

std::vector<std::uint64_t> as_vector(std::set<std::uint64_t> const& s)
{
    return {s.begin(), s.end()};
}
}  // namespace

TEST_CASE("prime field validation")
{
    CHECK(PrimeField(3).admissible());
    CHECK_FALSE(PrimeField(5).admissible());
    CHECK(PrimeField(19).admissible());
    CHECK_THROWS_AS(PrimeField(9), InvalidArgument);
    CHECK_THROWS_AS(PrimeField(1), InvalidArgument);
}

TEST_CASE("paraboloid points")
{
    CHECK(paraboloid_points(PrimeField(3), 3).size() == 9);

    auto line = paraboloid_points(PrimeField(3), 2);
    REQUIRE(line.size() == 3);
    std::set<std::vector<std::uint64_t>> got;
    for (std::size_t i = 0; i < line.size(); ++i)
        got.insert({line.point(i).begin(), line.point(i).end()});
    CHECK(got == std::set<std::vector<std::uint64_t>>{{0, 0}, {1, 1}, {2, 1}});

    for (std::uint64_t p : {7, 11})
    {
        auto e = paraboloid_points(PrimeField(p), 3);
        CHECK(e.size() == p * p);
        for (std::size_t i = 0; i < e.size(); ++i)
        {
            auto x = e.point(i);
            CHECK(x[2] == (x[0] * x[0] + x[1] * x[1]) % p);
        }
    }
    CHECK_THROWS_AS(paraboloid_points(PrimeField(7), 3, {.max_points = 10}), SizeOverflow);
    CHECK_THROWS_AS(paraboloid_points(PrimeField(7), 1), InvalidArgument);
}

TEST_CASE("point set invariants")
{
    FpPointSet e(PrimeField(5), 2);
    e.insert(std::vector<std::uint64_t>{1, 2});
    CHECK(e.contains(std::vector<std::uint64_t>{1, 2}));
    CHECK_THROWS_AS(e.insert(std::vector<std::uint64_t>{1, 2}), InvalidArgument);
    CHECK_THROWS_AS(e.insert(std::vector<std::uint64_t>{5, 0}), InvalidArgument);
    CHECK_THROWS_AS(e.insert(std::vector<std::uint64_t>{1}), DimensionMismatch);
}

TEST_CASE("dot product sets")
{
    auto full3 = paraboloid_points(PrimeField(3), 3);
    CHECK(dot_product_set(full3) == std::vector<std::uint64_t>{0, 1, 2});

    FpPointSet origin(PrimeField(7), 3);
    origin.insert(std::vector<std::uint64_t>{0, 0, 0});
    CHECK(dot_product_set(origin) == std::vector<std::uint64_t>{0});

    for (std::uint64_t p : {3, 7, 11, 19})
    {
        auto e = paraboloid_points(PrimeField(p), 3);
        auto const pi = dot_product_set(e);
        CHECK(pi.size() == p);
        CHECK(pi == as_vector(ordered_dot_set(e)));
    }
    CHECK_THROWS_AS(dot_product_set(FpPointSet(PrimeField(3), 2)), InvalidArgument);
}

TEST_CASE("dot product set properties on random subsets")
{
    Rng rng(314);
    PrimeField const f(23);
    auto full = paraboloid_points(f, 3);
    for (int trial = 0; trial < 40; ++trial)
    {
        std::uint64_t const n = 1 + rng.below(30);
        auto idx = sample_without_replacement(rng, full.size(), n);
        FpPointSet small(f, 3), big(f, 3);
        for (auto i : idx)
        {
            small.insert(full.point(i));
            big.insert(full.point(i));
        }
        for (auto i : sample_without_replacement(rng, full.size(), 20))
        {
            if (!big.contains(full.point(i)))
                big.insert(full.point(i));
        }
        auto const a = dot_product_set(small);
        auto const b = dot_product_set(big);
        // Unordered enumeration agrees with the ordered one.
        CHECK(a == as_vector(ordered_dot_set(small)));
        // Monotone under inclusion.
        CHECK(std::includes(b.begin(), b.end(), a.begin(), a.end()));
        // Thread partitioning does not change the set.
        CHECK(dot_product_set(big, 3) == b);
    }
}

TEST_CASE("threshold scan")
{
    PrimeField const f(19);
    std::vector<std::uint64_t> sizes{1, 19 * 19};
    auto scan = threshold_scan(f, 3, sizes, 3, 42);
    REQUIRE(scan.rows.size() == 2);
    CHECK(scan.rows[0].min_ratio == doctest::Approx(1.0 / 19));
    CHECK(scan.rows[0].max_ratio == doctest::Approx(1.0 / 19));
    CHECK(scan.rows[1].min_ratio == 1.0);
    CHECK(scan.rows[1].normalized
          == doctest::Approx(361 / std::pow(19.0, 1.5 - 1.0 / 6.0)));
    CHECK(scan.samples.size() == 6);

    // Same seed, same table.
    std::vector<std::uint64_t> mid{20, 40, 80};
    auto a = threshold_scan(f, 3, mid, 5, 7);
    auto b = threshold_scan(f, 3, mid, 5, 7);
    REQUIRE(a.samples.size() == b.samples.size());
    for (std::size_t i = 0; i < a.samples.size(); ++i)
        CHECK(a.samples[i].pi_size == b.samples[i].pi_size);

    std::vector<std::uint64_t> too_big{400};
    CHECK_THROWS_AS(threshold_scan(f, 3, too_big, 1, 1), InvalidArgument);
    CHECK_THROWS_AS(threshold_scan(f, 3, mid, 0, 1), InvalidArgument);
}

TEST_CASE("isotropic vectors")
{
    std::vector<std::uint64_t> const one_one_one{1, 1, 1};
    CHECK(isotropic_vectors(PrimeField(3), 3).contains(one_one_one));
    CHECK(isotropic_vectors(PrimeField(5), 2).contains(std::vector<std::uint64_t>{1, 2}));
    for (std::uint64_t p : {3, 7, 11, 19, 23})
        CHECK(isotropic_vectors(PrimeField(p), 2).empty());
    // p = 1 (mod 4) has exactly 2 (p - 1) isotropic vectors in the plane.
    for (std::uint64_t p : {5, 13, 17})
        CHECK(isotropic_vectors(PrimeField(p), 2).size() == 2 * (p - 1));
    CHECK_THROWS_AS(isotropic_vectors(PrimeField(101), 4, {.max_points = 1000}), SizeOverflow);
}
