#include "paradot/finite_field.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "paradot/errors.hpp"
#include "paradot/numeric.hpp"

namespace paradot
{
namespace
{
// p^exp, or SizeOverflow past 64 bits.
std::uint64_t power(std::uint64_t p, std::size_t exp)
{
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < exp; ++i)
    {
        if (__builtin_mul_overflow(out, p, &out))
            throw SizeOverflow("p^" + std::to_string(exp) + " exceeds 64 bits");
    }
    return out;
}

void require_points(std::uint64_t count, FieldBudget const& budget)
{
    if (count > budget.max_points)
    {
        throw SizeOverflow(std::to_string(count) + " points exceed the budget of "
                           + std::to_string(budget.max_points));
    }
}

void require_pairs(std::uint64_t n, FieldBudget const& budget)
{
    if (n > (std::uint64_t{1} << 32) || n * n > budget.max_pairs)
        throw SizeOverflow("pair count exceeds the budget");
}
}  // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t f = 2; f * f <= n; ++f)
    {
        if (n % f == 0)
            return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p)
{
    if (!is_prime(p_))
        throw InvalidArgument(std::to_string(p_) + " is not prime");
    if (p_ > (std::uint64_t{1} << 31))
        throw SizeOverflow("modulus must be below 2^31");
}

//---------------------------------------------------------------------------//
FpPointSet::FpPointSet(PrimeField field, std::size_t dim) : field_(field), dim_(dim)
{
    if (dim_ < 1)
        throw InvalidArgument("dimension must be positive");
    power(field_.p(), dim_);
}

void FpPointSet::reserve(std::size_t count)
{
    coords_.reserve(count * dim_);
    keys_.reserve(count);
}

std::uint64_t FpPointSet::encode(std::span<std::uint64_t const> point) const
{
    std::uint64_t key = 0;
    for (auto c : point)
        key = key * field_.p() + c;
    return key;
}

void FpPointSet::insert(std::span<std::uint64_t const> point)
{
    if (point.size() != dim_)
        throw DimensionMismatch("point dimension does not match the set");
    for (auto c : point)
    {
        if (c >= field_.p())
            throw InvalidArgument("coordinate outside [0, p)");
    }
    if (!keys_.insert(encode(point)).second)
        throw InvalidArgument("duplicate point");
    coords_.insert(coords_.end(), point.begin(), point.end());
}

bool FpPointSet::contains(std::span<std::uint64_t const> point) const
{
    return point.size() == dim_ && keys_.count(encode(point)) > 0;
}

//---------------------------------------------------------------------------//
std::vector<std::uint64_t> paraboloid_point(PrimeField const& field, std::size_t d,
                                            std::uint64_t index)
{
    std::uint64_t const p = field.p();
    std::vector<std::uint64_t> x(d);
    std::uint64_t sum = 0;
    for (std::size_t k = d - 1; k-- > 0;)
    {
        x[k] = index % p;
        index /= p;
        sum = (sum + x[k] * x[k]) % p;
    }
    x[d - 1] = sum;
    return x;
}

FpPointSet paraboloid_points(PrimeField const& field, std::size_t d, FieldBudget const& budget)
{
    if (d < 2)
        throw InvalidArgument("paraboloid needs d >= 2");
    std::uint64_t const count = power(field.p(), d - 1);
    require_points(count, budget);
    FpPointSet out(field, d);
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i)
        out.insert(paraboloid_point(field, d, i));
    return out;
}

std::vector<std::uint64_t> dot_product_set(FpPointSet const& points, unsigned threads,
                                           FieldBudget const& budget)
{
    std::size_t const n = points.size();
    if (n == 0)
        throw InvalidArgument("dot product set of an empty set");
    require_pairs(n, budget);
    std::uint64_t const p = points.field().p();
    std::size_t const dim = points.dim();
    threads = std::max(1u, threads);

    std::atomic<bool> saturated{false};
    std::vector<std::vector<char>> hits(threads, std::vector<char>(p, 0));

    // Rows are dealt round-robin so the triangular workload stays balanced.
    auto work = [&](unsigned t) {
        auto& seen = hits[t];
        std::uint64_t distinct = 0;
        for (std::size_t i = t; i < n && !saturated.load(std::memory_order_relaxed);
             i += threads)
        {
            auto const x = points.point(i);
            for (std::size_t j = i; j < n; ++j)
            {
                auto const y = points.point(j);
                std::uint64_t v = 0;
                for (std::size_t k = 0; k < dim; ++k)
                    v += x[k] * y[k] % p;
                v %= p;
                if (!seen[v])
                {
                    seen[v] = 1;
                    if (++distinct == p)
                    {
                        saturated.store(true, std::memory_order_relaxed);
                        return;
                    }
                }
            }
        }
    };

    if (threads == 1)
    {
        work(0);
    }
    else
    {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(work, t);
        for (auto& th : pool)
            th.join();
    }

    std::vector<std::uint64_t> out;
    for (std::uint64_t v = 0; v < p; ++v)
    {
        bool const any = saturated.load()
                         || std::any_of(hits.begin(), hits.end(),
                                        [v](auto const& h) { return h[v] != 0; });
        if (any)
            out.push_back(v);
    }
    return out;
}

//---------------------------------------------------------------------------//
ScanResult threshold_scan(PrimeField const& field, std::size_t d,
                          std::span<std::uint64_t const> sizes, int trials,
                          std::uint64_t seed, FieldBudget const& budget)
{
    if (d < 2)
        throw InvalidArgument("paraboloid needs d >= 2");
    if (trials < 1)
        throw InvalidArgument("trials must be positive");
    std::uint64_t const population = power(field.p(), d - 1);
    require_points(population, budget);
    double const dd = static_cast<double>(d);
    double const threshold = std::pow(static_cast<double>(field.p()), dd / 2 - 1 / (2 * dd));

    Rng rng(seed);
    ScanResult result;
    for (auto size : sizes)
    {
        if (size < 1 || size > population)
            throw InvalidArgument("subset size must lie in [1, p^{d-1}]");
        require_pairs(size, budget);
        ScanRow row;
        row.size = size;
        row.normalized = static_cast<double>(size) / threshold;
        row.min_ratio = INFINITY;
        row.max_ratio = 0;
        double total = 0;
        for (int trial = 0; trial < trials; ++trial)
        {
            FpPointSet subset(field, d);
            subset.reserve(size);
            for (auto idx : sample_without_replacement(rng, population, size))
                subset.insert(paraboloid_point(field, d, idx));
            auto const pi = dot_product_set(subset, 1, budget).size();
            result.samples.push_back({size, trial, pi});
            double const ratio = static_cast<double>(pi) / static_cast<double>(field.p());
            row.min_ratio = std::min(row.min_ratio, ratio);
            row.max_ratio = std::max(row.max_ratio, ratio);
            total += ratio;
        }
        row.mean_ratio = total / trials;
        result.rows.push_back(row);
    }
    return result;
}

FpPointSet isotropic_vectors(PrimeField const& field, std::size_t d, FieldBudget const& budget)
{
    if (d < 1)
        throw InvalidArgument("dimension must be positive");
    std::uint64_t const p = field.p();
    std::uint64_t const count = power(p, d);
    require_points(count, budget);
    FpPointSet out(field, d);
    std::vector<std::uint64_t> v(d);
    for (std::uint64_t i = 1; i < count; ++i)
    {
        std::uint64_t rest = i;
        std::uint64_t norm = 0;
        for (std::size_t k = d; k-- > 0;)
        {
            v[k] = rest % p;
            rest /= p;
            norm = (norm + v[k] * v[k]) % p;
        }
        if (norm == 0)
            out.insert(v);
    }
    return out;
}

}  // namespace paradot
