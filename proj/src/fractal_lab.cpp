#include "paradot/fractal_lab.hpp"

#include <algorithm>
#include <cmath>

#include "paradot/errors.hpp"
#include "paradot/numeric.hpp"

namespace paradot
{
namespace
{
constexpr std::uint64_t kPairBudget = std::uint64_t{1} << 36;
constexpr std::uint64_t kBitBudget = std::uint64_t{1} << 33;
constexpr std::size_t kIntervalBudget = std::size_t{1} << 24;
constexpr int kMaxDyadicExponent = 60;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw ScaleOverflow("integer scale exceeds 64 bits");
    return out;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp)
{
    std::uint64_t out = 1;
    for (unsigned i = 0; i < exp; ++i)
        out = checked_mul(out, base);
    return out;
}

void validate_params(LatticeApproxParams const& p)
{
    if (!(p.s > 0 && p.s < 1))
        throw InvalidArgument("s must lie in (0, 1)");
    if (p.q < 2)
        throw InvalidArgument("q must be at least 2");
    if (p.dim < 1)
        throw InvalidArgument("dim must be positive");
    if (p.depth < 1)
        throw InvalidArgument("depth must be positive");
}

double half_width_of(std::uint64_t q, double s)
{
    // q^{-1/s} must stay a normal double with room for the lattice offsets.
    if (std::log2(static_cast<double>(q)) / s > 1000)
        throw ScaleOverflow("q^{1/s} exceeds the representable range");
    return std::pow(static_cast<double>(q), -1 / s);
}

// Numerators of every cell, flattened.
std::vector<std::uint64_t> all_numerators(CellSet const& cells)
{
    std::vector<std::uint64_t> out;
    out.reserve(cells.size() * cells.dim());
    for (std::uint64_t i = 0; i < cells.size(); ++i)
    {
        auto const n = cells.numerators(i);
        out.insert(out.end(), n.begin(), n.end());
    }
    return out;
}

void require_pair_budget(CellSet const& cells)
{
    std::uint64_t const n = cells.size();
    if (n > (std::uint64_t{1} << 32) || n * (n + 1) / 2 > kPairBudget)
        throw SizeOverflow("too many cell pairs to enumerate");
}

class BitSet
{
  public:
    explicit BitSet(std::uint64_t bits)
    {
        if (bits > kBitBudget)
            throw SizeOverflow("lattice value range too large");
        words_.assign(bits / 64 + 1, 0);
    }
    void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

    template<class F>
    void for_each(F&& f) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w)
        {
            std::uint64_t word = words_[w];
            while (word)
            {
                int const b = __builtin_ctzll(word);
                f(static_cast<std::uint64_t>(w) * 64 + static_cast<std::uint64_t>(b));
                word &= word - 1;
            }
        }
    }

  private:
    std::vector<std::uint64_t> words_;
};

IntervalCover cover_from_lattice(BitSet const& seen, double scale, double radius)
{
    IntervalCover cover;
    cover.half_width = radius;
    cover.lattice_scale = scale;
    seen.for_each([&](std::uint64_t v) {
        double const t = static_cast<double>(v) / scale;
        Interval const iv{t - radius, t + radius};
        ++cover.lattice_count;
        if (!cover.intervals.empty() && iv.lo <= cover.intervals.back().hi)
            cover.intervals.back().hi = iv.hi;
        else
            cover.intervals.push_back(iv);
    });
    cover.count = cover.intervals.size();
    for (auto const& iv : cover.intervals)
        cover.total_length += iv.hi - iv.lo;
    cover.lattice_length = static_cast<double>(cover.lattice_count) * 2 * radius;
    return cover;
}
}  // namespace

//---------------------------------------------------------------------------//
std::vector<std::uint64_t> q_sequence(LatticeApproxParams const& params)
{
    validate_params(params);
    auto const depth = static_cast<std::size_t>(params.depth);
    if (params.q_sequence)
    {
        auto const& seq = *params.q_sequence;
        if (seq.size() < depth)
            throw InvalidArgument("explicit q-sequence shorter than depth");
        if (seq.front() < 2)
            throw InvalidArgument("q_1 must be at least 2");
        for (std::size_t k = 1; k < depth; ++k)
        {
            // q_k^k overflowing means no 64-bit q_{k+1} can exceed it.
            if (!(seq[k] > checked_pow(seq[k - 1], static_cast<unsigned>(k))))
                throw InvalidArgument("q-sequence violates q_{k+1} > q_k^k");
        }
        return {seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(depth)};
    }

    auto const resolve = static_cast<unsigned>(std::ceil(1 / params.s)) + 1;
    std::vector<std::uint64_t> seq{params.q};
    for (std::size_t k = 1; k < depth; ++k)
    {
        std::uint64_t const prev = seq.back();
        std::uint64_t const growth = checked_pow(prev, static_cast<unsigned>(k));
        if (growth == ~std::uint64_t{0})
            throw ScaleOverflow("q_k^k + 1 exceeds 64 bits");
        seq.push_back(std::max(growth + 1, checked_pow(prev, resolve)));
    }
    return seq;
}

CellSet::CellSet(int level, std::uint64_t q, double s, std::size_t dim)
    : level_(level), q_(q), s_(s), dim_(dim)
{
    if (q_ < 2)
        throw InvalidArgument("q must be at least 2");
    if (!(s_ > 0 && s_ < 1))
        throw InvalidArgument("s must lie in (0, 1)");
    if (dim_ < 1)
        throw InvalidArgument("dim must be positive");
    half_width_ = half_width_of(q_, s_);
    size_ = 1;
    for (std::size_t i = 0; i < dim_; ++i)
    {
        if (__builtin_mul_overflow(size_, q_ + 1, &size_))
            throw SizeOverflow("cell count exceeds 64 bits");
    }
}

std::vector<std::uint64_t> CellSet::numerators(std::uint64_t i) const
{
    if (i >= size_)
        throw InvalidArgument("cell index out of range");
    std::vector<std::uint64_t> n(dim_);
    for (std::size_t k = dim_; k-- > 0;)
    {
        n[k] = i % (q_ + 1);
        i /= q_ + 1;
    }
    return n;
}

Point CellSet::center(std::uint64_t i) const
{
    auto const n = numerators(i);
    Point c(dim_);
    for (std::size_t k = 0; k < dim_; ++k)
        c[k] = static_cast<double>(n[k]) / static_cast<double>(q_);
    return c;
}

CellSet build_level(LatticeApproxParams const& params, int k)
{
    validate_params(params);
    if (k < 1 || k > params.depth)
        throw InvalidArgument("level must lie in 1..depth");
    auto const seq = q_sequence(params);
    return CellSet(k, seq[static_cast<std::size_t>(k - 1)], params.s, params.dim);
}

//---------------------------------------------------------------------------//
double euclidean_cover_radius(std::size_t dim, double h)
{
    // |x_i y_i - c_i e_i| <= |x_i||y_i - e_i| + |e_i||x_i - c_i| <= (1 + h) h + h
    return static_cast<double>(dim) * h * (2 + h);
}

double paraboloid_cover_radius(std::size_t dim, double h)
{
    // ||x|^2|y|^2 - |c|^2|e|^2| <= |x|^2 ||y|^2 - |e|^2| + |e|^2 ||x|^2 - |c|^2|
    // with |x|^2 <= dim (1 + h)^2, |e|^2 <= dim, ||x|^2 - |c|^2| <= dim h (2 + h).
    double const d = static_cast<double>(dim);
    return d * h * (2 + h) * (1 + d * (1 + h) * (1 + h) + d);
}

std::uint64_t euclidean_count_bound(std::size_t dim, std::uint64_t q)
{
    return checked_mul(dim + 1, checked_mul(q, q));
}

std::uint64_t paraboloid_count_bound(std::size_t dim, std::uint64_t q)
{
    return checked_mul(dim + dim * dim + 1, checked_pow(q, 4));
}

IntervalCover dot_cover_euclidean(CellSet const& cells)
{
    require_pair_budget(cells);
    std::size_t const dim = cells.dim();
    std::uint64_t const q = cells.q();
    std::uint64_t const q2 = checked_mul(q, q);
    BitSet seen(checked_mul(dim, q2) + 1);

    auto const nums = all_numerators(cells);
    std::uint64_t const n = cells.size();
    for (std::uint64_t i = 0; i < n; ++i)
    {
        std::uint64_t const* a = &nums[i * dim];
        for (std::uint64_t j = i; j < n; ++j)
        {
            std::uint64_t const* b = &nums[j * dim];
            std::uint64_t v = 0;
            for (std::size_t k = 0; k < dim; ++k)
                v += a[k] * b[k];
            seen.set(v);
        }
    }
    return cover_from_lattice(seen, static_cast<double>(q2),
                              euclidean_cover_radius(dim, cells.half_width()));
}

IntervalCover dot_cover_paraboloid(CellSet const& cells)
{
    require_pair_budget(cells);
    std::size_t const dim = cells.dim();
    std::uint64_t const q = cells.q();
    std::uint64_t const q2 = checked_mul(q, q);
    std::uint64_t const q4 = checked_mul(q2, q2);
    // Values q^2 (n·m) + |n|^2 |m|^2 lie in [0, (dim + dim^2) q^4].
    BitSet seen(checked_mul(dim + dim * dim, q4) + 1);

    auto const nums = all_numerators(cells);
    std::uint64_t const n = cells.size();
    std::vector<std::uint64_t> norms(n);
    for (std::uint64_t i = 0; i < n; ++i)
    {
        for (std::size_t k = 0; k < dim; ++k)
            norms[i] += nums[i * dim + k] * nums[i * dim + k];
    }
    for (std::uint64_t i = 0; i < n; ++i)
    {
        std::uint64_t const* a = &nums[i * dim];
        for (std::uint64_t j = i; j < n; ++j)
        {
            std::uint64_t const* b = &nums[j * dim];
            std::uint64_t dotv = 0;
            for (std::size_t k = 0; k < dim; ++k)
                dotv += a[k] * b[k];
            seen.set(q2 * dotv + norms[i] * norms[j]);
        }
    }
    return cover_from_lattice(seen, static_cast<double>(q4),
                              paraboloid_cover_radius(dim, cells.half_width()));
}

SoundnessResult check_cover_soundness(CellSet const& cells, IntervalCover const& cover,
                                      bool lifted, int samples, std::uint64_t seed)
{
    Rng rng(seed);
    double const h = cells.half_width();
    auto sample_point = [&] {
        Point x = cells.center(rng.below(cells.size()));
        for (auto& c : x)
            c = std::clamp(c + rng.uniform(-h, h), 0.0, 1.0);
        return x;
    };

    SoundnessResult result;
    for (int k = 0; k < samples; ++k)
    {
        Point const x = sample_point();
        Point const y = sample_point();
        double t = dot(x, y);
        if (lifted)
            t += squared_norm(x) * squared_norm(y);
        ++result.samples;
        if (cover.contains(t))
            continue;
        ++result.misses;
        double margin = INFINITY;
        for (auto const& iv : cover.intervals)
            margin = std::min(margin, t < iv.lo ? iv.lo - t : t - iv.hi);
        result.worst_margin = std::max(result.worst_margin, margin);
    }
    return result;
}

//---------------------------------------------------------------------------//
std::vector<Interval> lattice_factor(LatticeApproxParams const& params)
{
    auto const seq = q_sequence(params);
    std::vector<Interval> current{{0.0, 1.0}};
    for (std::uint64_t q : seq)
    {
        long double const h = half_width_of(q, params.s);
        long double const qq = static_cast<long double>(q);
        std::vector<Interval> next;
        for (auto const& iv : current)
        {
            long double const a = iv.lo, b = iv.hi;
            auto const n_lo = static_cast<long long>(std::floor((a - h) * qq)) - 1;
            auto const n_hi = static_cast<long long>(std::ceil((b + h) * qq)) + 1;
            for (long long n = std::max(n_lo, 0LL); n <= n_hi; ++n)
            {
                long double const c = static_cast<long double>(n) / qq;
                long double const lo = std::max(a, c - h);
                long double const hi = std::min(b, c + h);
                if (lo > hi)
                    continue;
                next.push_back({static_cast<double>(lo), static_cast<double>(hi)});
                if (next.size() > kIntervalBudget)
                    throw SizeOverflow("lattice factor has too many intervals");
            }
        }
        current = std::move(next);
    }
    return current;
}

std::vector<double> resolved_dyadic_scales(LatticeApproxParams const& params)
{
    auto const seq = q_sequence(params);
    double const bits = std::log2(static_cast<double>(seq.back())) / params.s;
    if (bits > kMaxDyadicExponent)
        throw ScaleOverflow("finest half-width is below 2^-60");
    int const finest = static_cast<int>(std::floor(bits));
    std::vector<double> scales;
    for (int j = 0; j <= finest; ++j)
        scales.push_back(std::ldexp(1.0, -j));
    return scales;
}

std::uint64_t box_count_1d(std::span<Interval const> intervals, double eps)
{
    if (!(eps > 0))
        throw InvalidArgument("box side must be positive");
    long double const inv = 1.0L / static_cast<long double>(eps);
    std::uint64_t count = 0;
    long long last = -1;
    for (auto const& iv : intervals)
    {
        long double const lo = iv.lo * inv;
        long double const hi = iv.hi * inv;
        auto const first = static_cast<long long>(std::floor(lo));
        auto end = static_cast<long long>(std::floor(hi));
        // A right endpoint on a grid line does not enter the next box.
        if (hi == std::floor(hi) && end > first)
            --end;
        long long const start = std::max(first, last + 1);
        if (end >= start)
        {
            count += static_cast<std::uint64_t>(end - start + 1);
            last = end;
        }
    }
    return count;
}

double box_dimension_of(std::span<Interval const> factor, std::size_t dim,
                        std::span<double const> scales)
{
    if (scales.size() < 4)
        throw InsufficientScales("box counting needs at least four scales");
    std::vector<double> x, y;
    for (double eps : scales)
    {
        auto const n = static_cast<double>(box_count_1d(factor, eps));
        x.push_back(-std::log(eps));
        y.push_back(static_cast<double>(dim) * std::log(n));
    }
    return fit_line(x, y).slope;
}

double box_dimension_estimate(LatticeApproxParams const& params,
                              std::span<double const> scales)
{
    auto const seq = q_sequence(params);
    double const finest = half_width_of(seq.back(), params.s);
    std::vector<double> kept;
    for (double eps : scales)
    {
        if (eps >= finest && eps <= 1)
            kept.push_back(eps);
    }
    if (kept.size() < 4)
        throw InsufficientScales("fewer than four scales within the resolved depth");
    auto const factor = lattice_factor(params);
    return box_dimension_of(factor, params.dim, kept);
}

}  // namespace paradot
