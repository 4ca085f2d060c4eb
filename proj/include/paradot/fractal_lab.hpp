#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <type_traits>
#include <vector>

#include "paradot/interval_cover.hpp"
#include "paradot/point.hpp"

namespace paradot
{
/*!
 * Parameters of the nested lattice-approximation sets.
 *
 * Level k keeps the points of [0,1]^dim whose coordinates all lie within
 * q_k^{-1/s} of the lattice (1/q_k) Z.
 */
struct LatticeApproxParams
{
    double s = 1.0 / 3.0;
    std::uint64_t q = 2;
    std::size_t dim = 2;
    int depth = 1;
    //! Explicit scale sequence; must have at least depth entries.
    std::optional<std::vector<std::uint64_t>> q_sequence;
};

/*!
 * Scale sequence q_1..q_depth.
 *
 * Default: q_1 = q, q_{k+1} = max(q_k^k + 1, q_k^{ceil(1/s) + 1}). The second
 * term keeps level k+1 cells resolved inside level k cells. Explicit sequences
 * are validated against q_{k+1} > q_k^k. Throws ScaleOverflow past 2^63.
 */
std::vector<std::uint64_t> q_sequence(LatticeApproxParams const& params);

//---------------------------------------------------------------------------//
/*!
 * All cells of one level meeting [0,1]^dim: boxes of half-width q^{-1/s}
 * centred at n / q for n in {0..q}^dim, enumerated in mixed radix order.
 */
class CellSet
{
  public:
    CellSet(int level, std::uint64_t q, double s, std::size_t dim);

    int level() const { return level_; }
    std::uint64_t q() const { return q_; }
    double s() const { return s_; }
    std::size_t dim() const { return dim_; }
    double half_width() const { return half_width_; }
    std::uint64_t size() const { return size_; }

    //! Integer numerators of cell i.
    std::vector<std::uint64_t> numerators(std::uint64_t i) const;
    Point center(std::uint64_t i) const;

  private:
    int level_;
    std::uint64_t q_;
    double s_;
    std::size_t dim_;
    double half_width_;
    std::uint64_t size_;
};

//! Level k (1-based) of the hierarchy; ScaleOverflow when q_k^{1/s} is unrepresentable.
CellSet build_level(LatticeApproxParams const& params, int k);

//---------------------------------------------------------------------------//
/*!
 * Half-width bounding |x·y - c·e| over points x, y in cells (centres c, e in
 * [0,1]^dim) of half-width h: dim h (2 + h).
 */
double euclidean_cover_radius(std::size_t dim, double h);

/*!
 * Same bound for lifted points (x, |x|^2):
 * dim h (2 + h) (1 + dim (1 + h)^2 + dim).
 */
double paraboloid_cover_radius(std::size_t dim, double h);

//! Cover of the dot products of a level by intervals around n / q^2.
IntervalCover dot_cover_euclidean(CellSet const& cells);

//! Cover of the lifted dot products of a level by intervals around n / q^4.
IntervalCover dot_cover_paraboloid(CellSet const& cells);

//! Upper bound C_2 q^2 (resp. C_2 q^4) on the number of lattice values.
std::uint64_t euclidean_count_bound(std::size_t dim, std::uint64_t q);
std::uint64_t paraboloid_count_bound(std::size_t dim, std::uint64_t q);

struct SoundnessResult
{
    int samples = 0;
    int misses = 0;
    double worst_margin = 0;  //!< largest distance of a dot product outside the cover
};

/*!
 * Sample point pairs inside cells (clipped to [0,1]^dim) and test that their
 * dot products (lifted when \c lifted is set) fall in the cover.
 */
SoundnessResult check_cover_soundness(CellSet const& cells, IntervalCover const& cover,
                                      bool lifted, int samples, std::uint64_t seed);

//---------------------------------------------------------------------------//
/*!
 * One-dimensional factor of the depth-K set, as sorted disjoint intervals.
 *
 * The full set is the dim-fold product of this factor.
 */
std::vector<Interval> lattice_factor(LatticeApproxParams const& params);

//! Dyadic scales 2^{-j}, j = 0..J, with 2^{-J} no finer than the last half-width.
std::vector<double> resolved_dyadic_scales(LatticeApproxParams const& params);

//! Number of grid boxes of side eps meeting a union of sorted disjoint intervals.
std::uint64_t box_count_1d(std::span<Interval const> intervals, double eps);

/*!
 * Box-counting estimate for the product set (factor)^dim: least-squares
 * slope of log N(eps) against log(1/eps) with N = N_1d^dim.
 */
double box_dimension_of(std::span<Interval const> factor, std::size_t dim,
                        std::span<double const> scales);

/*!
 * Box-counting estimate of the depth-K set.
 *
 * Scales finer than the last half-width or coarser than 1 are dropped;
 * fewer than four remaining throws InsufficientScales.
 */
double box_dimension_estimate(LatticeApproxParams const& params,
                              std::span<double const> scales);

inline double box_dimension_estimate(LatticeApproxParams const& params)
{
    auto const scales = resolved_dyadic_scales(params);
    return box_dimension_estimate(params, scales);
}

//---------------------------------------------------------------------------//
//! (x, x^2)·(y, y^2) - [(xy + 1/2)^2 - 1/4]; identically zero.
template<class T>
T parabola_identity_check(T const& x, T const& y)
{
    T const dot = x * y + (x * x) * (y * y);
    T const half = T(1) / T(2);
    T const sq = (x * y + half) * (x * y + half);
    return dot - (sq - half * half);
}

}  // namespace paradot
