#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace paradot
{
struct Interval
{
    double lo = 0;
    double hi = 0;
};

/*!
 * Cover of a subset of R by closed intervals, merged so the statistics are
 * canonical.
 *
 * Lattice covers also keep the pre-merge view: lattice_count intervals of
 * common length 2 * half_width centred on achieved lattice values.
 */
struct IntervalCover
{
    std::vector<Interval> intervals;
    std::size_t count = 0;
    double total_length = 0;

    std::uint64_t lattice_count = 0;
    double lattice_length = 0;
    double half_width = 0;
    //! Denominator of the lattice (q^2 or q^4).
    double lattice_scale = 0;

    //! Whether t lies in one of the merged intervals.
    bool contains(double t) const;
};

//! Merge closed intervals (any order) into a sorted disjoint cover.
IntervalCover merge_intervals(std::vector<Interval> raw);

}  // namespace paradot
