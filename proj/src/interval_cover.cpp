#include "paradot/interval_cover.hpp"

#include <algorithm>

namespace paradot
{
bool IntervalCover::contains(double t) const
{
    auto it = std::upper_bound(intervals.begin(), intervals.end(), t,
                               [](double v, Interval const& iv) { return v < iv.lo; });
    if (it == intervals.begin())
        return false;
    return t <= std::prev(it)->hi;
}

IntervalCover merge_intervals(std::vector<Interval> raw)
{
    std::sort(raw.begin(), raw.end(),
              [](Interval const& a, Interval const& b) { return a.lo < b.lo; });
    IntervalCover cover;
    for (auto const& iv : raw)
    {
        if (!cover.intervals.empty() && iv.lo <= cover.intervals.back().hi)
            cover.intervals.back().hi = std::max(cover.intervals.back().hi, iv.hi);
        else
            cover.intervals.push_back(iv);
    }
    cover.count = cover.intervals.size();
    for (auto const& iv : cover.intervals)
        cover.total_length += iv.hi - iv.lo;
    return cover;
}

}  // namespace paradot
