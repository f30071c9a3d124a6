#pragma once

#include <cstdint>

#include "crossfam/family.hpp"
#include "crossfam/geometry.hpp"

namespace crossfam {

// Guaranteed sizes; every constructor returns at least this many members.
namespace bounds {
std::int64_t p3_crossing(std::size_t n);               // floor(sqrt(n/2+1) - 1)
std::int64_t k1t_crossing(std::size_t n, int t);       // ceil(n/6)-1 for t<=4, floor(n/(t+1)) for t>=5
std::int64_t k4_crossing(std::size_t n);               // floor(n/4) - 6
std::int64_t kt_crossing(std::size_t n, int t);        // min(floor(n/t), floor(n/4) - 6)
std::int64_t p3_intersecting(std::size_t n);           // floor(w/2 * floor(n/12)), w = floor(sqrt(n/12))
std::int64_t p3_intersecting_colored(std::size_t n);   // floor(w/2) * floor(n/12)
std::int64_t k3_intersecting(std::size_t n);           // floor((n-1)/2)
std::int64_t p3_crossing_colored(std::size_t n);       // floor((sqrt(n+1)-1)/4)
std::int64_t k1t_intersecting(std::size_t n, int t);   // floor(n^2/36)
}  // namespace bounds

Family p3_crossing_family(const PointSet& ps);
Family k13_crossing_family(const PointSet& ps);
Family k1t_crossing_family(const PointSet& ps, int t);
Family k4_crossing_family(const PointSet& ps);
Family kt_crossing_family(const PointSet& ps, int t);
Family p3_intersecting_family(const PointSet& ps);
Family p3_intersecting_family_bipartite(const PointSet& red, const PointSet& blue);
Family k3_intersecting_family(const PointSet& ps);
Family p3_crossing_family_bipartite(const PointSet& red, const PointSet& blue);
Family k1t_intersecting_family(const PointSet& ps, int t);

// Splits a colored point set into its red and blue parts.
std::pair<PointSet, PointSet> split_colors(const PointSet& ps);

// Dispatch on pattern and kind; colored input selects the bipartite P3 variants.
Family construct(const PointSet& ps, const Pattern& pattern, FamilyKind kind);

}  // namespace crossfam
