#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "crossfam/family.hpp"
#include "crossfam/geometry.hpp"
#include "crossfam/order_types.hpp"

namespace crossfam {

// Largest n searched exhaustively without an explicit limit.
inline constexpr std::size_t kCrossingGuard = 12;
inline constexpr std::size_t kIntersectingGuard = 9;
inline constexpr std::size_t kIntersectingK2Guard = 12;
inline constexpr std::size_t kConvexGuard = 15;

struct SolveOptions {
    // Stop as soon as a family of this size is found.
    std::optional<std::size_t> limit;
    // Search beyond the guard without a limit.
    bool unsafe_large = false;
};

struct SolveResult {
    Pattern pattern;
    FamilyKind kind = FamilyKind::Crossing;
    std::size_t max_size = 0;
    Family witness;
    std::uint64_t explored = 0;
    // True when the search stopped at the limit; max_size is then a lower bound.
    bool limit_reached = false;
};

// Every subgraph of the complete drawing on ps isomorphic to the pattern, in a
// fixed order.
std::vector<Subgraph> enumerate_copies(const PointSet& ps, const Pattern& pattern);

SolveResult max_crossing_family(const PointSet& ps, const Pattern& pattern, const SolveOptions& opt = {});
SolveResult max_intersecting_family(const PointSet& ps, const Pattern& pattern, const SolveOptions& opt = {});
SolveResult max_family(const PointSet& ps, const Pattern& pattern, FamilyKind kind, const SolveOptions& opt = {});

struct ConvexSubsetResult {
    std::size_t size = 0;
    std::vector<int> witness;  // ids in counter-clockwise hull order
};

// Largest subset in convex position; n <= kConvexGuard unless unsafe.
ConvexSubsetResult max_convex_subset(const PointSet& ps, bool unsafe_large = false);

enum class ScanTarget { Family, ConvexSubset };

struct ScanQuery {
    ScanTarget target = ScanTarget::Family;
    Pattern pattern;
    FamilyKind kind = FamilyKind::Crossing;
    std::size_t k = 0;  // a record violates when its maximum is below k
};

struct ScanReport {
    std::size_t total = 0;
    std::vector<std::size_t> violators;           // zero-based record indices, ascending
    std::map<std::size_t, std::size_t> histogram;  // maximum -> record count
};

// Exact maximum for one record under the query.
std::size_t scan_value(const PointSet& ps, const ScanQuery& q);

// Splits the records into contiguous ranges, one worker each. The report does
// not depend on the number of jobs. progress(done, total) is called from the
// calling thread.
ScanReport scan_order_types(const OrderTypeDb& db, const ScanQuery& q, unsigned jobs = 1,
                            const std::function<void(std::size_t, std::size_t)>& progress = {});

}  // namespace crossfam
