#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crossfam/geometry.hpp"

namespace crossfam {

enum class Monotone { Ascending, Descending };

struct MonotoneResult {
    std::vector<std::size_t> indices;
    Monotone direction = Monotone::Ascending;
    std::size_t size() const { return indices.size(); }
};

// A longest strictly monotone subsequence; ascending wins ties. Among optimal
// ones the lexicographically smallest index sequence is returned.
MonotoneResult monotone_subsequence(std::span<const std::int64_t> values);
// Length of the longest strictly increasing subsequence.
std::size_t longest_increasing(std::span<const std::int64_t> values);

// Exactly k points strictly on the positive side of a line orthogonal to
// direction; a critical direction is turned slightly counter-clockwise.
Line halving_line(std::span<const Point> pts, std::size_t k, Vec direction);

struct PartitionResult {
    std::vector<Line> lines;
    std::map<std::string, std::vector<int>> regions;
    std::vector<int> discarded;
    Vec frame{1, 0};  // normal of the parallel lines, when there are any

    std::size_t count(const std::string& label) const;
    std::vector<int> at(const std::string& label) const;
};

// Recounts every region from line signs; throws VerificationFailure on mismatch.
void check_partition(const PointSet& ps, const PartitionResult& r);

// Two parallel lines with normal d (l1 below l2 along d) and a transversal l3.
// S1..S6 run clockwise from top-left: TL, TM, TR, BR, BM, BL, where top is the
// positive side of l3.
struct ParallelFrame {
    Line l1, l2, l3;
    int region(const Point& p) const;  // 0..5 for S1..S6, -1 if on a line
};

PartitionResult make_parallel_result(std::span<const Point> pts, const ParallelFrame& f, Vec d);

// Region minimums in S1..S6 order.
using SixCounts = std::array<std::size_t, 6>;

struct ParallelSearchOptions {
    std::size_t max_directions = 1500;
};

// Directions first, then transversals: for each scanned direction every
// transversal position is examined and the parallel offsets are chosen
// optimally. Returns nothing when no scanned direction meets req.
std::optional<PartitionResult> find_parallel_partition(std::span<const Point> pts, const SixCounts& req,
                                                       const ParallelSearchOptions& opt = {});

// Six regions of at least ceil(n/6)-1 points. Throws SearchFailure.
PartitionResult parallel_partition_six(const PointSet& ps);

// w = floor(sqrt(n/2+1) - 1).
std::size_t corner_width(std::size_t n);

// S1, S3, S4, S6 have exactly w points and S2 at least floor(n/2)-2w.
PartitionResult corner_partition(const PointSet& ps);

struct SectorResult {
    PartitionResult partition;  // regions S1..S6 in counter-clockwise order
    // Common point of the three lines is (cx/4, cy/4).
    Coord cx = 0;
    Coord cy = 0;
};

// Three concurrent lines with every open sector holding at least q points.
// Throws SearchFailure.
SectorResult six_sector_partition(const PointSet& ps, std::size_t q);
SectorResult six_sector_partition(std::span<const Point> pts, std::size_t q);

// Largest q for which the given centre admits three lines with q per sector.
std::size_t sector_capacity(std::span<const Point> pts, Coord cx, Coord cy);

}  // namespace crossfam
