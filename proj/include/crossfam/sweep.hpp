#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "crossfam/geometry.hpp"

namespace crossfam {

// Representative of the open arc from critical direction u counter-clockwise
// to the next critical direction v.
Vec arc_representative(Vec u, Vec v);

inline Coord project(Vec n, const Point& p) { return static_cast<Coord>(dot(n, p)); }

// Threshold line between sorted projections lo < hi along n; positive side
// holds projections above the split.
Line split_line(Vec n, Coord lo, Coord hi);

// Line along n with the top k of order (ascending projection) on its positive side.
Line top_k_line(std::span<const Point> pts, const std::vector<int>& order, Vec n, std::size_t k);

// Indices of pts sorted by projection onto n; throws GeometryError on ties.
std::vector<int> order_along(std::span<const Point> pts, Vec n);

// A direction near n whose projection order has no ties.
Vec generic_direction(std::span<const Point> pts, Vec n);

// Replays the projection order of a point set while the direction turns a full
// circle. Each critical event swaps two adjacent entries; after each batch of
// same-angle events the visitor sees one arc.
class RotationalSweep {
public:
    explicit RotationalSweep(std::span<const Point> pts);

    std::size_t size() const { return pts_.size(); }
    std::span<const Point> points() const { return pts_; }
    Vec start_direction() const { return start_; }
    const std::vector<int>& initial_order() const { return initial_; }

    // Visitor: void swapped(const std::vector<int>& order, std::size_t pos)
    // after positions pos and pos+1 exchange; bool arc(const std::vector<int>&
    // order, Vec rep) returns true to stop. Returns true if stopped.
    template <class Visitor>
    bool run(Visitor& v) const;

private:
    struct Event {
        Vec dir;
        int i;
        int j;
    };
    std::span<const Point> pts_;
    std::vector<Event> events_;
    std::vector<std::size_t> group_end_;
    Vec start_{1, 0};
    std::vector<int> initial_;
};

template <class Visitor>
bool RotationalSweep::run(Visitor& v) const {
    std::vector<int> order = initial_;
    std::vector<std::size_t> pos(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = k;
    if (v.arc(order, start_)) return true;
    std::size_t begin = 0;
    for (std::size_t g = 0; g + 1 < group_end_.size(); ++g) {
        for (std::size_t e = begin; e < group_end_[g]; ++e) {
            const Event& ev = events_[e];
            std::size_t p = std::min(pos[ev.i], pos[ev.j]);
            std::swap(order[p], order[p + 1]);
            pos[order[p]] = p;
            pos[order[p + 1]] = p + 1;
            v.swapped(order, p);
        }
        begin = group_end_[g];
        if (v.arc(order, arc_representative(events_[begin - 1].dir, events_[begin].dir))) return true;
    }
    return false;
}

// Line with exactly a points of A and b points of B on its positive side.
// Exists whenever A and B are line separable.
Line separated_cut_line(std::span<const Point> A, std::span<const Point> B, std::size_t a, std::size_t b);

}  // namespace crossfam
