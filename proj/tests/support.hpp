#pragma once

#include <random>
#include <vector>

#include "crossfam/geometry.hpp"

namespace testsupport {

using crossfam::Point;

inline std::vector<Point> random_points(std::size_t n, std::mt19937_64& rng, crossfam::Coord box = 1000) {
    std::uniform_int_distribution<crossfam::Coord> c(-box, box);
    std::vector<Point> pts;
    while (pts.size() < n) {
        Point p{static_cast<int>(pts.size()), c(rng), c(rng)};
        bool ok = true;
        for (std::size_t i = 0; i < pts.size() && ok; ++i) {
            if (pts[i].x == p.x && pts[i].y == p.y) ok = false;
            for (std::size_t j = i + 1; j < pts.size() && ok; ++j) {
                long long d = (pts[j].x - pts[i].x) * (p.y - pts[i].y) - (pts[j].y - pts[i].y) * (p.x - pts[i].x);
                if (d == 0) ok = false;
            }
        }
        if (ok) pts.push_back(p);
    }
    return pts;
}

// Sign of the determinant in plain long double; exact for the small test boxes.
inline int naive_orient(const Point& a, const Point& b, const Point& c) {
    long long d = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return d > 0 ? 1 : (d < 0 ? -1 : 0);
}

inline int naive_side(long long a, long long b, long long c, const Point& p) {
    long long v = a * p.x + b * p.y + c;
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

}  // namespace testsupport
