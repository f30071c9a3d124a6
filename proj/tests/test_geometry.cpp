#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "crossfam/geometry.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace crossfam;
using testsupport::naive_orient;
using testsupport::random_points;

namespace {

Point P(int id, Coord x, Coord y) { return {id, x, y}; }

// Point is a hull vertex iff some line through it has every other point strictly on one side;
// such a line can be rotated until it touches a second point.
std::set<int> hull_oracle(const std::vector<Point>& pts) {
    std::set<int> out;
    if (pts.size() <= 3) {
        for (const Point& p : pts) out.insert(p.id);
        return out;
    }
    for (const Point& p : pts)
        for (const Point& q : pts) {
            if (p.id == q.id) continue;
            bool all_left = true;
            for (const Point& r : pts)
                if (r.id != p.id && r.id != q.id && naive_orient(p, q, r) <= 0) all_left = false;
            if (all_left) {
                out.insert(p.id);
                out.insert(q.id);
            }
        }
    return out;
}

}  // namespace

TEST_CASE("orientation basics") {
    CHECK(orientation(P(0, 0, 0), P(1, 1, 0), P(2, 0, 1)) == Orientation::CCW);
    CHECK(orientation(P(0, 0, 0), P(1, 1, 1), P(2, 2, 2)) == Orientation::Collinear);
    CHECK(orientation(P(0, 0, 0), P(1, 0, 1), P(2, 1, 0)) == Orientation::CW);
}

TEST_CASE("orientation is exact near the coordinate bound") {
    const Coord L = kCoordLimit;
    CHECK(orientation(P(0, -L, -L), P(1, L, L), P(2, L - 1, L)) == Orientation::CCW);
    CHECK(orientation(P(0, -L, -L), P(1, L, L), P(2, L, L - 1)) == Orientation::CW);
    CHECK(orientation(P(0, -L, -L), P(1, L, L), P(2, 0, 0)) == Orientation::Collinear);
}

TEST_CASE("orientation is antisymmetric") {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<Coord> c(-50, 50);
    for (int it = 0; it < 500; ++it) {
        Point a = P(0, c(rng), c(rng)), b = P(1, c(rng), c(rng)), d = P(2, c(rng), c(rng));
        int o = static_cast<int>(orientation(a, b, d));
        CHECK(o == naive_orient(a, b, d));
        CHECK(static_cast<int>(orientation(b, a, d)) == -o);
        CHECK(static_cast<int>(orientation(a, d, b)) == -o);
        CHECK(static_cast<int>(orientation(d, b, a)) == -o);
    }
}

TEST_CASE("segments_cross examples") {
    CHECK(segments_cross(P(0, 0, 0), P(1, 2, 2), P(2, 0, 2), P(3, 2, 0)));
    CHECK_FALSE(segments_cross(P(0, 0, 0), P(1, 2, 2), P(1, 2, 2), P(3, 4, 0)));
    CHECK_FALSE(segments_cross(P(0, 0, 0), P(1, 1, 0), P(2, 0, 1), P(3, 1, 1)));
    // Collinear overlap never counts.
    CHECK_FALSE(segments_cross(P(0, 0, 0), P(1, 2, 0), P(2, 1, 0), P(3, 3, 0)));
}

TEST_CASE("segments_cross is symmetric and false on shared ids") {
    std::mt19937_64 rng(2);
    for (int it = 0; it < 50; ++it) {
        auto pts = random_points(6, rng, 100);
        PointSet ps(pts);
        for (int a = 0; a < 6; ++a)
            for (int b = a + 1; b < 6; ++b)
                for (int c = 0; c < 6; ++c)
                    for (int d = c + 1; d < 6; ++d) {
                        Segment s(a, b), t(c, d);
                        CHECK(segments_cross(s, t, ps) == segments_cross(t, s, ps));
                        if (a == c || a == d || b == c || b == d) CHECK_FALSE(segments_cross(s, t, ps));
                    }
    }
}

TEST_CASE("general position") {
    CHECK(is_general_position(std::vector<Point>{P(0, 0, 0), P(1, 1, 0), P(2, 0, 1)}));
    CHECK_FALSE(is_general_position(std::vector<Point>{P(0, 0, 0), P(1, 1, 1), P(2, 2, 2), P(3, 0, 5)}));
    CHECK_THROWS_AS(PointSet(std::vector<Point>{P(0, 0, 0), P(1, 1, 1), P(2, 2, 2)}), GeometryError);
    CHECK_THROWS_AS(PointSet(std::vector<Point>{P(0, 0, 0), P(0, 1, 1)}), InputError);
    CHECK_THROWS_AS(PointSet(std::vector<Point>{P(0, kCoordLimit + 1, 0)}), InputError);
}

TEST_CASE("convex hull examples") {
    std::vector<Point> sq{P(0, 0, 0), P(1, 10, 0), P(2, 10, 10), P(3, 0, 10), P(4, 5, 4)};
    auto h = convex_hull(sq);
    CHECK(h == std::vector<int>{0, 1, 2, 3});
    std::vector<Point> tri{P(7, 0, 0), P(8, 3, 1), P(9, 1, 3)};
    CHECK(convex_hull(tri).size() == 3);
}

TEST_CASE("convex hull matches halfplane oracle") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 200; ++it) {
        std::size_t n = 1 + it % 20;
        auto pts = random_points(n, rng, 60);
        auto h = convex_hull(pts);
        std::set<int> got(h.begin(), h.end());
        CHECK(got.size() == h.size());
        CHECK(got == hull_oracle(pts));
        for (std::size_t i = 0; i + 2 < h.size() + 2 && h.size() >= 3; ++i) {
            if (i >= h.size()) break;
            const auto& ps = pts;
            auto at = [&](int id) { return *std::find_if(ps.begin(), ps.end(), [&](const Point& p) { return p.id == id; }); };
            CHECK(orientation(at(h[i]), at(h[(i + 1) % h.size()]), at(h[(i + 2) % h.size()])) == Orientation::CCW);
        }
    }
}

TEST_CASE("side counts") {
    std::vector<Point> two{P(0, 0, 0), P(1, 1, 0)};
    auto sc = side_counts(Line(2, 0, -1), two);
    CHECK(sc.left == 1);
    CHECK(sc.right == 1);
    auto all = side_counts(Line(0, 1, 100), two);
    CHECK(all.left == 2);
    CHECK(all.right == 0);
    CHECK_THROWS_AS(side_counts(Line(1, 0, 0), two), GeometryError);

    std::mt19937_64 rng(4);
    auto pts = random_points(10, rng);
    // Sort by a generic direction and cut between the 5th and 6th.
    std::vector<long long> key;
    for (auto& p : pts) key.push_back(1000003LL * p.x + p.y);
    std::vector<long long> sorted = key;
    std::sort(sorted.begin(), sorted.end());
    Line l(2 * 1000003LL, 2, -(sorted[4] + sorted[5]));
    int left = 0;
    for (auto& p : pts) left += testsupport::naive_side(l.a, l.b, l.c, p) > 0;
    CHECK(left == 5);
    CHECK(side_counts(l, pts).left == 5);
}

TEST_CASE("line through two points") {
    Line l = line_through(P(0, 0, 0), P(1, 4, 0));
    CHECK(l.side(P(2, 1, 1)) == 1);
    CHECK(l.side(P(3, 1, -1)) == -1);
    CHECK(l.side(P(4, 9, 0)) == 0);
}

TEST_CASE("rank sequence examples") {
    Point b = P(9, 0, -10);
    std::vector<Point> r{P(0, -1, 0), P(1, 0, 1), P(2, 1, 0)};
    CHECK(rank_sequence(b, r) == std::vector<int>{2, 1, 0});
    CHECK(rank_sequence(b, std::vector<Point>{P(5, 3, 3)}) == std::vector<int>{5});
    // b inside conv(r) has no linear angular order.
    CHECK_THROWS_AS(rank_sequence(P(9, 0, 0), std::vector<Point>{P(0, -5, -5), P(1, 5, -5), P(2, 0, 5)}),
                    GeometryError);
}

TEST_CASE("rank sequence agrees with an atan2 sort") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 200; ++it) {
        auto r = random_points(6, rng, 100);
        // A point far below every point of r sees r within an angle < pi.
        Point b = P(100, 0, -1000 - static_cast<Coord>(it));
        std::vector<Point> sorted = r;
        std::sort(sorted.begin(), sorted.end(), [&](const Point& p, const Point& q) {
            return std::atan2(double(p.y - b.y), double(p.x - b.x)) < std::atan2(double(q.y - b.y), double(q.x - b.x));
        });
        std::vector<int> want;
        for (auto& p : sorted) want.push_back(p.id);
        CHECK(rank_sequence(b, r) == want);
    }
}

TEST_CASE("avoids examples") {
    std::vector<Point> r{P(0, 0, 0), P(1, 0, 2)};
    std::vector<Point> b{P(2, 10, 0), P(3, 10, 1), P(4, 11, 0)};
    CHECK(avoids(r, b));
    CHECK(avoids(std::vector<Point>{P(0, 0, 0), P(1, 10, 1)}, std::vector<Point>{P(2, 5, 0), P(3, 5, 2)}) == false);
    CHECK(avoids(std::vector<Point>{P(0, 0, 0)}, b));
}

TEST_CASE("rank condition examples") {
    std::vector<Point> r{P(0, -100, 0), P(1, -99, 30)};
    std::vector<Point> b{P(2, 100, 0), P(3, 101, 5)};
    CHECK(has_rank_condition(r, b));
    CHECK(has_rank_condition(std::vector<Point>{P(0, 0, 0)}, b));
    // The line through r cuts conv(b): the two b points see r in opposite orders.
    std::vector<Point> wrap{P(0, 0, 0), P(1, 1, 10)};
    std::vector<Point> inside{P(3, 3, -20), P(4, -5, -20)};
    CHECK_FALSE(has_rank_condition(wrap, inside));
    CHECK_FALSE(avoids(wrap, inside));
    CHECK_THROWS_AS(has_rank_condition(std::vector<Point>{P(0, 0, 0), P(1, 10, 10)},
                                       std::vector<Point>{P(2, 10, 0), P(3, 0, 10)}),
                    GeometryError);
}

TEST_CASE("avoids equals rank condition on separated pairs") {
    std::mt19937_64 rng(6);
    int positives = 0;
    for (int it = 0; it < 300; ++it) {
        std::size_t nr = 1 + it % 6, nb = 1 + (it / 6) % 6;
        auto pts = random_points(nr + nb, rng, 200);
        std::vector<Point> r, b;
        // Separate by sorting along a random direction.
        std::sort(pts.begin(), pts.end(), [](const Point& p, const Point& q) { return 3 * p.x + p.y < 3 * q.x + q.y; });
        for (std::size_t i = 0; i < pts.size(); ++i) (i < nr ? r : b).push_back(pts[i]);
        if (!line_separable(r, b)) continue;
        // Labeling oracle: try every permutation of r as r_1..r_w.
        std::vector<int> perm(r.size());
        std::iota(perm.begin(), perm.end(), 0);
        bool labeled = false;
        do {
            bool ok = true;
            for (const Point& q : b) {
                for (std::size_t i = 0; i + 1 < perm.size() && ok; ++i)
                    for (std::size_t j = i + 1; j < perm.size() && ok; ++j)
                        if (naive_orient(q, r[perm[i]], r[perm[j]]) <= 0) ok = false;
                if (!ok) break;
            }
            labeled = labeled || ok;
        } while (!labeled && std::next_permutation(perm.begin(), perm.end()));
        CHECK(has_rank_condition(r, b) == labeled);
        CHECK(avoids(r, b) == labeled);
        positives += labeled;
    }
    CHECK(positives > 20);
}

TEST_CASE("line separability") {
    std::vector<Point> a{P(0, 0, 0), P(1, 1, 5)};
    std::vector<Point> b{P(2, 10, 0), P(3, 11, 5)};
    CHECK(line_separable(a, b));
    std::vector<Point> c{P(0, 0, 0), P(1, 10, 10)};
    std::vector<Point> d{P(2, 10, 0), P(3, 0, 10)};
    CHECK_FALSE(line_separable(c, d));
    std::vector<Point> tri{P(0, 0, 0), P(1, 10, 0), P(2, 0, 10)};
    CHECK_FALSE(line_separable(tri, std::vector<Point>{P(3, 2, 2)}));
    CHECK(line_separable(tri, std::vector<Point>{P(3, 8, 8)}));
}
