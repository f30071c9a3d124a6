#include "crossfam/sweep.hpp"

#include <algorithm>
#include <numeric>

namespace crossfam {

Vec arc_representative(Vec u, Vec v) {
    if (cross(u, v) > 0) return u + v;
    return rot90(u);
}

Line split_line(Vec n, Coord lo, Coord hi) { return Line(2 * n.x, 2 * n.y, -(lo + hi)); }

Line top_k_line(std::span<const Point> pts, const std::vector<int>& order, Vec n, std::size_t k) {
    const std::size_t N = order.size();
    if (N == 0) return Line(n.x, n.y, 0);
    if (k == 0) {
        Coord top = project(n, pts[order[N - 1]]);
        return split_line(n, top, top + 1);
    }
    if (k == N) {
        Coord bottom = project(n, pts[order[0]]);
        return split_line(n, bottom - 1, bottom);
    }
    return split_line(n, project(n, pts[order[N - k - 1]]), project(n, pts[order[N - k]]));
}

std::vector<int> order_along(std::span<const Point> pts, Vec n) {
    std::vector<int> order(pts.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<Coord> key(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) key[i] = project(n, pts[i]);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return key[a] < key[b]; });
    for (std::size_t i = 1; i < order.size(); ++i)
        if (key[order[i]] == key[order[i - 1]]) throw GeometryError("direction is critical for the point set");
    return order;
}

namespace {

// 0 for the open half-turn counter-clockwise after n, 1 for the rest except n itself.
int half_from(Vec n, Vec e) {
    Wide c = cross(n, e);
    return c > 0 ? 0 : 1;
}

}  // namespace

Vec generic_direction(std::span<const Point> pts, Vec n) {
    try {
        order_along(pts, n);
        return n;
    } catch (const GeometryError&) {
    }
    bool found = false;
    Vec best{};
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            Vec e = rot90(pts[j] - pts[i]);
            for (Vec cand : {e, -e}) {
                if (same_angle(n, cand)) continue;
                if (!found || half_from(n, cand) < half_from(n, best) ||
                    (half_from(n, cand) == half_from(n, best) && cross(cand, best) > 0)) {
                    best = cand;
                    found = true;
                }
            }
        }
    if (!found) return n;
    return arc_representative(n, best);
}

RotationalSweep::RotationalSweep(std::span<const Point> pts) : pts_(pts) {
    const int n = static_cast<int>(pts.size());
    events_.reserve(static_cast<std::size_t>(n) * (n - 1 > 0 ? n - 1 : 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec e = rot90(pts[j] - pts[i]);
            events_.push_back({e, i, j});
            events_.push_back({-e, i, j});
        }
    std::sort(events_.begin(), events_.end(),
              [](const Event& a, const Event& b) { return angle_less(a.dir, b.dir); });
    for (std::size_t e = 0; e < events_.size(); ++e)
        if (e + 1 == events_.size() || !same_angle(events_[e].dir, events_[e + 1].dir)) group_end_.push_back(e + 1);
    if (!events_.empty()) start_ = arc_representative(events_.back().dir, events_.front().dir);
    initial_ = order_along(pts_, start_);
}

namespace {

struct SeparatedCutVisitor {
    std::span<const Point> pts;
    std::size_t nA, k, a;
    std::size_t count = 0;
    bool found = false;
    Line line;

    bool in_a(int i) const { return static_cast<std::size_t>(i) < nA; }
    void swapped(const std::vector<int>& order, std::size_t p) {
        const std::size_t N = order.size();
        if (k == 0 || k == N || p + 1 != N - k) return;
        count += in_a(order[p + 1]);
        count -= in_a(order[p]);
    }
    bool arc(const std::vector<int>& order, Vec rep) {
        if (count != a) return false;
        line = top_k_line(pts, order, rep, k);
        found = true;
        return true;
    }
};

}  // namespace

Line separated_cut_line(std::span<const Point> A, std::span<const Point> B, std::size_t a, std::size_t b) {
    if (a > A.size() || b > B.size()) throw InputError("requested counts exceed set sizes");
    std::vector<Point> all(A.begin(), A.end());
    all.insert(all.end(), B.begin(), B.end());
    RotationalSweep sweep(all);
    SeparatedCutVisitor v{all, A.size(), a + b, a, 0, false, Line{}};
    const auto& order = sweep.initial_order();
    for (std::size_t p = all.size() - v.k; p < all.size(); ++p) v.count += v.in_a(order[p]);
    sweep.run(v);
    if (!v.found) throw SearchFailure("no line with the requested counts; sets may not be separable");
    if (side_counts(v.line, A).left != a || side_counts(v.line, B).left != b)
        throw VerificationFailure("cut line has wrong side counts");
    return v.line;
}

}  // namespace crossfam
