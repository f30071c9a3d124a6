#include "crossfam/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

namespace crossfam {

Orientation orientation(const Point& p, const Point& q, const Point& r) {
    Wide d = cross(q - p, r - p);
    return d > 0 ? Orientation::CCW : (d < 0 ? Orientation::CW : Orientation::Collinear);
}

bool segments_cross(const Point& p1, const Point& p2, const Point& q1, const Point& q2) {
    int o1 = static_cast<int>(orientation(p1, p2, q1));
    int o2 = static_cast<int>(orientation(p1, p2, q2));
    int o3 = static_cast<int>(orientation(q1, q2, p1));
    int o4 = static_cast<int>(orientation(q1, q2, p2));
    return o1 * o2 < 0 && o3 * o4 < 0;
}

PointSet::PointSet(std::vector<Point> pts, Check check) : pts_(std::move(pts)) {
    index_.reserve(pts_.size());
    std::set<std::pair<Coord, Coord>> coords;
    for (std::size_t i = 0; i < pts_.size(); ++i) {
        const Point& p = pts_[i];
        if (p.x > kCoordLimit || p.x < -kCoordLimit || p.y > kCoordLimit || p.y < -kCoordLimit)
            throw InputError("point " + std::to_string(p.id) + " exceeds coordinate bound 2^24");
        if (!index_.emplace(p.id, i).second)
            throw InputError("duplicate point id " + std::to_string(p.id));
        if (!coords.emplace(p.x, p.y).second)
            throw GeometryError("duplicate coordinates at point " + std::to_string(p.id));
    }
    if (check == Check::GeneralPosition && !is_general_position(pts_))
        throw GeometryError("point set is not in general position");
}

std::size_t PointSet::index_of(int id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw InputError("unknown point id " + std::to_string(id));
    return it->second;
}

bool PointSet::colored() const {
    return !pts_.empty() &&
           std::all_of(pts_.begin(), pts_.end(), [](const Point& p) { return p.color != Color::None; });
}

PointSet PointSet::subset(std::span<const int> ids) const {
    std::vector<Point> out;
    out.reserve(ids.size());
    for (int id : ids) out.push_back(by_id(id));
    return PointSet(std::move(out), Check::IdsOnly);
}

bool segments_cross(const Segment& s, const Segment& t, const PointSet& ps) {
    return segments_cross(ps.by_id(s.a), ps.by_id(s.b), ps.by_id(t.a), ps.by_id(t.b));
}

Coord gcd_abs(Coord a, Coord b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

Line::Line(Coord a_, Coord b_, Coord c_) : a(a_), b(b_), c(c_) {
    if (a == 0 && b == 0) throw GeometryError("degenerate line");
    Coord g = gcd_abs(gcd_abs(a, b), c);
    if (g > 1) {
        a /= g;
        b /= g;
        c /= g;
    }
}

Line line_through(const Point& p, const Point& q) {
    // Left of p->q: cross(q-p, r-p) > 0.
    Coord a = -(q.y - p.y);
    Coord b = q.x - p.x;
    Wide c = -(Wide(a) * p.x + Wide(b) * p.y);
    return Line(a, b, static_cast<Coord>(c));
}

bool is_general_position(std::span<const Point> pts) {
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec d = pts[j] - pts[i];
            if (d.x == 0 && d.y == 0) return false;
            for (std::size_t k = j + 1; k < n; ++k)
                if (cross(d, pts[k] - pts[i]) == 0) return false;
        }
    return true;
}

namespace {

std::vector<std::size_t> hull_indices(std::span<const Point> pts) {
    std::vector<std::size_t> idx(pts.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
        return pts[i].y != pts[j].y ? pts[i].y < pts[j].y : pts[i].x < pts[j].x;
    });
    if (idx.size() < 3) return idx;
    // Monotone chain over (y, x) order; keeps strictly convex turns only.
    std::vector<std::size_t> h(2 * idx.size());
    std::size_t k = 0;
    for (std::size_t i : idx) {
        while (k >= 2 && cross(pts[h[k - 1]] - pts[h[k - 2]], pts[i] - pts[h[k - 2]]) <= 0) --k;
        h[k++] = i;
    }
    for (std::size_t t = idx.size() - 1, lo = k + 1; t-- > 0;) {
        std::size_t i = idx[t];
        while (k >= lo && cross(pts[h[k - 1]] - pts[h[k - 2]], pts[i] - pts[h[k - 2]]) <= 0) --k;
        h[k++] = i;
    }
    h.resize(k - 1);
    return h;
}

}  // namespace

std::vector<int> convex_hull(std::span<const Point> pts) {
    std::vector<int> ids;
    for (std::size_t i : hull_indices(pts)) ids.push_back(pts[i].id);
    return ids;
}

bool in_convex_position(std::span<const Point> pts) {
    return pts.size() <= 3 || hull_indices(pts).size() == pts.size();
}

SideCounts side_counts(const Line& l, std::span<const Point> pts) {
    SideCounts sc;
    for (const Point& p : pts) {
        int s = l.side(p);
        if (s == 0) throw GeometryError("point " + std::to_string(p.id) + " lies on the line");
        (s > 0 ? sc.left : sc.right)++;
    }
    return sc;
}

bool line_separable(std::span<const Point> r, std::span<const Point> b) {
    if (r.empty() || b.empty()) return true;
    std::vector<Vec> normals;
    auto add_edges = [&](std::span<const Point> s) {
        auto h = hull_indices(s);
        if (h.size() == 2) normals.push_back(rot90(s[h[1]] - s[h[0]]));
        if (h.size() >= 3)
            for (std::size_t i = 0; i < h.size(); ++i)
                normals.push_back(rot90(s[h[(i + 1) % h.size()]] - s[h[i]]));
    };
    add_edges(r);
    add_edges(b);
    if (normals.empty()) normals.push_back(r[0] - b[0]);
    for (Vec nrm : normals) {
        auto range = [&](std::span<const Point> s) {
            Wide lo = dot(nrm, s[0]), hi = lo;
            for (const Point& p : s) {
                Wide v = dot(nrm, p);
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
            return std::pair{lo, hi};
        };
        auto [rlo, rhi] = range(r);
        auto [blo, bhi] = range(b);
        if (rhi < blo || bhi < rlo) return true;
    }
    return false;
}

std::vector<int> rank_sequence(const Point& b, std::span<const Point> r) {
    if (r.empty()) return {};
    // All of r lies in an open half-plane around b: find the clockwise-most point.
    std::size_t first = 0;
    for (std::size_t i = 1; i < r.size(); ++i)
        if (orientation(b, r[i], r[first]) == Orientation::CCW) first = i;
    for (std::size_t i = 0; i < r.size(); ++i)
        if (i != first && orientation(b, r[first], r[i]) != Orientation::CCW)
            throw GeometryError("point " + std::to_string(b.id) + " is not outside the ranked set");
    std::vector<Point> sorted(r.begin(), r.end());
    std::sort(sorted.begin(), sorted.end(), [&](const Point& p, const Point& q) {
        return orientation(b, p, q) == Orientation::CCW;
    });
    std::vector<int> ids;
    ids.reserve(sorted.size());
    for (const Point& p : sorted) ids.push_back(p.id);
    return ids;
}

bool has_rank_condition(std::span<const Point> r, std::span<const Point> bs) {
    if (!line_separable(r, bs)) throw GeometryError("sets are not line separable");
    if (bs.empty()) return true;
    const std::vector<int> ref = rank_sequence(bs[0], r);
    for (std::size_t i = 1; i < bs.size(); ++i)
        if (rank_sequence(bs[i], r) != ref) return false;
    return true;
}

bool avoids(std::span<const Point> r, std::span<const Point> bs) {
    if (bs.empty()) return true;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = i + 1; j < r.size(); ++j) {
            Orientation s = orientation(r[i], r[j], bs[0]);
            for (const Point& q : bs)
                if (orientation(r[i], r[j], q) != s || s == Orientation::Collinear) return false;
        }
    return true;
}

int half_plane(Vec v) { return (v.y < 0 || (v.y == 0 && v.x < 0)) ? 1 : 0; }

bool angle_less(Vec a, Vec b) {
    int ha = half_plane(a), hb = half_plane(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

bool same_angle(Vec a, Vec b) { return cross(a, b) == 0 && dot(a, b) > 0; }

}  // namespace crossfam
