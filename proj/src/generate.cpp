#include "crossfam/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace crossfam {

GenMode parse_gen_mode(const std::string& s) {
    if (s == "uniform") return GenMode::Uniform;
    if (s == "convex") return GenMode::Convex;
    if (s == "clustered") return GenMode::Clustered;
    throw InputError("unknown generation mode " + s);
}

namespace {

constexpr Coord kBox = 1'000'000;

bool collinear_with_any(const std::vector<Point>& pts, const Point& p) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].x == p.x && pts[i].y == p.y) return true;
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (orientation(pts[i], pts[j], p) == Orientation::Collinear) return true;
    }
    return false;
}

template <class Draw>
std::vector<Point> rejection_sample(std::size_t n, Draw draw) {
    std::vector<Point> pts;
    pts.reserve(n);
    while (pts.size() < n) {
        Point p = draw();
        p.id = static_cast<int>(pts.size());
        if (!collinear_with_any(pts, p)) pts.push_back(p);
    }
    return pts;
}

std::vector<Point> convex_sample(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> jitter(0.1, 0.9);
    const double radius = static_cast<double>(kBox) / 2;
    for (;;) {
        std::vector<Point> pts;
        for (std::size_t i = 0; i < n; ++i) {
            double t = (static_cast<double>(i) + jitter(rng)) * 2.0 * std::numbers::pi / static_cast<double>(n);
            pts.push_back({static_cast<int>(i), std::llround(radius + radius * std::cos(t)),
                           std::llround(radius + radius * std::sin(t))});
        }
        if (is_general_position(pts) && in_convex_position(pts)) return pts;
    }
}

}  // namespace

PointSet generate_points(std::size_t n, std::uint64_t seed, GenMode mode, bool colored) {
    if (colored && n % 2 != 0) throw InputError("colored generation needs an even n");
    std::mt19937_64 rng(seed);
    std::vector<Point> pts;
    switch (mode) {
        case GenMode::Uniform: {
            std::uniform_int_distribution<Coord> coord(0, kBox);
            pts = rejection_sample(n, [&] { return Point{0, coord(rng), coord(rng)}; });
            break;
        }
        case GenMode::Convex: pts = convex_sample(n, rng); break;
        case GenMode::Clustered: {
            std::size_t k = std::max<std::size_t>(2, n / 20);
            std::uniform_int_distribution<Coord> coord(100'000, kBox - 100'000);
            std::vector<std::pair<Coord, Coord>> centers;
            for (std::size_t i = 0; i < k; ++i) centers.emplace_back(coord(rng), coord(rng));
            std::uniform_int_distribution<std::size_t> pick(0, k - 1);
            std::normal_distribution<double> off(0.0, 20'000.0);
            pts = rejection_sample(n, [&] {
                auto [cx, cy] = centers[pick(rng)];
                Coord x = std::clamp<Coord>(cx + std::llround(off(rng)), 0, kBox);
                Coord y = std::clamp<Coord>(cy + std::llround(off(rng)), 0, kBox);
                return Point{0, x, y};
            });
            break;
        }
    }
    if (colored) {
        std::vector<std::size_t> idx(n);
        for (std::size_t i = 0; i < n; ++i) idx[i] = i;
        std::shuffle(idx.begin(), idx.end(), rng);
        for (std::size_t i = 0; i < n; ++i) pts[idx[i]].color = i < n / 2 ? Color::Red : Color::Blue;
    }
    return PointSet(std::move(pts), PointSet::Check::IdsOnly);
}

}  // namespace crossfam
