#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace crossfam {

using Coord = std::int64_t;
using Wide = __int128;

// Every derived quantity (sweep normals, projections, line coefficients)
// stays inside int64 when |x|,|y| <= kCoordLimit.
inline constexpr Coord kCoordLimit = Coord{1} << 24;

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class GeometryError : public InputError {
public:
    using InputError::InputError;
};

// An existence search exhausted its candidates; the input may be adversarial.
class SearchFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A constructed object failed its own invariant check.
class VerificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Color : std::uint8_t { None, Red, Blue };

struct Point {
    int id = 0;
    Coord x = 0;
    Coord y = 0;
    Color color = Color::None;
};

struct Vec {
    Coord x = 0;
    Coord y = 0;
};

inline Vec operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Vec operator+(Vec a, Vec b) { return {a.x + b.x, a.y + b.y}; }
inline Vec operator-(Vec a) { return {-a.x, -a.y}; }
inline Vec rot90(Vec v) { return {-v.y, v.x}; }
inline Wide cross(Vec a, Vec b) { return Wide(a.x) * b.y - Wide(a.y) * b.x; }
inline Wide dot(Vec a, Vec b) { return Wide(a.x) * b.x + Wide(a.y) * b.y; }
inline Wide dot(Vec a, const Point& p) { return Wide(a.x) * p.x + Wide(a.y) * p.y; }

enum class Orientation { CW = -1, Collinear = 0, CCW = 1 };

Orientation orientation(const Point& p, const Point& q, const Point& r);

// Proper crossing: the open segments share exactly one interior point.
// Segments sharing an endpoint never cross.
bool segments_cross(const Point& p1, const Point& p2, const Point& q1, const Point& q2);

// Ids are unique and coordinates lie within kCoordLimit. General position is
// checked unless the caller opts out.
class PointSet {
public:
    enum class Check { GeneralPosition, IdsOnly };

    PointSet() = default;
    explicit PointSet(std::vector<Point> pts, Check check = Check::GeneralPosition);

    std::size_t size() const { return pts_.size(); }
    bool empty() const { return pts_.empty(); }
    const Point& operator[](std::size_t i) const { return pts_[i]; }
    const std::vector<Point>& points() const { return pts_; }
    auto begin() const { return pts_.begin(); }
    auto end() const { return pts_.end(); }

    bool contains(int id) const { return index_.count(id) != 0; }
    std::size_t index_of(int id) const;
    const Point& by_id(int id) const { return pts_[index_of(id)]; }

    bool colored() const;
    // Subset by ids; general position is inherited.
    PointSet subset(std::span<const int> ids) const;

private:
    std::vector<Point> pts_;
    std::unordered_map<int, std::size_t> index_;
};

struct Segment {
    int a = 0;
    int b = 0;
    Segment() = default;
    Segment(int u, int v) : a(u < v ? u : v), b(u < v ? v : u) {}
    friend bool operator==(const Segment&, const Segment&) = default;
    friend auto operator<=>(const Segment&, const Segment&) = default;
};

bool segments_cross(const Segment& s, const Segment& t, const PointSet& ps);

// a*x + b*y + c = 0; the positive side (a*x+b*y+c > 0) is the left side.
struct Line {
    Coord a = 0;
    Coord b = 0;
    Coord c = 0;

    Line() = default;
    Line(Coord a_, Coord b_, Coord c_);

    Wide eval(const Point& p) const { return Wide(a) * p.x + Wide(b) * p.y + c; }
    int side(const Point& p) const {
        Wide v = eval(p);
        return v > 0 ? 1 : (v < 0 ? -1 : 0);
    }
    Vec normal() const { return {a, b}; }
    Line flipped() const { return Line(-a, -b, -c); }
    friend bool operator==(const Line&, const Line&) = default;
};

// Directed line through p then q: left of p->q is positive.
Line line_through(const Point& p, const Point& q);

bool is_general_position(std::span<const Point> pts);
inline bool is_general_position(const PointSet& ps) { return is_general_position(ps.points()); }

// Ids of the hull vertices, counter-clockwise, starting at the lowest-leftmost.
std::vector<int> convex_hull(std::span<const Point> pts);
inline std::vector<int> convex_hull(const PointSet& ps) { return convex_hull(ps.points()); }
bool in_convex_position(std::span<const Point> pts);

struct SideCounts {
    std::size_t left = 0;
    std::size_t right = 0;
};

// Throws GeometryError when a point lies on the line.
SideCounts side_counts(const Line& l, std::span<const Point> pts);
inline SideCounts side_counts(const Line& l, const PointSet& ps) { return side_counts(l, ps.points()); }

// Strict line separability of two finite point sets.
bool line_separable(std::span<const Point> r, std::span<const Point> b);

// Ids of r in counter-clockwise angular order around b. Requires b outside
// conv(r); throws GeometryError otherwise.
std::vector<int> rank_sequence(const Point& b, std::span<const Point> r);

// Every b in bs sees r in the same angular order. Throws GeometryError if the
// sets are not line separable.
bool has_rank_condition(std::span<const Point> r, std::span<const Point> bs);

// No line through two points of r meets conv(bs).
bool avoids(std::span<const Point> r, std::span<const Point> bs);

// Angular comparison of direction vectors in [0, 2pi) from +x.
int half_plane(Vec v);
bool angle_less(Vec a, Vec b);
bool same_angle(Vec a, Vec b);

Coord gcd_abs(Coord a, Coord b);

}  // namespace crossfam
