// One line per acceptance criterion: PASS, FAIL or SKIP. Exit status is
// nonzero when any criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "crossfam/constructor.hpp"
#include "crossfam/generate.hpp"
#include "crossfam/order_types.hpp"
#include "crossfam/partitions.hpp"
#include "crossfam/solver.hpp"
#include "naive.hpp"
#include "support.hpp"

using namespace crossfam;

namespace {

// Time limits in seconds.
constexpr double kPathLimit = 1.0;        // per instance
constexpr double kStarLimit = 1.0;        // per instance
constexpr double kCliqueLimit = 5.0;      // per instance
constexpr double kIntersectLimit = 5.0;   // per instance
constexpr double kUpperLimit = 30.0;      // total
constexpr double kMonotoneLimit = 10.0;   // total
constexpr double kRankLimit = 10.0;       // total
constexpr double kNineScanLimit = 600.0;  // total
constexpr double kConvexLimit = 900.0;    // total
constexpr double kOracleLimit = 300.0;    // total

const std::vector<std::size_t> kGrid{48, 96, 192, 384};
constexpr int kSeeds = 20;

struct Outcome {
    enum Status { Pass, Fail, Skip } status = Pass;
    std::string detail;
};

class Timer {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof(buf), f, args...);
    return buf;
}

GenMode mode_for(int seed) { return static_cast<GenMode>(seed % 3); }

// Families built for the size criteria, rechecked against the trivial upper bounds.
struct Built {
    std::size_t n;
    Family family;
};
std::vector<Built> g_built;

// Runs f, keeps its family, and returns the elapsed seconds. An exception is a failure.
double timed(std::size_t n, const std::function<Family()>& f, Family& out) {
    Timer t;
    out = f();
    const double s = t.seconds();
    g_built.push_back({n, out});
    return s;
}

struct Tally {
    std::size_t instances = 0;
    double worst = 0;
    std::vector<std::string> problems;

    void fail(std::string s) {
        if (problems.size() < 5) problems.push_back(std::move(s));
        else if (problems.size() == 5) problems.push_back("...");
    }
    Outcome outcome(const std::string& what) const {
        Outcome o;
        o.status = problems.empty() ? Outcome::Pass : Outcome::Fail;
        o.detail = fmt("%zu %s, slowest %.3f s", instances, what.c_str(), worst);
        for (const auto& p : problems) o.detail += "; " + p;
        return o;
    }
};

void check_family(Tally& t, const PointSet& ps, const Family& f, double secs, double limit, double bound,
                  const std::string& tag) {
    ++t.instances;
    t.worst = std::max(t.worst, secs);
    auto rep = verify_family(ps, f);
    if (!rep.ok) t.fail(tag + " not verified: " + rep.message);
    if (static_cast<double>(f.size()) < bound) t.fail(fmt("%s size %zu < %.2f", tag.c_str(), f.size(), bound));
    if (secs > limit) t.fail(fmt("%s took %.2f s", tag.c_str(), secs));
}

Outcome path_bound() {
    Tally t;
    for (std::size_t n : kGrid)
        for (int seed = 1; seed <= kSeeds; ++seed) {
            PointSet ps = generate_points(n, static_cast<std::uint64_t>(seed), mode_for(seed));
            const double bound = std::floor(std::sqrt(static_cast<double>(n) / 2 + 1) - 1);
            const std::string tag = fmt("n=%zu seed=%d", n, seed);
            try {
                Family f;
                double s = timed(n, [&] { return p3_crossing_family(ps); }, f);
                check_family(t, ps, f, s, kPathLimit, bound, tag);
            } catch (const std::exception& e) {
                ++t.instances;
                t.fail(tag + ": " + e.what());
            }
        }
    return t.outcome("instances");
}

Outcome star_bound() {
    Tally t;
    for (std::size_t n : kGrid)
        for (int seed = 1; seed <= kSeeds; ++seed) {
            PointSet ps = generate_points(n, static_cast<std::uint64_t>(100 + seed), mode_for(seed));
            for (int leaves : {3, 4, 5, 7}) {
                const double bound = leaves <= 4 ? std::ceil(static_cast<double>(n) / 6) - 1
                                                 : std::floor(static_cast<double>(n) / (leaves + 1));
                const std::string tag = fmt("n=%zu seed=%d t=%d", n, seed, leaves);
                try {
                    Family f;
                    double s = timed(n, [&] { return leaves == 3 ? k13_crossing_family(ps) : k1t_crossing_family(ps, leaves); }, f);
                    check_family(t, ps, f, s, kStarLimit, bound, tag);
                } catch (const std::exception& e) {
                    ++t.instances;
                    t.fail(tag + ": " + e.what());
                }
            }
        }
    return t.outcome("instances");
}

// Common point of two lines as (X/den, Y/den).
bool meet(const Line& a, const Line& b, Wide& X, Wide& Y, Wide& den) {
    den = Wide(a.a) * b.b - Wide(a.b) * b.a;
    if (den == 0) return false;
    X = Wide(-a.c) * b.b - Wide(-b.c) * a.b;
    Y = Wide(a.a) * -b.c - Wide(b.a) * -a.c;
    if (den < 0) {
        den = -den;
        X = -X;
        Y = -Y;
    }
    return true;
}

// Sign of orient(p, q, c) with c = (X/den, Y/den), den > 0.
int orient_rational(const Point& p, const Point& q, Wide X, Wide Y, Wide den) {
    Wide v = Wide(q.x - p.x) * (Y - Wide(p.y) * den) - Wide(q.y - p.y) * (X - Wide(p.x) * den);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

Outcome clique_bound() {
    Tally t;
    for (std::size_t n : kGrid)
        for (int seed = 1; seed <= kSeeds; ++seed) {
            PointSet ps = generate_points(n, static_cast<std::uint64_t>(200 + seed), mode_for(seed));
            const double bound = std::floor(static_cast<double>(n) / 4) - 6;
            const std::string tag = fmt("n=%zu seed=%d", n, seed);
            try {
                Family f;
                double s = timed(n, [&] { return k4_crossing_family(ps); }, f);
                check_family(t, ps, f, s, kCliqueLimit, bound, tag);
                // lines[0] splits off the apexes; lines[1..3] meet in the sector centre.
                Wide X, Y, den;
                if (f.lines.size() != 4 || !meet(f.lines[1], f.lines[2], X, Y, den)) {
                    t.fail(tag + ": sector lines missing");
                    continue;
                }
                const Line& l3 = f.lines[3];
                if (Wide(l3.a) * X + Wide(l3.b) * Y + Wide(l3.c) * den != 0) t.fail(tag + ": sector lines not concurrent");
                for (const Subgraph& g : f.members) {
                    std::vector<Point> tri;
                    for (int v : g.vertices)
                        if (f.lines[0].side(ps.by_id(v)) < 0) tri.push_back(ps.by_id(v));
                    if (tri.size() != 3) {
                        t.fail(tag + ": member without a three-point triangle part");
                        break;
                    }
                    int a = orient_rational(tri[0], tri[1], X, Y, den), b = orient_rational(tri[1], tri[2], X, Y, den),
                        c = orient_rational(tri[2], tri[0], X, Y, den);
                    if (a == 0 || a != b || b != c) {
                        t.fail(tag + ": triangle misses the centre");
                        break;
                    }
                }
            } catch (const std::exception& e) {
                ++t.instances;
                t.fail(tag + ": " + e.what());
            }
        }
    return t.outcome("instances");
}

Outcome intersecting_bound() {
    Tally t;
    for (std::size_t n : {192, 300, 432})
        for (int seed = 1; seed <= 3; ++seed) {
            const double w = std::floor(std::sqrt(static_cast<double>(n) / 12));
            const double bound = w / 2 * std::floor(static_cast<double>(n) / 12);
            const std::string tag = fmt("n=%zu seed=%d", n, seed);
            try {
                PointSet ps = generate_points(n, static_cast<std::uint64_t>(300 + seed), mode_for(seed));
                Family f;
                double s = timed(n, [&] { return p3_intersecting_family(ps); }, f);
                check_family(t, ps, f, s, kIntersectLimit, bound, tag + " P3");

                PointSet cs = generate_points(n, static_cast<std::uint64_t>(400 + seed), mode_for(seed), true);
                auto [red, blue] = split_colors(cs);
                Family fc;
                s = timed(n, [&] { return p3_intersecting_family_bipartite(red, blue); }, fc);
                check_family(t, cs, fc, s, kIntersectLimit, bound, tag + " colored P3");
                for (const Subgraph& g : fc.members)
                    for (const Segment& e : g.edges)
                        if (cs.by_id(e.a).color == cs.by_id(e.b).color) t.fail(tag + ": monochromatic edge");

                Family fk;
                s = timed(n, [&] { return k3_intersecting_family(ps); }, fk);
                check_family(t, ps, fk, s, kIntersectLimit, static_cast<double>(fk.claimed_bound), tag + " K3");
            } catch (const std::exception& e) {
                ++t.instances;
                t.fail(tag + ": " + e.what());
            }
        }
    return t.outcome("families");
}

Outcome upper_bounds() {
    Timer timer;
    Tally t;
    for (const Built& b : g_built) {
        ++t.instances;
        const std::size_t n = b.n;
        const Family& f = b.family;
        const std::size_t cap = f.kind == FamilyKind::Crossing ? n / f.pattern.vertex_count()
                                                               : n * (n - 1) / 2 / f.pattern.edge_count();
        if (f.size() > cap) t.fail(fmt("%s family of size %zu above %zu", f.pattern.name().c_str(), f.size(), cap));
    }
    std::size_t solved = 0;
    for (std::size_t n = 5; n <= 8; ++n)
        for (int seed = 1; seed <= 10; ++seed) {
            PointSet ps = generate_points(n, static_cast<std::uint64_t>(500 + seed), mode_for(seed));
            auto r = max_intersecting_family(ps, Pattern::k2());
            ++solved;
            if (r.max_size + 1 < n || r.max_size > n) t.fail(fmt("n=%zu seed=%d K2 intersecting max %zu", n, seed, r.max_size));
        }
    t.worst = timer.seconds();
    if (t.worst > kUpperLimit) t.fail(fmt("took %.1f s", t.worst));
    Outcome o = t.outcome("constructed families");
    o.detail += fmt(", %zu brute-force K2-intersecting maxima", solved);
    return o;
}

std::size_t dp_longest(const std::vector<std::int64_t>& a, bool inc) {
    std::vector<std::size_t> L(a.size(), 1);
    std::size_t best = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (inc ? a[j] < a[i] : a[j] > a[i]) L[i] = std::max(L[i], L[j] + 1);
        best = std::max(best, L[i]);
    }
    return best;
}

Outcome monotone() {
    Timer timer;
    Tally t;
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<std::size_t> len(1, 400);
    for (int rep = 0; rep < 1000; ++rep) {
        std::vector<std::int64_t> a(len(rng));
        std::iota(a.begin(), a.end(), 0);
        std::shuffle(a.begin(), a.end(), rng);
        auto m = monotone_subsequence(a);
        ++t.instances;
        const std::size_t n = a.size();
        const std::size_t opt = std::max(dp_longest(a, true), dp_longest(a, false));
        std::size_t root = 0;
        while (root * root < n) ++root;
        if (m.size() != opt) t.fail(fmt("n=%zu length %zu, optimum %zu", n, m.size(), opt));
        if (m.size() < root) t.fail(fmt("n=%zu length %zu below ceil(sqrt n)", n, m.size()));
        for (std::size_t i = 1; i < m.indices.size(); ++i) {
            const bool up = a[m.indices[i - 1]] < a[m.indices[i]];
            if (m.indices[i - 1] >= m.indices[i] || up != (m.direction == Monotone::Ascending)) {
                t.fail(fmt("n=%zu not a monotone subsequence", n));
                break;
            }
        }
    }
    t.worst = timer.seconds();
    if (t.worst > kMonotoneLimit) t.fail(fmt("took %.1f s", t.worst));
    return t.outcome("permutations");
}

// Counter-clockwise order of r seen from b; r lies in an open half-plane at b.
std::vector<int> seen_from(const Point& b, std::vector<Point> r) {
    std::sort(r.begin(), r.end(), [&](const Point& p, const Point& q) { return testsupport::naive_orient(b, p, q) > 0; });
    std::vector<int> ids;
    for (const Point& p : r) ids.push_back(p.id);
    return ids;
}

Outcome rank_avoids() {
    Timer timer;
    Tally t;
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> size(2, 6);
    std::size_t yes = 0;
    for (int rep = 0; rep < 500; ++rep) {
        // Spread varies so both outcomes occur: tight R clusters tend to be avoided.
        const crossfam::Coord spread = rep % 2 ? 30 : 400;
        const std::size_t nr = static_cast<std::size_t>(size(rng)), nb = static_cast<std::size_t>(size(rng));
        std::vector<Point> all;
        std::vector<Point> R, B;
        std::uniform_int_distribution<crossfam::Coord> ry(-spread, spread), rx(-spread - 500, -500), bx(500, 1500),
            by(-1000, 1000);
        while (R.size() < nr || B.size() < nb) {
            const bool red = R.size() < nr;
            Point p{static_cast<int>(all.size()), red ? rx(rng) : bx(rng), red ? ry(rng) : by(rng)};
            bool ok = true;
            for (std::size_t i = 0; i < all.size() && ok; ++i) {
                if (all[i].x == p.x && all[i].y == p.y) ok = false;
                for (std::size_t j = i + 1; j < all.size() && ok; ++j)
                    if (testsupport::naive_orient(all[i], all[j], p) == 0) ok = false;
            }
            if (!ok) continue;
            all.push_back(p);
            (red ? R : B).push_back(p);
        }
        // Exhaustive labelings: is there one order of R that every b sees?
        std::vector<int> perm;
        for (const Point& p : R) perm.push_back(p.id);
        std::sort(perm.begin(), perm.end());
        bool oracle = false;
        do {
            bool all_same = true;
            for (const Point& b : B) all_same = all_same && seen_from(b, R) == perm;
            oracle = oracle || all_same;
        } while (!oracle && std::next_permutation(perm.begin(), perm.end()));
        ++t.instances;
        yes += oracle;
        const bool av = avoids(R, B), rc = has_rank_condition(R, B);
        if (av != oracle || rc != oracle) t.fail(fmt("rep %d: avoids=%d rank=%d oracle=%d", rep, av, rc, oracle));
    }
    t.worst = timer.seconds();
    if (t.worst > kRankLimit) t.fail(fmt("took %.1f s", t.worst));
    Outcome o = t.outcome("separated pairs");
    o.detail += fmt(", %zu with a common order", yes);
    return o;
}

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

Outcome nine_point_scan() {
    auto path = locate_db(9);
    if (!path) return {Outcome::Skip, fmt("no 9-point database under $%s", kOrderTypeDirEnv)};
    Timer timer;
    Tally t;
    OrderTypeDb db = open_db(*path, 9);
    ScanReport rep = scan_order_types(db, {ScanTarget::Family, Pattern::k2(), FamilyKind::Crossing, 3}, jobs());
    t.instances = rep.total;
    if (rep.violators.size() != 12) t.fail(fmt("%zu sets without 3 crossing edges, expected 12", rep.violators.size()));
    for (std::size_t idx : rep.violators)
        iterate(
            db,
            [&](const OrderTypeRecord& r) {
                if (max_crossing_family(r.points, Pattern::p3()).max_size < 3) t.fail(fmt("record %zu: no 3 crossing paths", idx));
                if (max_crossing_family(r.points, Pattern::k3()).max_size < 3)
                    t.fail(fmt("record %zu: no 3 crossing triangles", idx));
            },
            idx, idx + 1);
    t.worst = timer.seconds();
    if (t.worst > kNineScanLimit) t.fail(fmt("took %.1f s", t.worst));
    Outcome o = t.outcome("order types");
    o.detail += fmt(", %zu exceptional", rep.violators.size());
    return o;
}

Outcome convex_scan() {
    auto p5 = locate_db(5), p9 = locate_db(9);
    if (!p5 || !p9) return {Outcome::Skip, fmt("needs 5- and 9-point databases under $%s", kOrderTypeDirEnv)};
    Timer timer;
    Tally t;
    ScanReport r5 = scan_order_types(open_db(*p5, 5), {ScanTarget::ConvexSubset, {}, FamilyKind::Crossing, 4}, jobs());
    ScanReport r9 = scan_order_types(open_db(*p9, 9), {ScanTarget::ConvexSubset, {}, FamilyKind::Crossing, 5}, jobs());
    t.instances = r5.total + r9.total;
    if (!r5.violators.empty()) t.fail(fmt("%zu 5-point sets without a convex 4-subset", r5.violators.size()));
    if (!r9.violators.empty()) t.fail(fmt("%zu 9-point sets without a convex 5-subset", r9.violators.size()));
    t.worst = timer.seconds();
    if (t.worst > kConvexLimit) t.fail(fmt("took %.1f s", t.worst));
    return t.outcome("order types");
}

Outcome oracle_equivalence() {
    Timer timer;
    Tally t;
    const std::vector<std::pair<int, int>> k2{{0, 1}}, p3{{0, 1}, {1, 2}};
    auto compare = [&](const PointSet& ps, const std::string& tag) {
        ++t.instances;
        const auto& pts = ps.points();
        std::size_t a = max_crossing_family(ps, Pattern::k2()).max_size, na = testsupport::naive_max(pts, k2, true);
        std::size_t b = max_crossing_family(ps, Pattern::p3()).max_size, nb = testsupport::naive_max(pts, p3, true);
        if (a != na) t.fail(fmt("%s K2: %zu vs naive %zu", tag.c_str(), a, na));
        if (b != nb) t.fail(fmt("%s P3: %zu vs naive %zu", tag.c_str(), b, nb));
    };
    std::string source;
    if (auto path = locate_db(8)) {
        source = "database";
        iterate(open_db(*path, 8), [&](const OrderTypeRecord& r) { compare(r.points, fmt("record %zu", r.index)); });
    } else {
        source = "random fallback";
        for (int seed = 1; seed <= 200; ++seed)
            compare(generate_points(8, static_cast<std::uint64_t>(800 + seed), mode_for(seed)), fmt("seed %d", seed));
    }
    t.worst = timer.seconds();
    if (t.worst > kOracleLimit) t.fail(fmt("took %.1f s", t.worst));
    Outcome o = t.outcome("8-point sets");
    o.detail += " (" + source + ")";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {1, "P3-crossing size bound", path_bound},
        {2, "K1,t-crossing size bounds", star_bound},
        {3, "K4-crossing size bound and sector centre", clique_bound},
        {4, "P3- and K3-intersecting size bounds", intersecting_bound},
        {5, "trivial upper bounds and K2-intersecting maxima", upper_bounds},
        {6, "monotone subsequences", monotone},
        {7, "avoiding equals common rank order", rank_avoids},
        {8, "nine-point order types with few crossing edges", nine_point_scan},
        {9, "convex subsets of all 5- and 9-point order types", convex_scan},
        {10, "solver matches the naive enumerator", oracle_equivalence},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {Outcome::Fail, std::string("exception: ") + e.what()};
        }
        const char* status = o.status == Outcome::Pass ? "PASS" : o.status == Outcome::Fail ? "FAIL" : "SKIP";
        failed += o.status == Outcome::Fail;
        std::printf("[%s] criterion %2d: %s: %s\n", status, c.id, c.name, o.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
