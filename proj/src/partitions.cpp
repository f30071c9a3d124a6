#include "crossfam/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "crossfam/sweep.hpp"

namespace crossfam {

namespace {

// Lexicographically smallest longest strictly increasing subsequence.
std::vector<std::size_t> lex_smallest_lis(std::span<const std::int64_t> a) {
    const std::size_t n = a.size();
    // from[i]: longest increasing run starting at i. best[l-1]: largest start
    // value of a run of length l in the suffix; strictly decreasing in l.
    std::vector<std::size_t> from(n);
    std::vector<std::int64_t> best;
    for (std::size_t i = n; i-- > 0;) {
        auto it = std::partition_point(best.begin(), best.end(), [&](std::int64_t v) { return v > a[i]; });
        std::size_t len = static_cast<std::size_t>(it - best.begin()) + 1;
        from[i] = len;
        if (len > best.size()) best.push_back(a[i]);
        else best[len - 1] = std::max(best[len - 1], a[i]);
    }
    std::vector<std::size_t> out;
    std::size_t need = best.size();
    for (std::size_t j = 0; j < n && need > 0; ++j)
        if (from[j] == need && (out.empty() || a[j] > a[out.back()])) {
            out.push_back(j);
            --need;
        }
    return out;
}

}  // namespace

std::size_t longest_increasing(std::span<const std::int64_t> values) {
    std::vector<std::int64_t> tails;
    for (std::int64_t v : values) {
        auto it = std::lower_bound(tails.begin(), tails.end(), v);
        if (it == tails.end()) tails.push_back(v);
        else *it = v;
    }
    return tails.size();
}

MonotoneResult monotone_subsequence(std::span<const std::int64_t> values) {
    if (values.empty()) throw InputError("monotone_subsequence of an empty sequence");
    std::vector<std::int64_t> neg(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) neg[i] = -values[i];
    auto asc = lex_smallest_lis(values);
    auto desc = lex_smallest_lis(neg);
    if (desc.size() > asc.size()) return {std::move(desc), Monotone::Descending};
    return {std::move(asc), Monotone::Ascending};
}

Line halving_line(std::span<const Point> pts, std::size_t k, Vec direction) {
    if (direction.x == 0 && direction.y == 0) throw InputError("zero direction");
    if (k > pts.size()) throw InputError("halving count exceeds set size");
    Vec d = generic_direction(pts, direction);
    auto order = order_along(pts, d);
    return top_k_line(pts, order, d, k);
}

std::size_t PartitionResult::count(const std::string& label) const {
    auto it = regions.find(label);
    return it == regions.end() ? 0 : it->second.size();
}

std::vector<int> PartitionResult::at(const std::string& label) const {
    auto it = regions.find(label);
    return it == regions.end() ? std::vector<int>{} : it->second;
}

void check_partition(const PointSet& ps, const PartitionResult& r) {
    auto signature = [&](const Point& p) {
        std::vector<int> s;
        for (const Line& l : r.lines) {
            int v = l.side(p);
            if (v == 0) throw VerificationFailure("point " + std::to_string(p.id) + " lies on a partition line");
            s.push_back(v);
        }
        return s;
    };
    std::map<std::vector<int>, std::string> owner;
    std::set<int> seen;
    for (const auto& [label, ids] : r.regions)
        for (int id : ids) {
            if (!seen.insert(id).second) throw VerificationFailure("point " + std::to_string(id) + " in two regions");
            auto sig = signature(ps.by_id(id));
            auto [it, fresh] = owner.emplace(sig, label);
            if (!fresh && it->second != label) throw VerificationFailure("regions " + label + " and " + it->second + " overlap");
        }
    std::set<std::string> labels_seen;
    for (const auto& [sig, label] : owner)
        if (!labels_seen.insert(label).second) throw VerificationFailure("region " + label + " is not one cell");
    for (int id : r.discarded) {
        if (!seen.insert(id).second) throw VerificationFailure("discarded point " + std::to_string(id) + " also assigned");
        signature(ps.by_id(id));
    }
    if (seen.size() != ps.size()) throw VerificationFailure("partition does not cover the point set");
}

int ParallelFrame::region(const Point& p) const {
    int s1 = l1.side(p), s2 = l2.side(p), s3 = l3.side(p);
    if (s1 == 0 || s2 == 0 || s3 == 0) return -1;
    int col = s1 < 0 ? 0 : (s2 > 0 ? 2 : 1);
    if (s3 > 0) return col;
    return col == 0 ? 5 : (col == 1 ? 4 : 3);
}

namespace {

const std::array<std::string, 6> kSixLabels{"S1", "S2", "S3", "S4", "S5", "S6"};

class Fenwick {
public:
    explicit Fenwick(std::size_t n) : n_(n), t_(n + 1, 0) {
        for (log_ = 1; (std::size_t{1} << log_) <= n_; ++log_) {}
    }
    void add(std::size_t i, int v) {
        for (++i; i <= n_; i += i & (~i + 1)) t_[i] += v;
    }
    int prefix(std::size_t i) const {  // sum over [0, i)
        int s = 0;
        for (; i > 0; i -= i & (~i + 1)) s += t_[i];
        return s;
    }
    // Smallest cut c with at least k marked (or unmarked) entries in [0, c).
    std::size_t cut_for(int k, bool marked) const {
        if (k <= 0) return 0;
        std::size_t pos = 0;
        for (std::size_t step = std::size_t{1} << log_; step > 0; step >>= 1) {
            std::size_t nxt = pos + step;
            if (nxt > n_) continue;
            int here = marked ? t_[nxt] : static_cast<int>(step) - t_[nxt];
            if (here < k) {
                pos = nxt;
                k -= here;
            }
        }
        return pos + 1;
    }

private:
    std::size_t n_;
    std::vector<int> t_;
    int log_ = 0;
};

Line boundary_line(std::span<const Point> pts, const std::vector<int>& uorder, Vec d, std::size_t cut) {
    const std::size_t N = uorder.size();
    Coord lo = cut == 0 ? project(d, pts[uorder[0]]) - 1 : project(d, pts[uorder[cut - 1]]);
    Coord hi = cut == N ? project(d, pts[uorder[N - 1]]) + 1 : project(d, pts[uorder[cut]]);
    return split_line(d, lo, hi);
}

// One sweep serves every candidate top count K. An arc is re-examined only
// after the top-K set changed, since the verdict depends on nothing else.
struct ParallelVisitor {
    struct State {
        std::size_t K;
        Fenwick fw;
        bool dirty = true;
    };
    std::span<const Point> pts;
    const std::vector<std::size_t>& urank;
    SixCounts req;
    std::vector<State> states;
    const State* hit = nullptr;
    std::vector<int> order;
    Vec rep{};
    std::size_t cut_l = 0, cut_r = 0;

    void swapped(const std::vector<int>& ord, std::size_t p) {
        const std::size_t N = ord.size();
        for (State& s : states) {
            if (s.K == 0 || s.K == N || p + 1 != N - s.K) continue;
            s.fw.add(urank[ord[p + 1]], 1);
            s.fw.add(urank[ord[p]], -1);
            s.dirty = true;
        }
    }
    bool arc(const std::vector<int>& ord, Vec r) {
        for (State& s : states) {
            if (!s.dirty) continue;
            s.dirty = false;
            if (check(s, ord, r)) return true;
        }
        return false;
    }
    bool check(const State& s, const std::vector<int>& ord, Vec r) {
        const int N = static_cast<int>(ord.size());
        const int T = static_cast<int>(s.K), B = N - T;
        const Fenwick& fw = s.fw;
        auto q = [&](int i) { return static_cast<int>(req[i]); };
        std::size_t cl = std::max(fw.cut_for(q(0), true), fw.cut_for(q(5), false));
        std::size_t cr = N;
        if (q(2) > 0) cr = std::min(cr, fw.cut_for(T - q(2) + 1, true) - 1);
        if (q(3) > 0) cr = std::min(cr, fw.cut_for(B - q(3) + 1, false) - 1);
        if (cl > cr) return false;
        int mid_top = fw.prefix(cr) - fw.prefix(cl);
        int mid_bot = static_cast<int>(cr - cl) - mid_top;
        if (mid_top < q(1) || mid_bot < q(4)) return false;
        hit = &s;
        order = ord;
        rep = r;
        cut_l = cl;
        cut_r = cr;
        return true;
    }
};

std::vector<Vec> direction_schedule(std::size_t max_dirs) {
    std::vector<Vec> out;
    constexpr double kScale = 1 << 20;
    for (std::size_t level = 6; out.size() < max_dirs; level *= 3)
        for (std::size_t k = 0; k < level && out.size() < max_dirs; ++k) {
            if (level > 6 && k % 3 == 0) continue;
            double t = std::numbers::pi * static_cast<double>(k) / static_cast<double>(level);
            // A small tilt keeps grid-aligned inputs away from critical directions.
            t += 1e-4;
            out.push_back({std::llround(kScale * std::cos(t)), std::llround(kScale * std::sin(t))});
        }
    return out;
}

}  // namespace

PartitionResult make_parallel_result(std::span<const Point> pts, const ParallelFrame& f, Vec d) {
    PartitionResult r;
    r.lines = {f.l1, f.l2, f.l3};
    r.frame = d;
    for (const auto& label : kSixLabels) r.regions[label];
    for (const Point& p : pts) {
        int reg = f.region(p);
        if (reg < 0) throw VerificationFailure("point " + std::to_string(p.id) + " lies on a partition line");
        r.regions[kSixLabels[reg]].push_back(p.id);
    }
    return r;
}

std::optional<PartitionResult> find_parallel_partition(std::span<const Point> pts, const SixCounts& req,
                                                       const ParallelSearchOptions& opt) {
    const std::size_t N = pts.size();
    std::size_t top_min = req[0] + req[1] + req[2], bot_min = req[3] + req[4] + req[5];
    if (top_min + bot_min > N || N < 2) return std::nullopt;
    const std::size_t k_lo = top_min, k_hi = N - bot_min;
    // Every feasible K when the range is narrow, a spread sample otherwise.
    std::vector<std::size_t> ks;
    if (k_hi - k_lo <= 16) {
        for (std::size_t k = k_lo; k <= k_hi; ++k) ks.push_back(k);
    } else {
        for (std::size_t k : {(k_lo + k_hi) / 2, k_lo + (k_hi - k_lo) / 4, k_hi - (k_hi - k_lo) / 4, k_lo, k_hi})
            if (std::find(ks.begin(), ks.end(), k) == ks.end()) ks.push_back(k);
    }

    RotationalSweep sweep(pts);
    const auto& init = sweep.initial_order();
    for (Vec d0 : direction_schedule(opt.max_directions)) {
        Vec d = generic_direction(pts, d0);
        std::vector<int> uorder = order_along(pts, d);
        std::vector<std::size_t> urank(N);
        for (std::size_t i = 0; i < N; ++i) urank[uorder[i]] = i;
        ParallelVisitor v{pts, urank, req, {}, nullptr, {}, {}, 0, 0};
        for (std::size_t K : ks) {
            ParallelVisitor::State s{K, Fenwick(N)};
            for (std::size_t p = N - K; p < N; ++p) s.fw.add(urank[init[p]], 1);
            v.states.push_back(std::move(s));
        }
        if (!sweep.run(v)) continue;
        ParallelFrame f{boundary_line(pts, uorder, d, v.cut_l), boundary_line(pts, uorder, d, v.cut_r),
                        top_k_line(pts, v.order, v.rep, v.hit->K)};
        PartitionResult r = make_parallel_result(pts, f, d);
        for (std::size_t i = 0; i < 6; ++i)
            if (r.count(kSixLabels[i]) < req[i]) throw VerificationFailure("parallel partition recount below requirement");
        return r;
    }
    return std::nullopt;
}

PartitionResult parallel_partition_six(const PointSet& ps) {
    const std::size_t n = ps.size();
    if (n < 12) throw InputError("parallel_partition_six needs n >= 12");
    const std::size_t m = (n + 5) / 6 - 1;
    auto r = find_parallel_partition(ps.points(), SixCounts{m, m, m, m, m, m});
    if (!r) throw SearchFailure("no parallel six-region partition found");
    check_partition(ps, *r);
    return *r;
}

std::size_t corner_width(std::size_t n) {
    // Largest w with (w+1)^2 <= n/2 + 1.
    std::size_t w = 0;
    while (2 * (w + 2) * (w + 2) <= n + 2) ++w;
    return w;
}

PartitionResult corner_partition(const PointSet& ps) {
    const std::size_t n = ps.size();
    if (n < 8) throw InputError("corner_partition needs n >= 8");
    const std::size_t w = corner_width(n);
    std::span<const Point> pts = ps.points();
    Vec d = generic_direction(pts, Vec{1 << 20, 1});
    std::vector<int> uorder = order_along(pts, d);
    std::vector<Point> P, Q;
    for (std::size_t i = 0; i < 2 * w; ++i) {
        P.push_back(pts[uorder[i]]);
        Q.push_back(pts[uorder[n - 1 - i]]);
    }
    Line l3 = separated_cut_line(P, Q, w, w);
    std::size_t mid_top = 0;
    for (std::size_t i = 2 * w; i < n - 2 * w; ++i) mid_top += l3.side(pts[uorder[i]]) > 0;
    if (2 * mid_top < n - 4 * w) l3 = l3.flipped();
    ParallelFrame f{boundary_line(pts, uorder, d, 2 * w), boundary_line(pts, uorder, d, n - 2 * w), l3};
    PartitionResult r = make_parallel_result(pts, f, d);
    for (const char* s : {"S1", "S3", "S4", "S6"})
        if (r.count(s) != w) throw VerificationFailure(std::string("corner region ") + s + " has the wrong size");
    if (r.count("S2") + 2 * w < n / 2) throw VerificationFailure("S2 below floor(n/2)-2w");
    check_partition(ps, r);
    return r;
}

// ---- six sectors ----

namespace {

struct DirGroup {
    Vec dir;  // canonical representative in [0, pi)
    int plus = 0;
    int minus = 0;
};

struct Centered {
    std::vector<DirGroup> groups;
    bool valid = false;
};

Centered center_groups(std::span<const Point> pts, Coord cx, Coord cy) {
    Centered c;
    std::vector<std::pair<Vec, int>> items;
    items.reserve(pts.size());
    for (const Point& p : pts) {
        Vec r{4 * p.x - cx, 4 * p.y - cy};
        if (r.x == 0 && r.y == 0) return c;
        if (half_plane(r) == 1) items.push_back({-r, -1});
        else items.push_back({r, 1});
    }
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return angle_less(a.first, b.first); });
    for (const auto& [v, s] : items) {
        if (c.groups.empty() || !same_angle(c.groups.back().dir, v)) c.groups.push_back({v, 0, 0});
        (s > 0 ? c.groups.back().plus : c.groups.back().minus)++;
    }
    c.valid = true;
    return c;
}

struct Cuts {
    std::size_t s, e1, e2;  // unwrapped group indices; blocks [s,e1), [e1,e2), [e2,s+m)
};

// Prefix sums over the doubled sequence; entries past m have plus and minus
// exchanged, so every block of length <= m counts sides relative to its start.
struct Doubled {
    std::vector<int> plus, minus;  // prefix sums of length 2m+1
    explicit Doubled(const std::vector<DirGroup>& g) : plus(2 * g.size() + 1, 0), minus(2 * g.size() + 1, 0) {
        const std::size_t m = g.size();
        for (std::size_t t = 0; t < 2 * m; ++t) {
            const DirGroup& x = g[t % m];
            plus[t + 1] = plus[t] + (t < m ? x.plus : x.minus);
            minus[t + 1] = minus[t] + (t < m ? x.minus : x.plus);
        }
    }
    int low(std::size_t a, std::size_t b) const { return std::min(plus[b] - plus[a], minus[b] - minus[a]); }
};

// end[s]: smallest e with block [s,e) holding q of each side (2m+1 if none).
std::vector<std::size_t> earliest_ends(const Doubled& d, std::size_t m, int q) {
    std::vector<std::size_t> end(2 * m + 1, 2 * m + 1);
    std::size_t e = 0;
    for (std::size_t s = 0; s <= 2 * m; ++s) {
        e = std::max(e, s);
        while (e <= 2 * m && d.low(s, e) < q) ++e;
        end[s] = e <= 2 * m ? e : 2 * m + 1;
    }
    return end;
}

// Earliest ends for the first two blocks maximise the third block.
std::optional<Cuts> feasible_cuts(const std::vector<DirGroup>& g, int q, int* best_third = nullptr) {
    const std::size_t m = g.size();
    if (m < 3) return std::nullopt;
    Doubled d(g);
    auto end = earliest_ends(d, m, q);
    std::optional<Cuts> found;
    for (std::size_t s = 0; s < m; ++s) {
        std::size_t e1 = end[s];
        if (e1 >= s + m) continue;
        std::size_t e2 = end[e1];
        if (e2 >= s + m) continue;
        int third = d.low(e2, s + m);
        if (best_third) *best_third = std::max(*best_third, third);
        if (third >= q && !found) {
            found = Cuts{s, e1, e2};
            if (!best_third) return found;
        }
    }
    return found;
}

// Larger is better: capacity first, then progress of the third block at capacity+1.
std::pair<int, int> center_score(std::span<const Point> pts, Coord cx, Coord cy) {
    Centered c = center_groups(pts, cx, cy);
    if (!c.valid || c.groups.size() < 3) return {-1, -1};
    int lo = 0, hi = static_cast<int>(pts.size() / 6);
    while (lo < hi) {
        int mid = (lo + hi + 1) / 2;
        if (feasible_cuts(c.groups, mid)) lo = mid;
        else hi = mid - 1;
    }
    int progress = -1;
    feasible_cuts(c.groups, lo + 1, &progress);
    return {lo, progress};
}

Vec cut_direction(const std::vector<DirGroup>& g, std::size_t cut) {
    const std::size_t m = g.size();
    std::size_t c = cut % m;
    if (c == 0) return g[m - 1].dir + (-g[0].dir);
    return g[c - 1].dir + g[c].dir;
}

Line line_through_center(Vec dir, Coord cx, Coord cy) {
    Vec nrm = rot90(dir);
    Wide c = -(Wide(nrm.x) * cx + Wide(nrm.y) * cy);
    return Line(4 * nrm.x, 4 * nrm.y, static_cast<Coord>(c));
}

Wide det3(const Line& a, const Line& b, const Line& c) {
    return Wide(a.a) * (Wide(b.b) * c.c - Wide(b.c) * c.b) - Wide(a.b) * (Wide(b.a) * c.c - Wide(b.c) * c.a) +
           Wide(a.c) * (Wide(b.a) * c.b - Wide(b.b) * c.a);
}

SectorResult build_sectors(std::span<const Point> pts, const Centered& c, const Cuts& cuts, Coord cx, Coord cy,
                        std::size_t q) {
    const auto& g = c.groups;
    Line l1 = line_through_center(cut_direction(g, cuts.s), cx, cy);
    Line l2 = line_through_center(cut_direction(g, cuts.e1), cx, cy);
    Line l3 = line_through_center(cut_direction(g, cuts.e2), cx, cy);
    if (det3(l1, l2, l3) != 0) throw VerificationFailure("sector lines are not concurrent");
    // Sector k in counter-clockwise order: the relative-plus part of block k
    // for k < 3, the relative-minus part of block k-3 otherwise. Read off from
    // the sign pattern of one representative per sector.
    SectorResult out;
    out.cx = cx;
    out.cy = cy;
    out.partition.lines = {l1, l2, l3};
    std::map<std::array<int, 3>, int> sector_of;
    const std::size_t m = g.size();
    const std::size_t bounds[4] = {cuts.s, cuts.e1, cuts.e2, cuts.s + m};
    for (int blk = 0; blk < 3; ++blk) {
        std::size_t t = bounds[blk];
        Vec v = g[t % m].dir;
        if (t >= m) v = -v;
        auto sig = [&](Vec dir) {
            auto s = [&](const Line& l) { return Wide(l.a) * dir.x + Wide(l.b) * dir.y > 0 ? 1 : -1; };
            return std::array<int, 3>{s(l1), s(l2), s(l3)};
        };
        sector_of[sig(v)] = blk;
        sector_of[sig(-v)] = blk + 3;
    }
    for (int k = 0; k < 6; ++k) out.partition.regions[kSixLabels[k]];
    for (const Point& p : pts) {
        std::array<int, 3> s{};
        for (int i = 0; i < 3; ++i) {
            int v = out.partition.lines[i].side(p);
            if (v == 0) throw VerificationFailure("point on a sector line");
            s[i] = v;
        }
        auto it = sector_of.find(s);
        if (it == sector_of.end()) throw VerificationFailure("point outside the six sectors");
        out.partition.regions[kSixLabels[it->second]].push_back(p.id);
    }
    for (const auto& label : kSixLabels)
        if (out.partition.count(label) < q) throw VerificationFailure("sector " + label + " recount below q");
    return out;
}

struct CenterF {
    double x, y;
};

std::optional<CenterF> intersect(const Line& a, const Line& b) {
    double det = double(a.a) * double(b.b) - double(a.b) * double(b.a);
    if (std::abs(det) < 1e-9) return std::nullopt;
    double x = (double(a.b) * double(b.c) - double(a.c) * double(b.b)) / det;
    double y = (double(a.c) * double(b.a) - double(a.a) * double(b.c)) / det;
    return CenterF{x, y};
}

}  // namespace

std::size_t sector_capacity(std::span<const Point> pts, Coord cx, Coord cy) {
    auto s = center_score(pts, cx, cy);
    return s.first < 0 ? 0 : static_cast<std::size_t>(s.first);
}

SectorResult six_sector_partition(const PointSet& ps, std::size_t q) {
    SectorResult r = six_sector_partition(ps.points(), q);
    check_partition(ps, r.partition);
    return r;
}

SectorResult six_sector_partition(std::span<const Point> pts, std::size_t q) {
    const std::size_t n = pts.size();
    if (n < 6 * q + 6 && q > 0) throw InputError("six_sector_partition needs n >= 6q+6");
    const int qi = static_cast<int>(q);

    auto try_center = [&](Coord cx, Coord cy) -> std::optional<SectorResult> {
        Centered c = center_groups(pts, cx, cy);
        if (!c.valid) return std::nullopt;
        auto cuts = feasible_cuts(c.groups, qi);
        if (!cuts) return std::nullopt;
        return build_sectors(pts, c, *cuts, cx, cy, q);
    };
    auto grid = [](double v) { return static_cast<Coord>(std::llround(4.0 * v)); };

    std::pair<int, int> best_score{-2, -2};
    std::pair<Coord, Coord> best{0, 0};
    std::optional<SectorResult> done;
    auto consider = [&](Coord cx, Coord cy) {
        auto sc = center_score(pts, cx, cy);
        if (sc.first >= qi) done = try_center(cx, cy);
        if (sc > best_score) {
            best_score = sc;
            best = {cx, cy};
            return true;
        }
        return false;
    };

    // Pairwise intersections of halving lines at 60 degree spacing.
    constexpr double kScale = 1 << 20;
    for (int rot = 0; rot < 12 && !done; ++rot) {
        std::vector<Line> hl;
        for (int k = 0; k < 3; ++k) {
            double t = std::numbers::pi * (k / 3.0 + rot / 36.0) + 1e-4;
            Vec d{std::llround(kScale * std::cos(t)), std::llround(kScale * std::sin(t))};
            hl.push_back(halving_line(pts, n / 2, d));
        }
        double sx = 0, sy = 0;
        int cnt = 0;
        for (int a = 0; a < 3 && !done; ++a)
            for (int b = a + 1; b < 3 && !done; ++b)
                if (auto p = intersect(hl[a], hl[b])) {
                    consider(grid(p->x), grid(p->y));
                    sx += p->x;
                    sy += p->y;
                    ++cnt;
                }
        if (cnt && !done) consider(grid(sx / cnt), grid(sy / cnt));
    }

    // Centroids of random point triples concentrate where the depth is high.
    std::mt19937_64 rng(static_cast<std::uint64_t>(n) * 7919 + q);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int it = 0; it < 400 && !done; ++it) {
        const Point &a = pts[pick(rng)], &b = pts[pick(rng)], &c = pts[pick(rng)];
        consider(grid((a.x + b.x + c.x) / 3.0), grid((a.y + b.y + c.y) / 3.0));
    }

    // Pattern search around the best centre with shrinking step, then random
    // probes at the final scales.
    Coord minx = pts[0].x, maxx = pts[0].x, miny = pts[0].y, maxy = pts[0].y;
    for (const Point& p : pts) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }
    const Coord extent = std::max<Coord>(4, std::max(maxx - minx, maxy - miny));
    const int dx[8] = {1, -1, 0, 0, 1, 1, -1, -1};
    const int dy[8] = {0, 0, 1, -1, 1, -1, 1, -1};
    for (int round = 0; round < 4 && !done; ++round) {
        for (Coord step = extent; step >= 1 && !done; step /= 2) {
            bool improved = true;
            while (improved && !done) {
                improved = false;
                for (int k = 0; k < 8 && !done; ++k)
                    improved |= consider(best.first + dx[k] * step, best.second + dy[k] * step);
            }
            std::uniform_int_distribution<Coord> jitter(-step, step);
            for (int it = 0; it < 16 && !done; ++it) consider(best.first + jitter(rng), best.second + jitter(rng));
        }
    }
    if (done) return *done;
    throw SearchFailure("no centre admits six sectors of " + std::to_string(q) + " points (best " +
                        std::to_string(best_score.first) + ")");
}

}  // namespace crossfam
