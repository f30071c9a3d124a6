#include "crossfam/constructor.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <cmath>
#include <numbers>
#include <optional>

#include "crossfam/partitions.hpp"
#include "crossfam/sweep.hpp"

namespace crossfam {

namespace bounds {

namespace {
std::int64_t sn(std::size_t n) { return static_cast<std::int64_t>(n); }
}  // namespace

std::int64_t p3_crossing(std::size_t n) { return sn(corner_width(n)); }

std::int64_t k1t_crossing(std::size_t n, int t) {
    if (t <= 4) return std::max<std::int64_t>(0, (sn(n) + 5) / 6 - 1);
    return sn(n) / (t + 1);
}

std::int64_t k4_crossing(std::size_t n) { return std::max<std::int64_t>(0, sn(n) / 4 - 6); }

std::int64_t kt_crossing(std::size_t n, int t) {
    if (t == 4) return k4_crossing(n);
    return std::min<std::int64_t>(sn(n) / t, k4_crossing(n));
}

namespace {
std::int64_t w12(std::size_t n) {
    std::int64_t w = 0;
    while (12 * (w + 1) * (w + 1) <= sn(n)) ++w;
    return w;
}
}  // namespace

std::int64_t p3_intersecting(std::size_t n) {
    // ceil(w * floor(n/12) / 2)
    return (w12(n) * (sn(n) / 12) + 1) / 2;
}

std::int64_t p3_intersecting_colored(std::size_t n) { return (w12(n) / 2) * (sn(n) / 12); }

std::int64_t k3_intersecting(std::size_t n) { return n == 0 ? 0 : (sn(n) - 1) / 2; }

std::int64_t p3_crossing_colored(std::size_t n) {
    std::int64_t s = 0;
    while ((4 * (s + 1) + 1) * (4 * (s + 1) + 1) <= sn(n) + 1) ++s;
    return s;
}

std::int64_t k1t_intersecting(std::size_t n, int) { return sn(n) * sn(n) / 36; }

}  // namespace bounds

namespace {

Family empty_family(FamilyKind kind, Pattern p) {
    Family f;
    f.kind = kind;
    f.pattern = p;
    f.claimed_bound = 0;
    f.warnings.push_back("bound is not positive at this n; returning an empty family");
    return f;
}

Family finish(const PointSet& ps, Family f, const char* what) {
    auto rep = verify_family(ps, f);
    if (!rep.ok) throw VerificationFailure(std::string(what) + ": " + rep.message);
    const std::size_t n = ps.size();
    const std::size_t upper = f.kind == FamilyKind::Crossing
                                  ? n / f.pattern.vertex_count()
                                  : n * (n - 1) / 2 / f.pattern.edge_count();
    if (f.size() > upper) throw VerificationFailure(std::string(what) + ": size exceeds the trivial upper bound");
    if (static_cast<std::int64_t>(f.size()) < f.claimed_bound)
        throw VerificationFailure(std::string(what) + ": size " + std::to_string(f.size()) + " below claimed bound " +
                                  std::to_string(f.claimed_bound));
    if (f.claimed_bound <= 0) f.warnings.push_back("bound is not positive at this n");
    return f;
}

// Position of a point in the frame of two parallel lines (normal d) and l3.
struct FrameView {
    const PointSet& ps;
    Vec d;
    Line l3;
    Coord u(int id) const { return project(d, ps.by_id(id)); }
    Wide v(int id) const { return l3.eval(ps.by_id(id)); }
};

std::vector<int> sorted_by(std::vector<int> ids, const std::function<Coord(int)>& key) {
    std::sort(ids.begin(), ids.end(), [&](int a, int b) { return key(a) < key(b); });
    return ids;
}

// Ranks of v with ties broken by position, so strict monotonicity of ranks means
// weak monotonicity of v.
std::vector<std::int64_t> v_ranks(const FrameView& fv, const std::vector<int>& ids_by_u) {
    std::vector<std::size_t> idx(ids_by_u.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        Wide va = fv.v(ids_by_u[a]), vb = fv.v(ids_by_u[b]);
        return va != vb ? va < vb : a < b;
    });
    std::vector<std::int64_t> r(idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) r[idx[k]] = static_cast<std::int64_t>(k);
    return r;
}

struct Chain {
    std::vector<int> ids;  // in increasing u
    Monotone dir = Monotone::Ascending;
};

Chain chain_of(const FrameView& fv, const std::vector<int>& ids) {
    if (ids.empty()) return {};
    auto by_u = sorted_by(ids, [&](int id) { return fv.u(id); });
    auto ranks = v_ranks(fv, by_u);
    auto m = monotone_subsequence(ranks);
    Chain c;
    c.dir = m.direction;
    for (std::size_t i : m.indices) c.ids.push_back(by_u[i]);
    return c;
}

std::vector<Point> pts_of(const PointSet& ps, const std::vector<int>& ids) {
    std::vector<Point> out;
    for (int id : ids) out.push_back(ps.by_id(id));
    return out;
}

bool paths_cross_all(const PointSet& ps, const std::vector<Subgraph>& done, const Subgraph& g) {
    for (const Subgraph& h : done)
        if (!subgraphs_cross(g, h, ps)) return false;
    return true;
}

// Depth-first assignment of middle and end vertices to chain points.
bool backtrack_paths(const PointSet& ps, const std::vector<int>& X, std::vector<int>& A, std::vector<int>& C,
                     std::vector<Subgraph>& out, std::size_t& budget) {
    const std::size_t i = out.size();
    if (i == X.size()) return true;
    for (std::size_t a = i; a < A.size(); ++a) {
        std::swap(A[i], A[a]);
        for (std::size_t c = i; c < C.size(); ++c) {
            if (budget == 0) return false;
            --budget;
            std::swap(C[i], C[c]);
            Subgraph g = make_path({X[i], A[i], C[i]});
            if (paths_cross_all(ps, out, g)) {
                out.push_back(g);
                if (backtrack_paths(ps, X, A, C, out, budget)) return true;
                out.pop_back();
            }
            std::swap(C[i], C[c]);
        }
        std::swap(A[i], A[a]);
    }
    return false;
}

}  // namespace

// ---- crossing paths ----

Family p3_crossing_family(const PointSet& ps) {
    const std::int64_t bound = bounds::p3_crossing(ps.size());
    if (bound <= 0) return empty_family(FamilyKind::Crossing, Pattern::p3());
    if (ps.size() < 8) throw InputError("n too small: paths need at least 8 points");
    PartitionResult part = corner_partition(ps);
    const std::size_t w = corner_width(ps.size());
    FrameView fv{ps, part.frame, part.lines[2]};
    Chain x = chain_of(fv, part.at("S2"));
    if (x.ids.size() < w) throw VerificationFailure("monotone chain in S2 shorter than w");
    x.ids.resize(w);
    // A descending chain avoids S6, an ascending one S4; in the mirrored frame
    // (u negated) the ascending case looks descending.
    const bool desc = x.dir == Monotone::Descending;
    const Coord sgn = desc ? 1 : -1;
    std::vector<int> A = part.at(desc ? "S6" : "S4"), C = part.at(desc ? "S4" : "S6");
    if (!avoids(pts_of(ps, x.ids), pts_of(ps, A))) throw VerificationFailure("chain does not avoid its corner");
    auto key = [&](int id) { return sgn * fv.u(id); };
    std::vector<int> X = sorted_by(x.ids, key);
    A = sorted_by(A, key);
    std::reverse(A.begin(), A.end());
    C = sorted_by(C, key);

    Family f;
    f.kind = FamilyKind::Crossing;
    f.pattern = Pattern::p3();
    f.claimed_bound = bound;
    f.lines = part.lines;
    auto build = [&](const std::vector<int>& a_order) {
        std::vector<Subgraph> ms;
        for (std::size_t i = 0; i < w; ++i) ms.push_back(make_path({X[i], a_order[i], C[i]}));
        return ms;
    };
    f.members = build(A);
    if (!verify_family(ps, f).ok) {
        std::vector<int> rev(A.rbegin(), A.rend());
        f.members = build(rev);
    }
    if (!verify_family(ps, f).ok) {
        std::vector<Subgraph> out;
        std::size_t budget = 2'000'000;
        if (!backtrack_paths(ps, X, A, C, out, budget)) {
            auto rep = verify_family(ps, f);
            throw VerificationFailure("no crossing assignment of paths: " + rep.message);
        }
        f.members = out;
        f.warnings.push_back("path assignment found by backtracking");
    }
    return finish(ps, std::move(f), "p3_crossing_family");
}

// ---- crossing stars ----

namespace {

// Stars centred in S2 with one leaf in each of S1, S3, S5, plus extra leaves
// from the remaining points.
Family stars_from(const PartitionResult& part, std::size_t size, int t) {
    std::vector<int> s1 = part.at("S1"), s2 = part.at("S2"), s3 = part.at("S3"), s5 = part.at("S5");
    for (auto* v : {&s1, &s2, &s3, &s5}) std::sort(v->begin(), v->end());
    std::vector<int> pool;
    for (const char* lab : {"S4", "S6"})
        for (int id : part.at(lab)) pool.push_back(id);
    for (auto* v : {&s1, &s2, &s3, &s5})
        for (std::size_t i = size; i < v->size(); ++i) pool.push_back((*v)[i]);
    std::sort(pool.begin(), pool.end());
    const std::size_t extra = static_cast<std::size_t>(t - 3);
    if (pool.size() < extra * size) throw InputError("insufficient points for leaf assignment");
    Family f;
    f.kind = FamilyKind::Crossing;
    f.pattern = t == 3 ? Pattern::star(3) : Pattern::star(t);
    f.lines = part.lines;
    std::size_t next = 0;
    for (std::size_t i = 0; i < size; ++i) {
        std::vector<int> leaves{s1[i], s3[i], s5[i]};
        for (std::size_t e = 0; e < extra; ++e) leaves.push_back(pool[next++]);
        f.members.push_back(make_star(s2[i], leaves));
    }
    return f;
}

std::size_t min_count(const PartitionResult& p, std::initializer_list<const char*> labels) {
    std::size_t m = SIZE_MAX;
    for (const char* l : labels) m = std::min(m, p.count(l));
    return m;
}

}  // namespace

Family k13_crossing_family(const PointSet& ps) { return k1t_crossing_family(ps, 3); }

Family k1t_crossing_family(const PointSet& ps, int t) {
    if (t < 3) throw InputError("K1,t needs t >= 3");
    const std::size_t n = ps.size();
    const std::int64_t bound = bounds::k1t_crossing(n, t);
    if (bound <= 0) return empty_family(FamilyKind::Crossing, Pattern::star(t));
    if (n < 12) throw InputError("n too small: stars need at least 12 points");
    const std::size_t need = static_cast<std::size_t>(bound);
    std::optional<PartitionResult> part;
    if ((n + 5) / 6 - 1 >= need) {
        part = parallel_partition_six(ps);
    } else {
        // Only the four regions holding centres and core leaves are constrained.
        part = find_parallel_partition(ps.points(), SixCounts{need, need, need, 0, need, 0});
        if (!part) throw SearchFailure("no partition with four regions of " + std::to_string(need) + " points");
        check_partition(ps, *part);
    }
    std::size_t size = min_count(*part, {"S1", "S2", "S3", "S5"});
    size = std::min(size, n / static_cast<std::size_t>(t + 1));
    Family f = stars_from(*part, size, t);
    f.claimed_bound = bound;
    return finish(ps, std::move(f), "k1t_crossing_family");
}

// ---- crossing cliques ----

Family k4_crossing_family(const PointSet& ps) { return kt_crossing_family(ps, 4); }

Family kt_crossing_family(const PointSet& ps, int t) {
    if (t < 4) throw InputError("Kt needs t >= 4");
    const std::size_t n = ps.size();
    const std::int64_t bound = bounds::kt_crossing(n, t);
    if (bound <= 0) return empty_family(FamilyKind::Crossing, Pattern::clique(t));
    const std::size_t top = (n + 3) / 4;
    Line h = halving_line(ps.points(), top, Vec{1, 1 << 20});
    std::vector<Point> apex_side, rest;
    for (const Point& p : ps) (h.side(p) > 0 ? apex_side : rest).push_back(p);
    const std::size_t target = std::min<std::size_t>(static_cast<std::size_t>(bound), n / t);
    const std::size_t q_min = (target + 1) / 2;
    std::optional<SectorResult> ced;
    for (std::size_t q = rest.size() / 6 - 1; q + 1 > q_min && q >= 1 && !ced; --q) {
        try {
            ced = six_sector_partition(rest, q);
        } catch (const SearchFailure&) {
        }
    }
    if (!ced) throw SearchFailure("no six-sector partition of the far side");
    const auto& reg = ced->partition.regions;
    auto sorted = [&](const char* l) {
        std::vector<int> v = reg.at(l);
        std::sort(v.begin(), v.end());
        return v;
    };
    std::vector<int> sec[6];
    for (int k = 0; k < 6; ++k) sec[k] = sorted(("S" + std::to_string(k + 1)).c_str());
    std::size_t per = std::min({sec[0].size(), sec[2].size(), sec[4].size()});
    std::size_t per_even = std::min({sec[1].size(), sec[3].size(), sec[5].size()});
    std::vector<std::array<int, 3>> tris;
    for (std::size_t i = 0; i < per; ++i) tris.push_back({sec[0][i], sec[2][i], sec[4][i]});
    for (std::size_t i = 0; i < per_even; ++i) tris.push_back({sec[1][i], sec[3][i], sec[5][i]});
    std::vector<int> apexes;
    for (const Point& p : apex_side) apexes.push_back(p.id);
    std::sort(apexes.begin(), apexes.end());
    std::size_t size = std::min({tris.size(), apexes.size(), n / static_cast<std::size_t>(t)});

    // Extra vertices for t > 4 come from every point not used by the first `size` members.
    std::vector<int> chosen;
    for (std::size_t i = 0; i < size; ++i) {
        for (int v : tris[i]) chosen.push_back(v);
        chosen.push_back(apexes[i]);
    }
    std::sort(chosen.begin(), chosen.end());
    std::vector<int> pool;
    for (const Point& p : ps)
        if (!std::binary_search(chosen.begin(), chosen.end(), p.id)) pool.push_back(p.id);
    std::sort(pool.begin(), pool.end());

    Family f;
    f.kind = FamilyKind::Crossing;
    f.pattern = Pattern::clique(t);
    f.claimed_bound = bound;
    f.lines = {h};
    for (const Line& l : ced->partition.lines) f.lines.push_back(l);
    std::size_t next = 0;
    for (std::size_t i = 0; i < size; ++i) {
        std::vector<int> vs{tris[i][0], tris[i][1], tris[i][2], apexes[i]};
        for (int e = 4; e < t; ++e) vs.push_back(pool[next++]);
        f.members.push_back(make_complete(vs));
    }
    return finish(ps, std::move(f), "kt_crossing_family");
}

// ---- intersecting families ----

namespace {

struct FrameCandidate {
    Line l3;
    Vec d;
    Color top_color = Color::None;     // required color of points used above l3
    Color bottom_color = Color::None;  // required color of points used below l3
};

enum class VGoal { Product, Pairs };

struct VPlan {
    std::int64_t score = -1;
    std::vector<int> X;     // chain, unordered
    std::vector<int> apex;  // corner points
    std::vector<Line> lines;
};

bool color_ok(const Point& p, Color need) { return need == Color::None || p.color == need; }

// Incremental longest strictly increasing subsequence length.
struct Patience {
    std::vector<std::int64_t> tails;
    void push(std::int64_t v) {
        auto it = std::lower_bound(tails.begin(), tails.end(), v);
        if (it == tails.end()) tails.push_back(v);
        else *it = v;
    }
    std::int64_t len() const { return static_cast<std::int64_t>(tails.size()); }
};

// Indices of one longest strictly increasing subsequence.
std::vector<std::size_t> increasing_indices(const std::vector<std::int64_t>& a) {
    std::vector<std::size_t> prev(a.size(), SIZE_MAX), tail_idx;
    std::vector<std::int64_t> tails;
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto it = std::lower_bound(tails.begin(), tails.end(), a[i]);
        const std::size_t k = static_cast<std::size_t>(it - tails.begin());
        if (it == tails.end()) {
            tails.push_back(a[i]);
            tail_idx.push_back(i);
        } else {
            *it = a[i];
            tail_idx[k] = i;
        }
        prev[i] = k > 0 ? tail_idx[k - 1] : SIZE_MAX;
    }
    std::vector<std::size_t> out;
    if (tail_idx.empty()) return out;
    for (std::size_t i = tail_idx.back(); i != SIZE_MAX; i = prev[i]) out.push_back(i);
    std::reverse(out.begin(), out.end());
    return out;
}

std::int64_t v_score(VGoal g, std::int64_t chain, std::int64_t apexes) {
    std::int64_t h = chain / 2;
    return g == VGoal::Product ? h * apexes : std::min(h, apexes);
}

// For one frame: chain points lie strictly between the parallel cuts on one
// side of l3 and apexes in the corner the chain avoids on the other side.
void scan_frame(const PointSet& ps, const FrameCandidate& fc, VGoal goal, VPlan& best) {
    std::span<const Point> pts = ps.points();
    const std::size_t N = pts.size();
    Vec d = generic_direction(pts, fc.d);
    std::vector<int> uorder = order_along(pts, d);
    FrameView fv{ps, d, fc.l3};
    std::vector<int> ids(N);
    for (std::size_t i = 0; i < N; ++i) ids[i] = pts[uorder[i]].id;
    auto ranks = v_ranks(fv, ids);
    std::vector<int> side(N);  // +1 usable on top, -1 usable on bottom, 0 unusable
    for (std::size_t i = 0; i < N; ++i) {
        const Point& p = pts[uorder[i]];
        int s = fc.l3.side(p);
        side[i] = s > 0 ? (color_ok(p, fc.top_color) ? 1 : 0) : (color_ok(p, fc.bottom_color) ? -1 : 0);
    }
    std::vector<int> pre_top(N + 1, 0), pre_bot(N + 1, 0);
    for (std::size_t i = 0; i < N; ++i) {
        pre_top[i + 1] = pre_top[i] + (side[i] == 1);
        pre_bot[i + 1] = pre_bot[i] + (side[i] == -1);
    }
    struct Pick {
        std::int64_t score;
        std::size_t lo, hi;
        int chain_side;  // +1 chain on top
        bool desc;
    } pick{-1, 0, 0, 0, false};
    for (int chain_side : {1, -1}) {
        for (std::size_t lo = 0; lo < N; ++lo) {
            Patience asc, dsc;
            for (std::size_t hi = lo; hi < N; ++hi) {
                if (side[hi] == chain_side) {
                    asc.push(ranks[hi]);
                    dsc.push(-ranks[hi]);
                }
                // Middle is [lo, hi]; left corner [0, lo), right corner (hi, N).
                std::int64_t left = chain_side == 1 ? pre_bot[lo] : pre_top[lo];
                std::int64_t right = chain_side == 1 ? pre_bot[N] - pre_bot[hi + 1] : pre_top[N] - pre_top[hi + 1];
                // Top chain: descending avoids bottom-left, ascending bottom-right.
                // Bottom chain: descending avoids top-right, ascending top-left.
                std::int64_t sd = v_score(goal, dsc.len(), chain_side == 1 ? left : right);
                std::int64_t sa = v_score(goal, asc.len(), chain_side == 1 ? right : left);
                if (sd > pick.score) pick = {sd, lo, hi, chain_side, true};
                if (sa > pick.score) pick = {sa, lo, hi, chain_side, false};
            }
        }
    }
    if (pick.score <= best.score) return;
    VPlan plan;
    plan.score = pick.score;
    std::vector<int> mid;
    for (std::size_t i = pick.lo; i <= pick.hi; ++i)
        if (side[i] == pick.chain_side) mid.push_back(ids[i]);
    std::vector<std::int64_t> mranks;
    for (std::size_t i = pick.lo; i <= pick.hi; ++i)
        if (side[i] == pick.chain_side) mranks.push_back(pick.desc ? -ranks[i] : ranks[i]);
    for (std::size_t i : increasing_indices(mranks)) plan.X.push_back(mid[i]);
    const bool left_corner = (pick.chain_side == 1) == pick.desc;
    const int apex_side = -pick.chain_side;
    if (left_corner) {
        for (std::size_t i = 0; i < pick.lo; ++i)
            if (side[i] == apex_side) plan.apex.push_back(ids[i]);
    } else {
        for (std::size_t i = pick.hi + 1; i < N; ++i)
            if (side[i] == apex_side) plan.apex.push_back(ids[i]);
    }
    auto boundary = [&](std::size_t cut) {
        Coord lo = cut == 0 ? project(d, pts[uorder[0]]) - 1 : project(d, pts[uorder[cut - 1]]);
        Coord hi = cut == N ? project(d, pts[uorder[N - 1]]) + 1 : project(d, pts[uorder[cut]]);
        return split_line(d, lo, hi);
    };
    plan.lines = {boundary(pick.lo), boundary(pick.hi + 1), fc.l3};
    best = std::move(plan);
}

std::vector<Vec> half_turn(std::size_t k, double tilt) {
    std::vector<Vec> out;
    constexpr double kScale = 1 << 20;
    for (std::size_t i = 0; i < k; ++i) {
        double t = std::numbers::pi * static_cast<double>(i) / static_cast<double>(k) + tilt;
        out.push_back({std::llround(kScale * std::cos(t)), std::llround(kScale * std::sin(t))});
    }
    return out;
}

// Chain ordered as every apex sees it, then members x_i - y_j - x_{i+h}.
std::vector<std::pair<int, int>> chain_pairs(const PointSet& ps, const VPlan& plan) {
    if (plan.X.size() < 2 || plan.apex.empty()) return {};
    auto X = pts_of(ps, plan.X);
    auto A = pts_of(ps, plan.apex);
    if (!avoids(X, A)) throw VerificationFailure("chain does not avoid the apex corner");
    std::vector<int> order = rank_sequence(A[0], X);
    const std::size_t h = order.size() / 2;
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < h; ++i) pairs.emplace_back(order[i], order[i + h]);
    return pairs;
}

FrameCandidate color_sweep_frame(const PointSet& ps, Vec normal, Vec d) {
    // Move l3 down from infinity along normal until one colour has n/4 points above it.
    std::span<const Point> pts = ps.points();
    Vec nrm = generic_direction(pts, normal);
    auto order = order_along(pts, nrm);
    const std::size_t want = (pts.size() + 3) / 4;
    std::size_t red = 0, blue = 0, k = 0;
    Color first = Color::Red;
    for (std::size_t i = pts.size(); i-- > 0;) {
        ++k;
        (pts[order[i]].color == Color::Red ? red : blue)++;
        if (red >= want || blue >= want) {
            first = red >= want ? Color::Red : Color::Blue;
            break;
        }
    }
    Line l3 = top_k_line(pts, order, nrm, k);
    return {l3, d, first, first == Color::Red ? Color::Blue : Color::Red};
}

VPlan best_plan(const PointSet& ps, const std::vector<FrameCandidate>& frames, VGoal goal) {
    VPlan best;
    for (const FrameCandidate& fc : frames) scan_frame(ps, fc, goal, best);
    return best;
}

PointSet merge(const PointSet& red, const PointSet& blue) {
    std::vector<Point> all;
    for (Point p : red) {
        p.color = Color::Red;
        all.push_back(p);
    }
    for (Point p : blue) {
        p.color = Color::Blue;
        all.push_back(p);
    }
    return PointSet(std::move(all));
}

std::vector<FrameCandidate> colored_frames(const PointSet& ps) {
    std::vector<FrameCandidate> frames;
    for (Vec nrm : half_turn(4, 0.013))
        for (Vec sgn_n : {nrm, -nrm})
            for (Vec d : half_turn(12, 0.0071)) frames.push_back(color_sweep_frame(ps, sgn_n, d));
    return frames;
}

}  // namespace

Family p3_intersecting_family(const PointSet& ps) {
    const std::size_t n = ps.size();
    const std::int64_t bound = bounds::p3_intersecting(n);
    if (bound <= 0) return empty_family(FamilyKind::Intersecting, Pattern::p3());
    if (n < 24) throw InputError("n too small: intersecting paths need at least 24 points");
    // The six-region frame carries the guarantee; halving frames usually do better.
    PartitionResult six = parallel_partition_six(ps);
    std::vector<FrameCandidate> frames{{six.lines[2], six.frame}};
    for (Vec nrm : half_turn(4, 0.013)) {
        Line l3 = halving_line(ps.points(), n / 2, nrm);
        for (Vec d : half_turn(8, 0.0071)) frames.push_back({l3, d});
    }
    VPlan plan = best_plan(ps, frames, VGoal::Product);
    Family f;
    f.kind = FamilyKind::Intersecting;
    f.pattern = Pattern::p3();
    f.claimed_bound = bound;
    f.lines = plan.lines;
    for (auto [a, b] : chain_pairs(ps, plan))
        for (int y : plan.apex) f.members.push_back(make_path({a, y, b}));
    return finish(ps, std::move(f), "p3_intersecting_family");
}

std::pair<PointSet, PointSet> split_colors(const PointSet& ps) {
    std::vector<Point> r, b;
    for (const Point& p : ps) {
        if (p.color == Color::Red) r.push_back(p);
        else if (p.color == Color::Blue) b.push_back(p);
        else throw InputError("point " + std::to_string(p.id) + " has no color");
    }
    return {PointSet(std::move(r), PointSet::Check::IdsOnly), PointSet(std::move(b), PointSet::Check::IdsOnly)};
}

Family p3_intersecting_family_bipartite(const PointSet& red, const PointSet& blue) {
    if (red.size() != blue.size()) throw InputError("color classes differ in size");
    PointSet all = merge(red, blue);
    const std::size_t n = all.size();
    const std::int64_t bound = bounds::p3_intersecting_colored(n);
    Family f;
    f.kind = FamilyKind::Intersecting;
    f.pattern = Pattern::p3();
    f.claimed_bound = bound;
    if (n >= 4) {
        VPlan plan = best_plan(all, colored_frames(all), VGoal::Product);
        f.lines = plan.lines;
        for (auto [a, b] : chain_pairs(all, plan))
            for (int y : plan.apex) f.members.push_back(make_path({a, y, b}));
    }
    return finish(all, std::move(f), "p3_intersecting_family_bipartite");
}

Family p3_crossing_family_bipartite(const PointSet& red, const PointSet& blue) {
    if (red.size() != blue.size()) throw InputError("color classes differ in size");
    PointSet all = merge(red, blue);
    const std::size_t n = all.size();
    Family f;
    f.kind = FamilyKind::Crossing;
    f.pattern = Pattern::p3();
    f.claimed_bound = bounds::p3_crossing_colored(n);
    if (n >= 4) {
        VPlan plan = best_plan(all, colored_frames(all), VGoal::Pairs);
        f.lines = plan.lines;
        auto pairs = chain_pairs(all, plan);
        std::sort(plan.apex.begin(), plan.apex.end());
        for (std::size_t i = 0; i < pairs.size() && i < plan.apex.size(); ++i)
            f.members.push_back(make_path({pairs[i].first, plan.apex[i], pairs[i].second}));
    }
    return finish(all, std::move(f), "p3_crossing_family_bipartite");
}

Family k3_intersecting_family(const PointSet& ps) {
    // Triangles through one hub whose other two corners form a matching of the
    // remaining points: they pairwise share the hub and no two share an edge.
    const std::size_t n = ps.size();
    Family f;
    f.kind = FamilyKind::Intersecting;
    f.pattern = Pattern::k3();
    f.claimed_bound = bounds::k3_intersecting(n);
    if (n >= 3) {
        std::vector<int> ids;
        for (const Point& p : ps) ids.push_back(p.id);
        std::sort(ids.begin(), ids.end());
        for (std::size_t i = 1; i + 1 < ids.size(); i += 2) f.members.push_back(make_complete({ids[0], ids[i], ids[i + 1]}));
    }
    return finish(ps, std::move(f), "k3_intersecting_family");
}

Family k1t_intersecting_family(const PointSet& ps, int t) {
    if (t < 3 || t > 5) throw InputError("K1,t-intersecting construction needs t in {3,4,5}");
    const std::size_t n = ps.size();
    const std::int64_t bound = bounds::k1t_intersecting(n, t);
    if (bound <= 0) return empty_family(FamilyKind::Intersecting, Pattern::star(t));
    if (n < 12) throw InputError("n too small: intersecting stars need at least 12 points");
    // Stars (y, k): centre y in S2, leaf k of each leaf region. Leaf regions:
    // S1, S3, S5, then S6 for t >= 4 and S4 for t = 5.
    std::vector<const char*> leaf_regions{"S1", "S3", "S5"};
    if (t >= 4) leaf_regions.push_back("S6");
    if (t >= 5) leaf_regions.push_back("S4");
    auto value = [&](const PartitionResult& p) {
        std::size_t b = SIZE_MAX;
        for (const char* l : leaf_regions) b = std::min(b, p.count(l));
        return static_cast<std::int64_t>(p.count("S2")) * static_cast<std::int64_t>(b);
    };
    std::optional<PartitionResult> best;
    std::int64_t best_val = -1;
    const std::size_t tt = static_cast<std::size_t>(t);
    ParallelSearchOptions quick{72};
    for (std::size_t b = n / (2 * tt); b >= 1; --b) {
        std::size_t room = n - tt * b;
        if (static_cast<std::int64_t>(room) * static_cast<std::int64_t>(b) <= best_val) break;
        for (std::size_t slack : {n / 16, n / 6, n / 3}) {
            if (slack >= room) continue;
            std::size_t a = room - slack;
            if (static_cast<std::int64_t>(a * b) <= best_val) break;
            SixCounts req{b, a, b, t >= 5 ? b : 0, b, t >= 4 ? b : 0};
            if (auto p = find_parallel_partition(ps.points(), req, quick)) {
                if (value(*p) > best_val) {
                    best_val = value(*p);
                    best = std::move(p);
                }
                break;
            }
        }
    }
    if (best_val < bound) {
        PartitionResult six = parallel_partition_six(ps);
        if (value(six) > best_val) {
            best_val = value(six);
            best = six;
        }
    }
    check_partition(ps, *best);
    std::vector<std::vector<int>> leaves;
    std::size_t b = SIZE_MAX;
    for (const char* l : leaf_regions) {
        leaves.push_back(best->at(l));
        b = std::min(b, leaves.back().size());
    }
    Family f;
    f.kind = FamilyKind::Intersecting;
    f.pattern = Pattern::star(t);
    f.claimed_bound = bound;
    f.lines = best->lines;
    for (int y : best->at("S2"))
        for (std::size_t k = 0; k < b; ++k) {
            std::vector<int> ls;
            for (const auto& reg : leaves) ls.push_back(reg[k]);
            f.members.push_back(make_star(y, ls));
        }
    return finish(ps, std::move(f), "k1t_intersecting_family");
}

Family construct(const PointSet& ps, const Pattern& pattern, FamilyKind kind) {
    using T = Pattern::Tag;
    if (kind == FamilyKind::Crossing) {
        switch (pattern.tag) {
            case T::P3:
                if (ps.colored()) {
                    auto [r, b] = split_colors(ps);
                    return p3_crossing_family_bipartite(r, b);
                }
                return p3_crossing_family(ps);
            case T::K1t: return k1t_crossing_family(ps, pattern.t);
            case T::K4: return k4_crossing_family(ps);
            case T::Kt: return kt_crossing_family(ps, pattern.t);
            default: break;
        }
    } else {
        switch (pattern.tag) {
            case T::P3:
                if (ps.colored()) {
                    auto [r, b] = split_colors(ps);
                    return p3_intersecting_family_bipartite(r, b);
                }
                return p3_intersecting_family(ps);
            case T::K3: return k3_intersecting_family(ps);
            case T::K1t: return k1t_intersecting_family(ps, pattern.t);
            default: break;
        }
    }
    throw InputError("no construction for " + pattern.name() + " " + to_string(kind) + " families");
}

}  // namespace crossfam
