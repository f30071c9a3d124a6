#include "crossfam/solver.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace crossfam {

namespace {

// Calls f for every k-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_subset(int n, int k, F&& f) {
    if (k > n || k < 0) return;
    std::vector<int> s(k);
    std::iota(s.begin(), s.end(), 0);
    while (true) {
        f(s);
        int i = k - 1;
        while (i >= 0 && s[i] == n - k + i) --i;
        if (i < 0) return;
        ++s[i];
        for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
    }
}

// Copies on positions 0..n-1.
std::vector<Subgraph> copies_by_index(int n, const Pattern& p) {
    using T = Pattern::Tag;
    std::vector<Subgraph> out;
    switch (p.tag) {
        case T::K2:
        case T::K3:
        case T::K4:
        case T::Kt:
            for_each_subset(n, p.vertex_count(), [&](const std::vector<int>& s) { out.push_back(make_complete(s)); });
            break;
        case T::P3:
            for (int m = 0; m < n; ++m)
                for (int a = 0; a < n; ++a)
                    for (int b = a + 1; b < n; ++b)
                        if (a != m && b != m) out.push_back(make_path({a, m, b}));
            break;
        case T::K1t:
            for (int c = 0; c < n; ++c)
                for_each_subset(n - 1, p.t, [&](const std::vector<int>& s) {
                    std::vector<int> leaves;
                    for (int v : s) leaves.push_back(v < c ? v : v + 1);
                    out.push_back(make_star(c, leaves));
                });
            break;
        case T::P4:
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int c = 0; c < n; ++c)
                        for (int d = a + 1; d < n; ++d) {
                            if (b == a || b == d || c == a || c == d || b == c) continue;
                            out.push_back(make_path({a, b, c, d}));
                        }
            break;
        case T::TwoK2:
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    for (int c = a + 1; c < n; ++c)
                        for (int d = c + 1; d < n; ++d)
                            if (c != b && d != b) out.push_back(make_matching({{a, b}, {c, d}}));
            break;
    }
    return out;
}

Subgraph to_ids(const PointSet& ps, const Subgraph& g) {
    Subgraph h;
    for (int v : g.vertices) h.vertices.push_back(ps[static_cast<std::size_t>(v)].id);
    for (const Segment& e : g.edges)
        h.edges.emplace_back(ps[static_cast<std::size_t>(e.a)].id, ps[static_cast<std::size_t>(e.b)].id);
    return h;
}

using Bits = std::vector<std::uint64_t>;

struct Graph {
    std::size_t n = 0;
    std::size_t words = 0;
    std::vector<Bits> adj;
    explicit Graph(std::size_t n_) : n(n_), words((n_ + 63) / 64), adj(n_, Bits((n_ + 63) / 64, 0)) {}
    void connect(std::size_t a, std::size_t b) {
        adj[a][b / 64] |= std::uint64_t{1} << (b % 64);
        adj[b][a / 64] |= std::uint64_t{1} << (a % 64);
    }
};

bool any(const Bits& b) {
    return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

// Branch and bound with a greedy colouring bound over bitsets.
class MaxClique {
public:
    MaxClique(const Graph& g, std::size_t limit) : g_(g), limit_(limit) {}

    std::vector<std::size_t> run() {
        Bits all(g_.words, 0);
        for (std::size_t v = 0; v < g_.n; ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
        std::vector<std::size_t> cur;
        if (g_.n > 0) expand(cur, all);
        return best_;
    }
    std::uint64_t explored() const { return nodes_; }
    bool stopped() const { return best_.size() >= limit_; }

private:
    void colour(const Bits& p, std::vector<std::size_t>& order, std::vector<std::size_t>& colours) const {
        Bits uncoloured = p;
        std::size_t c = 0;
        while (any(uncoloured)) {
            ++c;
            Bits q = uncoloured;
            while (any(q)) {
                std::size_t w = 0;
                while (q[w] == 0) ++w;
                const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(q[w]));
                q[w] &= q[w] - 1;
                uncoloured[v / 64] &= ~(std::uint64_t{1} << (v % 64));
                for (std::size_t i = 0; i < g_.words; ++i) q[i] &= ~g_.adj[v][i];
                order.push_back(v);
                colours.push_back(c);
            }
        }
    }

    void expand(std::vector<std::size_t>& cur, Bits p) {
        ++nodes_;
        std::vector<std::size_t> order, colours;
        colour(p, order, colours);
        for (std::size_t i = order.size(); i-- > 0;) {
            if (stopped() || cur.size() + colours[i] <= best_.size()) return;
            const std::size_t v = order[i];
            cur.push_back(v);
            Bits np(g_.words);
            for (std::size_t w = 0; w < g_.words; ++w) np[w] = p[w] & g_.adj[v][w];
            if (any(np)) expand(cur, np);
            else if (cur.size() > best_.size()) best_ = cur;
            cur.pop_back();
            p[v / 64] &= ~(std::uint64_t{1} << (v % 64));
        }
    }

    const Graph& g_;
    std::size_t limit_;
    std::vector<std::size_t> best_;
    std::uint64_t nodes_ = 0;
};

std::size_t guard_for(const Pattern& p, FamilyKind kind) {
    if (kind == FamilyKind::Crossing) return kCrossingGuard;
    return p.tag == Pattern::Tag::K2 ? kIntersectingK2Guard : kIntersectingGuard;
}

}  // namespace

std::vector<Subgraph> enumerate_copies(const PointSet& ps, const Pattern& pattern) {
    auto idx = copies_by_index(static_cast<int>(ps.size()), pattern);
    std::vector<Subgraph> out;
    out.reserve(idx.size());
    for (const Subgraph& g : idx) out.push_back(to_ids(ps, g));
    return out;
}

SolveResult max_family(const PointSet& ps, const Pattern& pattern, FamilyKind kind, const SolveOptions& opt) {
    const std::size_t n = ps.size();
    if (n > guard_for(pattern, kind) && !opt.limit && !opt.unsafe_large)
        throw InputError("n = " + std::to_string(n) + " exceeds the exhaustive guard of " +
                         std::to_string(guard_for(pattern, kind)) + "; pass a limit or the unsafe flag");
    if (opt.limit && *opt.limit == 0) throw InputError("limit must be positive");
    if (n > 64) throw InputError("the solver supports at most 64 points");

    const auto copies = copies_by_index(static_cast<int>(n), pattern);
    // cross[e][f] for edges of the complete graph indexed by a*n+b.
    std::vector<char> cr(n * n * n * n, 0);
    auto eid = [&](const Segment& s) { return static_cast<std::size_t>(s.a) * n + static_cast<std::size_t>(s.b); };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = c + 1; d < n; ++d)
                    if (segments_cross(ps[a], ps[b], ps[c], ps[d])) cr[(a * n + b) * n * n + c * n + d] = 1;

    std::vector<std::uint64_t> vmask(copies.size(), 0);
    for (std::size_t i = 0; i < copies.size(); ++i)
        for (int v : copies[i].vertices) vmask[i] |= std::uint64_t{1} << v;

    Graph g(copies.size());
    for (std::size_t i = 0; i < copies.size(); ++i)
        for (std::size_t j = i + 1; j < copies.size(); ++j) {
            const Subgraph &x = copies[i], &y = copies[j];
            const bool share_vertex = (vmask[i] & vmask[j]) != 0;
            if (kind == FamilyKind::Crossing && share_vertex) continue;
            bool share_edge = false, crossing = false;
            for (const Segment& e : x.edges)
                for (const Segment& f : y.edges) {
                    if (e == f) share_edge = true;
                    else if (cr[eid(e) * n * n + eid(f)]) crossing = true;
                }
            const bool ok = kind == FamilyKind::Crossing ? crossing : !share_edge && (share_vertex || crossing);
            if (ok) g.connect(i, j);
        }

    MaxClique mc(g, opt.limit.value_or(SIZE_MAX));
    auto clique = mc.run();
    SolveResult r;
    r.pattern = pattern;
    r.kind = kind;
    r.max_size = clique.size();
    r.explored = mc.explored();
    r.limit_reached = opt.limit && clique.size() >= *opt.limit;
    r.witness.kind = kind;
    r.witness.pattern = pattern;
    for (std::size_t c : clique) r.witness.members.push_back(to_ids(ps, copies[c]));
    if (!verify_family(ps, r.witness).ok) throw VerificationFailure("solver witness failed verification");
    return r;
}

SolveResult max_crossing_family(const PointSet& ps, const Pattern& pattern, const SolveOptions& opt) {
    return max_family(ps, pattern, FamilyKind::Crossing, opt);
}

SolveResult max_intersecting_family(const PointSet& ps, const Pattern& pattern, const SolveOptions& opt) {
    return max_family(ps, pattern, FamilyKind::Intersecting, opt);
}

ConvexSubsetResult max_convex_subset(const PointSet& ps, bool unsafe_large) {
    const std::size_t n = ps.size();
    if (n > kConvexGuard && !unsafe_large)
        throw InputError("n = " + std::to_string(n) + " exceeds the convex-subset guard of " + std::to_string(kConvexGuard));
    if (n >= 63) throw InputError("convex-subset search supports at most 62 points");
    ConvexSubsetResult best;
    std::vector<Point> sub;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        const std::size_t k = static_cast<std::size_t>(std::popcount(mask));
        if (k <= best.size) continue;
        sub.clear();
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) sub.push_back(ps[i]);
        if (in_convex_position(sub)) {
            best.size = k;
            best.witness = convex_hull(sub);
        }
    }
    return best;
}

}  // namespace crossfam
