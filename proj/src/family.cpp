#include "crossfam/family.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace crossfam {

int Pattern::vertex_count() const {
    switch (tag) {
        case Tag::K2: return 2;
        case Tag::P3:
        case Tag::K3: return 3;
        case Tag::K1t: return t + 1;
        case Tag::K4: return 4;
        case Tag::Kt: return t;
        case Tag::P4:
        case Tag::TwoK2: return 4;
    }
    return 0;
}

int Pattern::edge_count() const {
    switch (tag) {
        case Tag::K2: return 1;
        case Tag::P3: return 2;
        case Tag::K3: return 3;
        case Tag::K1t: return t;
        case Tag::K4: return 6;
        case Tag::Kt: return t * (t - 1) / 2;
        case Tag::P4: return 3;
        case Tag::TwoK2: return 2;
    }
    return 0;
}

std::string Pattern::name() const {
    switch (tag) {
        case Tag::K2: return "K2";
        case Tag::P3: return "P3";
        case Tag::K3: return "K3";
        case Tag::K1t: return "K1t";
        case Tag::K4: return "K4";
        case Tag::Kt: return "Kt";
        case Tag::P4: return "P4";
        case Tag::TwoK2: return "2K2";
    }
    return "?";
}

Pattern Pattern::parse(const std::string& s, int t) {
    if (s == "K2") return k2();
    if (s == "P3") return p3();
    if (s == "K3") return k3();
    if (s == "K4") return clique(4);
    if (s == "P4") return p4();
    if (s == "2K2") return two_k2();
    if (s == "K1t" || s == "K1,t") {
        if (t < 3) throw InputError("K1t needs t >= 3");
        return star(t);
    }
    if (s.rfind("K1,", 0) == 0) return parse("K1t", std::stoi(s.substr(3)));
    if (s == "Kt") {
        if (t < 4) throw InputError("Kt needs t >= 4");
        return clique(t);
    }
    throw InputError("unknown pattern " + s);
}

std::string to_string(FamilyKind k) { return k == FamilyKind::Crossing ? "crossing" : "intersecting"; }

FamilyKind parse_kind(const std::string& s) {
    if (s == "crossing") return FamilyKind::Crossing;
    if (s == "intersecting") return FamilyKind::Intersecting;
    throw InputError("unknown family kind " + s);
}

Subgraph make_path(const std::vector<int>& ids) {
    Subgraph g;
    g.vertices = ids;
    for (std::size_t i = 0; i + 1 < ids.size(); ++i) g.edges.emplace_back(ids[i], ids[i + 1]);
    return g;
}

Subgraph make_path(std::initializer_list<int> ids) { return make_path(std::vector<int>(ids)); }

Subgraph make_star(int center, const std::vector<int>& leaves) {
    Subgraph g;
    g.vertices.push_back(center);
    for (int l : leaves) {
        g.vertices.push_back(l);
        g.edges.emplace_back(center, l);
    }
    return g;
}

Subgraph make_complete(const std::vector<int>& ids) {
    Subgraph g;
    g.vertices = ids;
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j) g.edges.emplace_back(ids[i], ids[j]);
    return g;
}

Subgraph make_matching(const std::vector<std::pair<int, int>>& pairs) {
    Subgraph g;
    for (auto [a, b] : pairs) {
        g.vertices.push_back(a);
        g.vertices.push_back(b);
        g.edges.emplace_back(a, b);
    }
    return g;
}

void check_isomorphic(const Subgraph& g, const Pattern& p) {
    const int nv = p.vertex_count();
    const int ne = p.edge_count();
    auto fail = [&](const std::string& why) {
        throw InputError("member is not a copy of " + p.name() + ": " + why);
    };
    if (static_cast<int>(g.vertices.size()) != nv) fail("vertex count");
    if (static_cast<int>(g.edges.size()) != ne) fail("edge count");
    std::set<int> vs(g.vertices.begin(), g.vertices.end());
    if (static_cast<int>(vs.size()) != nv) fail("repeated vertex");
    std::set<Segment> es(g.edges.begin(), g.edges.end());
    if (static_cast<int>(es.size()) != ne) fail("repeated edge");
    std::map<int, int> deg;
    for (const Segment& e : g.edges) {
        if (e.a == e.b || !vs.count(e.a) || !vs.count(e.b)) fail("edge outside vertex set");
        ++deg[e.a];
        ++deg[e.b];
    }
    std::vector<int> d;
    for (int v : vs) d.push_back(deg[v]);
    std::sort(d.begin(), d.end());
    std::vector<int> want;
    switch (p.tag) {
        case Pattern::Tag::K2: want = {1, 1}; break;
        case Pattern::Tag::P3: want = {1, 1, 2}; break;
        case Pattern::Tag::K3: want = {2, 2, 2}; break;
        case Pattern::Tag::K1t:
            want.assign(p.t, 1);
            want.push_back(p.t);
            break;
        case Pattern::Tag::K4:
        case Pattern::Tag::Kt: want.assign(nv, nv - 1); break;
        case Pattern::Tag::P4: want = {1, 1, 2, 2}; break;
        case Pattern::Tag::TwoK2: want = {1, 1, 1, 1}; break;
    }
    // For these patterns the degree multiset with the vertex and edge counts
    // determines the graph up to isomorphism.
    if (d != want) fail("degree sequence");
}

bool subgraphs_cross(const Subgraph& g, const Subgraph& h, const PointSet& ps) {
    for (const Segment& e : g.edges)
        for (const Segment& f : h.edges)
            if (segments_cross(e, f, ps)) return true;
    return false;
}

bool vertex_disjoint(const Subgraph& g, const Subgraph& h) {
    for (int v : g.vertices)
        if (std::find(h.vertices.begin(), h.vertices.end(), v) != h.vertices.end()) return false;
    return true;
}

bool edge_disjoint(const Subgraph& g, const Subgraph& h) {
    for (const Segment& e : g.edges)
        if (std::find(h.edges.begin(), h.edges.end(), e) != h.edges.end()) return false;
    return true;
}

bool subgraphs_intersect(const Subgraph& g, const Subgraph& h, const PointSet& ps) {
    return !vertex_disjoint(g, h) || subgraphs_cross(g, h, ps);
}

VerifyReport verify_family(const PointSet& ps, const Family& fam) {
    for (const Subgraph& g : fam.members) {
        check_isomorphic(g, fam.pattern);
        for (int v : g.vertices)
            if (!ps.contains(v)) throw InputError("member uses unknown point id " + std::to_string(v));
    }
    const bool crossing = fam.kind == FamilyKind::Crossing;
    for (std::size_t i = 0; i < fam.members.size(); ++i)
        for (std::size_t j = i + 1; j < fam.members.size(); ++j) {
            const Subgraph& g = fam.members[i];
            const Subgraph& h = fam.members[j];
            std::string why;
            if (crossing) {
                if (!vertex_disjoint(g, h)) why = "share a vertex";
                else if (!subgraphs_cross(g, h, ps)) why = "do not cross";
            } else {
                if (!edge_disjoint(g, h)) why = "share an edge";
                else if (!subgraphs_intersect(g, h, ps)) why = "do not intersect";
            }
            if (!why.empty())
                return {false, "members " + std::to_string(i) + " and " + std::to_string(j) + " " + why,
                        std::pair{i, j}};
        }
    return {};
}

}  // namespace crossfam
