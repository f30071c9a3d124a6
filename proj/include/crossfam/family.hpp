#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crossfam/geometry.hpp"

namespace crossfam {

struct Pattern {
    enum class Tag { K2, P3, K3, K1t, K4, Kt, P4, TwoK2 };
    Tag tag = Tag::K2;
    int t = 0;  // leaves for K1t, clique order for Kt

    int vertex_count() const;
    int edge_count() const;
    std::string name() const;
    friend bool operator==(const Pattern&, const Pattern&) = default;

    static Pattern k2() { return {Tag::K2, 0}; }
    static Pattern p3() { return {Tag::P3, 0}; }
    static Pattern k3() { return {Tag::K3, 0}; }
    static Pattern p4() { return {Tag::P4, 0}; }
    static Pattern two_k2() { return {Tag::TwoK2, 0}; }
    static Pattern star(int t) { return {Tag::K1t, t}; }
    static Pattern clique(int t) { return t == 4 ? Pattern{Tag::K4, 4} : Pattern{Tag::Kt, t}; }
    // Accepts K2, P3, K3, K4, P4, 2K2, K1t / K1,t and Kt with t given separately.
    static Pattern parse(const std::string& name, int t = 0);
};

enum class FamilyKind { Crossing, Intersecting };

std::string to_string(FamilyKind k);
FamilyKind parse_kind(const std::string& s);

struct Subgraph {
    std::vector<int> vertices;
    std::vector<Segment> edges;
};

Subgraph make_path(std::initializer_list<int> ids);
Subgraph make_path(const std::vector<int>& ids);
Subgraph make_star(int center, const std::vector<int>& leaves);
Subgraph make_complete(const std::vector<int>& ids);
Subgraph make_matching(const std::vector<std::pair<int, int>>& pairs);

// Throws InputError when g is not a copy of p.
void check_isomorphic(const Subgraph& g, const Pattern& p);

bool subgraphs_cross(const Subgraph& g, const Subgraph& h, const PointSet& ps);
// Shared vertex or a proper edge crossing.
bool subgraphs_intersect(const Subgraph& g, const Subgraph& h, const PointSet& ps);
bool vertex_disjoint(const Subgraph& g, const Subgraph& h);
bool edge_disjoint(const Subgraph& g, const Subgraph& h);

struct Family {
    FamilyKind kind = FamilyKind::Crossing;
    Pattern pattern;
    std::vector<Subgraph> members;
    std::int64_t claimed_bound = 0;
    std::vector<Line> lines;  // partition lines used by the construction
    std::vector<std::string> warnings;

    std::size_t size() const { return members.size(); }
};

struct VerifyReport {
    bool ok = true;
    std::string message;
    std::optional<std::pair<std::size_t, std::size_t>> offending;
};

// Pairwise condition of the family kind over all member pairs. Crossing
// families are vertex-disjoint; intersecting families are edge-disjoint.
VerifyReport verify_family(const PointSet& ps, const Family& fam);

}  // namespace crossfam
