#include "crossfam/io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace crossfam {

namespace {

template <class T>
T get(const Json& j, const char* key) {
    if (!j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("bad field \"") + key + "\": " + e.what());
    }
}

std::string color_code(Color c) {
    return c == Color::Red ? "r" : c == Color::Blue ? "b" : "";
}

Color parse_color(const std::string& s) {
    if (s == "r") return Color::Red;
    if (s == "b") return Color::Blue;
    throw InputError("color must be \"r\" or \"b\", got \"" + s + "\"");
}

}  // namespace

Json to_json(const PointSet& ps) {
    Json pts = Json::array();
    for (const Point& p : ps) {
        Json q{{"id", p.id}, {"x", p.x}, {"y", p.y}};
        if (p.color != Color::None) q["color"] = color_code(p.color);
        pts.push_back(q);
    }
    return Json{{"n", ps.size()}, {"points", pts}};
}

PointSet point_set_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("point set must be a JSON object");
    const Json& arr = j.contains("points") ? j.at("points") : throw InputError("missing field \"points\"");
    if (!arr.is_array()) throw InputError("\"points\" must be an array");
    std::vector<Point> pts;
    for (const Json& q : arr) {
        Point p{get<int>(q, "id"), get<Coord>(q, "x"), get<Coord>(q, "y")};
        if (q.contains("color")) p.color = parse_color(get<std::string>(q, "color"));
        pts.push_back(p);
    }
    if (j.contains("n") && get<std::size_t>(j, "n") != pts.size())
        throw InputError("\"n\" does not match the number of points");
    return PointSet(std::move(pts));
}

Json to_json(const Family& f) {
    Json members = Json::array();
    for (const Subgraph& g : f.members) {
        Json edges = Json::array();
        for (const Segment& e : g.edges) edges.push_back({e.a, e.b});
        members.push_back(Json{{"vertices", g.vertices}, {"edges", edges}});
    }
    Json lines = Json::array();
    for (const Line& l : f.lines) lines.push_back({l.a, l.b, l.c});
    return Json{{"kind", to_string(f.kind)}, {"pattern", f.pattern.name()},  {"t", f.pattern.t},
                {"claimed_bound", f.claimed_bound}, {"size", f.size()},       {"members", members},
                {"lines", lines},                   {"warnings", f.warnings}};
}

Family family_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("family must be a JSON object");
    Family f;
    f.kind = parse_kind(get<std::string>(j, "kind"));
    f.pattern = Pattern::parse(get<std::string>(j, "pattern"), j.contains("t") ? get<int>(j, "t") : 0);
    if (j.contains("claimed_bound")) f.claimed_bound = get<std::int64_t>(j, "claimed_bound");
    for (const Json& m : get<Json>(j, "members")) {
        Subgraph g;
        g.vertices = get<std::vector<int>>(m, "vertices");
        for (const auto& e : get<std::vector<std::array<int, 2>>>(m, "edges")) g.edges.emplace_back(e[0], e[1]);
        f.members.push_back(std::move(g));
    }
    if (j.contains("lines"))
        for (const auto& l : get<std::vector<std::array<Coord, 3>>>(j, "lines")) f.lines.emplace_back(l[0], l[1], l[2]);
    if (j.contains("warnings")) f.warnings = get<std::vector<std::string>>(j, "warnings");
    return f;
}

Json to_json(const SolveResult& r) {
    return Json{{"pattern", r.pattern.name()}, {"t", r.pattern.t},
                {"kind", to_string(r.kind)},  {"max_size", r.max_size},
                {"explored", r.explored},     {"limit_reached", r.limit_reached},
                {"witness", to_json(r.witness)}};
}

Json to_json(const ScanReport& r) {
    Json hist = Json::object();
    for (auto [v, c] : r.histogram) hist[std::to_string(v)] = c;
    return Json{{"total", r.total}, {"violators", r.violators}, {"histogram", hist}};
}

Json to_json(const ConvexSubsetResult& r) { return Json{{"size", r.size}, {"witness", r.witness}}; }

Json read_json(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(path);
        if (!in) throw InputError("cannot read " + path);
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("invalid JSON in " + path + ": " + e.what());
    }
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

// ---- SVG ----

namespace {

constexpr const char* kPalette[] = {"#2ca02c", "#d62728", "#1f77b4", "#ff7f0e", "#9467bd", "#8c564b",
                                    "#e377c2", "#17becf", "#bcbd22", "#7f7f7f", "#393b79", "#ad494a"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

struct Viewport {
    double x0, y0, scale, margin, size;
    double px(double x) const { return margin + (x - x0) * scale; }
    double py(double y) const { return size - margin - (y - y0) * scale; }
};

// Segment of the line inside [xmin,xmax] x [ymin,ymax], if any.
bool clip_line(const Line& l, double xmin, double xmax, double ymin, double ymax, double out[4]) {
    std::vector<std::pair<double, double>> hits;
    const double a = static_cast<double>(l.a), b = static_cast<double>(l.b), c = static_cast<double>(l.c);
    if (b != 0)
        for (double x : {xmin, xmax}) {
            double y = -(a * x + c) / b;
            if (y >= ymin && y <= ymax) hits.emplace_back(x, y);
        }
    if (a != 0)
        for (double y : {ymin, ymax}) {
            double x = -(b * y + c) / a;
            if (x >= xmin && x <= xmax) hits.emplace_back(x, y);
        }
    if (hits.size() < 2) return false;
    std::sort(hits.begin(), hits.end());
    out[0] = hits.front().first;
    out[1] = hits.front().second;
    out[2] = hits.back().first;
    out[3] = hits.back().second;
    return true;
}

}  // namespace

std::string render_svg(const PointSet& ps, const Family* family, const SvgOptions& opt) {
    const double size = opt.size, margin = 30;
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    if (!ps.empty()) {
        auto [lx, hx] = std::minmax_element(ps.begin(), ps.end(), [](const Point& p, const Point& q) { return p.x < q.x; });
        auto [ly, hy] = std::minmax_element(ps.begin(), ps.end(), [](const Point& p, const Point& q) { return p.y < q.y; });
        xmin = static_cast<double>(lx->x);
        xmax = static_cast<double>(hx->x);
        ymin = static_cast<double>(ly->y);
        ymax = static_cast<double>(hy->y);
    }
    const double span = std::max({xmax - xmin, ymax - ymin, 1.0});
    Viewport vp{xmin, ymin, (size - 2 * margin) / span, margin, size};

    std::ostringstream s;
    s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opt.size << "\" height=\"" << opt.size
      << "\" viewBox=\"0 0 " << opt.size << ' ' << opt.size << "\">\n";
    s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (family) {
        s << "<g id=\"lines\" stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"6,4\">\n";
        const double pad = margin / vp.scale;
        for (const Line& l : family->lines) {
            double seg[4];
            if (!clip_line(l, xmin - pad, xmin + span + pad, ymin - pad, ymin + span + pad, seg)) continue;
            s << "<line x1=\"" << num(vp.px(seg[0])) << "\" y1=\"" << num(vp.py(seg[1])) << "\" x2=\"" << num(vp.px(seg[2]))
              << "\" y2=\"" << num(vp.py(seg[3])) << "\"/>\n";
        }
        s << "</g>\n<g id=\"members\" stroke-width=\"2\" fill=\"none\">\n";
        for (std::size_t i = 0; i < family->members.size(); ++i) {
            const char* col = kPalette[i % std::size(kPalette)];
            s << "<g class=\"member\" stroke=\"" << col << "\">\n";
            for (const Segment& e : family->members[i].edges) {
                const Point &p = ps.by_id(e.a), &q = ps.by_id(e.b);
                s << "<line x1=\"" << num(vp.px(static_cast<double>(p.x))) << "\" y1=\"" << num(vp.py(static_cast<double>(p.y)))
                  << "\" x2=\"" << num(vp.px(static_cast<double>(q.x))) << "\" y2=\""
                  << num(vp.py(static_cast<double>(q.y))) << "\"/>\n";
            }
            s << "</g>\n";
        }
        s << "</g>\n";
    }
    s << "<g id=\"points\" font-family=\"sans-serif\" font-size=\"11\">\n";
    for (const Point& p : ps) {
        const char* fill = p.color == Color::Red ? "#d62728" : p.color == Color::Blue ? "#1f77b4" : "black";
        const double x = vp.px(static_cast<double>(p.x)), y = vp.py(static_cast<double>(p.y));
        s << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"3.5\" fill=\"" << fill << "\"/>\n";
        if (opt.labels) s << "<text x=\"" << num(x + 5) << "\" y=\"" << num(y - 5) << "\">" << p.id << "</text>\n";
    }
    s << "</g>\n</svg>\n";
    return s.str();
}

}  // namespace crossfam
