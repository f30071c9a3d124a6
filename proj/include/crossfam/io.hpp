#pragma once

#include <string>

#include "crossfam/family.hpp"
#include "crossfam/geometry.hpp"
#include "crossfam/solver.hpp"
#include "json.hpp"

namespace crossfam {

using Json = nlohmann::ordered_json;

Json to_json(const PointSet& ps);
// Throws InputError on malformed input; general position is checked.
PointSet point_set_from_json(const Json& j);

Json to_json(const Family& f);
Family family_from_json(const Json& j);

Json to_json(const SolveResult& r);
Json to_json(const ScanReport& r);
Json to_json(const ConvexSubsetResult& r);

// Parses JSON text; "-" as a path means stdin / stdout.
Json read_json(const std::string& path);
void write_text(const std::string& path, const std::string& text);

struct SvgOptions {
    int size = 800;  // canvas width and height in px
    bool labels = true;
};

// Points as labeled circles, members in distinct colors, partition lines dashed.
std::string render_svg(const PointSet& ps, const Family* family = nullptr, const SvgOptions& opt = {});

}  // namespace crossfam
