#pragma once

#include <optional>
#include <string>
#include <vector>

#include "improper/graph.hpp"
#include "improper/interval.hpp"

namespace improper {

struct RenderStyle {
    std::optional<Vertex> basepoint;   // black
    std::optional<Vertex> designated;  // dark grey
    std::vector<Vertex> relocating;    // light grey
    std::vector<Vertex> side;          // side-component members, shaded
    std::vector<std::string> labels;   // per vertex; ids when empty
};

// Greedy coloring by left endpoint: each interval takes the lowest row whose
// last interval ended before it starts.
std::vector<int> assign_rows(const IntervalRepresentation& r);

std::string render_svg(const IntervalRepresentation& r, const RenderStyle& style = {});
// Standalone LaTeX document holding one tikzpicture.
std::string render_tikz(const IntervalRepresentation& r, const RenderStyle& style = {});

// Reads interval geometry back from either format. Throws InvalidRepresentation.
IntervalRepresentation parse_rendered(const std::string& document);

}  // namespace improper
