#pragma once

#include "simplexcolor/complex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace simplexcolor {

struct RenderOptions {
    int width = 800;
    int height = 800;
    int margin = 24;
    std::vector<std::string> palette{"#e6194b", "#3cb44b", "#4363d8", "#f58231",
                                     "#911eb4", "#42d4f4", "#f032e6", "#bfef45"};
    std::string uncolored_fill = "#dddddd";
    bool show_dual = false;
};

/// SVG 1.1 drawing of a d = 2 complex: filled triangles (by color when a
/// coloring is given) and optionally the dual graph, with a node at each
/// centroid and an arc through the midpoint of each shared edge. Output bytes
/// depend only on the inputs. Throws UnsupportedDimensionError for d != 2 and
/// InputError when the palette is too short for the coloring.
std::string render_svg(const Complex& c, const std::optional<Coloring>& coloring,
                       const RenderOptions& options = {});

}  // namespace simplexcolor
