#pragma once

#include <string>

#include "upse/digraph.hpp"
#include "upse/point_set.hpp"

namespace upse {

/// {"n": int, "arcs": [[tail, head], ...]}, 0-based vertices.
Digraph parse_graph(const std::string& text);
std::string format_graph(const Digraph& g);

/// Abstract {"tags": "LRL"} or concrete {"points": [[x, y], ...]} with decimal
/// strings (or numbers). Concrete input is converted to tags.
ConvexPointSet parse_points(const std::string& text);
std::string format_points(const ConvexPointSet& s);

/// {"map": [...]}, point ids are 1-based y-ranks in the file.
Embedding parse_embedding(const std::string& text);
std::string format_embedding(const Embedding& e);

/// Realized coordinates scaled to a fixed canvas, arcs as arrows.
std::string render_svg(const Digraph& g, const ConvexPointSet& s, const Embedding& e);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace upse
