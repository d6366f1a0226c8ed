#pragma once

#include <string>
#include <vector>

#include "nnscf/arc_diagram.hpp"
#include "nnscf/poset.hpp"
#include "nnscf/supercharacter.hpp"

namespace nnscf {

// Arc diagram drawn over one linear extension of its poset: a node row
// followed by one row per arc with the endpoints marked and the label noted.
std::string render_arcs_ascii(const ArcDiagram& d, const std::vector<std::string>& order);

// Standalone tikz document, nodes on a line with labelled bent arcs.
std::string render_arcs_latex(const ArcDiagram& d, const std::vector<std::string>& order);

// Hasse data level by level (minima first) plus the cover list.
std::string render_poset_ascii(const Poset& poset);

// Standalone tikz document, one row of nodes per level, cover edges drawn.
std::string render_poset_latex(const Poset& poset);

std::string render_table_ascii(const CharacterTable& table);

std::string render_table_latex(const CharacterTable& table);

}  // namespace nnscf
