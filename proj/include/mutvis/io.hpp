#pragma once

#include <iosfwd>

#include "mutvis/directed_decomposition.hpp"
#include "mutvis/graph.hpp"

namespace mutvis {

/// Edge-list text format:
///
///     # comment
///     n 5          <- optional header, first non-comment line
///     0 1
///     1 2
///
/// Without a header the vertex count is the largest id plus one. Blank lines
/// and lines starting with '#' are skipped. Throws InputError naming the
/// offending line.
Graph parse_edge_list(std::istream& in);

/// Writes the header and one "u v" line per edge (u < v, sorted).
void write_edge_list(const Graph& g, std::ostream& out);

/// Decomposition as DOT: one cluster per bag, marked edges bold, arrows
/// directed, sigma-vertices double-circled.
void write_decomposition_dot(const DirectedDecomposition& dd, std::ostream& out);

/// The decomposition tree as DOT; arrow edges carry their direction.
void write_tree_dot(const DirectedDecomposition& dd, std::ostream& out);

}  // namespace mutvis
