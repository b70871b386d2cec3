/******************************************************************************
 * graph_io.hpp
 *
 * Part of cutcactus.
 *
 * Published under the MIT license in the LICENSE file.
 *****************************************************************************/

#pragma once

#include <iosfwd>
#include <string>

#include "cutcactus/cactus.hpp"
#include "cutcactus/static_graph.hpp"

namespace cutcactus {

/// Adjacency format: header "n m [fmt]", fmt 1 meaning edge weights follow
/// each neighbor; one line per vertex listing its neighbors (1-based);
/// comment lines start with '%'. Each edge must appear from both endpoints
/// with the same weight. Errors name the offending line.
StaticGraph parse_metis(std::istream& in);
StaticGraph parse_metis_file(const std::string& path);

/// Edge-list problem format: comments 'c', one "p <name> n m" line, then
/// "e u v [w]" lines with 1-based endpoints.
StaticGraph parse_dimacs(std::istream& in);
StaticGraph parse_dimacs_file(const std::string& path);

/// Plain edge list: lines "u v [w]" with 0-based endpoints, comments '#' or
/// '%'. The vertex count is one past the largest endpoint.
StaticGraph parse_edge_list(std::istream& in);
StaticGraph parse_edge_list_file(const std::string& path);

StaticGraph parse_graph_file(const std::string& path,
                             const std::string& format);

void write_metis(const StaticGraph& g, std::ostream& out);
void write_metis_file(const StaticGraph& g, const std::string& path);

/// Textual cactus format: header "n* m* lambda num_cuts"; one line per edge
/// "u v kind cycle_id" (kind tree or cycle, '-' for tree cycle ids); one
/// line per node "id: v1 v2 ..." listing the encompassed original vertices.
/// Output is byte-identical for equal cacti.
void write_cactus(const Cactus& cactus, std::ostream& out);
void write_cactus_file(const Cactus& cactus, const std::string& path);

}  // namespace cutcactus
