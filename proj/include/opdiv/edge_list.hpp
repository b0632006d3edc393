#ifndef OPDIV_EDGE_LIST_HPP_
#define OPDIV_EDGE_LIST_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "opdiv/graph.hpp"

namespace opdiv {

// Text format: first non-comment line `n <count>`, then one `u v` pair per
// line. `#` starts a comment that runs to end of line.
Graph parse_edge_list(std::string_view text);
Graph read_edge_list(const std::filesystem::path& file);

// Writes the canonical form; parse_edge_list(write_edge_list(g)) == g.
std::string write_edge_list(const Graph& g);

} // namespace opdiv

#endif // OPDIV_EDGE_LIST_HPP_
