#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "dagconvex/digraph.hpp"

namespace dagconvex {

/// Edge-list text: first data line "n m", then m lines "u v". Blank lines
/// and lines starting with '#' are skipped.
Digraph read_edge_list(std::istream& in);

/// Restricted DOT: `digraph [name] { u -> v; w; ... }` with integer node ids.
/// Edge chains (`a -> b -> c`), `//` comments and `[...]` attribute lists are
/// accepted; attributes are ignored. Order is max id + 1.
Digraph read_dot(std::istream& in);

/// Dispatches on the first significant token: "digraph" selects DOT.
Digraph read_digraph(std::istream& in);
Digraph load_digraph(const std::filesystem::path& path);

/// Writes each header line prefixed with "# ", then the edge list. Output is
/// byte-stable: arcs in lexicographic order, LF line endings.
void write_edge_list(std::ostream& out, const Digraph& d, const std::vector<std::string>& header = {});

}  // namespace dagconvex
