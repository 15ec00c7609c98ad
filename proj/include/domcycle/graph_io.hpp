#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "domcycle/multigraph.hpp"

namespace domcycle {

// graph6 (simple graphs only). Decoded edges come out in column order
// (0,1),(0,2),(1,2),(0,3),... with u < v, which is also the order the
// encoder writes, so decode(encode(g)) == g for graphs built in that order.
Multigraph read_graph6(std::string_view text);
std::string write_graph6(const Multigraph& g);
/// Reorders edges into graph6 column order. Throws MultiEdgeInGraph6.
Multigraph graph6_normal_form(const Multigraph& g);

// `.mg` text: "n m\n" followed by m lines "u v\n"; edge id = line index.
Multigraph read_mg(std::string_view text);
std::string write_mg(const Multigraph& g);

// `.ts` text: one pairing code (0|1|2) per vertex, one per line.
std::vector<int> read_pairing_codes(std::string_view text);
std::string write_pairing_codes(const std::vector<int>& codes);

// `.trail` text: one dart "edge_id,end" per line in cyclic order.
ClosedTrail read_trail(std::string_view text);
std::string write_trail(const ClosedTrail& trail);

// matching file: one edge id per line.
std::vector<EdgeId> read_edge_ids(std::string_view text);
std::string write_edge_ids(std::span<const EdgeId> ids);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

/// Loads `.mg` files by extension; anything else is read as graph6 (first
/// non-empty line). If `path_or_graph6` is not an existing file it is parsed
/// as a literal graph6 string.
Multigraph load_graph(const std::string& path_or_graph6);

}  // namespace domcycle
