#pragma once

#include <vector>

#include "domcycle/multigraph.hpp"

namespace domcycle::named {

Multigraph complete(int n);
Multigraph complete_bipartite(int a, int b);
Multigraph cycle(int n);
Multigraph path(int n);

/// GP(n,k): outer cycle 0..n-1, spokes i -- n+i, inner edges n+i -- n+(i+k)%n.
/// Spokes are edges n..2n-1.
Multigraph generalized_petersen(int n, int k);
/// Hamiltonian cubic graph from LCF notation: cycle 0..n-1 plus chords.
Multigraph lcf(int n, const std::vector<int>& shifts);

Multigraph petersen();      // GP(5,2)
Multigraph heawood();       // LCF [5,-5]^7
Multigraph mobius_kantor(); // GP(8,3)
Multigraph pappus();        // LCF [5,7,-7,7,-7,-5]^3
Multigraph dodecahedron();  // GP(10,2)
Multigraph prism();         // GP(3,1), C3 x K2
/// Triangles {0,2,4} and {1,3,5} joined by the matching 0-1, 2-3, 4-5.
/// The join edges are 3, 4 and 5.
Multigraph two_triangles_joined();

Multigraph octahedron();        // K_{2,2,2}
Multigraph cycle_complement(int n);
/// Two n-cycles 0..n-1 and n..2n-1 plus i -- n+i and i -- n+(i+1)%n.
Multigraph antiprism(int n);

/// Spoke edges of generalized_petersen(n, k).
Matching spoke_matching(int n);

}  // namespace domcycle::named
