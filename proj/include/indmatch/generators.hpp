#pragma once

#include <array>
#include <cstdint>

#include "indmatch/graph.hpp"

namespace indmatch {

// Sharp example for the degree-based bound: complete graph on
// ceil(delta/2)+1 vertices, floor(delta/2) pendants on each vertex.
// Clique vertices come first, then pendants grouped by anchor.
Graph sharpness_h1(int delta);

// Mirror construction: clique on floor(delta/2)+1 vertices with
// ceil(delta/2) pendants each. Equals h1 when delta is even.
Graph sharpness_h2(int delta);

// Blowup of the 5-cycle: class i becomes an independent set of
// orders[i] vertices, consecutive classes completely joined.
// (2,2,2,2,2) is the 10-vertex 4-regular exception; (1,1,1,2,2) is
// K_{3,3} with one edge subdivided once.
Graph c5_blowup(const std::array<int, 5>& orders);

// Every base vertex gains k new degree-1 neighbors. Base vertices keep
// their ids; pendants are appended grouped by anchor.
Graph attach_pendants(const Graph& base, int k);

Graph random_graph(int n, double edge_probability, uint64_t seed);

// Pairing-model random d-regular graph; rejects loops/multi-edges and
// retries up to 1000 times before giving up.
Graph random_regular(int n, int d, uint64_t seed);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph complete_graph(int n);

}  // namespace indmatch
