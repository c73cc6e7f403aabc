#pragma once

#include <vector>

#include "coedge/graph.hpp"

namespace coedge {

/// Largest n accepted by enumerate_regular: 12 unless COEDGE_MAX_SEARCH_N
/// holds a positive integer.
int search_size_cap();

/// Every k-regular graph on n vertices, one per isomorphism class, in
/// canonical labelling and sorted by canonical form. Throws Error when n*k
/// is odd, k >= n, k < 0, or n exceeds the cap.
std::vector<Graph> enumerate_regular(int n, int k);

/// enumerate_regular(n, k) filtered to co-edge-regular graphs with this c.
std::vector<Graph> search_co_edge_regular(int n, int k, int c);

/// All labelled k-regular graphs on n <= 7 vertices, reduced by canonical
/// form; an independent check of enumerate_regular.
std::vector<Graph> enumerate_regular_brute_force(int n, int k);

}  // namespace coedge
