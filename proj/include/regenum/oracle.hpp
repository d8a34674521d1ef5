#pragma once

#include <vector>

namespace regenum {

struct GraphKind {
    bool loops_allowed = false;
    bool multiedges_allowed = false;
};

// Exhaustive counter for labelled families of blocks over [n]: blocks are
// size-j subsets (or multisets when multiset_blocks) of {1..n} for j in
// block_sizes, distinct unless repeated_blocks, and every vertex must end
// with total incidence (multiplicity counted, so a loop adds 2) in S.
// iteration_order selects one of two label orders; both must agree.
long long count_family_brute(int n, const std::vector<int>& block_sizes,
                             const std::vector<int>& S, bool multiset_blocks,
                             bool repeated_blocks, int iteration_order = 0);

// Labelled graphs of the given kind with every vertex degree in S.
// Bounds: n <= 8 for simple graphs, n <= 6 when multiedges are allowed.
long long count_graphs_brute(int n, const std::vector<int>& S, GraphKind kind,
                             int iteration_order = 0);

// Labelled j-uniform hypergraphs with every vertex in exactly k edges.
long long count_hypergraphs_brute(int n, int j, int k, GraphKind kind,
                                  int iteration_order = 0);

// Restrictive covers: families of distinct blocks with sizes in `sizes`,
// every element in exactly k blocks.
long long count_covers_brute(int n, const std::vector<int>& sizes, int k,
                             int iteration_order = 0);

// Directed graphs as colourable sets of ordered pairs: loops and repeated
// arcs allowed, loop adds 2; in-degree + out-degree must lie in S. n <= 6.
long long count_digraphs_brute(int n, const std::vector<int>& S, int iteration_order = 0);

}  // namespace regenum
