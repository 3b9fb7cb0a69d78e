#pragma once

#include <vector>

#include "graph.hpp"
#include "json_io.hpp"
#include "verify.hpp"

namespace bp {

// A tree that is the union of at most 2g vertical paths with respect to a
// layering, used to peel a graph of Euler genus g down to a planar remainder.
// Whether G - V(tree) is actually planar is the caller's contract.
struct VerticalPathTree {
    std::vector<std::vector<int>> paths;  // vertex sequences
    int genus = 0;

    std::vector<int> tree_vertices() const;       // sorted union
    std::vector<Edge> tree_edges() const;         // sorted union
    void validate(const Graph& g, const Layering& l) const;

    Json to_json() const;
    static VerticalPathTree from_json(const Json& j);
};

struct GenusZOptions {
    std::uint64_t z_check_budget = kDefaultSearchBudget;  // for property (8)
};

struct GenusZResult {
    std::vector<int> z_vertices;  // sorted
    SubgraphPartition z_partition;
    int iterations = 0;
    int absorptions = 0;
    bool z_check_exhausted = true;  // property (8) verified without budget cut
};

// Iterated slab construction: slices the layering into windows of vertical
// path segments, absorbing short connecting paths, so that every z-clean path
// of length at most ell meets at most three parts. All eight tuple properties
// are asserted per iteration.
GenusZResult genus_z_partition(const Graph& g, const Layering& l, const VerticalPathTree& t,
                               int genus, int ell, const GenusZOptions& opts = {});

// R := R' u Z. Requires ell_z >= 4*ell_p + 7 (the composition argument does
// not close otherwise), verifies the R' precondition with the oracle, and
// asserts the combined partition is (4*ell_p + 6)-blocking before returning.
Partition blocking_genus_combine(const Graph& g, const std::vector<int>& z_vertices,
                                 const SubgraphPartition& z, const SubgraphPartition& r_prime,
                                 int ell_p, int ell_z,
                                 std::uint64_t budget = kDefaultSearchBudget);

}  // namespace bp
