#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "graph.hpp"

namespace bp {

// Result of a clean-path search. When exhausted is true, max_length_found is
// the exact blocking number; otherwise it is a lower bound (the budget ran
// out first).
struct CleanPathReport {
    int max_length_found = 0;
    std::vector<int> witness;  // vertex sequence realising max_length_found
    bool exhausted = false;
    std::uint64_t nodes_expanded = 0;
};

struct VerifyOutcome {
    bool verified = false;
    bool budget_hit = false;
    std::vector<int> counterexample;  // clean path of length ell+1 when !verified
    std::uint64_t nodes_expanded = 0;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000ULL;

// A path on a partition of a *subgraph*: vertices outside the partitioned
// subgraph carry part id -1 and are unconstrained beyond simplicity.
struct SubgraphPartition {
    std::vector<int> part_of;  // -1 outside the subgraph
    int part_count = 0;

    static SubgraphPartition from_parts(int n, const std::vector<std::vector<int>>& parts);
    std::vector<std::vector<int>> parts() const;
    std::vector<int> covered_vertices() const;
    int width() const;
    bool empty() const { return part_count == 0; }
};

// True iff p is a path in g (validated) and no part of r meets it twice.
bool is_clean(const Graph& g, const Partition& r, const std::vector<int>& p);

// Exhaustive DFS over R-clean paths. Paths are enumerated once each: the
// canonical form fixes the minimum-id vertex and grows the right end to
// completion before the left end. Extension prunes on part reuse, so the
// search is bounded by the part structure rather than by n.
CleanPathReport blocking_number(const Graph& g, const Partition& r,
                                std::uint64_t budget = kDefaultSearchBudget, int workers = 1);

// Depth-limited variant: verified iff no clean path of length ell+1 exists.
VerifyOutcome verify_ell_blocking(const Graph& g, const Partition& r, int ell,
                                  std::uint64_t budget = kDefaultSearchBudget, int workers = 1);

// Subgraph variant: true iff every z-clean path in g of length at most ell
// meets at most max_parts parts of z. Returns a violating path otherwise.
struct ZPropertyOutcome {
    bool holds = false;
    bool budget_hit = false;
    std::vector<int> witness;
    std::uint64_t nodes_expanded = 0;
};
ZPropertyOutcome verify_z_property(const Graph& g, const SubgraphPartition& z, int ell,
                                   int max_parts, std::uint64_t budget = kDefaultSearchBudget);

// Exact girth; nullopt for forests.
std::optional<int> girth(const Graph& g);

// Constructive counting argument for 4-regular graphs of girth at least
// c+ell+2 with a connected partition of width at most c: colours intra-part
// edges red, finds a cycle among the blue edges and returns a clean subpath
// of length exactly ell+1 (verified clean before returning).
std::vector<int> find_long_clean_path_high_girth(const Graph& g, const Partition& r, int c,
                                                 int ell);

// Test-support oracle: enumerate every simple path (no part pruning) and take
// the longest clean one. Exponential; callers keep n tiny.
int naive_longest_clean_path(const Graph& g, const Partition& r);

}  // namespace bp
