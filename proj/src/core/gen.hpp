#pragma once

#include <cstdint>

#include "embedding.hpp"
#include "graph.hpp"
#include "surface.hpp"
#include "treepart.hpp"

namespace bp {

// Instance factories. Identical seed, identical instance, bit for bit; every
// attached certificate (embedding validity, decomposition validity,
// verticality, girth) is re-verified before returning.

struct GridInstance {
    Graph graph;
    RotationSystem embedding;
    TreeDecomposition decomposition;
    int rows = 0, cols = 0;
};

// rows x cols grid with its canonical embedding and the standard
// staircase path-decomposition of width min(rows, cols).
GridInstance grid(int rows, int cols);

// Complete b-ary tree of the given height (edge levels).
Graph complete_kary_tree(int branching, int height);

struct TriangulationInstance {
    Graph graph;
    RotationSystem embedding;
    std::uint64_t seed = 0;
};

// Random stacked triangulation on n >= 4 vertices: start from K_4 and
// repeatedly insert a vertex into a random inner face.
TriangulationInstance stacked_triangulation(int n, std::uint64_t seed);

// 4-regular graph with girth at least `min_girth`. Pairing-model sampling
// with rejection for small girth; for larger girth targets the pairing is
// constrained (an edge is only accepted when its ends are >= girth-1 apart)
// with seeded swap repair, since plain rejection has vanishing acceptance
// probability. Girth is re-checked exactly before returning.
Graph regular_high_girth(int n, int min_girth, std::uint64_t seed, int degree = 4,
                         int max_attempts = 64);

struct GenusInstance {
    Graph graph;
    Layering layering;
    VerticalPathTree vpt;
    int genus = 0;
    int ell = 0;
};

// Fabricated valid input for the slab construction: a layered planar core
// (row-column grid hung off a root) with at most 2g vertical row paths
// through the root, plus seeded chords that keep the layering exact.
GenusInstance layered_genus_instance(int genus, int ell, std::uint64_t seed);

}  // namespace bp
