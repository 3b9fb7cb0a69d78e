#pragma once

#include <vector>

#include "graph.hpp"
#include "json_io.hpp"

namespace bp {

// A subgraph given explicitly by its vertex and edge sets (both sorted,
// edges normalised u < v).
struct Subgraph {
    std::vector<int> vertices;
    std::vector<Edge> edges;

    static Subgraph from_edges(std::vector<Edge> edges, std::vector<int> extra_vertices = {});
    bool has_vertex(int v) const;
};

// An F-bridge: either a single edge between two vertices of F (trivial), or a
// component of G - V(F) together with its attachment vertices and the edges
// into them.
struct Bridge {
    std::vector<int> vertices;     // sorted, attachments included
    std::vector<Edge> edges;       // sorted
    std::vector<int> attachments;  // sorted, = vertices on F
    bool trivial = false;
};

// Combinatorial plane embedding: per-vertex cyclic orders of neighbours plus
// a designated outer face. Face tracing follows next(u->v) = (v, w) with w
// the successor of u in rotation[v]; faces are the orbits of that map.
class RotationSystem {
public:
    // outer_u/outer_v/outer_side identify the outer face as the face
    // containing the dart outer_u->outer_v (side 0) or outer_v->outer_u
    // (side 1). A graph with a single face may omit them (pass -1).
    static RotationSystem build(Graph g, std::vector<std::vector<int>> rotation, int outer_u,
                                int outer_v, int outer_side);

    const Graph& graph() const { return g_; }
    const std::vector<std::vector<int>>& rotation() const { return rot_; }

    int dart_count() const { return static_cast<int>(dart_head_.size()); }
    int face_count() const { return face_count_; }
    int outer_face() const { return outer_face_; }

    int dart_id(int u, int v) const;  // dart u->v
    int dart_tail(int d) const { return dart_tail_[d]; }
    int dart_head(int d) const { return dart_head_[d]; }
    int dart_reverse(int d) const { return rev_[d]; }
    int dart_next_in_face(int d) const { return next_[d]; }
    int face_of_dart(int d) const { return face_of_[d]; }
    int edge_id_of_dart(int d) const { return edge_id_[d]; }
    int edge_count() const { return g_.edge_count(); }
    int edge_id(int u, int v) const { return edge_id_[dart_id(u, v)]; }

    // Face walk as the cyclic vertex sequence of dart tails, starting from
    // the least dart of the orbit.
    std::vector<int> face_walk(int face) const;
    std::vector<std::vector<int>> faces() const;

    Json to_json() const;
    static RotationSystem from_json(const Json& j);

private:
    Graph g_;
    std::vector<std::vector<int>> rot_;
    std::vector<int> dart_base_;  // per vertex, first dart id
    std::vector<int> dart_head_, dart_tail_, rev_, next_, face_of_, edge_id_;
    std::vector<int> face_least_dart_;
    int face_count_ = 0;
    int outer_face_ = 0;
};

// Glues the faces of G across every edge outside a container subgraph; the
// resulting classes are exactly the faces of the container, and the class
// holding the designated outer face of G is the container's outer face in the
// sense used throughout: the face of the inherited embedding that contains
// the outer face of the whole plane graph.
class FaceGlue {
public:
    FaceGlue(const RotationSystem& rs, const Subgraph& container);

    // For v not in the container: v lies (strictly) inside the outer face.
    bool vertex_strictly_in_outer(int v) const;
    // For v in the container: v lies on the boundary walk of the outer face.
    bool vertex_on_outer_boundary(int v) const;
    // v in closure of the outer face (either of the above, by membership).
    bool vertex_in_outer_closure(int v) const;
    // Both sides of a non-container edge lie in the outer face.
    bool edge_in_outer_closure(int u, int v) const;

    bool in_container(int v) const { return vertex_in_[v] != 0; }
    int component_of_face(int f) const { return find(f); }
    int outer_component() const { return outer_comp_; }

private:
    int find(int x) const;

    const RotationSystem& rs_;
    mutable std::vector<int> uf_;
    std::vector<char> vertex_in_;
    int outer_comp_ = 0;
};

// All face walks, ordered by least dart id. Every directed edge appears in
// exactly one walk.
std::vector<std::vector<int>> faces(const RotationSystem& rs);

// The face of the connected subgraph H (under the inherited rotation) that
// contains the designated outer face of the whole embedding, returned as its
// closed walk. A single-vertex H yields the walk {v}.
std::vector<int> subgraph_outer_face(const RotationSystem& rs, const Subgraph& h);

// Vertices of the container that lie on its outer-face boundary.
std::vector<int> outer_boundary_vertices(const RotationSystem& rs, const Subgraph& container);

std::vector<Bridge> bridges(const Graph& g, const Subgraph& f);

// A ∩ (vertices on subgraph_outer_face(rs, j)).
std::vector<int> boundary_attachments(const RotationSystem& rs, const Subgraph& j,
                                      const std::vector<int>& a);

}  // namespace bp
