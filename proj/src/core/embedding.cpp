#include "embedding.hpp"

#include <algorithm>
#include <unordered_map>

namespace bp {

Subgraph Subgraph::from_edges(std::vector<Edge> edges, std::vector<int> extra_vertices) {
    Subgraph s;
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    s.edges = std::move(edges);
    s.vertices = std::move(extra_vertices);
    for (auto [u, v] : s.edges) {
        s.vertices.push_back(u);
        s.vertices.push_back(v);
    }
    std::sort(s.vertices.begin(), s.vertices.end());
    s.vertices.erase(std::unique(s.vertices.begin(), s.vertices.end()), s.vertices.end());
    return s;
}

bool Subgraph::has_vertex(int v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

RotationSystem RotationSystem::build(Graph g, std::vector<std::vector<int>> rotation, int outer_u,
                                     int outer_v, int outer_side) {
    const int n = g.vertex_count();
    BP_REQUIRE(static_cast<int>(rotation.size()) == n, "rotation size mismatch");
    BP_REQUIRE(g.is_connected(), "rotation system requires a connected graph");

    RotationSystem rs;
    rs.g_ = std::move(g);
    rs.rot_ = std::move(rotation);

    // Validate: rotation at v is a permutation of v's neighbours.
    for (int v = 0; v < n; ++v) {
        auto sorted = rs.rot_[v];
        std::sort(sorted.begin(), sorted.end());
        auto nb = rs.g_.neighbors(v);
        BP_REQUIRE(sorted.size() == nb.size() && std::equal(sorted.begin(), sorted.end(), nb.begin()),
                   "rotation at vertex " + std::to_string(v) + " is not a permutation of its neighbours");
    }

    rs.dart_base_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) rs.dart_base_[v + 1] = rs.dart_base_[v] + static_cast<int>(rs.rot_[v].size());
    const int darts = rs.dart_base_[n];
    rs.dart_head_.resize(darts);
    rs.dart_tail_.resize(darts);
    for (int v = 0; v < n; ++v)
        for (std::size_t i = 0; i < rs.rot_[v].size(); ++i) {
            int d = rs.dart_base_[v] + static_cast<int>(i);
            rs.dart_tail_[d] = v;
            rs.dart_head_[d] = rs.rot_[v][i];
        }

    // Reverse darts via a (tail, head) -> dart map.
    std::unordered_map<long long, int> by_pair;
    by_pair.reserve(darts * 2);
    for (int d = 0; d < darts; ++d)
        by_pair[static_cast<long long>(rs.dart_tail_[d]) * n + rs.dart_head_[d]] = d;
    rs.rev_.resize(darts);
    for (int d = 0; d < darts; ++d) {
        auto it = by_pair.find(static_cast<long long>(rs.dart_head_[d]) * n + rs.dart_tail_[d]);
        BP_REQUIRE(it != by_pair.end(), "asymmetric rotation");
        rs.rev_[d] = it->second;
    }

    // Edge ids shared by dart pairs.
    rs.edge_id_.assign(darts, -1);
    int eid = 0;
    for (int d = 0; d < darts; ++d)
        if (rs.edge_id_[d] < 0) {
            rs.edge_id_[d] = rs.edge_id_[rs.rev_[d]] = eid++;
        }

    // next(u->v) = (v -> successor of u in rot[v]).
    rs.next_.resize(darts);
    for (int d = 0; d < darts; ++d) {
        int v = rs.dart_head_[d];
        int rd = rs.rev_[d];  // dart v->u, position encodes u's slot in rot[v]
        int pos = rd - rs.dart_base_[v];
        int deg = static_cast<int>(rs.rot_[v].size());
        rs.next_[d] = rs.dart_base_[v] + (pos + 1) % deg;
    }

    // Trace faces.
    rs.face_of_.assign(darts, -1);
    for (int d = 0; d < darts; ++d) {
        if (rs.face_of_[d] >= 0) continue;
        int f = rs.face_count_++;
        rs.face_least_dart_.push_back(d);
        int cur = d;
        do {
            rs.face_of_[cur] = f;
            cur = rs.next_[cur];
        } while (cur != d);
    }
    if (darts == 0) {
        BP_REQUIRE(n <= 1, "edgeless rotation system only valid for a single vertex");
        rs.face_count_ = 1;
        rs.face_least_dart_.push_back(-1);
    }

    // Euler check for connected plane graphs.
    const int m = rs.g_.edge_count();
    BP_REQUIRE(n - m + rs.face_count_ == 2, "rotation is not planar: n - m + f = " +
                                                std::to_string(n - m + rs.face_count_));

    if (outer_u < 0) {
        BP_REQUIRE(rs.face_count_ == 1, "outer face must be designated");
        rs.outer_face_ = 0;
    } else {
        BP_REQUIRE(outer_side == 0 || outer_side == 1, "outer_face_side must be 0 or 1");
        int d = (outer_side == 0) ? rs.dart_id(outer_u, outer_v) : rs.dart_id(outer_v, outer_u);
        rs.outer_face_ = rs.face_of_[d];
    }
    return rs;
}

int RotationSystem::dart_id(int u, int v) const {
    BP_REQUIRE(g_.has_vertex(u) && g_.has_vertex(v), "dart endpoint out of range");
    const auto& r = rot_[u];
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i] == v) return dart_base_[u] + static_cast<int>(i);
    throw input_error("no edge " + std::to_string(u) + "-" + std::to_string(v));
}

std::vector<int> RotationSystem::face_walk(int face) const {
    BP_REQUIRE(face >= 0 && face < face_count_, "face id out of range");
    std::vector<int> walk;
    int d0 = face_least_dart_[face];
    if (d0 < 0) return walk;  // single-vertex graph
    int cur = d0;
    do {
        walk.push_back(dart_tail_[cur]);
        cur = next_[cur];
    } while (cur != d0);
    return walk;
}

std::vector<std::vector<int>> RotationSystem::faces() const {
    std::vector<std::vector<int>> out;
    out.reserve(face_count_);
    for (int f = 0; f < face_count_; ++f) out.push_back(face_walk(f));
    return out;
}

Json RotationSystem::to_json() const {
    Json j;
    j["rotation"] = rot_;
    if (dart_count() > 0) {
        int d0 = face_least_dart_[outer_face_];
        j["outer_face_edge"] = Json::array({dart_tail_[d0], dart_head_[d0]});
        j["outer_face_side"] = 0;
    }
    return j;
}

RotationSystem RotationSystem::from_json(const Json& j) {
    BP_REQUIRE(j.is_object() && j.contains("rotation"), "embedding json needs rotation");
    auto rot = j.at("rotation").get<std::vector<std::vector<int>>>();
    const int n = static_cast<int>(rot.size());
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v)
        for (int w : rot[v]) {
            BP_REQUIRE(w >= 0 && w < n, "rotation neighbour out of range");
            if (v < w) edges.emplace_back(v, w);
        }
    Graph g = Graph::from_edges(n, edges);
    int ou = -1, ov = -1, side = 0;
    if (j.contains("outer_face_edge")) {
        ou = j.at("outer_face_edge")[0].get<int>();
        ov = j.at("outer_face_edge")[1].get<int>();
        side = j.value("outer_face_side", 0);
    }
    return build(std::move(g), std::move(rot), ou, ov, side);
}

FaceGlue::FaceGlue(const RotationSystem& rs, const Subgraph& container) : rs_(rs) {
    const Graph& g = rs.graph();
    vertex_in_.assign(g.vertex_count(), 0);
    for (int v : container.vertices) {
        BP_REQUIRE(g.has_vertex(v), "container vertex out of range");
        vertex_in_[v] = 1;
    }
    std::vector<char> edge_in(rs.edge_count(), 0);
    for (auto [u, v] : container.edges) edge_in[rs.edge_id(u, v)] = 1;

    uf_.resize(rs.face_count());
    for (std::size_t i = 0; i < uf_.size(); ++i) uf_[i] = static_cast<int>(i);
    for (int d = 0; d < rs.dart_count(); ++d) {
        if (rs_.dart_tail(d) > rs_.dart_head(d)) continue;
        if (edge_in[rs_.edge_id_of_dart(d)]) continue;
        int a = find(rs_.face_of_dart(d));
        int b = find(rs_.face_of_dart(rs_.dart_reverse(d)));
        if (a != b) uf_[a] = b;
    }
    outer_comp_ = find(rs.outer_face());
}

int FaceGlue::find(int x) const {
    while (uf_[x] != x) {
        uf_[x] = uf_[uf_[x]];
        x = uf_[x];
    }
    return x;
}

bool FaceGlue::vertex_strictly_in_outer(int v) const {
    BP_REQUIRE(!vertex_in_[v], "vertex belongs to the container");
    if (rs_.graph().degree(v) == 0) return true;  // lone vertex of a K_1 container's host
    int d = rs_.dart_id(v, rs_.graph().neighbors(v)[0]);
    return find(rs_.face_of_dart(d)) == outer_comp_;
}

bool FaceGlue::vertex_on_outer_boundary(int v) const {
    BP_REQUIRE(vertex_in_[v], "vertex not in the container");
    if (rs_.graph().degree(v) == 0) return true;
    for (int w : rs_.graph().neighbors(v))
        if (find(rs_.face_of_dart(rs_.dart_id(v, w))) == outer_comp_) return true;
    return false;
}

bool FaceGlue::vertex_in_outer_closure(int v) const {
    return vertex_in_[v] ? vertex_on_outer_boundary(v) : vertex_strictly_in_outer(v);
}

bool FaceGlue::edge_in_outer_closure(int u, int v) const {
    int d = rs_.dart_id(u, v);
    return find(rs_.face_of_dart(d)) == outer_comp_ &&
           find(rs_.face_of_dart(rs_.dart_reverse(d))) == outer_comp_;
}

std::vector<std::vector<int>> faces(const RotationSystem& rs) { return rs.faces(); }

std::vector<int> subgraph_outer_face(const RotationSystem& rs, const Subgraph& h) {
    BP_REQUIRE(!h.vertices.empty(), "subgraph is empty");
    if (h.edges.empty()) {
        BP_REQUIRE(h.vertices.size() == 1, "subgraph_outer_face needs a connected subgraph");
        return {h.vertices[0]};
    }
    FaceGlue glue(rs, h);

    // Trace the faces of H under the inherited rotation and return the orbit
    // whose glued class is the outer one.
    std::vector<char> vert_in(rs.graph().vertex_count(), 0);
    for (int v : h.vertices) vert_in[v] = 1;
    std::vector<char> edge_in(rs.edge_count(), 0);
    for (auto [u, v] : h.edges) edge_in[rs.edge_id(u, v)] = 1;

    // next_H(u->v) = (v -> w) where w is the first H-neighbour after u in
    // rot[v], cyclically.
    auto next_h = [&](int d) {
        int cur = rs.dart_next_in_face(d);
        // dart_next_in_face already steps to the successor slot at the head
        // vertex; keep rotating there until the outgoing edge lies in H.
        while (!edge_in[rs.edge_id_of_dart(cur)])
            cur = rs.dart_next_in_face(rs.dart_reverse(cur));
        return cur;
    };

    std::vector<char> seen(rs.dart_count(), 0);
    for (int d0 = 0; d0 < rs.dart_count(); ++d0) {
        if (seen[d0] || !edge_in[rs.edge_id_of_dart(d0)]) continue;
        std::vector<int> walk;
        bool outer = false;
        int cur = d0;
        do {
            seen[cur] = 1;
            walk.push_back(rs.dart_tail(cur));
            if (glue.component_of_face(rs.face_of_dart(cur)) == glue.outer_component()) outer = true;
            cur = next_h(cur);
        } while (cur != d0);
        if (outer) return walk;
    }
    throw input_error("no outer face found for subgraph");
}

std::vector<int> outer_boundary_vertices(const RotationSystem& rs, const Subgraph& container) {
    FaceGlue glue(rs, container);
    std::vector<int> out;
    for (int v : container.vertices)
        if (glue.vertex_on_outer_boundary(v)) out.push_back(v);
    return out;
}

std::vector<Bridge> bridges(const Graph& g, const Subgraph& f) {
    const int n = g.vertex_count();
    std::vector<char> in_f(n, 0);
    for (int v : f.vertices) {
        BP_REQUIRE(g.has_vertex(v), "subgraph vertex out of range");
        in_f[v] = 1;
    }
    std::vector<Bridge> out;

    // Trivial bridges: single edges outside F between two F-vertices.
    {
        const std::vector<Edge>& fe = f.edges;
        for (int u = 0; u < n; ++u)
            for (int v : g.neighbors(u)) {
                if (u >= v || !in_f[u] || !in_f[v]) continue;
                if (std::binary_search(fe.begin(), fe.end(), Edge{u, v})) continue;
                Bridge b;
                b.trivial = true;
                b.vertices = {u, v};
                b.edges = {{u, v}};
                b.attachments = {u, v};
                out.push_back(std::move(b));
            }
    }

    // Non-trivial bridges: components of G - V(F) plus neighbours.
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (in_f[s] || seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (int w : g.neighbors(comp[i]))
                if (!in_f[w] && !seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        Bridge b;
        b.trivial = false;
        std::vector<int> att;
        for (int v : comp)
            for (int w : g.neighbors(v)) {
                if (in_f[w]) {
                    att.push_back(w);
                    b.edges.emplace_back(std::min(v, w), std::max(v, w));
                } else if (v < w) {
                    b.edges.emplace_back(v, w);
                }
            }
        std::sort(att.begin(), att.end());
        att.erase(std::unique(att.begin(), att.end()), att.end());
        std::sort(b.edges.begin(), b.edges.end());
        b.edges.erase(std::unique(b.edges.begin(), b.edges.end()), b.edges.end());
        b.attachments = att;
        b.vertices = comp;
        b.vertices.insert(b.vertices.end(), att.begin(), att.end());
        std::sort(b.vertices.begin(), b.vertices.end());
        out.push_back(std::move(b));
    }
    return out;
}

std::vector<int> boundary_attachments(const RotationSystem& rs, const Subgraph& j,
                                      const std::vector<int>& a) {
    FaceGlue glue(rs, j);
    std::vector<int> out;
    for (int v : a)
        if (glue.in_container(v) && glue.vertex_on_outer_boundary(v)) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace bp
