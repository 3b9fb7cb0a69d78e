#include "graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

namespace bp {

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    BP_REQUIRE(n >= 0, "negative vertex count");
    Graph g;
    g.adj_.assign(n, {});
    for (auto [u, v] : edges) {
        BP_REQUIRE(u >= 0 && u < n && v >= 0 && v < n, "edge endpoint out of range");
        BP_REQUIRE(u != v, "loops not allowed");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    g.m_ = 0;
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        auto last = std::unique(nb.begin(), nb.end());
        BP_REQUIRE(last == nb.end(), "parallel edges not allowed");
        g.m_ += static_cast<int>(nb.size());
    }
    g.m_ /= 2;
    return g;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
}

bool Graph::has_edge(int u, int v) const {
    if (!has_vertex(u) || !has_vertex(v)) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::is_connected() const {
    const int n = vertex_count();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++cnt;
                stack.push_back(w);
            }
    }
    return cnt == n;
}

Graph Graph::induced(const std::vector<int>& keep, std::vector<int>* back_map) const {
    std::vector<int> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> to_new(vertex_count(), -1);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        check_vertex(sorted[i]);
        to_new[sorted[i]] = static_cast<int>(i);
    }
    std::vector<Edge> es;
    for (int u : sorted)
        for (int v : adj_[u])
            if (u < v && to_new[v] >= 0) es.emplace_back(to_new[u], to_new[v]);
    if (back_map) *back_map = sorted;
    return from_edges(static_cast<int>(sorted.size()), es);
}

int Layering::max_layer() const {
    int mx = 0;
    for (int l : layer_of) mx = std::max(mx, l);
    return mx;
}

std::vector<int> RootedTree::vertices() const {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(parent.size()); ++v)
        if (parent[v] != kAbsent) out.push_back(v);
    return out;
}

std::vector<Edge> RootedTree::edges() const {
    std::vector<Edge> out;
    for (int v = 0; v < static_cast<int>(parent.size()); ++v)
        if (parent[v] >= 0) out.emplace_back(std::min(v, parent[v]), std::max(v, parent[v]));
    return out;
}

int RootedTree::size() const {
    int c = 0;
    for (int p : parent)
        if (p != kAbsent) ++c;
    return c;
}

void RootedTree::validate() const {
    BP_REQUIRE(root >= 0 && root < static_cast<int>(parent.size()), "tree root out of range");
    BP_REQUIRE(parent[root] == kRoot, "root must have no parent");
    BP_REQUIRE(depth.size() == parent.size(), "depth size mismatch");
    BP_REQUIRE(depth[root] == 0, "root depth must be 0");
    for (int v = 0; v < static_cast<int>(parent.size()); ++v) {
        if (parent[v] == kAbsent) continue;
        if (v == root) continue;
        int p = parent[v];
        BP_REQUIRE(p >= 0 && p < static_cast<int>(parent.size()) && parent[p] != kAbsent,
                   "parent of " + std::to_string(v) + " not in tree");
        BP_REQUIRE(parent[v] != v, "self-parent");
        BP_REQUIRE(depth[v] == depth[p] + 1, "depth(child) != depth(parent)+1");
    }
}

Partition Partition::from_part_of(std::vector<int> part_of) {
    Partition p;
    int max_id = -1;
    for (int id : part_of) {
        BP_REQUIRE(id >= 0, "negative part id");
        max_id = std::max(max_id, id);
    }
    p.members_.assign(max_id + 1, {});
    for (int v = 0; v < static_cast<int>(part_of.size()); ++v) p.members_[part_of[v]].push_back(v);
    for (int id = 0; id <= max_id; ++id)
        if (!p.members_[id].empty()) p.ids_.push_back(id);
    p.part_of_ = std::move(part_of);
    return p;
}

Partition Partition::from_parts(int n, const std::vector<std::vector<int>>& parts) {
    std::vector<int> part_of(n, -1);
    for (std::size_t id = 0; id < parts.size(); ++id)
        for (int v : parts[id]) {
            BP_REQUIRE(v >= 0 && v < n, "partition vertex out of range");
            BP_REQUIRE(part_of[v] == -1, "vertex in two parts");
            part_of[v] = static_cast<int>(id);
        }
    for (int v = 0; v < n; ++v) BP_REQUIRE(part_of[v] != -1, "vertex in no part");
    return from_part_of(std::move(part_of));
}

Partition Partition::singletons(int n) {
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    return from_part_of(std::move(ids));
}

const std::vector<int>& Partition::part_vertices(int part_id) const {
    BP_REQUIRE(part_id >= 0 && part_id < static_cast<int>(members_.size()) &&
                   !members_[part_id].empty(),
               "no such part");
    return members_[part_id];
}

int Partition::width() const {
    int w = 0;
    for (int id : ids_) w = std::max(w, static_cast<int>(members_[id].size()));
    return w;
}

Layering bfs_layering(const Graph& g, int r) {
    BP_REQUIRE(g.has_vertex(r), "root out of range");
    Layering l;
    l.root = r;
    l.layer_of.assign(g.vertex_count(), kUnreached);
    std::queue<int> q;
    q.push(r);
    l.layer_of[r] = 0;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v))
            if (l.layer_of[w] == kUnreached) {
                l.layer_of[w] = l.layer_of[v] + 1;
                ++reached;
                q.push(w);
            }
    }
    if (reached != g.vertex_count())
        throw input_error(std::to_string(g.vertex_count() - reached) +
                          " vertices unreachable from root " + std::to_string(r));
    return l;
}

RootedTree bfs_spanning_tree(const Graph& g, const Layering& layering) {
    const int n = g.vertex_count();
    BP_REQUIRE(static_cast<int>(layering.layer_of.size()) == n, "layering size mismatch");
    RootedTree t;
    t.root = layering.root;
    t.parent.assign(n, RootedTree::kAbsent);
    t.depth.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        int lv = layering.layer_of[v];
        BP_REQUIRE(lv >= 0, "layering does not cover vertex " + std::to_string(v));
        t.depth[v] = lv;
        if (v == layering.root) {
            BP_REQUIRE(lv == 0, "root not at layer 0");
            t.parent[v] = RootedTree::kRoot;
            continue;
        }
        int best = -1;
        for (int w : g.neighbors(v))
            if (layering.layer_of[w] == lv - 1) {
                best = w;  // neighbours sorted ascending, first hit is lowest id
                break;
            }
        BP_REQUIRE(best >= 0, "vertex " + std::to_string(v) + " has no parent layer neighbour");
        t.parent[v] = best;
    }
    return t;
}

std::vector<int> bfs_distances(const Graph& g, std::span<const int> sources) {
    std::vector<int> dist(g.vertex_count(), kUnreached);
    std::queue<int> q;
    for (int s : sources) {
        BP_REQUIRE(g.has_vertex(s), "source out of range");
        if (dist[s] != 0) {
            dist[s] = 0;
            q.push(s);
        }
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v))
            if (dist[w] == kUnreached) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

std::optional<int> distance(const Graph& g, std::span<const int> u1, std::span<const int> u2) {
    BP_REQUIRE(!u1.empty() && !u2.empty(), "distance between empty sets");
    auto dist = bfs_distances(g, u1);
    int best = std::numeric_limits<int>::max();
    for (int v : u2) {
        BP_REQUIRE(g.has_vertex(v), "target out of range");
        if (dist[v] != kUnreached) best = std::min(best, dist[v]);
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

std::optional<int> distance(const Graph& g, int u, int v) {
    int a[1] = {u}, b[1] = {v};
    return distance(g, std::span<const int>(a), std::span<const int>(b));
}

Graph quotient(const Graph& g, const Partition& p) { return quotient(g, p, nullptr); }

Graph quotient(const Graph& g, const Partition& p, std::vector<int>* part_to_vertex) {
    BP_REQUIRE(p.vertex_count() == g.vertex_count(), "partition does not cover graph");
    const auto& ids = p.part_ids();
    std::vector<int> id_to_q(ids.empty() ? 0 : ids.back() + 1, -1);
    for (std::size_t i = 0; i < ids.size(); ++i) id_to_q[ids[i]] = static_cast<int>(i);
    std::vector<Edge> es;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u)) {
            if (u >= v) continue;
            int a = id_to_q[p.part_of(u)], b = id_to_q[p.part_of(v)];
            if (a != b) es.emplace_back(std::min(a, b), std::max(a, b));
        }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    if (part_to_vertex) *part_to_vertex = id_to_q;
    return Graph::from_edges(static_cast<int>(ids.size()), es);
}

Graph strong_product(const Graph& a, const Graph& b) {
    const long long na = a.vertex_count(), nb = b.vertex_count();
    BP_REQUIRE(na * nb <= 50'000'000LL, "strong product too large");
    const int n = static_cast<int>(na * nb);
    std::vector<Edge> es;
    auto id = [&](int va, int vb) { return va * static_cast<int>(nb) + vb; };
    for (int va = 0; va < na; ++va) {
        for (int vb = 0; vb < nb; ++vb) {
            int u = id(va, vb);
            // same a-coordinate, b-edge
            for (int wb : b.neighbors(vb))
                if (wb > vb) es.emplace_back(u, id(va, wb));
            for (int wa : a.neighbors(va)) {
                if (wa < va) continue;
                // a-edge, same b-coordinate
                es.emplace_back(u, id(wa, vb));
                // a-edge and b-edge
                for (int wb : b.neighbors(vb)) es.emplace_back(u, id(wa, wb));
            }
        }
    }
    for (auto& [u, v] : es)
        if (u > v) std::swap(u, v);
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return Graph::from_edges(n, es);
}

Graph complete_graph(int n) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph::from_edges(n, es);
}

bool is_connected_partition(const Graph& g, const Partition& p) {
    BP_REQUIRE(p.vertex_count() == g.vertex_count(), "partition does not cover graph");
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<int> stack;
    for (int id : p.part_ids()) {
        const auto& verts = p.part_vertices(id);
        stack.assign(1, verts[0]);
        seen[verts[0]] = 1;
        std::size_t cnt = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v))
                if (!seen[w] && p.part_of(w) == id) {
                    seen[w] = 1;
                    ++cnt;
                    stack.push_back(w);
                }
        }
        if (cnt != verts.size()) return false;
    }
    return true;
}

bool h_partition_width_check(const Graph& g, const Partition& p, const Graph& h, int max_width) {
    BP_REQUIRE(p.vertex_count() == g.vertex_count(), "partition does not cover graph");
    for (int id : p.part_ids())
        BP_REQUIRE(h.has_vertex(id), "part label " + std::to_string(id) + " is not a vertex of H");
    if (p.width() > max_width) return false;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u)) {
            if (u >= v) continue;
            int a = p.part_of(u), b = p.part_of(v);
            if (a != b && !h.has_edge(a, b)) return false;
        }
    return true;
}

}  // namespace bp
