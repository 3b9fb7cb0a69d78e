#include "verify.hpp"

#include <algorithm>
#include <thread>

namespace bp {

SubgraphPartition SubgraphPartition::from_parts(int n, const std::vector<std::vector<int>>& parts) {
    SubgraphPartition z;
    z.part_of.assign(n, -1);
    for (std::size_t id = 0; id < parts.size(); ++id) {
        BP_REQUIRE(!parts[id].empty(), "empty part");
        for (int v : parts[id]) {
            BP_REQUIRE(v >= 0 && v < n, "part vertex out of range");
            BP_REQUIRE(z.part_of[v] == -1, "vertex in two parts");
            z.part_of[v] = static_cast<int>(id);
        }
    }
    z.part_count = static_cast<int>(parts.size());
    return z;
}

std::vector<std::vector<int>> SubgraphPartition::parts() const {
    std::vector<std::vector<int>> out(part_count);
    for (int v = 0; v < static_cast<int>(part_of.size()); ++v)
        if (part_of[v] >= 0) out[part_of[v]].push_back(v);
    return out;
}

std::vector<int> SubgraphPartition::covered_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(part_of.size()); ++v)
        if (part_of[v] >= 0) out.push_back(v);
    return out;
}

int SubgraphPartition::width() const {
    std::vector<int> cnt(part_count, 0);
    int w = 0;
    for (int p : part_of)
        if (p >= 0) w = std::max(w, ++cnt[p]);
    return w;
}

bool is_clean(const Graph& g, const Partition& r, const std::vector<int>& p) {
    BP_REQUIRE(!p.empty(), "empty path");
    BP_REQUIRE(r.vertex_count() == g.vertex_count(), "partition does not cover graph");
    std::vector<char> seen_vertex(g.vertex_count(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        BP_REQUIRE(g.has_vertex(p[i]), "path vertex out of range");
        BP_REQUIRE(!seen_vertex[p[i]], "not a path: repeated vertex");
        seen_vertex[p[i]] = 1;
        if (i > 0) BP_REQUIRE(g.has_edge(p[i - 1], p[i]), "not a path: missing edge");
    }
    std::vector<int> parts;
    parts.reserve(p.size());
    for (int v : p) parts.push_back(r.part_of(v));
    std::sort(parts.begin(), parts.end());
    return std::adjacent_find(parts.begin(), parts.end()) == parts.end();
}

namespace {

// DFS over clean paths whose minimum-id vertex is the start. The path is kept
// as left + start + right; the right side is grown first, then frozen while
// the left side grows, so each clean path is visited exactly once.
struct CleanSearch {
    const Graph& g;
    const std::vector<int>& part_of;
    int depth_cap;  // max edges, -1 = unlimited
    std::uint64_t budget;

    std::vector<char> on_path;
    std::vector<char> part_used;
    std::vector<int> left, right;
    int start = 0;

    std::uint64_t nodes = 0;
    bool budget_hit = false;
    int best = 0;
    std::vector<int> best_path;
    bool stop_at_cap_hit = false;  // verify mode: stop as soon as cap reached
    bool done = false;

    CleanSearch(const Graph& g_, const std::vector<int>& part_of_, int cap, std::uint64_t budget_)
        : g(g_), part_of(part_of_), depth_cap(cap), budget(budget_) {
        on_path.assign(g.vertex_count(), 0);
        part_used.assign(*std::max_element(part_of.begin(), part_of.end()) + 1, 0);
    }

    int length() const { return static_cast<int>(left.size() + right.size()); }

    void record() {
        if (length() > best) {
            best = length();
            best_path.clear();
            for (auto it = left.rbegin(); it != left.rend(); ++it) best_path.push_back(*it);
            best_path.push_back(start);
            best_path.insert(best_path.end(), right.begin(), right.end());
            if (stop_at_cap_hit && best >= depth_cap) done = true;
        }
    }

    void run_from(int s) {
        start = s;
        on_path[s] = 1;
        part_used[part_of[s]] = 1;
        grow_right();
        part_used[part_of[s]] = 0;
        on_path[s] = 0;
    }

    void grow_right() {
        if (done) return;
        if (++nodes > budget) {
            budget_hit = true;
            done = true;
            return;
        }
        record();
        if (done) return;
        grow_left();  // freeze the right end at this state and extend left
        if (depth_cap >= 0 && length() >= depth_cap) return;
        int tip = right.empty() ? start : right.back();
        for (int w : g.neighbors(tip)) {
            if (w <= start || on_path[w] || part_used[part_of[w]]) continue;
            on_path[w] = 1;
            part_used[part_of[w]] = 1;
            right.push_back(w);
            grow_right();
            right.pop_back();
            part_used[part_of[w]] = 0;
            on_path[w] = 0;
            if (done) return;
        }
    }

    void grow_left() {
        if (done) return;
        if (depth_cap >= 0 && length() >= depth_cap) return;
        int tip = left.empty() ? start : left.back();
        for (int w : g.neighbors(tip)) {
            if (w <= start || on_path[w] || part_used[part_of[w]]) continue;
            if (++nodes > budget) {
                budget_hit = true;
                done = true;
                return;
            }
            on_path[w] = 1;
            part_used[part_of[w]] = 1;
            left.push_back(w);
            record();
            if (!done) grow_left();
            left.pop_back();
            part_used[part_of[w]] = 0;
            on_path[w] = 0;
            if (done) return;
        }
    }
};

struct RangeResult {
    int best = 0;
    std::vector<int> witness;
    bool budget_hit = false;
    std::uint64_t nodes = 0;
};

RangeResult search_range(const Graph& g, const std::vector<int>& part_of, int lo, int hi, int cap,
                         bool stop_at_cap, std::uint64_t budget) {
    RangeResult rr;
    CleanSearch cs(g, part_of, cap, budget);
    cs.stop_at_cap_hit = stop_at_cap;
    for (int s = lo; s < hi; ++s) {
        cs.run_from(s);
        if (cs.done) break;
    }
    rr.best = cs.best;
    rr.witness = std::move(cs.best_path);
    rr.budget_hit = cs.budget_hit;
    rr.nodes = cs.nodes;
    return rr;
}

RangeResult search_parallel(const Graph& g, const Partition& r, int cap, bool stop_at_cap,
                            std::uint64_t budget, int workers) {
    BP_REQUIRE(r.vertex_count() == g.vertex_count(), "partition does not cover graph");
    BP_REQUIRE(is_connected_partition(g, r), "partition has a disconnected part");
    const int n = g.vertex_count();
    workers = std::max(1, std::min(workers, n == 0 ? 1 : n));
    if (workers == 1) return search_range(g, r.part_of_vector(), 0, n, cap, stop_at_cap, budget);

    std::vector<RangeResult> results(workers);
    std::vector<std::thread> threads;
    std::uint64_t share = budget / workers;
    for (int w = 0; w < workers; ++w) {
        int lo = static_cast<int>(static_cast<long long>(n) * w / workers);
        int hi = static_cast<int>(static_cast<long long>(n) * (w + 1) / workers);
        threads.emplace_back([&, w, lo, hi] {
            results[w] = search_range(g, r.part_of_vector(), lo, hi, cap, stop_at_cap, share);
        });
    }
    for (auto& t : threads) t.join();
    // Merge: max length, witness from the lowest worker achieving it,
    // exhausted = conjunction.
    RangeResult merged;
    for (auto& rr : results) {
        merged.nodes += rr.nodes;
        merged.budget_hit = merged.budget_hit || rr.budget_hit;
        if (rr.best > merged.best) {
            merged.best = rr.best;
            merged.witness = rr.witness;
        }
    }
    return merged;
}

}  // namespace

CleanPathReport blocking_number(const Graph& g, const Partition& r, std::uint64_t budget,
                                int workers) {
    CleanPathReport rep;
    if (g.vertex_count() == 0) {
        rep.exhausted = true;
        return rep;
    }
    auto rr = search_parallel(g, r, -1, false, budget, workers);
    rep.max_length_found = rr.best;
    rep.witness = std::move(rr.witness);
    rep.exhausted = !rr.budget_hit;
    rep.nodes_expanded = rr.nodes;
    return rep;
}

VerifyOutcome verify_ell_blocking(const Graph& g, const Partition& r, int ell,
                                  std::uint64_t budget, int workers) {
    BP_REQUIRE(ell >= 1, "ell must be positive");
    VerifyOutcome out;
    if (g.vertex_count() == 0) {
        out.verified = true;
        return out;
    }
    auto rr = search_parallel(g, r, ell + 1, true, budget, workers);
    out.nodes_expanded = rr.nodes;
    out.budget_hit = rr.budget_hit;
    if (rr.best >= ell + 1) {
        out.verified = false;
        out.counterexample = std::move(rr.witness);
    } else {
        out.verified = !rr.budget_hit;
    }
    return out;
}

namespace {

// Canonical min-vertex enumeration of z-clean paths up to a depth cap,
// counting distinct z-parts met along the way.
struct ZSearch {
    const Graph& g;
    const SubgraphPartition& z;
    int ell, max_parts;
    std::uint64_t budget;

    std::vector<char> on_path;
    std::vector<char> part_used;
    std::vector<int> left, right;
    int start = 0, parts_met = 0;
    std::uint64_t nodes = 0;
    bool budget_hit = false, done = false;
    std::vector<int> witness;

    ZSearch(const Graph& g_, const SubgraphPartition& z_, int ell_, int max_parts_,
            std::uint64_t budget_)
        : g(g_), z(z_), ell(ell_), max_parts(max_parts_), budget(budget_) {
        on_path.assign(g.vertex_count(), 0);
        part_used.assign(std::max(1, z.part_count), 0);
    }

    int length() const { return static_cast<int>(left.size() + right.size()); }

    bool enter(int v) {  // returns false if the path would stop being z-clean
        int p = z.part_of[v];
        if (p >= 0) {
            if (part_used[p]) return false;
            part_used[p] = 1;
            ++parts_met;
        }
        on_path[v] = 1;
        return true;
    }
    void leave(int v) {
        int p = z.part_of[v];
        if (p >= 0) {
            part_used[p] = 0;
            --parts_met;
        }
        on_path[v] = 0;
    }

    void check() {
        if (parts_met > max_parts) {
            witness.clear();
            for (auto it = left.rbegin(); it != left.rend(); ++it) witness.push_back(*it);
            witness.push_back(start);
            witness.insert(witness.end(), right.begin(), right.end());
            done = true;
        }
    }

    void run_from(int s) {
        start = s;
        if (!enter(s)) return;
        check();
        if (!done) grow_right();
        leave(s);
    }

    void grow_right() {
        if (done) return;
        if (++nodes > budget) {
            budget_hit = done = true;
            return;
        }
        grow_left();
        if (done || length() >= ell) return;
        int tip = right.empty() ? start : right.back();
        for (int w : g.neighbors(tip)) {
            if (w <= start || on_path[w]) continue;
            if (!enter(w)) continue;
            right.push_back(w);
            check();
            if (!done) grow_right();
            right.pop_back();
            leave(w);
            if (done) return;
        }
    }

    void grow_left() {
        if (done || length() >= ell) return;
        int tip = left.empty() ? start : left.back();
        for (int w : g.neighbors(tip)) {
            if (w <= start || on_path[w]) continue;
            if (++nodes > budget) {
                budget_hit = done = true;
                return;
            }
            if (!enter(w)) continue;
            left.push_back(w);
            check();
            if (!done) grow_left();
            left.pop_back();
            leave(w);
            if (done) return;
        }
    }
};

}  // namespace

ZPropertyOutcome verify_z_property(const Graph& g, const SubgraphPartition& z, int ell,
                                   int max_parts, std::uint64_t budget) {
    BP_REQUIRE(static_cast<int>(z.part_of.size()) == g.vertex_count(),
               "subgraph partition size mismatch");
    ZPropertyOutcome out;
    if (z.empty() || z.part_count <= max_parts) {
        out.holds = true;
        return out;
    }
    ZSearch zs(g, z, ell, max_parts, budget);
    for (int s = 0; s < g.vertex_count() && !zs.done; ++s) zs.run_from(s);
    out.nodes_expanded = zs.nodes;
    out.budget_hit = zs.budget_hit;
    if (!zs.witness.empty()) {
        out.holds = false;
        out.witness = std::move(zs.witness);
    } else {
        out.holds = !zs.budget_hit;
    }
    return out;
}

std::optional<int> girth(const Graph& g) {
    // Per-vertex truncated BFS; the minimum over all roots is exact.
    const int n = g.vertex_count();
    int best = -1;
    std::vector<int> dist(n), par(n);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.assign(1, s);
        dist[s] = 0;
        par[s] = -1;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            if (best >= 0 && 2 * dist[v] >= best) break;  // cannot improve
            for (int w : g.neighbors(v)) {
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    par[w] = v;
                    queue.push_back(w);
                } else if (w != par[v] && dist[w] >= dist[v]) {
                    int cyc = dist[v] + dist[w] + 1;
                    if (best < 0 || cyc < best) best = cyc;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

std::vector<int> find_long_clean_path_high_girth(const Graph& g, const Partition& r, int c,
                                                 int ell) {
    const int n = g.vertex_count();
    BP_REQUIRE(c >= 1 && ell >= 1, "c and ell must be positive");
    for (int v = 0; v < n; ++v)
        BP_REQUIRE(g.degree(v) == 4, "graph is not 4-regular (vertex " + std::to_string(v) + ")");
    auto gi = girth(g);
    BP_REQUIRE(gi.has_value() && *gi >= c + ell + 2,
               "girth precondition failed: need girth >= " + std::to_string(c + ell + 2));
    BP_REQUIRE(r.width() <= c, "partition width exceeds c");
    BP_REQUIRE(is_connected_partition(g, r), "partition has a disconnected part");

    // Red = intra-part edges; since girth > c each part induces a tree, so
    // there are fewer red edges than vertices and more blue edges than
    // vertices. A cycle of blue edges must therefore exist.
    std::vector<Edge> blue;
    int red = 0;
    for (auto [u, v] : g.edges()) {
        if (r.part_of(u) == r.part_of(v))
            ++red;
        else
            blue.emplace_back(u, v);
    }
    BP_CLAIM(red < n, "4regular-red-count", 0, "red=" + std::to_string(red));
    BP_CLAIM(static_cast<int>(blue.size()) > n, "4regular-blue-count", 0,
             "blue=" + std::to_string(blue.size()));

    Graph bg = Graph::from_edges(n, blue);
    // First cycle found by lowest-id DFS (explicit stack with neighbour
    // cursors, so every non-tree edge is a genuine back edge).
    std::vector<int> colour(n, 0), parent(n, -1);  // 0 unseen, 1 on stack, 2 done
    std::vector<int> cycle;
    for (int s = 0; s < n && cycle.empty(); ++s) {
        if (colour[s]) continue;
        std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
        colour[s] = 1;
        while (!stack.empty() && cycle.empty()) {
            auto& [v, idx] = stack.back();
            auto nb = bg.neighbors(v);
            if (idx == nb.size()) {
                colour[v] = 2;
                stack.pop_back();
                continue;
            }
            int w = nb[idx++];
            if (w == parent[v]) continue;
            if (colour[w] == 1) {
                // Back edge to an ancestor: walk parent links v -> w.
                std::vector<int> path;
                for (int x = v; x != w; x = parent[x]) path.push_back(x);
                path.push_back(w);
                cycle = std::move(path);
            } else if (colour[w] == 0) {
                colour[w] = 1;
                parent[w] = v;
                stack.emplace_back(w, 0);
            }
        }
    }
    BP_CLAIM(!cycle.empty(), "4regular-blue-cycle", 0, "");
    BP_CLAIM(static_cast<int>(cycle.size()) >= ell + 2, "4regular-cycle-length", 0,
             "cycle=" + std::to_string(cycle.size()));
    std::vector<int> path(cycle.begin(), cycle.begin() + ell + 2);
    BP_CLAIM(is_clean(g, r, path), "4regular-clean-witness", 0, "");
    return path;
}

namespace {

void naive_dfs(const Graph& g, const Partition& r, std::vector<int>& path,
               std::vector<char>& used, int& best) {
    // longest clean path over all simple paths; exponential
    std::vector<int> parts;
    parts.reserve(path.size());
    for (int v : path) parts.push_back(r.part_of(v));
    std::sort(parts.begin(), parts.end());
    if (std::adjacent_find(parts.begin(), parts.end()) == parts.end())
        best = std::max(best, static_cast<int>(path.size()) - 1);
    int tip = path.back();
    for (int w : g.neighbors(tip)) {
        if (used[w]) continue;
        used[w] = 1;
        path.push_back(w);
        naive_dfs(g, r, path, used, best);
        path.pop_back();
        used[w] = 0;
    }
}

}  // namespace

int naive_longest_clean_path(const Graph& g, const Partition& r) {
    int best = 0;
    std::vector<char> used(g.vertex_count(), 0);
    std::vector<int> path;
    for (int s = 0; s < g.vertex_count(); ++s) {
        used[s] = 1;
        path.assign(1, s);
        naive_dfs(g, r, path, used, best);
        used[s] = 0;
    }
    return best;
}

}  // namespace bp
