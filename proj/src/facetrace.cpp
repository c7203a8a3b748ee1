#include "rotsys/facetrace.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace rotsys {

bool FaceWalk::contains_vertex(Vertex v) const {
    for (const auto& e : boundary)
        if (e.from == v) return true;
    return false;
}

bool FaceWalk::has_distinct_vertices() const {
    std::set<Vertex> seen;
    for (const auto& e : boundary)
        if (!seen.insert(e.from).second) return false;
    return true;
}

FaceSet trace_faces(const RotationSystem& rs) {
    const int n = rs.n();
    // position[v][u] = index of u in the rotation at v, or -1
    std::vector<std::vector<int>> position(n + 1, std::vector<int>(n + 1, -1));
    for (Vertex v = 1; v <= n; ++v) {
        const auto& row = rs.row(v);
        for (size_t i = 0; i < row.size(); ++i) position[v][row[i]] = static_cast<int>(i);
    }

    auto successor = [&](const DirectedEdge& e) -> DirectedEdge {
        const auto& row = rs.row(e.to);
        const int len = static_cast<int>(row.size());
        const int p = position[e.to][e.from];
        return {e.to, row[(p + len - 1) % len]};
    };

    FaceSet out;
    std::vector<std::vector<bool>> visited(n + 1, std::vector<bool>(n + 1, false));
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v : rs.row(u)) ++out.total_directed_edges;
    }
    // Scanning directed edges in lexicographic order makes each walk start at
    // its smallest edge, so face order is deterministic.
    for (Vertex u = 1; u <= n; ++u) {
        std::vector<Vertex> sorted = rs.row(u);
        std::sort(sorted.begin(), sorted.end());
        for (Vertex v : sorted) {
            if (visited[u][v]) continue;
            FaceWalk walk;
            DirectedEdge cur{u, v};
            do {
                visited[cur.from][cur.to] = true;
                walk.boundary.push_back(cur);
                cur = successor(cur);
            } while (!(cur.from == u && cur.to == v));
            ++out.profile[walk.size()];
            out.faces.push_back(std::move(walk));
        }
    }
    return out;
}

SurfaceInvariants surface_invariants(const RotationSystem& rs) {
    FaceSet fs = trace_faces(rs);
    SurfaceInvariants si;
    si.v = rs.n();
    si.e = rs.edge_count();
    si.f = static_cast<int>(fs.faces.size());
    si.euler = si.v - si.e + si.f;
    if (si.euler % 2 != 0)
        throw ValidationError("odd Euler characteristic " + std::to_string(si.euler) +
                              ": rotation system corrupted upstream");
    si.genus = (2 - si.euler) / 2;
    return si;
}

LinkResult vertex_link(const FaceSet& fs, Vertex v, const RotationSystem& rs) {
    LinkResult res;
    // Opposite edges of the triangles at v.
    std::map<Vertex, std::vector<Vertex>> adj;
    for (const auto& face : fs.faces) {
        if (!face.contains_vertex(v)) continue;
        if (face.size() != 3) {
            res.failure = LinkFailure::non_triangle_face;
            res.message = "a non-triangular face contains vertex " + std::to_string(v);
            return res;
        }
        Vertex a = 0, b = 0;
        for (const auto& e : face.boundary) {
            if (e.from != v && e.to != v) { a = e.from; b = e.to; }
        }
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    const auto& neighbors = rs.row(v);
    for (Vertex w : neighbors) {
        if (adj[w].size() != 2) {
            res.failure = LinkFailure::degree_anomaly;
            res.message = "neighbor " + std::to_string(w) + " lies in " +
                          std::to_string(adj[w].size()) + " triangles at " + std::to_string(v);
            return res;
        }
    }
    // Walk the cycle starting at the smallest neighbor.
    const Vertex start = *std::min_element(neighbors.begin(), neighbors.end());
    std::vector<Vertex> cycle{start};
    Vertex prev = start, cur = std::min(adj[start][0], adj[start][1]);
    while (cur != start) {
        cycle.push_back(cur);
        Vertex next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
    }
    if (cycle.size() != neighbors.size()) {
        res.failure = LinkFailure::multiple_cycles;
        res.first_cycle_length = static_cast<int>(cycle.size());
        // count the remaining cycles for the diagnostic
        std::set<Vertex> seen(cycle.begin(), cycle.end());
        res.cycles_found = 1;
        for (Vertex w : neighbors) {
            if (seen.count(w)) continue;
            ++res.cycles_found;
            Vertex p = w, c = adj[w][0];
            seen.insert(w);
            while (c != w) {
                seen.insert(c);
                Vertex nx = adj[c][0] == p ? adj[c][1] : adj[c][0];
                p = c;
                c = nx;
            }
        }
        res.message = "link of " + std::to_string(v) + " splits into " +
                      std::to_string(res.cycles_found) + " cycles (first has length " +
                      std::to_string(res.first_cycle_length) + ", need " +
                      std::to_string(neighbors.size()) + ")";
        return res;
    }
    res.ok = true;
    res.cycle = std::move(cycle);
    return res;
}

EmbeddingReport verify_embedding(const RotationSystem& rs,
                                 std::optional<int> expected_genus,
                                 std::optional<std::map<int, int>> expected_profile) {
    EmbeddingReport rep;
    FaceSet fs = trace_faces(rs);
    rep.invariants.v = rs.n();
    rep.invariants.e = rs.edge_count();
    rep.invariants.f = static_cast<int>(fs.faces.size());
    rep.invariants.euler = rep.invariants.v - rep.invariants.e + rep.invariants.f;
    rep.invariants.genus = (2 - rep.invariants.euler) / 2;
    rep.profile = fs.profile;

    for (const auto& face : fs.faces) {
        if (face.size() == 6 && face.has_distinct_vertices()) {
            rep.hexagon_distinct = true;
            break;
        }
    }

    rep.link_ok = true;
    for (Vertex v = 1; v <= rs.n(); ++v) {
        bool all_triangles = true;
        for (const auto& face : fs.faces)
            if (face.contains_vertex(v) && face.size() != 3) { all_triangles = false; break; }
        if (!all_triangles) continue;
        if (!vertex_link(fs, v, rs).ok) { rep.link_ok = false; break; }
    }

    rep.expected_genus = expected_genus;
    rep.expected_profile = expected_profile;
    if (expected_genus) rep.genus_ok = rep.invariants.genus == *expected_genus;
    if (expected_profile) rep.profile_ok = rep.profile == *expected_profile;
    return rep;
}

std::string report_to_json(const EmbeddingReport& rep, const FaceSet* faces) {
    nlohmann::json j;
    j["v"] = rep.invariants.v;
    j["e"] = rep.invariants.e;
    j["f"] = rep.invariants.f;
    j["euler"] = rep.invariants.euler;
    j["genus"] = rep.invariants.genus;
    nlohmann::json prof = nlohmann::json::object();
    for (const auto& [size, count] : rep.profile) prof[std::to_string(size)] = count;
    j["profile"] = prof;
    j["hexagon_distinct"] = rep.hexagon_distinct;
    j["link_ok"] = rep.link_ok;
    if (rep.expected_genus) {
        j["expected_genus"] = *rep.expected_genus;
        j["genus_ok"] = rep.genus_ok;
    }
    if (rep.expected_profile) {
        nlohmann::json ep = nlohmann::json::object();
        for (const auto& [size, count] : *rep.expected_profile) ep[std::to_string(size)] = count;
        j["expected_profile"] = ep;
        j["profile_ok"] = rep.profile_ok;
    }
    if (faces) {
        nlohmann::json fl = nlohmann::json::array();
        for (const auto& face : faces->faces) {
            nlohmann::json walk = nlohmann::json::array();
            for (const auto& e : face.boundary) walk.push_back(e.from);
            fl.push_back(walk);
        }
        j["faces"] = fl;
    }
    return j.dump(2) + "\n";
}

}  // namespace rotsys
