#include "rotsys/insertion.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "json.hpp"

namespace rotsys::insertion {

DualGraph build_dual(const FaceSet& fs) {
    DualGraph dual;
    dual.node_count = static_cast<int>(fs.faces.size());
    dual.adjacency.assign(fs.faces.size(), {});

    // Which face holds each directed edge.
    std::map<std::pair<Vertex, Vertex>, int> holder;
    for (size_t fi = 0; fi < fs.faces.size(); ++fi)
        for (const auto& e : fs.faces[fi].boundary)
            holder[{e.from, e.to}] = static_cast<int>(fi);

    std::set<std::pair<Vertex, Vertex>> done;
    for (const auto& [de, fa] : holder) {
        const auto key = std::minmax(de.first, de.second);
        if (!done.insert(key).second) continue;
        const int fb = holder.at({de.second, de.first});
        dual.arcs.push_back({fa, fb, key});
        dual.adjacency[fa].push_back(fb);
        if (fb != fa) dual.adjacency[fb].push_back(fa);
    }
    return dual;
}

namespace {

std::vector<int> dual_distances(const DualGraph& dual, int source) {
    std::vector<int> dist(dual.node_count, -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        const int f = queue.front();
        queue.pop_front();
        for (int g : dual.adjacency[f])
            if (dist[g] < 0) {
                dist[g] = dist[f] + 1;
                queue.push_back(g);
            }
    }
    return dist;
}

// Try to give each costly vertex its own boundary edge whose opposite face
// holds the vertex.  Small: at most six edges to pick from.
bool match_edges(const std::vector<Vertex>& costly,
                 const std::vector<std::vector<int>>& options,
                 size_t i, std::vector<int>& pick, std::set<int>& used) {
    if (i == costly.size()) return true;
    for (int e : options[i]) {
        if (used.count(e)) continue;
        used.insert(e);
        pick[i] = e;
        if (match_edges(costly, options, i + 1, pick, used)) return true;
        used.erase(e);
    }
    return false;
}

}  // namespace

InsertionPlan plan_insertion(const RotationSystem& rs, int face_index) {
    FaceSet fs = trace_faces(rs);
    if (face_index < 0 || face_index >= static_cast<int>(fs.faces.size()))
        throw ValidationError("face index " + std::to_string(face_index) +
                              " out of range (embedding has " +
                              std::to_string(fs.faces.size()) + " faces)");
    const DualGraph dual = build_dual(fs);
    const auto dist = dual_distances(dual, face_index);

    InsertionPlan plan;
    plan.face_index = face_index;
    plan.face = fs.faces[face_index];

    std::set<Vertex> on_face;
    for (const auto& e : plan.face.boundary) on_face.insert(e.from);

    for (Vertex v = 1; v <= rs.n(); ++v) {
        if (on_face.count(v)) {
            plan.per_vertex_cost[v] = 0;
            continue;
        }
        int best = -1;
        for (size_t fi = 0; fi < fs.faces.size(); ++fi)
            if (fs.faces[fi].contains_vertex(v) && (best < 0 || dist[fi] < best))
                best = dist[fi];
        plan.per_vertex_cost[v] = best;
        plan.upper_bound += best;
    }

    // Certification: distinct face vertices, all costs <= 1, and an injective
    // edge assignment placing each costly vertex just across its edge.
    if (!plan.face.has_distinct_vertices()) {
        plan.uncertified_reason = "face revisits a vertex";
        return plan;
    }
    std::vector<Vertex> costly;
    for (const auto& [v, c] : plan.per_vertex_cost) {
        if (c > 1) {
            plan.uncertified_reason = "vertex " + std::to_string(v) +
                                      " needs a route of length " + std::to_string(c);
            return plan;
        }
        if (c == 1) costly.push_back(v);
    }

    std::map<std::pair<Vertex, Vertex>, int> holder;
    for (size_t fi = 0; fi < fs.faces.size(); ++fi)
        for (const auto& e : fs.faces[fi].boundary)
            holder[{e.from, e.to}] = static_cast<int>(fi);

    std::vector<std::vector<int>> options(costly.size());
    for (size_t i = 0; i < costly.size(); ++i) {
        for (size_t k = 0; k < plan.face.boundary.size(); ++k) {
            const auto& e = plan.face.boundary[k];
            const int across = holder.at({e.to, e.from});
            if (fs.faces[across].contains_vertex(costly[i]))
                options[i].push_back(static_cast<int>(k));
        }
    }
    std::vector<int> pick(costly.size(), -1);
    std::set<int> used;
    if (!match_edges(costly, options, 0, pick, used)) {
        plan.uncertified_reason = "no injective edge assignment exists";
        return plan;
    }
    for (size_t i = 0; i < costly.size(); ++i)
        plan.assignment[costly[i]] = plan.face.boundary[pick[i]];
    plan.certified = true;
    return plan;
}

InsertionPlan best_insertion(const RotationSystem& rs) {
    FaceSet fs = trace_faces(rs);
    InsertionPlan best_certified, best_any;
    for (int fi = 0; fi < static_cast<int>(fs.faces.size()); ++fi) {
        InsertionPlan plan = plan_insertion(rs, fi);
        if (best_any.face_index < 0 || plan.upper_bound < best_any.upper_bound)
            best_any = plan;
        if (plan.certified &&
            (best_certified.face_index < 0 || plan.upper_bound < best_certified.upper_bound))
            best_certified = plan;
    }
    return best_certified.face_index >= 0 ? best_certified : best_any;
}

std::string plan_to_json(const InsertionPlan& plan) {
    nlohmann::json j;
    j["face_index"] = plan.face_index;
    nlohmann::json walk = nlohmann::json::array();
    for (const auto& e : plan.face.boundary) walk.push_back(e.from);
    j["face"] = walk;
    nlohmann::json costs = nlohmann::json::object();
    for (const auto& [v, c] : plan.per_vertex_cost) costs[std::to_string(v)] = c;
    j["costs"] = costs;
    nlohmann::json assign = nlohmann::json::object();
    for (const auto& [v, e] : plan.assignment)
        assign[std::to_string(v)] = nlohmann::json::array({e.from, e.to});
    j["assignment"] = assign;
    j["certified"] = plan.certified;
    if (!plan.certified) j["uncertified_reason"] = plan.uncertified_reason;
    j["upper_bound"] = plan.upper_bound;
    return j.dump(2) + "\n";
}

}  // namespace rotsys::insertion
