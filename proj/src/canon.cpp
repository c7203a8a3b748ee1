#include "rotsys/canon.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"
#include "rotsys/facetrace.hpp"

namespace rotsys::canon {

namespace {

// Relabel by breadth-first discovery from anchor (u, v): u gets label 1 and
// its row is read starting at v; every later vertex's row is read starting
// at the vertex that discovered it.  Returns the flattened relabeled rows.
std::vector<int> code_for_anchor(const std::vector<std::vector<Vertex>>& rows, int n,
                                 Vertex u, Vertex v) {
    std::vector<int> label(n + 1, 0);
    std::vector<Vertex> order;        // order[k] = vertex with label k+1
    std::vector<Vertex> start(n + 1); // rotation start for each vertex
    order.reserve(n);

    label[u] = 1;
    order.push_back(u);
    start[u] = v;
    int next = 2;
    for (size_t qi = 0; qi < order.size(); ++qi) {
        const Vertex w = order[qi];
        const auto& row = rows[w - 1];
        const int len = static_cast<int>(row.size());
        int s = 0;
        while (row[s] != start[w]) ++s;
        for (int k = 0; k < len; ++k) {
            const Vertex x = row[(s + k) % len];
            if (!label[x]) {
                label[x] = next++;
                order.push_back(x);
                start[x] = w;
            }
        }
    }

    std::vector<int> code;
    code.reserve(static_cast<size_t>(n) * (n - 1));
    for (Vertex w : order) {
        const auto& row = rows[w - 1];
        const int len = static_cast<int>(row.size());
        int s = 0;
        while (row[s] != start[w]) ++s;
        for (int k = 0; k < len; ++k) code.push_back(label[row[(s + k) % len]]);
    }
    return code;
}

std::vector<int> min_code(const std::vector<std::vector<Vertex>>& rows, int n) {
    std::vector<int> best;
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v : rows[u - 1]) {
            auto code = code_for_anchor(rows, n, u, v);
            if (best.empty() || code < best) best = std::move(code);
        }
    }
    return best;
}

}  // namespace

CanonicalCode canonical_form(const RotationSystem& rs, bool allow_reflection) {
    if (!rs.is_complete())
        throw ValidationError("canonical form is defined for complete graphs only");
    CanonicalCode out;
    out.code = min_code(rs.rows(), rs.n());
    if (allow_reflection) {
        auto mirror_code = min_code(rs.mirrored().rows(), rs.n());
        if (mirror_code < out.code) {
            out.code = std::move(mirror_code);
            out.reflected = true;
        }
    }
    return out;
}

std::vector<IsoClass> classify(const std::vector<RotationSystem>& systems,
                               bool allow_reflection) {
    for (const auto& rs : systems)
        if (rs.n() != systems.front().n())
            throw ValidationError("classify: systems of mixed n");

    std::map<std::vector<int>, IsoClass> by_code;
    for (size_t i = 0; i < systems.size(); ++i) {
        auto code = canonical_form(systems[i], allow_reflection);
        auto& cls = by_code[code.code];
        if (cls.members.empty()) cls.representative = code;
        cls.members.push_back(static_cast<int>(i));
    }
    std::vector<IsoClass> out;
    out.reserve(by_code.size());
    for (auto& [_, cls] : by_code) out.push_back(std::move(cls));
    return out;
}

bool distinguishing_invariant(const RotationSystem& rs) {
    FaceSet fs = trace_faces(rs);
    const FaceWalk* hexagon = nullptr;
    for (const auto& face : fs.faces) {
        if (face.size() == 6) {
            if (hexagon) throw ValidationError("more than one hexagonal face");
            hexagon = &face;
        } else if (face.size() != 3) {
            throw ValidationError("face of size " + std::to_string(face.size()) +
                                  ": need one hexagon plus triangles");
        }
    }
    if (!hexagon || !hexagon->has_distinct_vertices())
        throw ValidationError("no distinct-vertex hexagon present");

    std::set<Vertex> hex_vertices;
    std::set<std::pair<Vertex, Vertex>> hex_edges;  // undirected, ordered pairs
    for (const auto& e : hexagon->boundary) {
        hex_vertices.insert(e.from);
        hex_edges.insert(std::minmax(e.from, e.to));
    }

    auto triangle_vertices = [](const FaceWalk& f) {
        std::set<Vertex> vs;
        for (const auto& e : f.boundary) vs.insert(e.from);
        return vs;
    };
    auto triangle_edges = [](const FaceWalk& f) {
        std::set<std::pair<Vertex, Vertex>> es;
        for (const auto& e : f.boundary) es.insert(std::minmax(e.from, e.to));
        return es;
    };

    for (const auto& face : fs.faces) {
        if (face.size() != 3) continue;
        auto edges = triangle_edges(face);
        bool hex_adjacent = false;
        for (const auto& e : edges) hex_adjacent = hex_adjacent || hex_edges.count(e);
        if (!hex_adjacent) continue;

        Vertex residual = 0;
        for (Vertex w : triangle_vertices(face))
            if (!hex_vertices.count(w)) residual = w;
        if (!residual) continue;

        // Need a neighboring triangle carrying a different off-hexagon vertex.
        bool found = false;
        for (const auto& other : fs.faces) {
            if (&other == &face || other.size() != 3) continue;
            auto other_edges = triangle_edges(other);
            bool shares = false;
            for (const auto& e : edges) shares = shares || other_edges.count(e);
            if (!shares) continue;
            for (Vertex w : triangle_vertices(other))
                if (!hex_vertices.count(w) && w != residual) found = true;
        }
        if (!found) return false;
    }
    return true;
}

std::string classes_to_json(const std::vector<IsoClass>& classes,
                            const std::vector<std::string>& labels) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& cls : classes) {
        nlohmann::json j;
        j["representative_code"] = cls.representative.code;
        j["reflected"] = cls.representative.reflected;
        j["members"] = cls.members;
        j["size"] = cls.size();
        if (!labels.empty()) {
            nlohmann::json names = nlohmann::json::array();
            for (int idx : cls.members)
                names.push_back(labels.at(static_cast<size_t>(idx)));
            j["member_labels"] = names;
        }
        out.push_back(j);
    }
    return out.dump(2) + "\n";
}

}  // namespace rotsys::canon
