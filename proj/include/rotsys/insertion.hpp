#pragma once

#include <map>
#include <string>
#include <vector>

#include "rotsys/core.hpp"
#include "rotsys/facetrace.hpp"

namespace rotsys::insertion {

struct DualArc {
    int face_a = 0, face_b = 0;          // node indices into the face list
    std::pair<Vertex, Vertex> edge;      // the shared undirected edge (min, max)
};

// Faces as nodes, one arc per undirected edge of the embedding.
struct DualGraph {
    int node_count = 0;
    std::vector<DualArc> arcs;
    std::vector<std::vector<int>> adjacency;  // node -> neighboring nodes
};

DualGraph build_dual(const FaceSet& fs);

// A routing of a new interior vertex out of `face` to all existing vertices.
// Certified plans route every off-face vertex through exactly one boundary
// edge of the face, each through a distinct edge whose opposite face holds
// the vertex; the crossing count then equals the sum of the costs.
struct InsertionPlan {
    int face_index = -1;
    FaceWalk face;
    std::map<Vertex, int> per_vertex_cost;            // dual distance, 0 when on face
    std::map<Vertex, DirectedEdge> assignment;        // costly vertex -> boundary edge
    bool certified = false;
    std::string uncertified_reason;
    long upper_bound = 0;                             // sum of costs
};

InsertionPlan plan_insertion(const RotationSystem& rs, int face_index);

// Minimal certified bound over all faces; falls back to the minimal
// heuristic plan (flagged uncertified) when no face certifies.
InsertionPlan best_insertion(const RotationSystem& rs);

std::string plan_to_json(const InsertionPlan& plan);

}  // namespace rotsys::insertion
