#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rotsys/core.hpp"

namespace rotsys {

struct FaceWalk {
    std::vector<DirectedEdge> boundary;  // closed walk, starts at its smallest edge
    int size() const { return static_cast<int>(boundary.size()); }
    bool contains_vertex(Vertex v) const;
    bool has_distinct_vertices() const;

    friend bool operator==(const FaceWalk&, const FaceWalk&) = default;
};

struct FaceSet {
    std::vector<FaceWalk> faces;          // ordered by smallest directed edge
    std::map<int, int> profile;           // face size -> count
    int total_directed_edges = 0;
};

struct SurfaceInvariants {
    int v = 0, e = 0, f = 0;
    int euler = 0;  // v - e + f
    int genus = 0;  // (2 - euler) / 2
};

enum class LinkFailure { none, non_triangle_face, degree_anomaly, multiple_cycles };

struct LinkResult {
    bool ok = false;
    std::vector<Vertex> cycle;   // the single cycle through all neighbors, when ok
    LinkFailure failure = LinkFailure::none;
    int cycles_found = 0;        // for multiple_cycles diagnostics
    int first_cycle_length = 0;
    std::string message;
};

struct EmbeddingReport {
    SurfaceInvariants invariants;
    std::map<int, int> profile;
    bool hexagon_distinct = false;  // a size-6 face with six distinct vertices exists
    bool link_ok = false;           // every all-triangle vertex has a single full link cycle
    bool genus_ok = true;           // vs. expectation, when one was given
    bool profile_ok = true;
    std::optional<int> expected_genus;
    std::optional<std::map<int, int>> expected_profile;

    bool expectations_met() const { return genus_ok && profile_ok; }
};

// Heffter-Edmonds face tracing.
//
// Successor convention (C1): the boundary walk continues from directed edge
// (u, v) to (v, w) where w is the predecessor of u in the rotation at v.
// Under C1 a system whose rows 1..6 start with prev6(i) and end with next6(i)
// traces the hexagon 1 -> 2 -> ... -> 6 as a face.
FaceSet trace_faces(const RotationSystem& rs);

SurfaceInvariants surface_invariants(const RotationSystem& rs);

// The cyclic sequence of opposite edges of the triangles at v, glued
// edge-to-edge; succeeds iff they chain into one cycle covering every
// neighbor of v.
LinkResult vertex_link(const FaceSet& fs, Vertex v, const RotationSystem& rs);

EmbeddingReport verify_embedding(const RotationSystem& rs,
                                 std::optional<int> expected_genus = std::nullopt,
                                 std::optional<std::map<int, int>> expected_profile = std::nullopt);

std::string report_to_json(const EmbeddingReport& rep, const FaceSet* faces = nullptr);

}  // namespace rotsys
