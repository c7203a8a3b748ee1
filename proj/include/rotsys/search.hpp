#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rotsys/core.hpp"

namespace rotsys::search {

// Hard cap for the flat bookkeeping arrays below; the search is tuned for
// n in {9, 10} but runs for any n in [6, kMaxN].
inline constexpr int kMaxN = 12;

class PartialState;

struct SearchConfig {
    int n = 9;
    int target_genus = 3;
    int jobs = 1;
    std::optional<long> limit;          // cap on emitted sequences
    std::ostream* progress = nullptr;   // diagnostic stream, may be null

    // Diagnostic knobs for soundness experiments (not exposed on the CLI).
    // Turning any of them off enlarges the enumeration without changing
    // which systems can verify, so the output set must stay the same up to
    // the symmetry the knob removes.
    bool enforce_chain = true;     // row i continues with row i-1's last interior
    bool row1_increasing = true;   // residual vertices ascending in row 1
    bool prune_checks = true;      // reject rows on checks 1-3

    // Observation hook: called (possibly from worker threads) for every
    // full-check row-6 survivor, before completion is attempted.
    std::function<void(const PartialState&)> survivor_hook;

    // One hexagon plus triangles on genus g leaves F - 1 triangular faces,
    // F = 2 - 2g - n + C(n,2).
    int max_triangles() const {
        return 2 - 2 * target_genus - n + n * (n - 1) / 2 - 1;
    }
    std::vector<Vertex> residual() const {
        std::vector<Vertex> r;
        for (Vertex v = 7; v <= n; ++v) r.push_back(v);
        return r;
    }
    void validate() const;
};

enum class Check {
    convention,   // endpoint or chain precondition violated
    opposite,     // an ordered pair already asserted in the same direction
    face_count,   // registered triangles exceed max_triangles
    edge_faces,   // an undirected edge reached three face incidences
};

const char* check_name(Check c);

struct Rejection {
    Check check;
    std::string detail;
};

// Rows 1..k of a candidate rotation sequence plus the incremental pair,
// triangle and edge-incidence bookkeeping behind checks 1-3.
//
// The hexagon face (1 2 3 4 5 6) is seeded up front: its six boundary
// directions own their ordered pairs and its edges start with one face
// incidence.  Wrap pairs of rows 1..6 are hexagon corners, not triangle
// assertions, and are skipped; every other adjacent pair (x, y) in row v
// asserts the candidate triangle {v, x, y}, counted once per vertex set.
class PartialState {
public:
    static PartialState initial(const SearchConfig& cfg);

    // Fill row i (1 <= i <= 6, rows in order).  `row` is the complete row,
    // endpoints included.  On rejection the state is left unusable (dead).
    std::optional<Rejection> apply_row(int i, const std::vector<Vertex>& row);

    int n() const { return n_; }
    int max_triangles() const { return max_tri_; }
    int filled() const { return filled_; }
    bool dead() const { return dead_; }
    const Rejection* death_reason() const { return dead_ ? &death_ : nullptr; }

    std::vector<Vertex> row(int i) const;
    PartialRotation partial_rotation() const;

    int triangle_count() const { return tri_count_; }
    // Registered triangles as sorted vertex triples, registration order.
    std::vector<std::array<Vertex, 3>> triangles() const;
    // Owner row of an ordered pair assertion (0 = unowned, kHexagonOwner = hexagon seed).
    int pair_owner(Vertex x, Vertex y) const { return pair_owner_[pair_key(x, y)]; }
    int edge_face_count(Vertex x, Vertex y) const { return edge_cnt_[edge_key(x, y)]; }

    static constexpr int kHexagonOwner = 99;

private:
    friend class Enumerator;
    friend struct CompletionCtx;
    friend std::vector<RotationSystem> complete_residual(const PartialState&, int);

    static int pair_key(Vertex a, Vertex b) { return a * (kMaxN + 1) + b; }
    static int edge_key(Vertex a, Vertex b) {
        return a < b ? a * (kMaxN + 1) + b : b * (kMaxN + 1) + a;
    }

    struct AssertRec {
        std::uint8_t a = 0, b = 0;   // the asserted ordered pair
        std::uint16_t tri = 0;       // newly registered triangle mask, 0 if none
    };
    // Checks the same-direction rule only; triangle budget and edge
    // incidences accumulate for the staged checks at row completion.
    bool try_assert(int owner, Vertex a, Vertex b, AssertRec& rec);
    void undo_assert(const AssertRec& rec);

    int n_ = 0;
    int max_tri_ = 0;
    int filled_ = 0;
    bool dead_ = false;
    Rejection death_{Check::convention, ""};

    std::array<std::array<std::int8_t, kMaxN + 1>, 7> rows_{};  // rows 1..6
    std::array<std::int8_t, (kMaxN + 1) * (kMaxN + 1)> pair_owner_{};
    std::array<std::uint8_t, (kMaxN + 1) * (kMaxN + 1)> edge_cnt_{};
    std::bitset<1 << (kMaxN + 1)> tri_seen_;
    std::vector<std::uint16_t> tri_list_;
    int tri_count_ = 0;
    int over2_ = 0;              // undirected edges with three or more incidences
};

struct StageCounters {
    long first_row_candidates = 0;
    struct RowChecks {
        long pass_opposite = 0;
        long pass_face_count = 0;
        long pass_edge_faces = 0;
    };
    std::array<RowChecks, 7> rows{};            // indices 2..6 used
    std::map<int, long> row6_by_triangles;      // full-row-6 survivors by triangle count
    std::map<int, long> completions_by_triangles;  // emitted sequences by that count
    long emitted = 0;
    bool incomplete = false;

    void merge(const StageCounters& other);
};

struct SearchResult {
    std::vector<RotationSystem> sequences;  // sorted lexicographically
    StageCounters counters;

    long completions(int triangles_at_row6) const {
        auto it = counters.completions_by_triangles.find(triangles_at_row6);
        return it == counters.completions_by_triangles.end() ? 0 : it->second;
    }
};

// All row-1 fillings: endpoints (6, ..., 2), interior a permutation of the
// remaining vertices with the residual vertices 7..n in increasing order.
// Candidates whose own pairs already collide with the hexagon arrive dead.
std::vector<PartialState> first_row_candidates(const SearchConfig& cfg);

struct ExtendOutcome {
    bool accepted = false;
    Rejection rejection{Check::convention, ""};
    PartialState state;  // meaningful only when accepted
};

// Fill row i (2..6) of a copy of `state` with the given interior permutation;
// endpoints are implied.  Checks run in order: convention, opposite pairs,
// triangle budget, edge incidences; the first failure is reported.
ExtendOutcome extend_row(const PartialState& state, int i,
                         const std::vector<Vertex>& interior);

// Enumerate the missing residual-vertex triangles (d = max_triangles -
// registered), then reconstruct rows 7..n from the link cycles of each
// residual vertex; every assembled system is accepted only if the traced
// embedding has the target profile (one distinct-vertex hexagon, rest
// triangles) on the target genus.
std::vector<RotationSystem> complete_residual(const PartialState& state,
                                              int target_genus);

SearchResult run_search(const SearchConfig& cfg);

std::string counters_to_json(const SearchConfig& cfg, const StageCounters& c);

}  // namespace rotsys::search
