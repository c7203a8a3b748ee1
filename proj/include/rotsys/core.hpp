#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rotsys {

// Vertices are 1-based integer labels throughout; all file formats and
// reports use the same labels.
using Vertex = int;

struct DirectedEdge {
    Vertex from = 0;
    Vertex to = 0;

    friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
    friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + what),
          line(line), column(column) {}
    int line;
    int column;
};

struct RotationRow {
    Vertex vertex = 0;
    std::vector<Vertex> neighbors;  // cyclic, clockwise

    friend bool operator==(const RotationRow&, const RotationRow&) = default;
};

// Per-vertex cyclic orderings of neighbors; the complete combinatorial
// description of an orientable embedding.  Immutable after construction.
class RotationSystem {
public:
    RotationSystem() = default;

    // rows may arrive in any order but must cover vertices 1..n exactly once.
    // Throws ValidationError on duplicate rows, self-loops, repeated entries,
    // out-of-range labels, or asymmetric support (j in row i but not i in row j).
    static RotationSystem build(const std::vector<RotationRow>& rows);

    int n() const { return n_; }
    const std::vector<Vertex>& row(Vertex v) const { return rows_.at(v - 1); }
    const std::vector<std::vector<Vertex>>& rows() const { return rows_; }

    int edge_count() const;
    // true when every row is a permutation of all other vertices (K_n).
    bool is_complete() const;

    // Mirror image: every rotation reversed.
    RotationSystem mirrored() const;
    // Relabel vertices by perm (perm[v] in 1..n, applied to labels and row order).
    RotationSystem relabeled(const std::vector<Vertex>& perm) const;

    friend bool operator==(const RotationSystem&, const RotationSystem&) = default;
    friend auto operator<=>(const RotationSystem&, const RotationSystem&) = default;

private:
    int n_ = 0;
    std::vector<std::vector<Vertex>> rows_;  // rows_[v-1] = neighbors of v
};

// Rows 1..k (k <= 6) of a candidate hexagon-first rotation sequence.
// Row i must begin with prev6(i) and end with next6(i).
struct PartialRotation {
    int n = 0;
    std::vector<std::vector<Vertex>> rows;  // rows[i-1] = row of vertex i, i <= 6

    int filled() const { return static_cast<int>(rows.size()); }

    // Throws ValidationError if rows violate the endpoint convention or are
    // not permutations of the remaining vertices.
    void validate() const;
};

// +-1 on the hexagon cycle (1 2 3 4 5 6): prev6(1) = 6, next6(6) = 1.
inline Vertex prev6(Vertex i) { return i == 1 ? 6 : i - 1; }
inline Vertex next6(Vertex i) { return i == 6 ? 1 : i + 1; }

// The n-1 ordered adjacent pairs of the cyclic sequence, wrap pair included.
std::vector<std::pair<Vertex, Vertex>> cyclic_pairs(const std::vector<Vertex>& row);

RotationSystem build_rotation_system(const std::vector<RotationRow>& rows);

// --- text / JSON encodings -------------------------------------------------
//
// Text format: one row per line, "i: v1 v2 ... v(n-1)"; '#' starts a comment;
// blank lines ignored.  Files holding only rows 1..6 parse as PartialRotation.
// JSON format: {"n": n, "rows": [[...], ...]} with rows[0] the row of vertex 1.

struct ParsedRotation {
    bool partial = false;
    RotationSystem system;    // valid when !partial
    PartialRotation prefix;   // valid when partial
};

ParsedRotation parse_rotation(const std::string& content);
ParsedRotation parse_rotation_file(const std::string& path);

std::string to_text(const RotationSystem& rs);
std::string to_text(const PartialRotation& pr);
std::string to_json_string(const RotationSystem& rs);

}  // namespace rotsys
