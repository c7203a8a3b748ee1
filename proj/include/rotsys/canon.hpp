#pragma once

#include <string>
#include <vector>

#include "rotsys/core.hpp"

namespace rotsys::canon {

struct CanonicalCode {
    std::vector<int> code;   // flattened relabeled rows under the canonical labeling
    bool reflected = false;  // minimal code came from the mirrored system

    friend bool operator==(const CanonicalCode& a, const CanonicalCode& b) {
        return a.code == b.code;
    }
    friend bool operator<(const CanonicalCode& a, const CanonicalCode& b) {
        return a.code < b.code;
    }
};

// Lexicographically least flattened row sequence over all anchor directed
// edges (and the mirror, when allow_reflection).  Equal codes <=> isomorphic
// embeddings under the chosen symmetry group.
CanonicalCode canonical_form(const RotationSystem& rs, bool allow_reflection = true);

struct IsoClass {
    CanonicalCode representative;
    std::vector<int> members;  // indices into the classified input list
    int size() const { return static_cast<int>(members.size()); }
};

// Partition by canonical code; classes sorted by representative code.
// Throws ValidationError on mixed n.
std::vector<IsoClass> classify(const std::vector<RotationSystem>& systems,
                               bool allow_reflection = true);

// The hexagon-neighborhood pattern separating the two K9/S3 embedding
// classes: true iff every hexagon-adjacent triangle holding an off-hexagon
// vertex shares an edge with a triangle holding a different off-hexagon
// vertex.  Requires a distinct-vertex hexagon and all other faces triangular.
bool distinguishing_invariant(const RotationSystem& rs);

std::string classes_to_json(const std::vector<IsoClass>& classes,
                            const std::vector<std::string>& labels = {});

}  // namespace rotsys::canon
