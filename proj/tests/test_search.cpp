#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "rotsys/core.hpp"
#include "rotsys/facetrace.hpp"
#include "rotsys/search.hpp"

using namespace rotsys;
using namespace rotsys::search;

namespace {

std::string fixture(const std::string& name) {
    return std::string(ROTSYS_DATA_DIR) + "/" + name;
}

PartialRotation load_partial(const std::string& name) {
    auto parsed = parse_rotation_file(fixture(name));
    REQUIRE(parsed.partial);
    return parsed.prefix;
}

PartialState state_for(const PartialRotation& pr, int genus) {
    SearchConfig cfg;
    cfg.n = pr.n;
    cfg.target_genus = genus;
    auto st = PartialState::initial(cfg);
    for (int i = 1; i <= pr.filled(); ++i) {
        auto rej = st.apply_row(i, pr.rows[i - 1]);
        REQUIRE_MESSAGE(!rej.has_value(), (rej ? rej->detail : std::string{}));
    }
    return st;
}

}  // namespace

TEST_CASE("max_triangles follows the face count of the target surface") {
    CHECK(SearchConfig{.n = 9, .target_genus = 3}.max_triangles() == 22);
    CHECK(SearchConfig{.n = 10, .target_genus = 4}.max_triangles() == 28);
}

TEST_CASE("config validation") {
    CHECK_THROWS(SearchConfig{.n = 20, .target_genus = 3}.validate());
    CHECK_THROWS(SearchConfig{.n = 9, .target_genus = 15}.validate());  // max_triangles < 0
    CHECK_NOTHROW(SearchConfig{.n = 9, .target_genus = 3}.validate());
}

TEST_CASE("row-1 candidate counts match the symmetry reduction") {
    CHECK(first_row_candidates({.n = 9, .target_genus = 3}).size() == 120);   // 6!/3!
    CHECK(first_row_candidates({.n = 10, .target_genus = 4}).size() == 210);  // 7!/4!
    // one residual vertex imposes nothing: C(4,1) placements x 3! = 24
    CHECK(first_row_candidates({.n = 7, .target_genus = 1}).size() == 24);
}

TEST_CASE("row-1 candidates fix the endpoints and order the residuals") {
    for (const auto& st : first_row_candidates({.n = 9, .target_genus = 3})) {
        auto row = st.row(1);
        CHECK(row.front() == 6);
        CHECK(row.back() == 2);
        std::vector<Vertex> residuals;
        for (Vertex v : row)
            if (v >= 7) residuals.push_back(v);
        CHECK(residuals == std::vector<Vertex>{7, 8, 9});
    }
}

TEST_CASE("the hexagon seeds own their boundary directions") {
    auto st = PartialState::initial({.n = 9, .target_genus = 3});
    CHECK(st.pair_owner(1, 2) == PartialState::kHexagonOwner);
    CHECK(st.pair_owner(6, 1) == PartialState::kHexagonOwner);
    CHECK(st.pair_owner(2, 1) == 0);
    CHECK(st.edge_face_count(1, 2) == 1);
    CHECK(st.edge_face_count(1, 3) == 0);
}

TEST_CASE("case 1 rows feed through with 22 triangles") {
    auto st = state_for(load_partial("k9_s3_case1_rows6.txt"), 3);
    CHECK(st.filled() == 6);
    CHECK(st.triangle_count() == 22);
}

TEST_CASE("the K10 table rows register 26 triangles") {
    auto st = state_for(load_partial("k10_s4_rows6.txt"), 4);
    CHECK(st.triangle_count() == 26);
}

TEST_CASE("extend_row rejects a same-direction duplicate pair") {
    auto pr = load_partial("k9_s3_case1_rows6.txt");
    SearchConfig cfg{.n = 9, .target_genus = 3};
    auto st = PartialState::initial(cfg);
    REQUIRE(!st.apply_row(1, pr.rows[0]).has_value());
    // row 1 owns (6,3); this row-2 interior ends with 6, closing as (6,3)
    auto out = extend_row(st, 2, {9, 4, 5, 7, 8, 6});
    CHECK(!out.accepted);
    CHECK(out.rejection.check == Check::opposite);
}

TEST_CASE("extend_row rejects a chain violation as a convention error") {
    auto pr = load_partial("k9_s3_case1_rows6.txt");
    SearchConfig cfg{.n = 9, .target_genus = 3};
    auto st = PartialState::initial(cfg);
    REQUIRE(!st.apply_row(1, pr.rows[0]).has_value());
    // row 1 ends ... 9 2, so row 2 must open with 9
    auto out = extend_row(st, 2, {4, 9, 5, 7, 8, 6});
    CHECK(!out.accepted);
    CHECK(out.rejection.check == Check::convention);
}

TEST_CASE("extend_row accepts the real case-1 rows") {
    auto pr = load_partial("k9_s3_case1_rows6.txt");
    SearchConfig cfg{.n = 9, .target_genus = 3};
    auto st = PartialState::initial(cfg);
    REQUIRE(!st.apply_row(1, pr.rows[0]).has_value());
    for (int i = 2; i <= 6; ++i) {
        std::vector<Vertex> interior(pr.rows[i - 1].begin() + 1, pr.rows[i - 1].end() - 1);
        auto out = extend_row(st, i, interior);
        REQUIRE_MESSAGE(out.accepted, out.rejection.detail);
        st = out.state;
    }
    CHECK(st.triangle_count() == 22);
}

TEST_CASE("case 1 completes uniquely to the frozen system") {
    auto st = state_for(load_partial("k9_s3_case1_rows6.txt"), 3);
    auto completions = complete_residual(st, 3);
    REQUIRE(completions.size() == 1);
    // rows 7..9 were derived by hand from the link cycles of the six rows
    CHECK(completions[0].row(7) == std::vector<Vertex>{1, 3, 9, 4, 6, 5, 2, 8});
    CHECK(completions[0].row(8) == std::vector<Vertex>{1, 7, 2, 4, 3, 6, 9, 5});
    CHECK(completions[0].row(9) == std::vector<Vertex>{1, 4, 7, 3, 5, 8, 6, 2});
    CHECK(completions[0] == parse_rotation_file(fixture("k9_s3_case1.txt")).system);
}

TEST_CASE("case 2 completes uniquely and verifies") {
    auto st = state_for(load_partial("k9_s3_case2_rows6.txt"), 3);
    auto completions = complete_residual(st, 3);
    REQUIRE(completions.size() == 1);
    auto rep = verify_embedding(completions[0], 3, std::map<int, int>{{3, 22}, {6, 1}});
    CHECK(rep.expectations_met());
    CHECK(rep.hexagon_distinct);
}

TEST_CASE("the K10 partial completes by adding triangles 7-8-10 and 7-9-10") {
    auto st = state_for(load_partial("k10_s4_rows6.txt"), 4);
    auto completions = complete_residual(st, 4);
    REQUIRE(completions.size() == 1);
    auto fs = trace_faces(completions[0]);
    std::set<std::set<Vertex>> residual_faces;
    for (const auto& f : fs.faces) {
        if (f.size() != 3) continue;
        std::set<Vertex> vs;
        bool residual_only = true;
        for (const auto& e : f.boundary) {
            residual_only = residual_only && e.from >= 7;
            vs.insert(e.from);
        }
        if (residual_only) residual_faces.insert(vs);
    }
    CHECK(residual_faces == std::set<std::set<Vertex>>{{7, 8, 10}, {7, 9, 10}});
    CHECK(completions[0] == parse_rotation_file(fixture("k10_s4.txt")).system);
}

TEST_CASE("complete_residual refuses unfinished states") {
    SearchConfig cfg{.n = 9, .target_genus = 3};
    auto st = PartialState::initial(cfg);
    CHECK_THROWS_AS(complete_residual(st, 3), ValidationError);
}

TEST_CASE("K9 search finds the eight sequences") {
    SearchConfig cfg{.n = 9, .target_genus = 3};
    auto result = run_search(cfg);
    REQUIRE(result.sequences.size() == 8);
    CHECK(std::set<RotationSystem>(result.sequences.begin(), result.sequences.end()).size() == 8);
    CHECK(result.counters.emitted == 8);
    CHECK(!result.counters.incomplete);
    CHECK(result.counters.first_row_candidates == 120);
    CHECK(result.counters.row6_by_triangles == std::map<int, long>{{22, 38}});
    CHECK(result.completions(22) == 8);
    for (const auto& rs : result.sequences) {
        auto rep = verify_embedding(rs, 3, std::map<int, int>{{3, 22}, {6, 1}});
        CHECK(rep.expectations_met());
        CHECK(rep.hexagon_distinct);
        // convention soundness: the directed cycle 1 -> 2 -> ... -> 6 is a face
        auto fs = trace_faces(rs);
        bool hexagon_face = false;
        for (const auto& f : fs.faces) {
            if (f.size() != 6) continue;
            std::vector<Vertex> verts;
            for (const auto& e : f.boundary) verts.push_back(e.from);
            hexagon_face = hexagon_face || verts == std::vector<Vertex>{1, 2, 3, 4, 5, 6};
        }
        CHECK(hexagon_face);
    }
    // the two published sequences are among the output
    CHECK(std::count(result.sequences.begin(), result.sequences.end(),
                     parse_rotation_file(fixture("k9_s3_case1.txt")).system) == 1);
    CHECK(std::count(result.sequences.begin(), result.sequences.end(),
                     parse_rotation_file(fixture("k9_s3_case2.txt")).system) == 1);
}

TEST_CASE("stage counters are monotone along each row's check chain") {
    auto result = run_search({.n = 9, .target_genus = 3});
    for (int i = 2; i <= 6; ++i) {
        const auto& row = result.counters.rows[i];
        CHECK(row.pass_opposite >= row.pass_face_count);
        CHECK(row.pass_face_count >= row.pass_edge_faces);
    }
}

TEST_CASE("results are independent of the worker count") {
    SearchConfig one{.n = 9, .target_genus = 3, .jobs = 1};
    SearchConfig four{.n = 9, .target_genus = 3, .jobs = 4};
    auto a = run_search(one);
    auto b = run_search(four);
    CHECK(a.sequences == b.sequences);
    CHECK(counters_to_json(one, a.counters) == counters_to_json(four, b.counters));
}

TEST_CASE("a limit caps the output and flags the counters incomplete") {
    SearchConfig cfg{.n = 9, .target_genus = 3};
    cfg.limit = 1;
    auto result = run_search(cfg);
    CHECK(result.sequences.size() == 1);
    CHECK(result.counters.incomplete);
}

TEST_CASE("some row-1 candidates die on the hexagon seeds") {
    // an interior containing 3 4 or 4 5 adjacently asserts a hexagon
    // boundary direction; such candidates are yielded dead
    auto candidates = first_row_candidates({.n = 9, .target_genus = 3});
    int dead = 0;
    for (const auto& st : candidates) {
        if (!st.dead()) continue;
        ++dead;
        CHECK(st.death_reason()->check == Check::opposite);
    }
    CHECK(dead > 0);
    CHECK(dead < 120);
}

TEST_CASE("dropping the chain rule does not change the K9 output") {
    SearchConfig relaxed{.n = 9, .target_genus = 3};
    relaxed.enforce_chain = false;
    auto full = run_search(relaxed);
    auto fast = run_search({.n = 9, .target_genus = 3});
    CHECK(full.sequences == fast.sequences);
}

TEST_CASE("dropping the row-1 reduction yields exactly the residual relabelings") {
    SearchConfig relaxed{.n = 9, .target_genus = 3};
    relaxed.row1_increasing = false;
    auto full = run_search(relaxed);
    auto reduced = run_search({.n = 9, .target_genus = 3});
    CHECK(full.sequences.size() == reduced.sequences.size() * 6);  // |S_3| copies

    // expand the reduced output over all residual relabelings, renormalizing
    // rows 7..9 to start at vertex 1 as the search emits them
    std::set<RotationSystem> expanded;
    std::vector<Vertex> image{7, 8, 9};
    do {
        std::vector<Vertex> perm{0, 1, 2, 3, 4, 5, 6, image[0], image[1], image[2]};
        for (const auto& rs : reduced.sequences) {
            auto rel = rs.relabeled(perm);
            std::vector<RotationRow> rows;
            for (Vertex v = 1; v <= 9; ++v) {
                auto row = rel.row(v);
                if (v >= 7)
                    std::rotate(row.begin(), std::find(row.begin(), row.end(), 1), row.end());
                rows.push_back({v, row});
            }
            expanded.insert(RotationSystem::build(rows));
        }
    } while (std::next_permutation(image.begin(), image.end()));
    CHECK(std::set<RotationSystem>(full.sequences.begin(), full.sequences.end()) == expanded);
}

TEST_CASE("search at n=7 finds nothing for any feasible genus") {
    // one hexagon plus triangles needs 3F - 3 + 6 = 2E, which no integer
    // genus satisfies at n=7; the search must come back empty.
    for (int g : {1, 2}) {
        auto result = run_search({.n = 7, .target_genus = g});
        CHECK(result.sequences.empty());
    }
}

TEST_CASE("counters serialize with the summary fields") {
    SearchConfig cfg{.n = 9, .target_genus = 3};
    auto result = run_search(cfg);
    auto json = counters_to_json(cfg, result.counters);
    for (const char* key :
         {"\"first_row_candidates\"", "\"rows\"", "\"row6_survivors_by_triangles\"",
          "\"completions_by_triangles\"", "\"emitted\"", "\"incomplete\"", "\"max_triangles\""})
        CHECK_MESSAGE(json.find(key) != std::string::npos, key);
}
