#include "rotsys/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <ostream>
#include <thread>

#include "json.hpp"
#include "rotsys/facetrace.hpp"

namespace rotsys::search {

void SearchConfig::validate() const {
    if (n < 6 || n > kMaxN)
        throw std::invalid_argument("search supports 6 <= n <= " + std::to_string(kMaxN));
    if (target_genus < 0) throw std::invalid_argument("negative genus");
    if (max_triangles() < 0)
        throw std::invalid_argument("no room for a hexagon: max_triangles < 0");
    if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
    if (limit && *limit < 0) throw std::invalid_argument("negative limit");
}

const char* check_name(Check c) {
    switch (c) {
        case Check::convention: return "convention";
        case Check::opposite: return "opposite";
        case Check::face_count: return "face_count";
        case Check::edge_faces: return "edge_faces";
    }
    return "?";
}

// --- PartialState ------------------------------------------------------------

PartialState PartialState::initial(const SearchConfig& cfg) {
    cfg.validate();
    PartialState st;
    st.n_ = cfg.n;
    st.max_tri_ = cfg.max_triangles();
    // The hexagon face 1 -> 2 -> ... -> 6 owns its boundary directions and
    // gives each boundary edge its first face incidence.
    for (Vertex i = 1; i <= 6; ++i) {
        st.pair_owner_[pair_key(i, next6(i))] = kHexagonOwner;
        st.edge_cnt_[edge_key(i, next6(i))] = 1;
    }
    return st;
}

bool PartialState::try_assert(int owner, Vertex a, Vertex b, AssertRec& rec) {
    const int pk = pair_key(a, b);
    if (pair_owner_[pk]) return false;
    pair_owner_[pk] = static_cast<std::int8_t>(owner);
    rec.a = static_cast<std::uint8_t>(a);
    rec.b = static_cast<std::uint8_t>(b);
    rec.tri = 0;
    const std::uint16_t mask = static_cast<std::uint16_t>((1u << owner) | (1u << a) | (1u << b));
    if (!tri_seen_[mask]) {
        tri_seen_[mask] = true;
        tri_list_.push_back(mask);
        ++tri_count_;
        rec.tri = mask;
        const Vertex vs[3] = {static_cast<Vertex>(owner), a, b};
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (++edge_cnt_[edge_key(vs[i], vs[j])] == 3) ++over2_;
    }
    return true;
}

void PartialState::undo_assert(const AssertRec& rec) {
    pair_owner_[pair_key(rec.a, rec.b)] = 0;
    if (rec.tri) {
        tri_seen_[rec.tri] = false;
        tri_list_.pop_back();
        --tri_count_;
        Vertex vs[3];
        int k = 0;
        for (Vertex v = 1; v <= kMaxN; ++v)
            if (rec.tri & (1u << v)) vs[k++] = v;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (--edge_cnt_[edge_key(vs[i], vs[j])] == 2) --over2_;
    }
}

std::optional<Rejection> PartialState::apply_row(int i, const std::vector<Vertex>& row) {
    auto die = [&](Check c, std::string msg) -> std::optional<Rejection> {
        dead_ = true;
        death_ = {c, std::move(msg)};
        return death_;
    };
    if (dead_) return death_;
    if (i != filled_ + 1 || i < 1 || i > 6)
        throw std::logic_error("apply_row: rows must be filled 1..6 in order");
    const int len = n_ - 1;
    if (static_cast<int>(row.size()) != len)
        return die(Check::convention, "row " + std::to_string(i) + " must have " +
                                          std::to_string(len) + " entries");
    std::vector<bool> seen(n_ + 1, false);
    seen[i] = true;
    for (Vertex w : row) {
        if (w < 1 || w > n_ || seen[w])
            return die(Check::convention, "row " + std::to_string(i) +
                                              " is not a permutation of the remaining vertices");
        seen[w] = true;
    }
    if (row.front() != prev6(i) || row.back() != next6(i))
        return die(Check::convention, "row " + std::to_string(i) + " must run from " +
                                          std::to_string(prev6(i)) + " to " +
                                          std::to_string(next6(i)));
    if (i >= 2) {
        const Vertex chain = rows_[i - 1][len - 2];
        if (row[1] != chain)
            return die(Check::convention,
                       "row " + std::to_string(i) + " must continue with " +
                           std::to_string(chain) + " after the hexagon (got " +
                           std::to_string(row[1]) + ")");
    }
    // record the row first so rejected candidates still show their filling
    for (int k = 0; k < len; ++k) rows_[i][k] = static_cast<std::int8_t>(row[k]);
    filled_ = i;

    // check 1 over the row's non-wrap pairs; triangles and edge incidences
    // accumulate as we go, their bounds are judged afterwards
    for (int k = 0; k + 1 < len; ++k) {
        AssertRec rec;
        if (!try_assert(i, row[k], row[k + 1], rec))
            return die(Check::opposite, "ordered pair (" + std::to_string(row[k]) + ", " +
                                            std::to_string(row[k + 1]) + ") in row " +
                                            std::to_string(i) + " already asserted by row " +
                                            std::to_string(pair_owner(row[k], row[k + 1])));
    }
    if (tri_count_ > max_tri_)
        return die(Check::face_count, "row " + std::to_string(i) + " pushes mentioned faces to " +
                                          std::to_string(tri_count_) + " > " +
                                          std::to_string(max_tri_));
    if (over2_ > 0)
        return die(Check::edge_faces,
                   "row " + std::to_string(i) + " puts an edge into three faces");
    return std::nullopt;
}

std::vector<Vertex> PartialState::row(int i) const {
    if (i < 1 || i > filled_) throw std::out_of_range("row not filled");
    std::vector<Vertex> out(n_ - 1);
    for (int k = 0; k < n_ - 1; ++k) out[k] = rows_[i][k];
    return out;
}

PartialRotation PartialState::partial_rotation() const {
    PartialRotation pr;
    pr.n = n_;
    for (int i = 1; i <= filled_; ++i) pr.rows.push_back(row(i));
    return pr;
}

std::vector<std::array<Vertex, 3>> PartialState::triangles() const {
    std::vector<std::array<Vertex, 3>> out;
    out.reserve(tri_list_.size());
    for (std::uint16_t mask : tri_list_) {
        std::array<Vertex, 3> t{};
        int k = 0;
        for (Vertex v = 1; v <= kMaxN; ++v)
            if (mask & (1u << v)) t[k++] = v;
        out.push_back(t);
    }
    return out;
}

// --- row-1 candidates --------------------------------------------------------

std::vector<PartialState> first_row_candidates(const SearchConfig& cfg) {
    cfg.validate();
    std::vector<Vertex> interior{3, 4, 5};
    for (Vertex v : cfg.residual()) interior.push_back(v);
    std::sort(interior.begin(), interior.end());

    std::vector<PartialState> out;
    const PartialState seed = PartialState::initial(cfg);
    do {
        if (cfg.row1_increasing) {
            Vertex last_res = 0;
            bool ordered = true;
            for (Vertex v : interior)
                if (v >= 7) {
                    if (v < last_res) { ordered = false; break; }
                    last_res = v;
                }
            if (!ordered) continue;
        }
        std::vector<Vertex> row;
        row.reserve(cfg.n - 1);
        row.push_back(6);
        row.insert(row.end(), interior.begin(), interior.end());
        row.push_back(2);
        PartialState st = seed;
        st.apply_row(1, row);  // conflicts with the hexagon leave it dead
        out.push_back(std::move(st));
    } while (std::next_permutation(interior.begin(), interior.end()));
    return out;
}

ExtendOutcome extend_row(const PartialState& state, int i, const std::vector<Vertex>& interior) {
    ExtendOutcome out;
    if (i < 2 || i > 6) throw std::logic_error("extend_row handles rows 2..6");
    std::vector<Vertex> row;
    row.reserve(state.n() - 1);
    row.push_back(prev6(i));
    row.insert(row.end(), interior.begin(), interior.end());
    row.push_back(next6(i));
    PartialState next = state;
    if (auto rej = next.apply_row(i, row)) {
        out.rejection = *rej;
        return out;
    }
    out.accepted = true;
    out.state = std::move(next);
    return out;
}

// --- residual completion -----------------------------------------------------

namespace {

bool cyclically_adjacent(const std::vector<Vertex>& row, Vertex a, Vertex b) {
    const size_t m = row.size();
    for (size_t k = 0; k < m; ++k)
        if (row[k] == a && row[(k + 1) % m] == b) return true;
    return false;
}

}  // namespace

struct CompletionCtx {
    PartialState st;
    int target_genus;
    std::vector<Vertex> residual;
    std::vector<std::vector<Vertex>> residual_rows;  // by residual index, empty = unbuilt
    std::vector<RotationSystem> found;

    const std::vector<Vertex>* built_row(Vertex v, std::vector<std::vector<Vertex>>& scratch) {
        if (v <= 6) {
            scratch[v] = st.row(v);
            return &scratch[v];
        }
        const auto& r = residual_rows[v - 7];
        return r.empty() ? nullptr : &r;
    }

    // The cyclic order at j is the cycle of opposite edges of its triangles.
    std::optional<std::vector<Vertex>> link_cycle(Vertex j) {
        std::array<std::array<Vertex, 2>, kMaxN + 1> adj{};
        std::array<int, kMaxN + 1> deg{};
        for (std::uint16_t mask : st.tri_list_) {
            if (!(mask & (1u << j))) continue;
            Vertex a = 0, b = 0;
            for (Vertex v = 1; v <= kMaxN; ++v)
                if (v != j && (mask & (1u << v))) (a ? b : a) = v;
            if (deg[a] >= 2 || deg[b] >= 2) return std::nullopt;
            adj[a][deg[a]++] = b;
            adj[b][deg[b]++] = a;
        }
        for (Vertex v = 1; v <= st.n(); ++v)
            if (v != j && deg[v] != 2) return std::nullopt;
        std::vector<Vertex> cycle{1};
        Vertex prev = 1, cur = std::min(adj[1][0], adj[1][1]);
        while (cur != 1) {
            cycle.push_back(cur);
            const Vertex nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = nxt;
        }
        if (static_cast<int>(cycle.size()) != st.n() - 1) return std::nullopt;
        return cycle;
    }

    // A pair (u, w) in row j is the corner of triangle {j, u, w} traced as
    // j -> u -> w -> j, so a built row u must read ... w j ... and a built
    // row w must read ... j u ... for the trace to close the triangle.
    bool row_consistent(Vertex j, const std::vector<Vertex>& row,
                        std::vector<std::vector<Vertex>>& scratch) {
        const size_t m = row.size();
        for (size_t k = 0; k < m; ++k) {
            const Vertex u = row[k], w = row[(k + 1) % m];
            if (st.pair_owner(u, w)) return false;
            const std::uint16_t mask =
                static_cast<std::uint16_t>((1u << j) | (1u << u) | (1u << w));
            if (!st.tri_seen_[mask]) return false;
            if (const auto* ru = built_row(u, scratch); ru && !cyclically_adjacent(*ru, w, j))
                return false;
            if (const auto* rw = built_row(w, scratch); rw && !cyclically_adjacent(*rw, j, u))
                return false;
        }
        return true;
    }

    void assemble_and_verify() {
        std::vector<RotationRow> rows;
        for (Vertex v = 1; v <= 6; ++v) rows.push_back({v, st.row(v)});
        for (size_t k = 0; k < residual.size(); ++k)
            rows.push_back({residual[k], residual_rows[k]});
        RotationSystem rs = RotationSystem::build(rows);
        std::map<int, int> want{{3, st.max_triangles()}, {6, 1}};
        const EmbeddingReport rep = verify_embedding(rs, target_genus, want);
        if (rep.expectations_met() && rep.hexagon_distinct) found.push_back(std::move(rs));
    }

    void build_rows(size_t idx) {
        if (idx == residual.size()) {
            assemble_and_verify();
            return;
        }
        const Vertex j = residual[idx];
        auto cycle = link_cycle(j);
        if (!cycle) return;
        std::vector<Vertex> reversed{1};
        for (size_t k = cycle->size() - 1; k >= 1; --k) reversed.push_back((*cycle)[k]);
        std::vector<std::vector<Vertex>> scratch(7);
        for (const auto& row : {*cycle, reversed}) {
            if (!row_consistent(j, row, scratch)) continue;
            std::vector<PartialState::AssertRec> recs(row.size());
            bool ok = true;
            size_t done = 0;
            for (size_t k = 0; k < row.size() && ok; ++k) {
                ok = st.try_assert(j, row[k], row[(k + 1) % row.size()], recs[k]);
                if (ok) ++done;
            }
            if (ok) {
                residual_rows[idx] = row;
                build_rows(idx + 1);
                residual_rows[idx].clear();
            }
            while (done > 0) st.undo_assert(recs[--done]);
        }
    }
};

std::vector<RotationSystem> complete_residual(const PartialState& state, int target_genus) {
    if (state.dead() || state.filled() != 6)
        throw ValidationError("complete_residual needs a live state with rows 1..6 filled");

    CompletionCtx ctx{state, target_genus, {}, {}, {}};
    for (Vertex v = 7; v <= state.n(); ++v) ctx.residual.push_back(v);
    ctx.residual_rows.assign(ctx.residual.size(), {});

    const int d = state.max_triangles() - state.triangle_count();
    if (d < 0) return {};

    // Candidate extra faces live entirely among the residual vertices.
    std::vector<std::uint16_t> candidates;
    const auto& res = ctx.residual;
    for (size_t a = 0; a < res.size(); ++a)
        for (size_t b = a + 1; b < res.size(); ++b)
            for (size_t c = b + 1; c < res.size(); ++c)
                candidates.push_back(static_cast<std::uint16_t>(
                    (1u << res[a]) | (1u << res[b]) | (1u << res[c])));

    std::vector<RotationSystem> all;
    std::vector<size_t> pick(d);
    auto try_subset = [&](auto&& self, size_t from, int left) -> void {
        if (left == 0) {
            CompletionCtx branch = ctx;
            bool feasible = true;
            for (int t = 0; t < d && feasible; ++t) {
                const std::uint16_t mask = candidates[pick[t]];
                if (branch.st.tri_seen_[mask]) { feasible = false; break; }
                branch.st.tri_seen_[mask] = true;
                branch.st.tri_list_.push_back(mask);
                ++branch.st.tri_count_;
                Vertex vs[3];
                int k = 0;
                for (Vertex v = 1; v <= kMaxN; ++v)
                    if (mask & (1u << v)) vs[k++] = v;
                for (int i = 0; i < 3; ++i)
                    for (int jj = i + 1; jj < 3; ++jj)
                        if (++branch.st.edge_cnt_[PartialState::edge_key(vs[i], vs[jj])] == 3)
                            feasible = false;
            }
            if (feasible) {
                branch.build_rows(0);
                for (auto& rs : branch.found) all.push_back(std::move(rs));
            }
            return;
        }
        for (size_t i = from; i + left <= candidates.size(); ++i) {
            pick[d - left] = i;
            self(self, i + 1, left - 1);
        }
    };
    try_subset(try_subset, 0, d);

    std::sort(all.begin(), all.end());
    return all;
}

// --- the enumeration engine --------------------------------------------------

void StageCounters::merge(const StageCounters& other) {
    first_row_candidates += other.first_row_candidates;
    for (int i = 2; i <= 6; ++i) {
        rows[i].pass_opposite += other.rows[i].pass_opposite;
        rows[i].pass_face_count += other.rows[i].pass_face_count;
        rows[i].pass_edge_faces += other.rows[i].pass_edge_faces;
    }
    for (const auto& [k, v] : other.row6_by_triangles) row6_by_triangles[k] += v;
    for (const auto& [k, v] : other.completions_by_triangles) completions_by_triangles[k] += v;
    emitted += other.emitted;
    incomplete = incomplete || other.incomplete;
}

// Depth-first filling of rows 2..6 for one row-1 candidate.  Within a row,
// permutations are pruned on the pair check alone; the triangle budget and
// edge incidences are judged when the row completes, so the per-row counters
// mean "arrangements of the first i rows passing checks 1 / 1-2 / 1-3".
class Enumerator {
public:
    Enumerator(const SearchConfig& cfg, PartialState st, std::atomic<bool>* stop,
               std::atomic<long>* emitted_total)
        : cfg_(cfg), st_(std::move(st)), stop_(stop), emitted_total_(emitted_total) {}

    void run() {
        len_ = st_.n() - 1;
        dfs_row(2);
    }

    StageCounters counters;
    std::vector<RotationSystem> sequences;

private:
    bool stopped() const { return stop_ && stop_->load(std::memory_order_relaxed); }

    void dfs_row(int i) {
        if (stopped()) return;
        st_.rows_[i][0] = static_cast<std::int8_t>(prev6(i));
        if (cfg_.enforce_chain) {
            const Vertex chain = st_.rows_[i - 1][len_ - 2];
            if (chain == next6(i)) return;
            PartialState::AssertRec entry;
            const bool ok = st_.try_assert(i, prev6(i), chain, entry);
            if (!ok && cfg_.prune_checks) return;
            if (!ok) ++dup_pairs_;
            st_.rows_[i][1] = static_cast<std::int8_t>(chain);
            free_count_[i] = 0;
            for (Vertex v = 1; v <= st_.n(); ++v)
                if (v != i && v != prev6(i) && v != next6(i) && v != chain)
                    free_[i][free_count_[i]++] = v;
            place(i, 2, 0);
            if (ok)
                st_.undo_assert(entry);
            else
                --dup_pairs_;
        } else {
            free_count_[i] = 0;
            for (Vertex v = 1; v <= st_.n(); ++v)
                if (v != i && v != prev6(i) && v != next6(i))
                    free_[i][free_count_[i]++] = v;
            place(i, 1, 0);
        }
    }

    void place(int i, int pos, unsigned used) {
        if (stopped()) return;
        if (pos == len_ - 1) {
            close_row(i);
            return;
        }
        const Vertex prev = st_.rows_[i][pos - 1];
        for (int k = 0; k < free_count_[i]; ++k) {
            if (used & (1u << k)) continue;
            const Vertex e = free_[i][k];
            PartialState::AssertRec rec;
            const bool ok = st_.try_assert(i, prev, e, rec);
            if (!ok && cfg_.prune_checks) continue;
            if (!ok) ++dup_pairs_;
            st_.rows_[i][pos] = static_cast<std::int8_t>(e);
            place(i, pos + 1, used | (1u << k));
            if (ok)
                st_.undo_assert(rec);
            else
                --dup_pairs_;
        }
    }

    void close_row(int i) {
        PartialState::AssertRec rec;
        const bool ok = st_.try_assert(i, st_.rows_[i][len_ - 2], next6(i), rec);
        if (!ok && cfg_.prune_checks) return;
        st_.rows_[i][len_ - 1] = static_cast<std::int8_t>(next6(i));
        const bool pass1 = ok && dup_pairs_ == 0;
        const bool pass2 = st_.tri_count_ <= st_.max_tri_;
        const bool pass3 = st_.over2_ == 0;
        if (pass1) {
            ++counters.rows[i].pass_opposite;
            if (pass2) {
                ++counters.rows[i].pass_face_count;
                if (pass3) ++counters.rows[i].pass_edge_faces;
            }
        }
        if ((pass1 && pass2 && pass3) || !cfg_.prune_checks) {
            if (!ok) ++dup_pairs_;
            st_.filled_ = i;
            if (i < 6)
                dfs_row(i + 1);
            else
                complete(pass1 && pass2 && pass3);
            st_.filled_ = i - 1;
            if (!ok) --dup_pairs_;
        }
        if (ok) st_.undo_assert(rec);
    }

    void complete(bool counted_survivor) {
        if (counted_survivor) {
            ++counters.row6_by_triangles[st_.tri_count_];
            if (cfg_.survivor_hook) cfg_.survivor_hook(st_);
        }
        // States with a same-direction duplicate, an over-busy edge or too
        // many triangles cannot trace to the target profile, so skipping
        // them loses nothing even with pruning off.
        if (dup_pairs_ > 0 || st_.over2_ > 0) return;
        const int d = st_.max_tri_ - st_.tri_count_;
        const int r = st_.n() - 6;
        const int max_extra = r >= 3 ? r * (r - 1) * (r - 2) / 6 : 0;
        if (d < 0 || d > max_extra) return;
        auto batch = complete_residual(st_, cfg_.target_genus);
        for (auto& rs : batch) {
            if (cfg_.limit && emitted_total_ &&
                emitted_total_->load(std::memory_order_relaxed) >= *cfg_.limit)
                break;
            ++counters.completions_by_triangles[st_.tri_count_];
            ++counters.emitted;
            sequences.push_back(std::move(rs));
            if (emitted_total_) {
                const long total = emitted_total_->fetch_add(1) + 1;
                if (cfg_.limit && total >= *cfg_.limit && stop_) stop_->store(true);
            }
        }
    }

    const SearchConfig& cfg_;
    PartialState st_;
    std::atomic<bool>* stop_;
    std::atomic<long>* emitted_total_;
    int len_ = 0;
    int dup_pairs_ = 0;  // unregistered duplicate pairs on the current path
    std::array<std::array<Vertex, kMaxN>, 7> free_{};
    std::array<int, 7> free_count_{};
};

SearchResult run_search(const SearchConfig& cfg) {
    cfg.validate();
    auto candidates = first_row_candidates(cfg);

    SearchResult result;

    // A limit forces sequential task order so "the first L sequences" is a
    // deterministic notion; otherwise tasks split across jobs and merge in
    // task order, making the output independent of the worker count.
    const int jobs = cfg.limit ? 1 : std::max(1, cfg.jobs);

    struct TaskOut {
        StageCounters counters;
        std::vector<RotationSystem> sequences;
    };
    std::vector<TaskOut> outs(candidates.size());
    std::atomic<size_t> next_task{0};
    std::atomic<bool> stop{false};
    std::atomic<long> emitted_total{0};
    std::atomic<long> tasks_done{0};
    std::mutex progress_mutex;

    auto worker = [&]() {
        for (;;) {
            const size_t t = next_task.fetch_add(1);
            if (t >= candidates.size()) break;
            if (stop.load(std::memory_order_relaxed)) break;
            if (!candidates[t].dead()) {
                Enumerator e(cfg, candidates[t], &stop, &emitted_total);
                e.run();
                outs[t].counters = std::move(e.counters);
                outs[t].sequences = std::move(e.sequences);
            }
            const long done = tasks_done.fetch_add(1) + 1;
            if (cfg.progress) {
                std::lock_guard<std::mutex> lock(progress_mutex);
                *cfg.progress << "[search] row-1 candidate " << done << "/" << candidates.size()
                              << " done, sequences so far: " << emitted_total.load() << "\n";
            }
        }
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (auto& out : outs) {
        result.counters.merge(out.counters);
        for (auto& rs : out.sequences) result.sequences.push_back(std::move(rs));
    }
    result.counters.first_row_candidates = static_cast<long>(candidates.size());
    if (stop.load()) result.counters.incomplete = true;
    std::sort(result.sequences.begin(), result.sequences.end());
    if (cfg.limit && static_cast<long>(result.sequences.size()) > *cfg.limit)
        result.sequences.resize(*cfg.limit);
    return result;
}

std::string counters_to_json(const SearchConfig& cfg, const StageCounters& c) {
    nlohmann::json j;
    j["n"] = cfg.n;
    j["genus"] = cfg.target_genus;
    j["max_triangles"] = cfg.max_triangles();
    j["first_row_candidates"] = c.first_row_candidates;
    nlohmann::json rows = nlohmann::json::object();
    for (int i = 2; i <= 6; ++i) {
        rows[std::to_string(i)] = {
            {"pass_opposite", c.rows[i].pass_opposite},
            {"pass_face_count", c.rows[i].pass_face_count},
            {"pass_edge_faces", c.rows[i].pass_edge_faces},
        };
    }
    j["rows"] = rows;
    nlohmann::json surv = nlohmann::json::object();
    for (const auto& [k, v] : c.row6_by_triangles) surv[std::to_string(k)] = v;
    j["row6_survivors_by_triangles"] = surv;
    nlohmann::json comp = nlohmann::json::object();
    for (const auto& [k, v] : c.completions_by_triangles) comp[std::to_string(k)] = v;
    j["completions_by_triangles"] = comp;
    j["emitted"] = c.emitted;
    j["incomplete"] = c.incomplete;
    return j.dump(2) + "\n";
}

}  // namespace rotsys::search
