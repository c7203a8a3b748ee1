#include "rotsys/core.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace rotsys {

RotationSystem RotationSystem::build(const std::vector<RotationRow>& rows) {
    const int n = static_cast<int>(rows.size());
    if (n < 3) throw ValidationError("a rotation system needs at least 3 vertices");

    RotationSystem rs;
    rs.n_ = n;
    rs.rows_.assign(n, {});
    std::vector<bool> have(n + 1, false);
    for (const auto& r : rows) {
        if (r.vertex < 1 || r.vertex > n)
            throw ValidationError("row vertex " + std::to_string(r.vertex) +
                                  " out of range 1.." + std::to_string(n));
        if (have[r.vertex])
            throw ValidationError("duplicate row for vertex " + std::to_string(r.vertex));
        have[r.vertex] = true;
        std::vector<bool> seen(n + 1, false);
        for (Vertex w : r.neighbors) {
            if (w < 1 || w > n)
                throw ValidationError("row " + std::to_string(r.vertex) + ": entry " +
                                      std::to_string(w) + " out of range");
            if (w == r.vertex)
                throw ValidationError("row " + std::to_string(r.vertex) + ": self-loop entry");
            if (seen[w])
                throw ValidationError("row " + std::to_string(r.vertex) + ": repeated entry " +
                                      std::to_string(w));
            seen[w] = true;
        }
        rs.rows_[r.vertex - 1] = r.neighbors;
    }
    // symmetric support (automatic for complete rows; checked anyway)
    for (Vertex v = 1; v <= n; ++v) {
        for (Vertex w : rs.rows_[v - 1]) {
            const auto& rw = rs.rows_[w - 1];
            if (std::find(rw.begin(), rw.end(), v) == rw.end())
                throw ValidationError("asymmetric support: " + std::to_string(w) +
                                      " in row " + std::to_string(v) + " but not vice versa");
        }
    }
    return rs;
}

int RotationSystem::edge_count() const {
    int total = 0;
    for (const auto& r : rows_) total += static_cast<int>(r.size());
    return total / 2;
}

bool RotationSystem::is_complete() const {
    for (const auto& r : rows_)
        if (static_cast<int>(r.size()) != n_ - 1) return false;
    return true;
}

RotationSystem RotationSystem::mirrored() const {
    RotationSystem out = *this;
    for (auto& r : out.rows_) std::reverse(r.begin(), r.end());
    return out;
}

RotationSystem RotationSystem::relabeled(const std::vector<Vertex>& perm) const {
    if (static_cast<int>(perm.size()) != n_ + 1)
        throw ValidationError("relabel permutation must have size n+1 (1-based)");
    RotationSystem out;
    out.n_ = n_;
    out.rows_.assign(n_, {});
    for (Vertex v = 1; v <= n_; ++v) {
        std::vector<Vertex> nr;
        nr.reserve(rows_[v - 1].size());
        for (Vertex w : rows_[v - 1]) nr.push_back(perm[w]);
        out.rows_[perm[v] - 1] = std::move(nr);
    }
    return out;
}

void PartialRotation::validate() const {
    const int k = filled();
    if (k < 1 || k > 6)
        throw ValidationError("partial rotation must hold rows 1..k with k <= 6");
    if (n < 7) throw ValidationError("hexagon-first partial rotations need n >= 7");
    for (int i = 1; i <= k; ++i) {
        const auto& r = rows[i - 1];
        if (static_cast<int>(r.size()) != n - 1)
            throw ValidationError("row " + std::to_string(i) + " must list all " +
                                  std::to_string(n - 1) + " other vertices");
        std::vector<bool> seen(n + 1, false);
        seen[i] = true;
        for (Vertex w : r) {
            if (w < 1 || w > n || seen[w])
                throw ValidationError("row " + std::to_string(i) +
                                      " is not a permutation of the remaining vertices");
            seen[w] = true;
        }
        if (r.front() != prev6(i) || r.back() != next6(i))
            throw ValidationError("row " + std::to_string(i) + " must start with " +
                                  std::to_string(prev6(i)) + " and end with " +
                                  std::to_string(next6(i)));
    }
}

std::vector<std::pair<Vertex, Vertex>> cyclic_pairs(const std::vector<Vertex>& row) {
    std::vector<std::pair<Vertex, Vertex>> out;
    const size_t m = row.size();
    out.reserve(m);
    for (size_t i = 0; i < m; ++i) out.emplace_back(row[i], row[(i + 1) % m]);
    return out;
}

RotationSystem build_rotation_system(const std::vector<RotationRow>& rows) {
    return RotationSystem::build(rows);
}

// --- parsing ----------------------------------------------------------------

namespace {

struct RawRow {
    int line;
    Vertex vertex;
    std::vector<Vertex> neighbors;
};

std::vector<RawRow> parse_text_rows(const std::string& content) {
    std::vector<RawRow> raw;
    std::istringstream in(content);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError(lineno, static_cast<int>(pos) + 1, "expected 'vertex: neighbors'");
        RawRow row;
        row.line = lineno;
        try {
            size_t used = 0;
            row.vertex = std::stoi(line.substr(pos, colon - pos), &used);
        } catch (const std::exception&) {
            throw ParseError(lineno, static_cast<int>(pos) + 1, "bad vertex label");
        }
        std::istringstream rest(line.substr(colon + 1));
        std::string tok;
        while (rest >> tok) {
            try {
                row.neighbors.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw ParseError(lineno, static_cast<int>(colon) + 2, "bad neighbor '" + tok + "'");
            }
        }
        if (row.neighbors.empty())
            throw ParseError(lineno, static_cast<int>(colon) + 1, "empty neighbor list");
        raw.push_back(std::move(row));
    }
    if (raw.empty()) throw ParseError(1, 1, "no rotation rows found");
    return raw;
}

ParsedRotation from_raw(std::vector<RawRow> raw) {
    // A file holding exactly rows 1..k (k <= 6), each of uniform length n-1
    // with n-1 > k, is a hexagon-first partial; otherwise a full system.
    const size_t width = raw[0].neighbors.size();
    bool uniform = true;
    for (const auto& r : raw) uniform = uniform && r.neighbors.size() == width;
    const int n_if_partial = static_cast<int>(width) + 1;

    bool looks_partial = uniform && raw.size() <= 6 &&
                         static_cast<int>(raw.size()) < n_if_partial;
    if (looks_partial) {
        std::vector<std::vector<Vertex>> rows(raw.size());
        for (const auto& r : raw) {
            if (r.vertex < 1 || r.vertex > static_cast<int>(raw.size()))
                throw ParseError(r.line, 1, "partial file must hold rows 1..k in order");
            rows[r.vertex - 1] = r.neighbors;
        }
        ParsedRotation out;
        out.partial = true;
        out.prefix.n = n_if_partial;
        out.prefix.rows = std::move(rows);
        try {
            out.prefix.validate();
        } catch (const ValidationError& e) {
            throw ParseError(raw[0].line, 1, e.what());
        }
        return out;
    }

    std::vector<RotationRow> rows;
    rows.reserve(raw.size());
    for (auto& r : raw) rows.push_back({r.vertex, std::move(r.neighbors)});
    ParsedRotation out;
    try {
        out.system = RotationSystem::build(rows);
    } catch (const ValidationError& e) {
        throw ParseError(raw[0].line, 1, e.what());
    }
    return out;
}

ParsedRotation parse_json_rotation(const std::string& content) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(content);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(1, static_cast<int>(e.byte), e.what());
    }
    if (!j.contains("n") || !j.contains("rows"))
        throw ParseError(1, 1, "JSON rotation needs fields 'n' and 'rows'");
    std::vector<RawRow> raw;
    int v = 1;
    for (const auto& arr : j["rows"]) {
        RawRow r;
        r.line = 1;
        r.vertex = v++;
        for (const auto& x : arr) r.neighbors.push_back(x.get<int>());
        raw.push_back(std::move(r));
    }
    const int n = j["n"].get<int>();
    if (static_cast<int>(raw.size()) != n && !(raw.size() <= 6 && n >= 7))
        throw ParseError(1, 1, "JSON 'rows' count inconsistent with 'n'");
    auto out = from_raw(std::move(raw));
    const int got_n = out.partial ? out.prefix.n : out.system.n();
    if (got_n != n) throw ParseError(1, 1, "JSON 'n' inconsistent with row width");
    return out;
}

}  // namespace

ParsedRotation parse_rotation(const std::string& content) {
    for (char c : content) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') return parse_json_rotation(content);
        break;
    }
    return from_raw(parse_text_rows(content));
}

ParsedRotation parse_rotation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_rotation(buf.str());
}

std::string to_text(const RotationSystem& rs) {
    std::ostringstream out;
    for (Vertex v = 1; v <= rs.n(); ++v) {
        out << v << ':';
        for (Vertex w : rs.row(v)) out << ' ' << w;
        out << '\n';
    }
    return out.str();
}

std::string to_text(const PartialRotation& pr) {
    std::ostringstream out;
    for (int i = 1; i <= pr.filled(); ++i) {
        out << i << ':';
        for (Vertex w : pr.rows[i - 1]) out << ' ' << w;
        out << '\n';
    }
    return out.str();
}

std::string to_json_string(const RotationSystem& rs) {
    nlohmann::json j;
    j["n"] = rs.n();
    j["rows"] = rs.rows();
    return j.dump(2) + "\n";
}

}  // namespace rotsys
