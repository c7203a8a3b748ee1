#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rotsys/bounds.hpp"
#include "rotsys/canon.hpp"
#include "rotsys/core.hpp"
#include "rotsys/facetrace.hpp"
#include "rotsys/insertion.hpp"
#include "rotsys/search.hpp"

namespace fs = std::filesystem;
using namespace rotsys;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

std::map<int, int> parse_profile(const std::string& text) {
    // "3:22,6:1" -> {3: 22, 6: 1}
    std::map<int, int> profile;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("profile entries look like SIZE:COUNT");
        profile[std::stoi(item.substr(0, colon))] = std::stoi(item.substr(colon + 1));
    }
    return profile;
}

std::string profile_string(const std::map<int, int>& profile) {
    std::string out;
    for (const auto& [size, count] : profile) {
        if (!out.empty()) out += ", ";
        out += std::to_string(size) + ":" + std::to_string(count);
    }
    return "{" + out + "}";
}

RotationSystem load_full(const std::string& path) {
    auto parsed = parse_rotation_file(path);
    if (parsed.partial)
        throw ValidationError(path + " holds a partial rotation (rows 1.." +
                              std::to_string(parsed.prefix.filled()) +
                              "); a full system is needed here");
    return parsed.system;
}

int default_jobs() {
    if (const char* env = std::getenv("ROTSYS_JOBS")) {
        const int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 1;
}

int cmd_verify(const std::string& file, std::optional<int> genus,
               const std::string& profile_text, bool json, bool with_faces) {
    const RotationSystem rs = load_full(file);
    std::optional<std::map<int, int>> profile;
    if (!profile_text.empty()) profile = parse_profile(profile_text);
    const EmbeddingReport rep = verify_embedding(rs, genus, profile);
    FaceSet faces;
    if (with_faces) faces = trace_faces(rs);
    if (json) {
        std::cout << report_to_json(rep, with_faces ? &faces : nullptr);
    } else {
        std::cout << "V=" << rep.invariants.v << " E=" << rep.invariants.e
                  << " F=" << rep.invariants.f << " euler=" << rep.invariants.euler
                  << " genus=" << rep.invariants.genus << "\n"
                  << "profile " << profile_string(rep.profile) << "\n"
                  << "hexagon_distinct=" << (rep.hexagon_distinct ? "yes" : "no")
                  << " link_ok=" << (rep.link_ok ? "yes" : "no") << "\n";
        if (genus)
            std::cout << "expected genus " << *genus << ": "
                      << (rep.genus_ok ? "ok" : "MISMATCH") << "\n";
        if (profile)
            std::cout << "expected profile " << profile_string(*profile) << ": "
                      << (rep.profile_ok ? "ok" : "MISMATCH") << "\n";
    }
    return rep.expectations_met() ? kExitOk : kExitVerification;
}

int cmd_trace(const std::string& file, bool json) {
    const RotationSystem rs = load_full(file);
    const FaceSet faces = trace_faces(rs);
    if (json) {
        const EmbeddingReport rep = verify_embedding(rs);
        std::cout << report_to_json(rep, &faces);
        return kExitOk;
    }
    for (size_t i = 0; i < faces.faces.size(); ++i) {
        std::cout << i << ": (";
        const auto& walk = faces.faces[i].boundary;
        for (size_t k = 0; k < walk.size(); ++k)
            std::cout << (k ? " " : "") << walk[k].from;
        std::cout << ")\n";
    }
    std::cout << "faces=" << faces.faces.size() << " profile "
              << profile_string(faces.profile) << "\n";
    return kExitOk;
}

int cmd_complete(const std::string& file, std::optional<int> n_opt,
                 std::optional<int> genus_opt) {
    auto parsed = parse_rotation_file(file);
    if (!parsed.partial || parsed.prefix.filled() != 6)
        throw ValidationError(file + " must hold exactly rows 1..6");
    const PartialRotation& pr = parsed.prefix;
    if (n_opt && *n_opt != pr.n)
        throw ValidationError("--n " + std::to_string(*n_opt) + " disagrees with the file (n=" +
                              std::to_string(pr.n) + ")");

    int genus;
    if (genus_opt) {
        genus = *genus_opt;
    } else {
        // one hexagon + triangles forces F = (2E - 6)/3 + 1 and with it the genus
        const int e = pr.n * (pr.n - 1) / 2;
        if ((2 * e - 6) % 3 != 0)
            throw ValidationError("no hexagon-plus-triangles profile exists for n=" +
                                  std::to_string(pr.n) + "; pass --genus explicitly");
        const int f = (2 * e - 6) / 3 + 1;
        const int euler = pr.n - e + f;
        if (euler % 2 != 0)
            throw ValidationError("no orientable hexagon-plus-triangles embedding for n=" +
                                  std::to_string(pr.n) + "; pass --genus explicitly");
        genus = (2 - euler) / 2;
    }

    search::SearchConfig cfg;
    cfg.n = pr.n;
    cfg.target_genus = genus;
    auto state = search::PartialState::initial(cfg);
    for (int i = 1; i <= 6; ++i) {
        if (auto rej = state.apply_row(i, pr.rows[i - 1])) {
            std::cerr << "row " << i << " fails the " << search::check_name(rej->check)
                      << " check: " << rej->detail << "\n";
            return kExitVerification;
        }
    }
    const auto completions = search::complete_residual(state, genus);
    std::cerr << "completions: " << completions.size() << "\n";
    for (size_t i = 0; i < completions.size(); ++i) {
        if (i) std::cout << "\n";
        std::cout << "# completion " << (i + 1) << " of " << completions.size() << "\n"
                  << to_text(completions[i]);
    }
    return completions.empty() ? kExitVerification : kExitOk;
}

int cmd_search(int n, int genus, int jobs, long limit_arg, std::string out_dir, bool json,
               bool show_progress) {
    search::SearchConfig cfg;
    cfg.n = n;
    cfg.target_genus = genus;
    cfg.jobs = jobs;
    if (limit_arg >= 0) cfg.limit = limit_arg;
    if (show_progress) cfg.progress = &std::cerr;

    if (out_dir.empty())
        out_dir = "search-n" + std::to_string(n) + "-g" + std::to_string(genus);
    fs::create_directories(out_dir);

    const auto result = search::run_search(cfg);

    for (size_t i = 0; i < result.sequences.size(); ++i) {
        std::ostringstream name;
        name << "seq_" << (i < 99 ? (i < 9 ? "00" : "0") : "") << (i + 1) << ".txt";
        std::ofstream out(fs::path(out_dir) / name.str());
        out << to_text(result.sequences[i]);
    }
    const std::string summary = search::counters_to_json(cfg, result.counters);
    {
        std::ofstream out(fs::path(out_dir) / "summary.json");
        out << summary;
    }
    if (json) {
        std::cout << summary;
    } else {
        std::cout << "sequences: " << result.sequences.size() << " (written to " << out_dir
                  << ")\n";
        for (const auto& [k, v] : result.counters.completions_by_triangles)
            std::cout << "  row-6 states with " << k << " triangles completed: " << v << "\n";
        if (result.counters.incomplete) std::cout << "  search stopped at the limit\n";
    }
    return kExitOk;
}

int cmd_classify(const std::vector<std::string>& files, bool no_reflection, bool json) {
    std::vector<RotationSystem> systems;
    systems.reserve(files.size());
    for (const auto& f : files) systems.push_back(load_full(f));
    const auto classes = canon::classify(systems, !no_reflection);
    if (json) {
        std::cout << canon::classes_to_json(classes, files);
    } else {
        std::cout << classes.size() << " isomorphism class" << (classes.size() == 1 ? "" : "es")
                  << "\n";
        for (size_t i = 0; i < classes.size(); ++i) {
            std::cout << "class " << (i + 1) << " (size " << classes[i].size() << "):";
            for (int m : classes[i].members) std::cout << " " << files[m];
            std::cout << "\n";
        }
    }
    return kExitOk;
}

int cmd_insert(const std::string& file, int face_index, bool best, bool json) {
    const RotationSystem rs = load_full(file);
    const insertion::InsertionPlan plan =
        best ? insertion::best_insertion(rs) : insertion::plan_insertion(rs, face_index);
    if (json) {
        std::cout << insertion::plan_to_json(plan);
    } else {
        std::cout << "face " << plan.face_index << " (";
        for (size_t k = 0; k < plan.face.boundary.size(); ++k)
            std::cout << (k ? " " : "") << plan.face.boundary[k].from;
        std::cout << ")\n"
                  << (plan.certified ? "certified" : "heuristic (" + plan.uncertified_reason + ")")
                  << " crossing bound: " << plan.upper_bound << "\n";
        for (const auto& [v, e] : plan.assignment)
            std::cout << "  vertex " << v << " crosses edge {" << e.from << ", " << e.to
                      << "}\n";
    }
    return plan.certified ? kExitOk : kExitVerification;
}

int cmd_bounds(std::optional<int> n, std::optional<int> genus, bool table, bool json) {
    if (table) {
        if (json)
            std::cout << bounds::ranges_to_json();
        else
            std::cout << bounds::render_table();
        return kExitOk;
    }
    if (!n || !genus) throw std::invalid_argument("pass --table or both --n and --genus");
    const auto range = bounds::known_range(*n, *genus);
    if (json) {
        nlohmann::json j;
        j["n"] = range.n;
        j["g"] = range.g;
        j["cell"] = range.cell();
        j["lower"] = range.lower;
        j["upper"] = range.upper;
        j["lower_source"] = range.lower_source;
        j["upper_source"] = range.upper_source;
        j["partial"] = range.kind == bounds::CellKind::partial;
        if (!range.note.empty()) j["note"] = range.note;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "cr_" << range.g << "(K_" << range.n << ") in " << range.cell() << "\n"
                  << "  lower: " << range.lower_source << "\n"
                  << "  upper: " << range.upper_source << "\n";
        if (!range.note.empty()) std::cout << "  note: " << range.note << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rotation-system embeddings of complete graphs: verification, search,\n"
                 "classification, star insertion and crossing-number bounds"};
    app.require_subcommand(1);

    std::string v_file, v_profile;
    int v_genus = -1;
    bool v_json = false, v_faces = false;
    auto* verify = app.add_subcommand("verify", "trace a rotation file and check expectations");
    verify->add_option("file", v_file)->required();
    verify->add_option("--genus", v_genus, "expected genus");
    verify->add_option("--profile", v_profile, "expected face profile, e.g. 3:22,6:1");
    verify->add_flag("--json", v_json);
    verify->add_flag("--faces", v_faces, "include face walks in the report");

    std::string t_file;
    bool t_json = false;
    auto* trace = app.add_subcommand("trace", "print the face walks of an embedding");
    trace->add_option("file", t_file)->required();
    trace->add_flag("--json", t_json);

    std::string c_file;
    int c_n = -1, c_genus = -1;
    auto* complete = app.add_subcommand("complete", "extend rows 1..6 to full embeddings");
    complete->add_option("file", c_file)->required();
    complete->add_option("--n", c_n, "cross-check the number of vertices");
    complete->add_option("--genus", c_genus, "target genus (default: forced by the profile)");

    int s_n = 9, s_genus = 3, s_jobs = default_jobs();
    long s_limit = -1;
    std::string s_out;
    bool s_json = false, s_progress = false;
    auto* search_cmd = app.add_subcommand("search", "enumerate hexagon-bearing embeddings");
    search_cmd->add_option("--n", s_n)->required();
    search_cmd->add_option("--genus", s_genus)->required();
    search_cmd->add_option("--jobs", s_jobs, "worker threads (env ROTSYS_JOBS)");
    search_cmd->add_option("--limit", s_limit, "stop after this many sequences");
    search_cmd->add_option("--out", s_out, "output directory");
    search_cmd->add_flag("--json", s_json);
    search_cmd->add_flag("--progress", s_progress);

    std::vector<std::string> y_files;
    bool y_norefl = false, y_json = false;
    auto* classify = app.add_subcommand("classify", "group embeddings into isomorphism classes");
    classify->add_option("files", y_files)->required()->expected(-1);
    classify->add_flag("--no-reflection", y_norefl, "orientation-preserving maps only");
    classify->add_flag("--json", y_json);

    std::string i_file;
    int i_face = -1;
    bool i_best = false, i_json = false;
    auto* insert = app.add_subcommand("insert", "route a new vertex out of a face");
    insert->add_option("file", i_file)->required();
    insert->add_option("--face", i_face, "face index as printed by trace");
    insert->add_flag("--best", i_best, "scan all faces for the best certified bound");
    insert->add_flag("--json", i_json);

    int b_n = -1, b_genus = -1;
    bool b_table = false, b_json = false;
    auto* bounds_cmd = app.add_subcommand("bounds", "crossing-number ranges cr_g(K_n)");
    bounds_cmd->add_option("--n", b_n);
    bounds_cmd->add_option("--genus", b_genus);
    bounds_cmd->add_flag("--table", b_table, "render the full 8<=n<=11 grid");
    bounds_cmd->add_flag("--json", b_json);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed())
            return cmd_verify(v_file, v_genus >= 0 ? std::optional<int>(v_genus) : std::nullopt,
                              v_profile, v_json, v_faces);
        if (trace->parsed()) return cmd_trace(t_file, t_json);
        if (complete->parsed())
            return cmd_complete(c_file, c_n >= 0 ? std::optional<int>(c_n) : std::nullopt,
                                c_genus >= 0 ? std::optional<int>(c_genus) : std::nullopt);
        if (search_cmd->parsed())
            return cmd_search(s_n, s_genus, s_jobs, s_limit, s_out, s_json, s_progress);
        if (classify->parsed()) return cmd_classify(y_files, y_norefl, y_json);
        if (insert->parsed()) {
            if (i_best == (i_face >= 0))
                throw std::invalid_argument("pass exactly one of --face or --best");
            return cmd_insert(i_file, i_face, i_best, i_json);
        }
        if (bounds_cmd->parsed())
            return cmd_bounds(b_n >= 0 ? std::optional<int>(b_n) : std::nullopt,
                              b_genus >= 0 ? std::optional<int>(b_genus) : std::nullopt, b_table,
                              b_json);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
