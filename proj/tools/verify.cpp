#include "symp/checks.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

using namespace symp;
using nlohmann::json;

namespace {

json to_json(const CheckReport& r, bool timings) {
    json j;
    j["id"] = r.id;
    j["anchor"] = r.anchor;
    j["genus"] = r.genus;
    j["status"] = to_string(r.status);
    if (!r.note.empty()) j["note"] = r.note;
    j["witness"] = r.witness;
    j["vectors"] = r.vectors;
    if (timings) j["wall_time_s"] = r.seconds;
    return j;
}

void write_atomic(const std::string& path, const std::string& text) {
    std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << text;
        if (!out.flush()) throw std::runtime_error("cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

void print(const CheckReport& r) {
    std::string tag = to_string(r.status);
    for (auto& c : tag) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    std::printf("%-9s %-22s g=%d  %7.2fs  %s\n", tag.c_str(), r.id.c_str(), r.genus, r.seconds, r.anchor.c_str());
    for (const auto& [k, v] : r.witness) std::printf("          %s = %s\n", k.c_str(), v.c_str());
    if (!r.note.empty()) std::printf("          note: %s\n", r.note.c_str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks on degree-2 symplectic derivations and their trace operators"};
    int genus = 2;
    int max_genus = 4;
    bool all = false, timings = false, list = false;
    std::vector<std::string> checks;
    std::string json_path;
    std::uint64_t seed = 0;
    double max_minutes = 30;
    app.add_option("--genus", genus, "genus of the surface")->capture_default_str();
    app.add_option("--max-genus", max_genus, "largest accepted genus")->capture_default_str();
    app.add_flag("--all", all, "run every check");
    app.add_option("--check", checks, "check id (repeatable)");
    app.add_option("--json", json_path, "write a JSON certificate");
    app.add_option("--seed", seed, "seed for randomized checks")->capture_default_str();
    app.add_option("--max-minutes", max_minutes, "time budget; longer checks are skipped")->capture_default_str();
    app.add_flag("--timings", timings, "include wall times in the JSON");
    app.add_flag("--list", list, "list check ids");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (list) {
        for (const auto& c : check_catalog()) std::printf("%-22s %s\n", c.id.c_str(), c.anchor.c_str());
        return 0;
    }
    if (genus < 2 || genus > max_genus) {
        std::fprintf(stderr, "genus must be in [2, %d]\n", max_genus);
        return 2;
    }
    if (all) {
        checks.clear();
        for (const auto& c : check_catalog()) checks.push_back(c.id);
    }
    if (checks.empty()) {
        std::fprintf(stderr, "nothing to run: pass --all or --check <id>\n");
        return 2;
    }
    for (const auto& id : checks)
        if (!known_check(id)) {
            std::fprintf(stderr, "unknown check id: %s (see --list)\n", id.c_str());
            return 2;
        }

    CheckRunner runner(seed);
    const auto start = std::chrono::steady_clock::now();
    json out;
    out["version"] = 1;
    out["genus"] = genus;
    out["seed"] = std::to_string(seed);
    out["checks"] = json::array();
    bool failed = false;
    for (const auto& id : checks) {
        double used = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / 60;
        CheckReport r;
        if (estimated_minutes(id, genus) > max_minutes - used) {
            r.id = id;
            r.genus = genus;
            for (const auto& c : check_catalog())
                if (c.id == id) r.anchor = c.anchor;
            r.status = Status::Skipped;
            r.note = "budget";
        } else {
            r = runner.run(id, genus);
        }
        print(r);
        std::fflush(stdout);
        failed = failed || r.status == Status::Fail;
        out["checks"].push_back(to_json(r, timings));
    }
    if (!json_path.empty()) {
        try {
            write_atomic(json_path, out.dump(2) + "\n");
        } catch (const std::exception& e) {
            std::fprintf(stderr, "%s\n", e.what());
            return 1;
        }
    }
    return failed ? 1 : 0;
}
