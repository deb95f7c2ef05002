// Command-line front end. Talks to the kernel exclusively through the C API
// in prefkernel/capi.h; reports are written atomically (temp file + rename).

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "prefkernel/capi.h"

using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string scenario;
    std::string verifier;
    double epsilon = 0.0;
    int window = 0;
    int min_matches = 0;
    int horizon = 0;
    std::uint64_t seed = 0;
    std::string out_path;
    std::string format = "json";
};

std::size_t clique_cap_from_env() {
    const char* env = std::getenv("PREFKERNEL_CLIQUE_CAP");
    if (!env || !*env) return 0;  // 0 = library default
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') {
        std::cerr << "invalid PREFKERNEL_CLIQUE_CAP: " << env << "\n";
        std::exit(kExitUsage);
    }
    return std::size_t(v);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "cannot read spec file: " << path << "\n";
        std::exit(kExitUsage);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool looks_like_path(const std::string& s) {
    return s.find('/') != std::string::npos ||
           (s.size() > 5 && s.compare(s.size() - 5, 5, ".json") == 0);
}

// Builds the spec JSON the C API expects: either the file content or a
// {name, overrides...} object assembled from the flags.
std::string build_spec_json(const Options& opt) {
    if (looks_like_path(opt.scenario)) {
        // overrides on top of a spec file are not merged; keep file authoritative
        return read_file(opt.scenario);
    }
    json j;
    j["name"] = opt.scenario;
    if (opt.horizon > 0) j["horizon"] = opt.horizon;
    if (opt.seed != 0) j["seed"] = opt.seed;
    if (opt.epsilon > 0.0 || opt.window > 0 || opt.min_matches > 0) {
        if (!(opt.epsilon > 0.0 && opt.window > 0)) {
            std::cerr << "policy overrides need at least --epsilon and --window\n";
            std::exit(kExitUsage);
        }
        j["policy"] = {{"epsilon", opt.epsilon},
                       {"tail_window", opt.window},
                       {"min_matches", opt.min_matches > 0 ? opt.min_matches : 5}};
    }
    return j.dump();
}

void write_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            std::cerr << "cannot write: " << tmp << "\n";
            std::exit(kExitUsage);
        }
        out << content;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::cerr << "cannot rename " << tmp << " to " << path << "\n";
        std::exit(kExitUsage);
    }
}

int fail_from_status(pk_status status) {
    std::cerr << "error (" << pk_status_name(status) << "): " << pk_last_error() << "\n";
    return status == PK_ERR_UNKNOWN_SCENARIO || status == PK_ERR_INVALID_ARGUMENT ||
                   status == PK_ERR_PARSE
               ? kExitUsage
               : kExitMismatch;
}

int cmd_run(const Options& opt) {
    std::string spec = build_spec_json(opt);
    std::string verifier = opt.verifier;
    if (verifier.empty()) {
        // default to the scenario's canonical verifier from the catalog
        char* names_json = nullptr;
        if (pk_scenario_names(&names_json) != PK_OK) return kExitMismatch;
        auto names = json::parse(std::string(names_json));
        pk_string_free(names_json);
        for (const auto& entry : names)
            if (entry["name"] == opt.scenario) verifier = entry["verifier"];
        if (verifier.empty()) {
            std::cerr << "no verifier given and none declared for this scenario\n";
            return kExitUsage;
        }
    }

    std::size_t cap = clique_cap_from_env();
    char* report = nullptr;
    pk_status status = pk_run_scenario(spec.c_str(), verifier.c_str(), cap, &report);
    if (status != PK_OK) return fail_from_status(status);
    std::string report_text = report;
    pk_string_free(report);

    std::string output = report_text;
    if (opt.format == "csv") {
        char* csv = nullptr;
        status = pk_scenario_csv(spec.c_str(), cap, &csv);
        if (status != PK_OK) return fail_from_status(status);
        output = csv;
        pk_string_free(csv);
    }

    if (!opt.out_path.empty())
        write_atomic(opt.out_path, output);
    else
        std::cout << output << "\n";

    // exit code reflects whether the verdict matched the declared expectation
    auto parsed = json::parse(report_text);
    bool matches = parsed.value("matches_expected", false);
    std::string verdict = parsed.value("verdict", "?");
    std::cerr << opt.scenario << " / " << verifier << ": " << verdict
              << (matches ? " (as expected)" : " (MISMATCH)") << "\n";
    return matches ? kExitOk : kExitMismatch;
}

int cmd_suite(const Options& opt) {
    char* summary = nullptr;
    pk_status status = pk_run_suite(clique_cap_from_env(), opt.horizon, &summary);
    if (status != PK_OK) return fail_from_status(status);
    std::string text = summary;
    pk_string_free(summary);

    auto parsed = json::parse(text);
    std::cout << parsed.value("table", "");
    if (!opt.out_path.empty()) write_atomic(opt.out_path, text);
    return parsed.value("all_ok", false) ? kExitOk : kExitMismatch;
}

int cmd_list() {
    char* names = nullptr;
    if (pk_scenario_names(&names) != PK_OK) return kExitMismatch;
    std::cout << names << "\n";
    pk_string_free(names);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"incomplete-preference kernel: scenarios, verifiers, reports"};
    app.require_subcommand(1);
    Options opt;

    auto* run = app.add_subcommand("run", "run one scenario through a verifier");
    run->add_option("--scenario", opt.scenario, "catalog name or spec JSON path")->required();
    run->add_option("--verifier", opt.verifier,
                    "detect-limits | simple-max | general-max | equivalence | floor-check");
    run->add_option("--epsilon", opt.epsilon, "tolerance override")
        ->check(CLI::PositiveNumber);
    run->add_option("--window", opt.window, "tail window override")
        ->check(CLI::PositiveNumber);
    run->add_option("--min-matches", opt.min_matches, "subsequence threshold override")
        ->check(CLI::PositiveNumber);
    run->add_option("--horizon", opt.horizon, "horizon override")
        ->check(CLI::PositiveNumber);
    run->add_option("--seed", opt.seed, "seed override");
    run->add_option("--out", opt.out_path, "report path (written atomically)");
    run->add_option("--format", opt.format, "json (full report) or csv (per-term rows)")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* suite = app.add_subcommand("suite", "run the whole catalog plus differentials");
    suite->add_option("--out", opt.out_path, "summary JSON path");
    suite->add_option("--horizon", opt.horizon, "shorten every scenario to this horizon")
        ->check(CLI::PositiveNumber);

    auto* list = app.add_subcommand("list", "list catalog scenarios");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (run->parsed()) return cmd_run(opt);
    if (suite->parsed()) return cmd_suite(opt);
    if (list->parsed()) return cmd_list();
    return kExitUsage;
}
