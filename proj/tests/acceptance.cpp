// Acceptance harness: one criterion per run line, each with its measured
// worst-case numbers, the fixed thresholds, and the wall-clock budget.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "projinv/image.hpp"
#include "projinv/json_io.hpp"
#include "projinv/suites.hpp"

using namespace projinv;
namespace fs = std::filesystem;

namespace {

struct Criterion {
    std::string name;
    double budget_seconds = 0.0;
    bool passed = false;
    double elapsed = 0.0;
    std::string detail;
};

std::string brief(const json& details) {
    json copy = details;
    copy.erase("per_n");
    copy.erase("contraction");
    copy.erase("weight_law");
    return copy.dump();
}

struct CliRun {
    int exit_code = -1;
    std::string out;
};

CliRun run_cli(const std::string& args) {
    const std::string cmd = std::string(PROJINV_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    CliRun run;
    if (!pipe) return run;
    std::array<char, 4096> buffer;
    while (std::size_t got = fread(buffer.data(), 1, buffer.size(), pipe)) {
        run.out.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return run;
}

std::string slurp(const fs::path& path) {
    FILE* f = fopen(path.c_str(), "rb");
    if (!f) return {};
    std::string data;
    std::array<char, 4096> buffer;
    while (std::size_t got = fread(buffer.data(), 1, buffer.size(), f)) data.append(buffer.data(), got);
    fclose(f);
    return data;
}

bool determinism_criterion(std::string& detail) {
    const fs::path tmp = fs::temp_directory_path() / "projinv_acceptance";
    fs::create_directories(tmp);

    // deterministic inputs for the raster subcommands
    GaussianBlobField field;
    field.blobs = {{20.0, 22.0, 8.0, 0.5}, {44.0, 40.0, 10.0, 0.4}};
    const GrayImage img = field.render(64, 64);
    const fs::path pgm = tmp / "input.pgm";
    save_pgm(img, pgm.string(), 16);
    const fs::path hjson = tmp / "h.json";
    save_homography(conjugate_to_pixels(sample_homography(77, 0.03), 64, 64), hjson.string());

    const std::string sample = std::string(PROJINV_SHARE_DIR) + "/sample_config.json";
    const std::vector<std::string> suites = {
        "--seed 7 --trials 25 verify --suite all --config " + sample,
        "--seed 5 rank --n 3",
        "--seed 3 --trials 10 cochain-check --m 1",
        "--seed 4 --trials 5 cochain-check --m 2",
        "frame " + sample,
        "invariants " + sample + " --relations",
        "--seed 13 --trials 20 relative " + sample + " --check -1 --function C",
        "--seed 9 descriptor " + pgm.string() + " --n 4 --samples 300",
        "warp " + pgm.string() + " --homography " + hjson.string() + " --out " + (tmp / "w.pgm").string(),
    };

    for (const std::string& args : suites) {
        const CliRun first = run_cli(args);
        const std::string first_warp = slurp(tmp / "w.pgm");
        const CliRun second = run_cli(args);
        const std::string second_warp = slurp(tmp / "w.pgm");
        if (first.exit_code != second.exit_code || first.out != second.out || first_warp != second_warp) {
            detail = "divergent run: " + args;
            return false;
        }
        if (first.exit_code != 0) {
            detail = "suite failed (exit " + std::to_string(first.exit_code) + "): " + args;
            return false;
        }
    }
    detail = std::to_string(suites.size()) + " CLI invocations byte-identical across repeated runs";
    return true;
}

}  // namespace

int main() {
    constexpr std::uint64_t kSeed = 20240817;
    std::vector<Criterion> criteria;

    const auto run = [&](const std::string& name, double budget, auto&& fn) {
        Criterion c;
        c.name = name;
        c.budget_seconds = budget;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.passed = fn(c.detail);
        } catch (const std::exception& e) {
            c.passed = false;
            c.detail = std::string("exception: ") + e.what();
        }
        c.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.elapsed > c.budget_seconds) {
            c.passed = false;
            c.detail += " [over budget " + std::to_string(c.budget_seconds) + "s]";
        }
        criteria.push_back(c);
    };

    run("1. frame residuals and equivariance", 5.0, [&](std::string& detail) {
        const SuiteResult r = frame_suite(kSeed, 250, 0.2);
        detail = brief(r.details);
        return r.passes;
    });
    run("2. generating-set invariance", 10.0, [&](std::string& detail) {
        const SuiteResult r = invariance_suite(kSeed + 1, 1000, 0.2);
        detail = brief(r.details);
        return r.passes;
    });
    run("3. closed forms match the moving frame", 10.0, [&](std::string& detail) {
        const SuiteResult r = frame_agreement_suite(kSeed + 2, 100);
        detail = brief(r.details);
        return r.passes;
    });
    run("4. coordinate relations (signs per the frame oracle)", 10.0, [&](std::string& detail) {
        const SuiteResult r = relations_suite(kSeed + 3, 100);
        detail = brief(r.details);
        return r.passes;
    });
    run("5. functional independence rank", 10.0, [&](std::string& detail) {
        const SuiteResult r = rank_suite(kSeed + 4, 10);
        detail = r.details.dump();
        return r.passes;
    });
    run("6. relative invariants and weight laws", 30.0, [&](std::string& detail) {
        const SuiteResult r = relative_suite(kSeed + 5, 1000);
        detail = brief(r.details);
        return r.passes;
    });
    run("7. cochain complex and contracting homotopy", 30.0, [&](std::string& detail) {
        const SuiteResult r = cochain_suite(kSeed + 6, 100);
        detail = brief(r.details);
        return r.passes;
    });
    run("8. image pipeline", 60.0, [&](std::string& detail) {
        const SuiteResult r = image_suite(kSeed + 7, 512, 50);
        detail = brief(r.details);
        return r.passes;
    });
    run("9. CLI determinism", 120.0, [&](std::string& detail) { return determinism_criterion(detail); });

    bool all = true;
    for (const Criterion& c : criteria) {
        all = all && c.passed;
        std::printf("[%s] %s (%.2fs)\n    %s\n", c.passed ? "PASS" : "FAIL", c.name.c_str(), c.elapsed,
                    c.detail.c_str());
    }
    std::printf("%s\n", all ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURES PRESENT");
    return all ? 0 : 1;
}
