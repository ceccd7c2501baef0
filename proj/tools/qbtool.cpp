// Command-line front end. Talks to the library exclusively through the
// qbmoduli C API; every subcommand emits the text rendering of the JSON
// report, or the JSON itself under --json.

#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "qbmoduli.h"

namespace {

struct StringGuard {
    char* s = nullptr;
    ~StringGuard() { qb_free_string(s); }
};

struct ProblemGuard {
    qb_problem* p = nullptr;
    ~ProblemGuard() { qb_problem_free(p); }
};

int fail(const StringGuard& err, int code) {
    std::fprintf(stderr, "error: %s\n", err.s ? err.s : "unknown error");
    return code;
}

int emit(const char* command, const char* report_json, bool as_json) {
    if (as_json) {
        std::printf("%s\n", report_json);
        return 0;
    }
    StringGuard text, err;
    int rc = qb_render_text(command, report_json, &text.s, &err.s);
    if (rc != QB_OK) return fail(err, rc);
    std::fputs(text.s, stdout);
    return 0;
}

int load(const std::string& path, ProblemGuard& problem) {
    StringGuard err;
    int rc = qb_problem_read_file(path.c_str(), &problem.p, &err.s);
    if (rc != QB_OK) return fail(err, rc);
    return 0;
}

// window syntax: "lo..hi"
bool parse_window(const std::string& s, long long& lo, long long& hi) {
    auto pos = s.find("..");
    if (pos == std::string::npos) return false;
    try {
        lo = std::stoll(s.substr(0, pos));
        hi = std::stoll(s.substr(pos + 2));
    } catch (...) {
        return false;
    }
    return true;
}

// limits syntax: "vertices,rank,degree"
bool parse_limits(const std::string& s, int& v, int& r, int& d) {
    return std::sscanf(s.c_str(), "%d,%d,%d", &v, &r, &d) == 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical invariants of quiver-bundle moduli on curves"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit the machine-readable report");

    std::string input, window_spec, limits_spec = "3,3,4";
    bool use_random = false;
    std::uint64_t seed = 0;
    int count = 100;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "problem file (JSON)")->required();
    };

    auto* euler = app.add_subcommand("euler", "Euler characteristic chi with breakdown");
    add_input(euler);
    auto* dim = app.add_subcommand("dim", "expected moduli dimension 1 - chi");
    add_input(dim);
    auto* smooth = app.add_subcommand("smooth", "arrow-wise smoothness region check");
    add_input(smooth);
    auto* walls = app.add_subcommand("walls", "stability walls from subtype candidates");
    add_input(walls);
    walls->add_option("--window", window_spec, "per-vertex degree window lo..hi")->required();
    auto* stability = app.add_subcommand("stability", "stability verdict for the bundle");
    add_input(stability);
    auto* oracle = app.add_subcommand("oracle-verify", "genus-0 verification battery");
    for (auto* sub : {euler, dim, smooth, walls, stability, oracle})
        sub->add_flag("--json", as_json, "emit the machine-readable report");
    oracle->add_option("input", input, "problem file (JSON)");
    oracle->add_flag("--random", use_random, "run on seeded random instances");
    oracle->add_option("--seed", seed, "random batch seed");
    oracle->add_option("--count", count, "number of random instances");
    oracle->add_option("--limits", limits_spec, "instance limits: vertices,rank,degree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    StringGuard report, err;

    if (oracle->parsed()) {
        int rc;
        if (use_random) {
            int mv, mr, md;
            if (!parse_limits(limits_spec, mv, mr, md)) {
                std::fprintf(stderr, "error: bad --limits, expected vertices,rank,degree\n");
                return 2;
            }
            rc = qb_report_oracle_random(seed, count, mv, mr, md, &report.s, &err.s);
        } else {
            if (input.empty()) {
                std::fprintf(stderr, "error: oracle-verify needs an input file or --random\n");
                return 2;
            }
            ProblemGuard problem;
            if (int lrc = load(input, problem); lrc != 0) return lrc;
            rc = qb_report_oracle_verify(problem.p, &report.s, &err.s);
        }
        if (rc == QB_INPUT_ERROR) return fail(err, rc);
        if (int erc = emit("oracle-verify", report.s, as_json); erc != 0) return erc;
        return rc;  // QB_VERIFY_FAIL propagates as exit 1
    }

    ProblemGuard problem;
    if (int lrc = load(input, problem); lrc != 0) return lrc;

    int rc;
    const char* command;
    if (euler->parsed()) {
        command = "euler";
        rc = qb_report_euler(problem.p, &report.s, &err.s);
    } else if (dim->parsed()) {
        command = "dim";
        rc = qb_report_dim(problem.p, &report.s, &err.s);
    } else if (smooth->parsed()) {
        command = "smooth";
        rc = qb_report_smooth(problem.p, &report.s, &err.s);
    } else if (walls->parsed()) {
        command = "walls";
        long long lo, hi;
        if (!parse_window(window_spec, lo, hi)) {
            std::fprintf(stderr, "error: bad --window, expected lo..hi\n");
            return 2;
        }
        rc = qb_report_walls(problem.p, lo, hi, &report.s, &err.s);
    } else {
        command = "stability";
        rc = qb_report_stability(problem.p, &report.s, &err.s);
    }

    if (rc != QB_OK) return fail(err, rc);
    return emit(command, report.s, as_json);
}
