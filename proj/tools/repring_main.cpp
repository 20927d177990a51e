// Command line driver for the verification checks.
//
// Exit codes: 0 when every selected check passes (indeterminate results only
// raise a warning), 1 when any check fails, 2 on usage or config errors.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "a4ring/checks.hpp"
#include "a4ring/gmodules.hpp"
#include "a4ring/rep.hpp"

namespace {

void dump_rep(const std::filesystem::path& dir, const std::string& name,
              const a4ring::Representation& r) {
    std::ofstream f(dir / (name + ".txt"));
    if (!f) throw std::runtime_error("cannot write " + (dir / (name + ".txt")).string());
    f << r.a1().to_text() << r.a2().to_text() << r.b().to_text();
}

// writes each library lattice as three generator matrices (a1, a2, b) in the
// plain matrix text format, one file per lattice
void dump_reps(const std::string& dir_arg, int max_n) {
    std::filesystem::path dir(dir_arg);
    std::filesystem::create_directories(dir);
    dump_rep(dir, "tau0", a4ring::trivial_rep());
    dump_rep(dir, "tau", a4ring::tau_rep());
    dump_rep(dir, "gamma1", a4ring::gamma_rep(1));
    dump_rep(dir, "gamma2", a4ring::gamma_rep(2));
    dump_rep(dir, "gamma4", a4ring::gamma_rep(4));
    dump_rep(dir, "p0", a4ring::projective_p0().rep);
    dump_rep(dir, "p1", a4ring::projective_p1().rep);
    a4ring::DeltaTowerG tower(max_n);
    for (int n = -max_n; n <= max_n; ++n)
        dump_rep(dir, "delta_" + std::to_string(n), tower.at(n));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of the A4 lattice tower and its class ring"};
    a4ring::RunConfig cfg;
    std::string out_path, dump_dir;
    std::vector<std::string> picked;

    app.add_option("--max-n", cfg.max_n, "tower depth floor (default 6)");
    app.add_option("--max-k", cfg.max_k, "highest certified shift level (default 2)");
    app.add_option("--sweep", cfg.syzygy_sweep, "subgroup chain sweep bound (default 30)");
    app.add_option("--seed", cfg.seed, "root seed for the randomized searches (default 1)");
    app.add_option("--exhaustive-cap", cfg.exhaustive_cap,
                   "exact enumeration cap on the mod-2 hom rank (default 22)");
    app.add_option("--sample-cap", cfg.sample_cap,
                   "random draw cap past the exhaustive window (default 2^20)");
    app.add_option("--check", picked, "check to run (repeatable; default all)");
    app.add_option("--format", cfg.format, "report format: text or json (default text)");
    app.add_option("--out", out_path, "write the report to a file instead of stdout");
    app.add_option("--dump-reps", dump_dir,
                   "write the library lattices as matrix text files into a directory");
    app.add_flag("--deep-tensors", cfg.deep_tensors,
                 "run the tensor-shift identities at every level up to max-k");
    app.add_flag("--timings", cfg.timings,
                 "measured elapsed milliseconds per result (reports stop being byte-stable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // --help exits 0, usage errors exit 2
    }

    if (!picked.empty()) cfg.checks = picked;
    try {
        a4ring::validate(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }

    if (!dump_dir.empty()) {
        try {
            dump_reps(dump_dir, cfg.max_n);
        } catch (const std::exception& e) {
            std::cerr << "dump error: " << e.what() << "\n";
            return 2;
        }
    }

    std::vector<a4ring::CheckResult> results;
    try {
        results = a4ring::run(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::string report = cfg.format == "json" ? a4ring::render_json(cfg, results)
                                              : a4ring::render_text(cfg, results);
    if (out_path.empty()) {
        std::cout << report;
    } else {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "config error: cannot write " << out_path << "\n";
            return 2;
        }
        f << report;
    }
    return a4ring::exit_code(results);
}
