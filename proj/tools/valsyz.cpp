#include <iostream>

#include <CLI11.hpp>

#include "valsyz/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"V-saturation and V[X]-syzygies over residually discrete valuation domains"};

    std::string path, task, domain;
    valsyz::cli::RunOptions opts;
    int degree_bound = -1, max_iter = 0;
    std::string out_dir;

    app.add_option("instance", path, "instance file")->required();
    app.add_option("--task", task, "saturate-free | saturate-vx | syzygy");
    app.add_option("--domain", domain, "zp:<p> | rft0:<q|p> | field:<q|p>");
    app.add_flag("--verify", opts.verify, "cross-check against the brute-force oracle");
    app.add_option("--degree-bound", degree_bound, "degree of the oracle slice")->check(CLI::NonNegativeNumber);
    app.add_option("--max-iter", max_iter, "maximum number of shift rounds")->check(CLI::PositiveNumber);
    app.add_option("--out", out_dir, "directory for result.txt, trace.csv and diagram.txt");
    app.add_flag("--diagram", opts.diagram, "emit pivot diagrams");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : valsyz::cli::exit_input_error;
    }

    try {
        if (!task.empty()) opts.task = valsyz::cli::parse_task(task);
        if (!domain.empty()) opts.domain = valsyz::DomainSpec::parse(domain);
    } catch (const valsyz::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return valsyz::cli::exit_input_error;
    }
    if (degree_bound >= 0) opts.degree_bound = degree_bound;
    if (max_iter > 0) opts.max_iter = max_iter;
    if (!out_dir.empty()) opts.out_dir = out_dir;

    return valsyz::cli::run(path, opts, std::cout, std::cerr);
}
