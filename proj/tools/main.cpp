#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "padicdyn/taskfile.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Certified p-adic Green functions and Montel equicontinuity certificates"};
    app.name("padicdyn");

    std::string input_path;
    std::string out_path;
    int jobs = 1;
    bool retry_precision = false;
    app.add_option("file", input_path, "task file (JSON)")->required();
    app.add_option("--out", out_path, "write the result document here (default: standard output)");
    app.add_option("--jobs", jobs, "run tasks concurrently")->check(CLI::PositiveNumber);
    app.add_flag("--retry-precision", retry_precision,
                 "retry a precision-exhausted task once at 4x precision");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::ifstream in(input_path);
    if (!in) {
        std::cerr << "padicdyn: cannot read " << input_path << "\n";
        return 2;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();

    padicdyn::TaskFile tf = [&]() {
        try {
            return padicdyn::parse_task_file(buffer.str());
        } catch (const padicdyn::ParseError& e) {
            std::cerr << "padicdyn: " << input_path << ": " << e.what() << "\n";
            std::exit(2);
        } catch (const padicdyn::Error& e) {
            std::cerr << "padicdyn: " << input_path << ": " << e.what() << "\n";
            std::exit(2);
        }
    }();

    padicdyn::RunOptions opts;
    opts.jobs = jobs;
    opts.retry_precision = retry_precision;
    padicdyn::RunOutcome outcome = padicdyn::run_tasks(tf, opts);

    std::string rendered = outcome.document.dump(2);
    rendered.push_back('\n');
    if (out_path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "padicdyn: cannot write " << out_path << "\n";
            return 2;
        }
        out << rendered;
        if (!out.flush()) {
            std::cerr << "padicdyn: failed writing " << out_path << "\n";
            return 2;
        }
    }
    return outcome.any_error ? 1 : 0;
}
