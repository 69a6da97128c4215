#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "powerstab/errors.hpp"
#include "powerstab/limits.hpp"
#include "powerstab/runner.hpp"

int main(int argc, char** argv) {
    using namespace powerstab;
    CLI::App app{"Bounded power-stability checks for ideals of polynomial rings"};
    std::string input = "-";
    bool json = false, paper = false;
    RunOptions opts;
    std::string expect;
    std::size_t max_terms = 0;
    app.add_option("script", input, "Script file, or - for standard input")->capture_default_str();
    app.add_flag("--json", json, "Emit the reports as JSON");
    app.add_flag("--paper-examples", paper, "Run the bundled suite of worked examples and ignore the script");
    app.add_option("--tmax", opts.default_tmax, "Default bound on t")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--expect", expect, "Expected verdict of check-stability commands")
        ->check(CLI::IsMember({"stable", "unstable"}));
    app.add_option("--max-terms", max_terms, "Guard on the number of terms of a polynomial")->check(CLI::PositiveNumber);
    app.add_option("--seed", opts.seed, "Seed of the randomized suites")->capture_default_str();
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }
    if (!expect.empty()) opts.expect = expect;
    if (max_terms) limits().max_terms = max_terms;

    RunResult res;
    if (paper) {
        res = run_paper_examples(opts);
    } else {
        std::string text;
        if (input == "-") {
            text.assign(std::istreambuf_iterator<char>(std::cin), {});
        } else {
            std::ifstream in(input);
            if (!in) {
                std::cerr << "powerstab: cannot open " << input << "\n";
                return exit_usage;
            }
            std::ostringstream ss;
            ss << in.rdbuf();
            text = ss.str();
        }
        try {
            res = run_script(parse_script(text), opts);
        } catch (const ParseError& e) {
            std::cerr << (input == "-" ? "<stdin>" : input) << ":" << e.what() << "\n";
            return exit_usage;
        }
    }
    if (json)
        std::cout << res.json.dump(2) << "\n";
    else
        std::cout << res.text;
    return res.exit_code;
}
