#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "equibundle/report.hpp"

using namespace equibundle;

namespace {

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with bundles on P^1, graded and filtered modules, and finite spectral spaces"};
    std::string command;
    std::vector<std::string> files;
    std::string field;
    std::vector<std::int64_t> twist_window;
    std::optional<std::int64_t> degree_bound;
    RunOptions options;

    app.add_option("command", command, "Command to run")->required()->check(CLI::IsMember(command_names()));
    app.add_option("files", files, "Input documents")->required();
    app.add_option("--field", field, "Field for documents without a field line: Q or F<p>");
    app.add_option("--twist-window", twist_window, "Twists lo,hi for h0 tables")->delimiter(',')->expected(2);
    app.add_option("--degree-bound", degree_bound, "Degree bound for truncated h0 and component enumeration");
    app.add_flag("--verify", options.verify, "Recheck answers with an independent method");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : exit_parse_error;
    }

    try {
        if (!field.empty())
            options.field = parse_document("kind = splitting_type\nfield = " + field + "\ndegrees =\n").field;
    } catch (const Error& e) {
        std::cerr << "--field: " << e.what() << "\n";
        return exit_parse_error;
    }
    if (!twist_window.empty()) {
        if (twist_window[0] > twist_window[1]) {
            std::cerr << "--twist-window: lo must not exceed hi\n";
            return exit_parse_error;
        }
        options.twist_window = std::pair{twist_window[0], twist_window[1]};
    }
    options.degree_bound = degree_bound;
    if (const char* s = std::getenv("EQUIBUNDLE_SEED")) {
        try {
            options.seed = std::stoull(s);
        } catch (const std::exception&) {
            std::cerr << "EQUIBUNDLE_SEED must be a nonnegative integer\n";
            return exit_parse_error;
        }
    }

    std::vector<FileResult> results(files.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t k = 0; k < files.size(); ++k) {
        const auto text = read_file(files[k]);
        if (!text) {
            results[k] = {exit_parse_error, "", "cannot read file"};
            continue;
        }
        results[k] = process_document(command, *text, options);
    }

    int code = exit_ok;
    for (std::size_t k = 0; k < files.size(); ++k) {
        if (files.size() > 1) std::cout << (k ? "\n" : "") << "== " << files[k] << " ==\n";
        std::cout << results[k].report;
        if (results[k].exit_code != exit_ok) std::cerr << files[k] << ": " << results[k].error << "\n";
        code = std::max(code, results[k].exit_code);
    }
    return code;
}
