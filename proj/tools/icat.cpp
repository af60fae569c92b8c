// icat: check and construct internal categories, monads and corings from a
// JSON document. Exit status: 0 all checks pass, 1 a check fails, 2 bad input.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "icat/run.hpp"

using namespace icat;

namespace {

struct Options {
    std::string report = "text";
    std::string field;
    std::string out;
    std::string file;
    std::string target;
    std::string task;
};

int emit(const cli::RunResult& res, const Options& o) {
    const bool has_output = !cli::empty(res.output);
    if (has_output && !o.out.empty()) {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot write " << o.out << "\n";
            return 2;
        }
        f << io::dump(res.output);
    }
    if (o.report == "json") {
        io::json j = io::report_json(res.report);
        if (has_output && o.out.empty()) j["output"] = io::serialize(res.output);
        std::cout << io::dump(j);
    } else {
        std::cout << res.report.text();
        if (has_output && o.out.empty()) std::cout << "output:\n" << io::dump(res.output);
    }
    return res.report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for internal categories, Kleisli objects and corings"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--report", o.report, "Report format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--field", o.field, "Field override: Q, Fp:<p> or F<p>");
    app.add_option("--out", o.out, "Write constructed structures to this file");

    std::string chosen;
    for (const std::string& cmd : cli::commands()) {
        auto* sub = app.add_subcommand(cmd, "Run " + cmd + " on a document");
        sub->add_option("file", o.file, "Input document")->required();
        sub->add_option("--target", o.target, cmd == "cotensor" ? "Bicomodules, comma separated" : "Definition name");
        sub->callback([&chosen, cmd] { chosen = cmd; });
    }
    auto* run = app.add_subcommand("run", "Run a task defined in the document");
    run->add_option("file", o.file, "Input document")->required();
    run->add_option("task", o.task, "Task name")->required();
    run->callback([&chosen] { chosen = "run"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        std::optional<Field> field, fallback;
        if (!o.field.empty()) field = io::parse_field(o.field);
        if (const char* env = std::getenv("ICAT_FIELD"); env && *env) fallback = io::parse_field(env);
        const io::Document doc = io::load(o.file, field, fallback);
        io::json args = io::json::object();
        if (!o.target.empty()) args["target"] = o.target;
        const cli::RunResult res = chosen == "run" ? cli::run_task(doc, o.task) : cli::run_command(doc, chosen, args);
        return emit(res, o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
