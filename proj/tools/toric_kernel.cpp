// toric-kernel: JSON front end to the toric library.
//
//   toric-kernel [--pretty] <group> <op> [input.json]
//   toric-kernel [--pretty] run <request.json>
//
// Input defaults to standard input. Exit status: 0 success, 1 domain
// error, 2 schema error or unknown command.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "toric/io.hpp"

using toric::io::Json;

namespace {

int emit(const Json& j, bool pretty, int code)
{
    std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
    return code;
}

Json error_doc(const std::string& kind, const std::string& message, const std::string& pointer = "")
{
    Json e{{"kind", kind}, {"message", message}};
    if (!pointer.empty())
        e["pointer"] = pointer;
    return {{"schema", toric::io::kSchemaVersion}, {"error", e}};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact toric geometry computations on JSON input"};
    bool pretty = false;
    bool list = false;
    std::vector<std::string> args;
    app.add_flag("--pretty", pretty, "Indent the JSON output");
    app.add_flag("--list", list, "List the available commands");
    app.add_option("args", args, "<group> <op> [input] or run <request>");
    CLI11_PARSE(app, argc, argv);

    if (list) {
        for (const std::string& c : toric::io::commands())
            std::cout << c << "\n";
        return 0;
    }

    bool run = !args.empty() && args[0] == "run";
    std::string command, path;
    if (run && args.size() == 2) {
        path = args[1];
    } else if (!run && (args.size() == 2 || args.size() == 3)) {
        command = args[0] + " " + args[1];
        if (args.size() == 3)
            path = args[2];
    } else {
        std::cerr << app.help();
        return emit(error_doc("usage", "expected <group> <op> [input] or run <request>"), pretty, 2);
    }

    std::string text;
    if (path.empty() || path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in)
            return emit(error_doc("io", "cannot open " + path), pretty, 2);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }

    Json input;
    try {
        input = Json::parse(text);
    } catch (const Json::parse_error& e) {
        return emit(error_doc("schema", std::string("invalid JSON: ") + e.what(), "/"), pretty, 2);
    }

    try {
        Json out = run ? toric::io::execute_request(input) : toric::io::execute(command, input);
        return emit(out, pretty, 0);
    } catch (const toric::io::SchemaError& e) {
        return emit(error_doc("schema", e.what(), e.pointer()), pretty, 2);
    } catch (const toric::DomainError& e) {
        return emit(error_doc("domain", e.what()), pretty, 1);
    }
}
