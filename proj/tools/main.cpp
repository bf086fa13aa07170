#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tauforms/engine.hpp"
#include "tauforms/error.hpp"
#include "tauforms/script.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact tau-form calculator for plane curves over Q(t)"};
    std::string path;
    bool json = false;
    bool check_only = false;
    unsigned long long seed = 1;
    app.add_option("script", path, "script file to run ('-' or empty reads standard input)");
    app.add_flag("--json", json, "emit structured JSON reports instead of text");
    app.add_flag("--check", check_only, "parse only; exit 0 when the script is well-formed");
    app.add_option("--seed", seed, "seed for the bundled selftest command");
    CLI11_PARSE(app, argc, argv);

    std::string text;
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            std::cerr << "error[io]: cannot open '" << path << "'\n";
            return 1;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }

    try {
        if (check_only) {
            tauforms::parse_script(text);
            return 0;
        }
        tauforms::RunResult rr = tauforms::run_text(text, seed);
        std::cout << (json ? rr.json() : rr.text());
        return rr.ok ? 0 : 1;
    } catch (const tauforms::error& e) {
        std::cerr << "error[" << e.code() << "]: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
