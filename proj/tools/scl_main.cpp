#include <iostream>

#include "CLI11.hpp"
#include "scl/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact stable commutator length in free groups"};
    scl::RunConfig cfg;
    app.add_option("word", cfg.word_text, "word over a-z/A-Z (uppercase = inverse), or - for stdin")
        ->required();
    app.add_flag("--json", cfg.emit_json, "print the result as JSON");
    app.add_option("--surface", cfg.surface_out, "write the extremal surface as JSON");
    app.add_option("--dot", cfg.dot_out, "write the turn graph in DOT format");
    app.add_option("--max-circuits", cfg.max_circuits, "circuit enumeration cap")
        ->check(CLI::PositiveNumber);
    app.add_option("--oracle", cfg.oracle_n, "also run the brute-force bound up to this degree")
        ->check(CLI::PositiveNumber);
    app.add_flag("--verify", cfg.verify, "rebuild and check the certificate surface");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : scl::kExitInput;
    }
    return scl::run(cfg, std::cin, std::cout, std::cerr);
}
