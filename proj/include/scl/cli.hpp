#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "scl/circuits.hpp"

namespace scl {

enum ExitCode : int {
    kExitOk = 0,
    kExitInput = 1,
    kExitResource = 2,
    kExitInternal = 3,
};

struct RunConfig {
    std::string word_text;  // "-" reads one word per line from the input stream
    bool emit_json = false;
    std::optional<std::string> surface_out;
    std::optional<std::string> dot_out;
    std::size_t max_circuits = kDefaultCircuitCap;
    std::optional<int> oracle_n;
    bool verify = false;
};

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace scl
