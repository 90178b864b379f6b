#include "scl/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "scl/errors.hpp"
#include "scl/json_io.hpp"
#include "scl/scl.hpp"
#include "scl/surface.hpp"

namespace scl {
namespace {

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot open " + path + " for writing");
    f << contents;
    if (!f) throw InputError("failed writing " + path);
}

// Output for one word goes to out/err; errors propagate as exceptions.
int process(const std::string& text, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    SclOptions opts;
    opts.max_circuits = cfg.max_circuits;
    const auto result = compute_scl(text, opts);
    const auto reduced = result.word.to_string();
    if (result.removed > 0) {
        err << "note: " << text << " reduced to " << reduced << " (" << result.removed
            << " letters removed)\n";
    }

    if (cfg.dot_out) write_file(*cfg.dot_out, export_dot(TurnGraph(result.word)));

    std::ostream& info = cfg.emit_json ? err : out;
    std::ostringstream body;
    if (result.infinite) {
        body << "scl(" << reduced << ") = infinity\n";
    } else {
        body << "scl(" << reduced << ") = " << result.scl << " (n = " << result.n
             << ", circuits = " << result.circuits.size() << ")\n";
    }

    int code = kExitOk;
    if (!result.infinite && (cfg.verify || cfg.surface_out)) {
        if (cfg.surface_out) {
            const auto s = build_surface(TurnGraph(result.word), result.circuits, result.integer_weights);
            write_file(*cfg.surface_out, surface_to_json(s).dump(2) + "\n");
        }
        if (cfg.verify) {
            const auto rep = verify_certificate(result);
            body << "verify: ok (chi = " << rep.chi << ", boundary components = "
                 << rep.boundary_components << ", inner components = " << rep.inner_components
                 << ", taut)\n";
        }
    } else if (result.infinite && (cfg.verify || cfg.surface_out)) {
        body << "verify: skipped (no admissible surface)\n";
    }

    if (cfg.oracle_n) {
        if (result.infinite) {
            body << "oracle: skipped (scl is infinite)\n";
        } else {
            const auto bound = brute_force_scl_bound(result.word, *cfg.oracle_n);
            const bool holds = result.scl <= bound;
            body << "oracle(n <= " << *cfg.oracle_n << ") = " << bound
                 << "; lp <= oracle: " << (holds ? "yes" : "no") << "\n";
            if (!holds) code = kExitInternal;
        }
    }

    if (cfg.emit_json) {
        out << result_to_json(result).dump() << "\n";
        info << body.str();
    } else {
        out << body.str();
    }
    return code;
}

int guarded(const std::string& text, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        return process(text, cfg, out, err);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ResourceLimit& e) {
        err << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const InvariantViolation& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
    if (config.max_circuits < 1) {
        err << "error: --max-circuits must be at least 1\n";
        return kExitInput;
    }
    if (config.oracle_n && *config.oracle_n < 1) {
        err << "error: --oracle must be at least 1\n";
        return kExitInput;
    }
    if (config.word_text != "-") return guarded(config.word_text, config, out, err);

    if (config.surface_out || config.dot_out) {
        err << "error: --surface and --dot need a single word, not batch input\n";
        return kExitInput;
    }
    int code = kExitOk;
    std::string line;
    while (std::getline(in, line)) {
        line.erase(std::remove_if(line.begin(), line.end(),
                                  [](unsigned char c) { return std::isspace(c); }),
                   line.end());
        if (line.empty()) continue;
        code = std::max(code, guarded(line, config, out, err));
    }
    return code;
}

}  // namespace scl
