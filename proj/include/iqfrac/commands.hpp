#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace iqfrac {

enum class OutputFormat { unset, csv, json, svg };

struct RunConfig {
    std::string command;
    std::int64_t d = -5;           // field selector N, squarefree negative
    std::int64_t norm_max = 21;    // X
    double s = 3.0;                // Dirichlet series point, s > 2
    std::int64_t x_ideal = 100000; // ideal-norm truncation
    std::int64_t p_prime = 997;    // prime cutoff / baseline prime
    OutputFormat format = OutputFormat::unset;  // unset -> command default
    std::string tau;               // cmcheck input "(a_x,a_y)/(b_x,b_y)"
    std::string out_path;          // informational; the caller opens streams
};

// Renders the command output; deterministic byte-for-byte for equal
// configs. Throws on invalid configuration or library errors.
std::string run_to_string(const RunConfig& cfg);

// Exit codes: 0 ok, 2 invalid argument/config, 3 budget exceeded,
// 4 overflow, 5 domain/precondition, 1 anything else. Failures emit a
// one-line JSON error object on err.
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace iqfrac
