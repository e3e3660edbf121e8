#ifndef TTR_CLI_HPP
#define TTR_CLI_HPP

#include "ttr/graph.hpp"
#include "ttr/oracle.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace ttr {

struct CliConfig {
    enum class Command { Solve, Verify, Tree, Bcg, Formula, Gadget, Gen, Bounds, Sweep };

    Command command = Command::Solve;
    std::optional<GraphFamily> family;
    std::string input_path;
    std::string partition_path; // verify
    bool json = false;
    int cap = kDefaultOracleCap;
    uint64_t seed = 0x5EED;
    bool tournament = true; // verify: --tournament (default) vs --transitive
    bool solve_tr = false;  // solve: report Tr instead of TTr
    std::string out_graph;     // gadget outputs
    std::string out_partition; // gadget certificate
};

/// Runs one command, writing the report to `out`. Returns the process exit
/// code: 0 success, 1 usage or input error, 2 verification failure.
int run(const CliConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace ttr

#endif
