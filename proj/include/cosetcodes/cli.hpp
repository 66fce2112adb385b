#ifndef COSETCODES_CLI_HPP
#define COSETCODES_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "cosetcodes/group.hpp"
#include "cosetcodes/perfect_code.hpp"
#include "cosetcodes/subgroup.hpp"

namespace cosetcodes {

struct CliConfig {
    int order_cap = kDefaultOrderCap;
    long subgroup_cap = kDefaultSubgroupCap;
    long brute_force_node_cap = kDefaultBruteForceNodeCap;
    std::string mode = "fast";    // fast | cross-check
    std::string output = "text";  // text | json | dot
};

// Applies COSET_CODES_CAPS ("order=N,subgroups=N,bf=N"; keys optional, any
// order). Null or empty env_value is a no-op. Malformed → invalid_parameter.
void apply_caps_env(CliConfig& config, const char* env_value);

// Full CLI entry point; args excludes argv[0]. Exit codes: 0 success,
// 1 usage/input error, 2 internal disagreement, 3 verification failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cosetcodes

#endif
