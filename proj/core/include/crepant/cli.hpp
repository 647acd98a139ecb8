#ifndef CREPANT_CLI_HPP
#define CREPANT_CLI_HPP

#include <iostream>
#include <string>
#include <vector>

namespace crepant {

/**
 * Command-line driver.  Subcommands:
 *   tables <which> [--format tsv|json] [--diff-paper]
 *   search <spec.json> [--catalog path]
 *   verify [--cm] [--counting] [--lattice]
 *   group <name> [--info] [--chars] [--sylow p]
 * Global options: --cap N (overrides CREPANT_CAP), --data-dir path (overrides
 * CREPANT_DATA_DIR), --json.  Exit code 0 on success, 1 when a diff or verify
 * run reports a divergence, 2 on usage errors.
 */
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
             const std::string& default_data_dir = "data");

}  // namespace crepant

#endif
