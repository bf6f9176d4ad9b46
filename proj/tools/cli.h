//
// Project Digicover
// SPDX-License-Identifier: Apache-2.0
//

#ifndef DIGICOVER_TOOLS_CLI_H_
#define DIGICOVER_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace digicover::cli {

enum ExitCode { kPass = 0, kPropertyFailure = 1, kInputError = 2 };

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

} // namespace digicover::cli

#endif // DIGICOVER_TOOLS_CLI_H_
