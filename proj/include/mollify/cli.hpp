#pragma once

#include <iosfwd>

#include "mollify/config.hpp"

namespace mollify {

// Name of the environment variable holding the default output directory.
inline constexpr const char* kOutputDirEnv = "MOLLIFY_OUTPUT_DIR";

enum class OutputFormat { kDefault, kJson, kCsv };

// Runs one resolved configuration. The mode's primary artifact goes to out
// (plain value for kernels, CSV for kloosterman, JSON otherwise); when an
// output path is known the JSON report, any CSV table and the resolved
// config are also written to files. Returns the process exit status.
int run(const RunConfig& cfg, OutputFormat format, std::ostream& out, std::ostream& err);

int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace mollify
