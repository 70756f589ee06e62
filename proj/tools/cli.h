// Copyright 2026 The extform Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EXTFORM_TOOLS_CLI_H_
#define EXTFORM_TOOLS_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <string>

#include "extform/error.h"
#include "extform/verify/suites.h"

namespace extform::cli {

enum ExitCode {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitMalformedInput = 3,
  kExitOddTerminalSet = 4,
  kExitDisconnected = 5,
  kExitSizeCap = 6,
  kExitAborted = 7,
  kExitInternal = 8,
};

struct RunConfig {
  std::string command;
  std::string input;
  std::string dump_path;   // LP text; block index goes to <dump_path>.blocks.json
  std::string json_path;   // JSON report; "-" writes it to stdout
  std::uint64_t seed = verify::kDefaultSeed;
  int max_nodes = 6;       // T-cut LP and all-trees enumeration cap
  std::string backend = "split";  // split | arborescence
  std::int64_t pivot_cap = 2'000'000;
  std::string nodes;       // --S / --T, comma-separated ids
  std::string source;
  std::string sink;
  std::string formulation; // dump-lp only
  std::string suite;       // verify only; empty runs every suite
  bool verbose = false;
};

// Exit code for an error raised while running a command.
int ExitCodeFor(ErrorCode code);

// Runs one command; human-readable report on `out`, diagnostics on `err`.
int RunCommand(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses arguments and runs the selected command.
int Main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace extform::cli

#endif  // EXTFORM_TOOLS_CLI_H_
