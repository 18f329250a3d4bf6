// Copyright 2026 The gcensus Authors
//
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

// The `gcensus` command line: count, gfd, rank, features, bench, serve.

#ifndef GCENSUS_CLI_H_
#define GCENSUS_CLI_H_

#include <iosfwd>

namespace gcensus {

enum ExitCode : int {
  kExitOk = 0,
  kExitIoError = 1,       // unreadable or malformed input, size caps
  kExitUsage = 2,         // bad flags or flag values
  kExitConsistency = 3,   // an exact identity failed: an internal bug
};

// Runs one invocation. Results go to `out` (or the -o file); failures are
// written to `err` as a single JSON object {"code", "message", "detail"}.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace gcensus

#endif  // GCENSUS_CLI_H_
