// Copyright 2026 The distgi Authors.
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

// The `distgi` command line. Subcommands:
//
//   iso G1 G2 --param P --k K [--certificate] [--deterministic]
//       [--oracle-check] [--verify] [--format F]
//       [--family-file F --backend B]
//   recognize G (--family NAME | --family-file F)
//   deletion G (--family NAME | --family-file F) --k K [--count]
//   vc G --k K [--count]
//   oracle iso G1 G2
//   game hitting --file F --k1 K1 --k2 K2
//   sat --dimacs-cnf F --k K
//
// iso, recognize, oracle, game and sat print one JSON object on stdout.
// deletion and vc print one set per line, e.g. "{0,2}", or just the count.

#ifndef DISTGI_CLI_H_
#define DISTGI_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace distgi::cli {

enum ExitCode : int {
  kAffirmative = 0,  // isomorphic, member, found, wins, satisfiable
  kNegative = 1,
  kDistanceExceeded = 2,
  kUsageError = 3,
  kInputError = 4,   // unreadable or malformed input
  kOracleDisagreement = 5,
  kInternalError = 6,
};

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace distgi::cli

#endif  // DISTGI_CLI_H_
