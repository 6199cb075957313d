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

// Two bounded-search-tree solvers: the restricted alternating hitting set game
// and weight-at-most-k satisfiability of CNF formulas with short clauses.

#ifndef DISTGI_SEARCH_GAMES_H_
#define DISTGI_SEARCH_GAMES_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace distgi {

// Players alternately pick unchosen elements of the universe; the game ends
// as soon as every set holds a chosen element and whoever moved last wins.
// k2 bounds the total number of moves (both players); running out of moves is
// not a win for Player I.
struct HittingGameInstance {
  std::vector<std::string> universe;
  std::vector<std::vector<int>> sets;  // sorted indices into `universe`
  int k1 = 0;                          // max set size
  int k2 = 0;                          // move budget
};

// Throws PreconditionError on an empty collection, an empty or oversized set,
// an out-of-range element, or k2 < 1.
void validate(const HittingGameInstance& game);

// One set per line, elements separated by whitespace. An optional line
// "B: x y z" adds elements that belong to no set. '#' starts a comment line.
HittingGameInstance parse_hitting_game(std::string_view text, int k1, int k2);

struct GameOutcome {
  bool player_one_wins = false;
  std::optional<int> winning_move;  // universe index of a winning first pick
  std::int64_t nodes = 0;
};

GameOutcome player_one_wins(const HittingGameInstance& game);

// Literals are non-zero integers: +v is variable v, -v its negation
// (variables 1..num_vars).
struct CnfInstance {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
  int k = 0;

  int max_clause_width() const;
};

// Standard DIMACS CNF ("p cnf V C", clauses terminated by 0). Empty clauses
// are rejected.
CnfInstance parse_dimacs_cnf(std::string_view text, int k);

// Sets exactly `true_vars` to true and everything else to false.
bool satisfies(const CnfInstance& cnf, std::span<const int> true_vars);

struct SatResult {
  std::optional<std::vector<int>> true_vars;  // sorted
  std::int64_t nodes = 0;
};

// Branches on the positive literals of the first falsified clause, to depth k.
SatResult weighted_qcnf_sat(const CnfInstance& cnf);

}  // namespace distgi

#endif  // DISTGI_SEARCH_GAMES_H_
