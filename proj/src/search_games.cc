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

#include "distgi/search_games.h"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

#include "distgi/graph.h"
#include "distgi/graph_io.h"

namespace distgi {
namespace {

class HittingGame {
 public:
  explicit HittingGame(const HittingGameInstance& game)
      : game_(game),
        containing_(game.universe.size()),
        hits_(game.sets.size(), 0),
        chosen_(game.universe.size(), 0),
        unhit_(static_cast<int>(game.sets.size())) {
    for (int s = 0; s < static_cast<int>(game.sets.size()); ++s) {
      for (int e : game.sets[s]) containing_[e].push_back(s);
    }
  }

  // Value of the position before move number `move` (1-based).
  bool player_one_wins(int move, std::optional<int>* first_win) {
    ++nodes_;
    if (move > game_.k2) return false;
    const bool player_one = move % 2 == 1;
    for (int e : candidate_moves()) {
      choose(e);
      const bool result =
          unhit_ == 0 ? player_one : player_one_wins(move + 1, nullptr);
      unchoose(e);
      if (player_one && result) {
        if (first_win != nullptr) *first_win = e;
        return true;
      }
      if (!player_one && !result) return false;
    }
    return !player_one;
  }

  std::int64_t nodes() const { return nodes_; }

 private:
  // Elements of unhit sets, plus at most one element that lies in no unhit
  // set: such "dead" picks are interchangeable.
  std::vector<int> candidate_moves() const {
    std::vector<int> out;
    for (int s = 0; s < static_cast<int>(game_.sets.size()); ++s) {
      if (hits_[s] != 0) continue;
      for (int e : game_.sets[s]) out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (int e = 0; e < static_cast<int>(game_.universe.size()); ++e) {
      if (chosen_[e]) continue;
      const bool dead = std::all_of(containing_[e].begin(), containing_[e].end(),
                                    [&](int s) { return hits_[s] != 0; });
      if (dead) {
        out.push_back(e);
        break;
      }
    }
    return out;
  }

  void choose(int e) {
    chosen_[e] = 1;
    for (int s : containing_[e]) {
      if (hits_[s]++ == 0) --unhit_;
    }
  }

  void unchoose(int e) {
    chosen_[e] = 0;
    for (int s : containing_[e]) {
      if (--hits_[s] == 0) ++unhit_;
    }
  }

  const HittingGameInstance& game_;
  std::vector<std::vector<int>> containing_;
  std::vector<int> hits_;
  std::vector<char> chosen_;
  int unhit_;
  std::int64_t nodes_ = 0;
};

bool falsified(const std::vector<int>& clause, const std::vector<char>& value) {
  for (int lit : clause) {
    const bool v = value[std::abs(lit)] != 0;
    if ((lit > 0) == v) return false;
  }
  return true;
}

class WeightedSat {
 public:
  explicit WeightedSat(const CnfInstance& cnf)
      : cnf_(cnf), value_(cnf.num_vars + 1, 0) {}

  bool search(int depth) {
    ++nodes_;
    const std::vector<int>* violated = nullptr;
    for (const auto& clause : cnf_.clauses) {
      if (falsified(clause, value_)) {
        violated = &clause;
        break;
      }
    }
    if (violated == nullptr) return true;
    if (depth == cnf_.k) return false;
    // A falsified negative literal names a variable already set true; only
    // positive literals can be repaired without unsetting.
    std::vector<int> branch;
    for (int lit : *violated) {
      if (lit > 0) branch.push_back(lit);
    }
    std::sort(branch.begin(), branch.end());
    branch.erase(std::unique(branch.begin(), branch.end()), branch.end());
    for (int v : branch) {
      value_[v] = 1;
      chosen_.push_back(v);
      if (search(depth + 1)) return true;
      chosen_.pop_back();
      value_[v] = 0;
    }
    return false;
  }

  std::vector<int> chosen() const {
    auto out = chosen_;
    std::sort(out.begin(), out.end());
    return out;
  }
  std::int64_t nodes() const { return nodes_; }

 private:
  const CnfInstance& cnf_;
  std::vector<char> value_;
  std::vector<int> chosen_;
  std::int64_t nodes_ = 0;
};

}  // namespace

void validate(const HittingGameInstance& game) {
  if (game.sets.empty()) {
    throw PreconditionError("hitting game: empty collection");
  }
  if (game.k2 < 1) throw PreconditionError("hitting game: k2 must be >= 1");
  const int universe = static_cast<int>(game.universe.size());
  for (const auto& s : game.sets) {
    if (s.empty()) throw PreconditionError("hitting game: empty set");
    if (static_cast<int>(s.size()) > game.k1) {
      throw PreconditionError("hitting game: set larger than k1");
    }
    for (int e : s) {
      if (e < 0 || e >= universe) {
        throw PreconditionError("hitting game: element outside the universe");
      }
    }
  }
}

HittingGameInstance parse_hitting_game(std::string_view text, int k1, int k2) {
  HittingGameInstance game;
  game.k1 = k1;
  game.k2 = k2;
  std::map<std::string, int> index;
  auto id = [&](const std::string& name) {
    auto [it, fresh] = index.try_emplace(name, static_cast<int>(index.size()));
    if (fresh) game.universe.push_back(name);
    return it->second;
  };
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word) || word[0] == '#') continue;
    if (word == "B:") {
      while (ls >> word) id(word);
      continue;
    }
    std::vector<int> set{id(word)};
    while (ls >> word) set.push_back(id(word));
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    game.sets.push_back(std::move(set));
  }
  validate(game);
  return game;
}

GameOutcome player_one_wins(const HittingGameInstance& game) {
  validate(game);
  HittingGame solver(game);
  GameOutcome out;
  out.player_one_wins = solver.player_one_wins(1, &out.winning_move);
  if (!out.player_one_wins) out.winning_move.reset();
  out.nodes = solver.nodes();
  return out;
}

int CnfInstance::max_clause_width() const {
  size_t q = 0;
  for (const auto& c : clauses) q = std::max(q, c.size());
  return static_cast<int>(q);
}

CnfInstance parse_dimacs_cnf(std::string_view text, int k) {
  CnfInstance cnf;
  cnf.k = k;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header = false;
  std::vector<int> clause;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == 'c' || first[0] == '%') continue;
    if (first == "p") {
      std::string kind;
      long long vars = -1, count = -1;
      if (header || !(ls >> kind >> vars >> count) || kind != "cnf" ||
          vars < 0 || count < 0) {
        throw ParseError("cnf: malformed header");
      }
      cnf.num_vars = static_cast<int>(vars);
      header = true;
      continue;
    }
    if (!header) throw ParseError("cnf: clause before header");
    std::istringstream all(line);
    long long lit = 0;
    while (all >> lit) {
      if (lit == 0) {
        if (clause.empty()) throw ParseError("cnf: empty clause");
        cnf.clauses.push_back(std::move(clause));
        clause.clear();
        continue;
      }
      if (std::llabs(lit) > cnf.num_vars) {
        throw ParseError("cnf: literal " + std::to_string(lit) +
                         " out of range");
      }
      clause.push_back(static_cast<int>(lit));
    }
    if (!all.eof()) throw ParseError("cnf: malformed clause line");
  }
  if (!header) throw ParseError("cnf: missing 'p cnf' header");
  if (!clause.empty()) cnf.clauses.push_back(std::move(clause));
  return cnf;
}

bool satisfies(const CnfInstance& cnf, std::span<const int> true_vars) {
  std::vector<char> value(cnf.num_vars + 1, 0);
  for (int v : true_vars) value[v] = 1;
  for (const auto& clause : cnf.clauses) {
    if (falsified(clause, value)) return false;
  }
  return true;
}

SatResult weighted_qcnf_sat(const CnfInstance& cnf) {
  if (cnf.k < 0) throw PreconditionError("weight bound k must be >= 0");
  WeightedSat solver(cnf);
  SatResult out;
  if (solver.search(0)) out.true_vars = solver.chosen();
  out.nodes = solver.nodes();
  return out;
}

}  // namespace distgi
