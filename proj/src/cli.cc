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

#include "distgi/cli.h"

#include <chrono>
#include <filesystem>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "distgi/colored_backends.h"
#include "distgi/deletion.h"
#include "distgi/graph.h"
#include "distgi/graph_io.h"
#include "distgi/iso_engine.h"
#include "distgi/oracle.h"
#include "distgi/recognition.h"
#include "distgi/search_games.h"
#include "json.hpp"

namespace distgi::cli {
namespace {

using nlohmann::json;

// Brute-force cross-checks are only attempted up to this many vertices.
constexpr int kOracleCheckLimit = 9;

struct Options {
  std::string format = "auto";
  std::string graph1, graph2;
  std::string param;
  int k = -1;
  bool certificate = false;
  bool deterministic = false;
  bool oracle_check = false;
  bool verify = false;
  bool count = false;
  std::string family;
  std::string family_file;
  std::string backend;
  std::string file;
  int k1 = 0, k2 = 0;
};

Graph load(const Options& opt, const std::string& path) {
  return read_graph_file(path, parse_format_name(opt.format));
}

ForbiddenFamily load_family(const Options& opt) {
  if (!opt.family_file.empty()) {
    const auto stem = std::filesystem::path(opt.family_file).stem().string();
    return parse_family(stem, read_file(opt.family_file));
  }
  if (opt.family.empty()) {
    throw PreconditionError("one of --family or --family-file is required");
  }
  return builtin_family(opt.family);
}

std::string format_set(const std::vector<Vertex>& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

int cmd_iso(const Options& opt, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  Parameterization p;
  if (!opt.family_file.empty()) {
    std::optional<Backend> backend;
    if (!opt.backend.empty()) backend = parse_backend_name(opt.backend);
    p = Parameterization::distance_to_class(load_family(opt), opt.k, backend);
  } else {
    if (opt.param.empty()) throw PreconditionError("--param is required");
    p = parse_parameterization(opt.param, opt.k);
    if (!opt.backend.empty()) p.backend = parse_backend_name(opt.backend);
  }
  const Graph g1 = load(opt, opt.graph1);
  const Graph g2 = load(opt, opt.graph2);

  EngineOptions engine;
  engine.deterministic = opt.deterministic;
  engine.verify = opt.verify;
  const Decision d = decide(g1, g2, p, engine);

  json report;
  report["verdict"] = verdict_name(d.verdict);
  report["param"] = parameterization_name(p);
  report["k"] = p.k;
  report["backend"] = backend_name(backend_for(p));
  report["n1"] = g1.num_vertices();
  report["n2"] = g2.num_vertices();
  if (!d.reason.empty()) report["reason"] = d.reason;
  if (!d.exceeded.empty()) report["exceeded"] = d.exceeded;
  report["anchor_size"] = d.stats.anchor_size;
  report["candidate_sets"] = d.stats.candidate_sets;
  report["bijections_tried"] = d.stats.bijections_tried;
  report["anchor_isomorphisms"] = d.stats.anchor_isomorphisms;
  report["backend_calls"] = d.stats.backend_calls;
  if (opt.certificate && d.verdict == Verdict::kIsomorphic) {
    report["witness"] = d.witness;
  }

  int code = d.verdict == Verdict::kIsomorphic      ? kAffirmative
             : d.verdict == Verdict::kNonIsomorphic ? kNegative
                                                    : kDistanceExceeded;
  if (opt.oracle_check) {
    if (d.verdict == Verdict::kDistanceExceeded ||
        g1.num_vertices() > kOracleCheckLimit) {
      report["oracle"] = "skipped";
    } else {
      const bool expected = oracle::brute_force_gi(g1, g2).isomorphic;
      const bool got = d.verdict == Verdict::kIsomorphic;
      const bool witness_ok = !got || verify_isomorphism(g1, g2, d.witness);
      if (expected == got && witness_ok) {
        report["oracle"] = "agree";
      } else {
        report["oracle"] = "disagree";
        code = kOracleDisagreement;
      }
    }
  }
  report["wall_time_ms"] = elapsed_ms(start);
  out << report.dump() << '\n';
  return code;
}

int cmd_recognize(const Options& opt, std::ostream& out) {
  const ForbiddenFamily family = load_family(opt);
  const Graph g = load(opt, opt.graph1);
  const auto occurrence = find_forbidden_occurrence(g, family);
  json report;
  report["family"] = family.name;
  report["n"] = g.num_vertices();
  report["member"] = !occurrence.has_value();
  if (occurrence) report["occurrence"] = *occurrence;
  out << report.dump() << '\n';
  return occurrence ? kNegative : kAffirmative;
}

int print_sets(const std::vector<DeletionSet>& sets, bool count_only,
               std::ostream& out) {
  if (count_only) {
    out << sets.size() << '\n';
  } else {
    for (const auto& s : sets) out << format_set(s.vertices) << '\n';
  }
  return sets.empty() ? kNegative : kAffirmative;
}

int cmd_deletion(const Options& opt, std::ostream& out) {
  const ForbiddenFamily family = load_family(opt);
  const Graph g = load(opt, opt.graph1);
  return print_sets(enumerate_deletion_sets(g, family, opt.k), opt.count, out);
}

int cmd_vc(const Options& opt, std::ostream& out) {
  const Graph g = load(opt, opt.graph1);
  return print_sets(enumerate_minimal_vertex_covers(g, opt.k), opt.count, out);
}

int cmd_oracle_iso(const Options& opt, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const Graph g1 = load(opt, opt.graph1);
  const Graph g2 = load(opt, opt.graph2);
  const IsoResult r = oracle::brute_force_gi(g1, g2);
  json report;
  report["verdict"] = r.isomorphic ? "isomorphic" : "non-isomorphic";
  report["n1"] = g1.num_vertices();
  report["n2"] = g2.num_vertices();
  if (r.isomorphic) report["witness"] = r.witness;
  report["wall_time_ms"] = elapsed_ms(start);
  out << report.dump() << '\n';
  return r.isomorphic ? kAffirmative : kNegative;
}

int cmd_game_hitting(const Options& opt, std::ostream& out) {
  HittingGameInstance game;
  try {
    game = parse_hitting_game(read_file(opt.file), opt.k1, opt.k2);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
  const GameOutcome r = player_one_wins(game);
  json report;
  report["player_one_wins"] = r.player_one_wins;
  if (r.winning_move) report["winning_move"] = game.universe[*r.winning_move];
  report["nodes"] = r.nodes;
  out << report.dump() << '\n';
  return r.player_one_wins ? kAffirmative : kNegative;
}

int cmd_sat(const Options& opt, std::ostream& out) {
  const CnfInstance cnf = parse_dimacs_cnf(read_file(opt.file), opt.k);
  const SatResult r = weighted_qcnf_sat(cnf);
  json report;
  report["satisfiable"] = r.true_vars.has_value();
  report["k"] = cnf.k;
  report["q"] = cnf.max_clause_width();
  if (r.true_vars) report["true_vars"] = *r.true_vars;
  report["nodes"] = r.nodes;
  out << report.dump() << '\n';
  return r.true_vars ? kAffirmative : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"Graph isomorphism parameterized by vertex-deletion distance",
               "distgi"};
  app.require_subcommand(1);
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "auto, graph6 or dimacs");
  };
  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--family", opt.family,
                    "cograph, cluster, threshold or edgeless");
    sub->add_option("--family-file", opt.family_file,
                    "one graph6 pattern per line");
  };

  CLI::App* iso = app.add_subcommand("iso", "decide isomorphism");
  iso->add_option("g1", opt.graph1)->required();
  iso->add_option("g2", opt.graph2)->required();
  iso->add_option("--param", opt.param,
                  "vc, twin-cover, dist-clique, dist-cograph, dist-cluster, "
                  "dist-threshold, dist-edgeless");
  iso->add_option("--k", opt.k)->required()->check(CLI::NonNegativeNumber);
  iso->add_flag("--certificate", opt.certificate, "print the vertex mapping");
  iso->add_flag("--deterministic", opt.deterministic,
                "sequential search, reproducible witness");
  iso->add_flag("--oracle-check", opt.oracle_check,
                "cross-check against brute force when n <= 9");
  iso->add_flag("--verify", opt.verify, "verify the witness before printing");
  iso->add_option("--family-file", opt.family_file,
                  "custom forbidden family (one graph6 pattern per line)");
  iso->add_option("--backend", opt.backend, "independent, cluster or cograph");
  add_format(iso);

  CLI::App* recognize = app.add_subcommand("recognize", "test class membership");
  recognize->add_option("g", opt.graph1)->required();
  add_family(recognize);
  add_format(recognize);

  CLI::App* deletion =
      app.add_subcommand("deletion", "list minimal deletion sets of size <= k");
  deletion->add_option("g", opt.graph1)->required();
  add_family(deletion);
  deletion->add_option("--k", opt.k)->required()->check(CLI::NonNegativeNumber);
  deletion->add_flag("--count", opt.count, "print only the number of sets");
  add_format(deletion);

  CLI::App* vc =
      app.add_subcommand("vc", "list minimal vertex covers of size <= k");
  vc->add_option("g", opt.graph1)->required();
  vc->add_option("--k", opt.k)->required()->check(CLI::NonNegativeNumber);
  vc->add_flag("--count", opt.count, "print only the number of covers");
  add_format(vc);

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force reference");
  oracle_cmd->require_subcommand(1);
  CLI::App* oracle_iso = oracle_cmd->add_subcommand("iso", "brute-force GI");
  oracle_iso->add_option("g1", opt.graph1)->required();
  oracle_iso->add_option("g2", opt.graph2)->required();
  add_format(oracle_iso);

  CLI::App* game = app.add_subcommand("game", "alternating search games");
  game->require_subcommand(1);
  CLI::App* hitting =
      game->add_subcommand("hitting", "alternating hitting set game");
  hitting->add_option("--file", opt.file, "one set per line")->required();
  hitting->add_option("--k1", opt.k1, "max set size")->required();
  hitting->add_option("--k2", opt.k2, "move budget")->required();

  CLI::App* sat = app.add_subcommand("sat", "weight <= k CNF satisfiability");
  sat->add_option("--dimacs-cnf", opt.file)->required();
  sat->add_option("--k", opt.k)->required()->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kAffirmative;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kAffirmative;
  } catch (const CLI::ParseError& e) {
    err << "distgi: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*iso) return cmd_iso(opt, out);
    if (*recognize) return cmd_recognize(opt, out);
    if (*deletion) return cmd_deletion(opt, out);
    if (*vc) return cmd_vc(opt, out);
    if (*oracle_iso) return cmd_oracle_iso(opt, out);
    if (*hitting) return cmd_game_hitting(opt, out);
    if (*sat) return cmd_sat(opt, out);
  } catch (const ParseError& e) {
    err << "distgi: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "distgi: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::logic_error& e) {
    err << "distgi: internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const std::runtime_error& e) {
    err << "distgi: " << e.what() << '\n';
    return kInputError;
  }
  err << "distgi: no subcommand\n";
  return kUsageError;
}

}  // namespace distgi::cli
