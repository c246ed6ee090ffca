// Copyright 2026 The spinrel Authors
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

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <ostream>
#include <sstream>

#include "spinrel/algebra.hpp"
#include "spinrel/dense.hpp"
#include "spinrel/error.hpp"
#include "spinrel/hall_basis.hpp"
#include "spinrel/linsolve.hpp"
#include "spinrel/relation_io.hpp"
#include "spinrel/wigner.hpp"

#ifndef SPINREL_DEFAULT_CORPUS
#define SPINREL_DEFAULT_CORPUS "data/relation_h6.alg"
#endif

namespace spinrel::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

void emit(std::ostream& out, const ordered_json& j) { out << j.dump(2) << "\n"; }

int max_label(const BracketTree& t) {
  if (t.is_leaf()) return t.spin();
  return std::max({t.spin(), max_label(t.left()), max_label(t.right())});
}

BracketTree parse_checked_tree(const std::string& text, const RunConfig& config) {
  BracketTree t = parse_tree(text);
  TreeReport report = check_tree(t);
  for (const auto& issue : report.issues)
    if (issue.kind == TreeIssue::Kind::kTriangle)
      throw DomainError("triangle violation at " + issue.path + ": " + issue.message);
  if (max_label(t) > config.max_spin)
    throw LimitError("spin label above --max-spin " + std::to_string(config.max_spin));
  return t;
}

ordered_json word_poly_json(const WordPoly& w) {
  ordered_json words = ordered_json::array();
  for (const auto& [word, coeff] : w.terms())
    words.push_back({{"word", word_to_string(word)}, {"coefficient", coeff.to_string()}});
  return words;
}

// ---- validate -------------------------------------------------------------

int cmd_validate(const RunConfig& config, const std::string& path, std::ostream& out) {
  auto start = std::chrono::steady_clock::now();
  RelationCorpus corpus = load_corpus(path);
  BlockReport block = validate(corpus, config.threads);
  CovarianceReport cov = covariance_check(corpus, config.threads);
  bool ok = block.ok() && cov.ok();
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (config.format == Format::kStructured) {
    out << to_json(block, cov);
  } else {
    out << "corpus: " << path << "\n" << to_text(block) << to_text(cov);
    std::ostringstream t;
    t.precision(3);
    t << std::fixed << seconds;
    out << "time: " << t.str() << " s\n";
    out << "result: " << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? kExitOk : kExitViolation;
}

// ---- expand / act ---------------------------------------------------------

int cmd_expand(const RunConfig& config, const std::string& text, int m, std::ostream& out) {
  BracketTree t = parse_checked_tree(text, config);
  WordPoly w = expand(t, m);
  if (config.format == Format::kStructured) {
    emit(out, {{"tree", t.to_string()},
               {"m", m},
               {"grade", t.grade()},
               {"spin_parity", spin_parity(t).to_string()},
               {"words", word_poly_json(w)}});
  } else {
    out << w.dump();
  }
  return kExitOk;
}

int cmd_act(const RunConfig& config, const std::string& op_name, const std::string& text,
            int m, std::ostream& out) {
  auto op = parse_spin_op(op_name);
  if (!op) throw DomainError("unknown operator '" + op_name + "' (J3, Jplus, Jminus)");
  BracketTree t = parse_checked_tree(text, config);
  WordPoly w = act(*op, expand(t, m));
  if (config.format == Format::kStructured) {
    emit(out, {{"operator", spin_op_name(*op)},
               {"tree", t.to_string()},
               {"m", m},
               {"words", word_poly_json(w)}});
  } else {
    out << w.dump();
  }
  return kExitOk;
}

// ---- enumerate ------------------------------------------------------------

std::vector<GeneratorId> parse_alphabet(const std::string& text) {
  std::vector<GeneratorId> out;
  std::stringstream ss(text);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (name.empty()) continue;
    auto g = find_generator(name);
    if (!g) throw DomainError("unknown generator '" + name + "'");
    out.push_back(*g);
  }
  return out;
}

int cmd_enumerate(const RunConfig& config, int grade, int spin, const std::string& parity,
                  bool pure, const std::string& alphabet, std::size_t limit,
                  std::ostream& out) {
  SpinParitySlice slice;
  slice.grade = grade;
  slice.spin = spin;
  if (parity == "+")
    slice.parity = Parity::kPlus;
  else if (parity == "-")
    slice.parity = Parity::kMinus;
  else
    throw DomainError("parity must be + or -");
  slice.alphabet = parse_alphabet(alphabet);
  EnumerateOptions options;
  options.max_leaves = config.max_leaves;
  options.pure_commutators = pure;
  options.max_trees = limit;
  options.threads = config.threads;
  auto trees = enumerate(slice, options);
  if (config.format == Format::kStructured) {
    ordered_json list = ordered_json::array();
    for (const auto& t : trees) list.push_back(t.to_string());
    emit(out, {{"grade", grade},
               {"spin_parity", std::to_string(spin) + parity},
               {"max_leaves", config.max_leaves},
               {"pure_commutators", pure},
               {"count", trees.size()},
               {"trees", std::move(list)}});
  } else {
    out << "# grade " << grade << ", spin-parity " << spin << parity << ", at most "
        << config.max_leaves << " leaves: " << trees.size() << " trees\n";
    for (const auto& t : trees) out << t.to_string() << "\n";
  }
  return kExitOk;
}

// ---- rank / solve / nullspace ---------------------------------------------

int cmd_rank(const RunConfig& config, const std::string& relation_file,
             const std::string& matrix_file, const std::string& oracle, std::ostream& out,
             std::ostream& err) {
  if (relation_file.empty() == matrix_file.empty()) {
    err << "rank: give exactly one of --file or --matrix\n";
    return kExitError;
  }
  if (!relation_file.empty()) {
    RelationCorpus corpus = load_corpus(relation_file);
    std::vector<BracketTree> trees;
    for (const auto& t : corpus.terms) trees.push_back(t.term.tree);
    RankSelection sel = rank_select(trees, config.threads);
    if (config.format == Format::kStructured) {
      ordered_json idx = ordered_json::array();
      for (auto k : sel.independent) idx.push_back(k + 1);
      emit(out, {{"source", relation_file},
                 {"candidates", trees.size()},
                 {"coordinates", sel.coordinates},
                 {"free_envelope_rank", sel.rank},
                 {"independent_terms", std::move(idx)}});
    } else {
      out << "candidates: " << trees.size() << "\n";
      out << "word coordinates: " << sel.coordinates << "\n";
      out << "free-envelope rank: " << sel.rank << "\n";
      out << "independent terms:";
      for (auto k : sel.independent) out << " " << k + 1;
      out << "\n";
    }
    return kExitOk;
  }
  SparseSystem s = load_matrix(matrix_file);
  std::size_t r = rank(s, config.threads);
  std::optional<std::size_t> dense_rank;
  if (oracle == "dense") dense_rank = rank_bareiss(to_dense(s, config.dense_limit));
  bool agree = !dense_rank || *dense_rank == r;
  if (config.format == Format::kStructured) {
    ordered_json j{{"rows", s.rows()}, {"cols", s.cols()}, {"rank", r}};
    if (dense_rank) {
      j["dense_rank"] = *dense_rank;
      j["oracle_agrees"] = agree;
    }
    emit(out, j);
  } else {
    out << "rank: " << r << "\n";
    if (dense_rank)
      out << "dense oracle rank: " << *dense_rank << (agree ? " (agrees)" : " (MISMATCH)")
          << "\n";
  }
  return agree ? kExitOk : kExitViolation;
}

SolveMethod parse_method(const std::string& m) {
  if (m == "auto") return SolveMethod::kAuto;
  if (m == "sparse") return SolveMethod::kSparse;
  if (m == "padic") return SolveMethod::kPadic;
  throw DomainError("unknown method '" + m + "' (auto, sparse, padic)");
}

int cmd_solve(const RunConfig& config, const std::string& file, const std::string& method,
              const std::string& oracle, std::ostream& out) {
  SparseSystem s = load_matrix(file);
  SolveOptions options;
  options.method = parse_method(method);
  options.threads = config.threads;
  SolveResult result = solve(s, options);
  std::optional<bool> agree;
  if (oracle == "dense") {
    SolveResult d = solve_bareiss(s, config.dense_limit);
    agree = d.status == result.status && d.rank == result.rank &&
            (result.status != SolveStatus::kUnique || d.solutions == result.solutions);
  }
  if (config.format == Format::kStructured) {
    ordered_json j{{"status", solve_status_name(result.status)},
                   {"rank", result.rank},
                   {"method", result.method}};
    j["free_columns"] = result.free_columns;
    j["inconsistent_row"] = result.inconsistent_row ? ordered_json(*result.inconsistent_row)
                                                    : ordered_json(nullptr);
    ordered_json sols = ordered_json::array();
    for (const auto& x : result.solutions) {
      ordered_json col = ordered_json::array();
      for (const auto& v : x) col.push_back(v.to_string());
      sols.push_back(std::move(col));
    }
    j["solutions"] = std::move(sols);
    if (agree) j["oracle_agrees"] = *agree;
    emit(out, j);
  } else {
    out << "status: " << solve_status_name(result.status) << "\n";
    out << "rank: " << result.rank << "\n";
    out << "method: " << result.method << "\n";
    if (!result.free_columns.empty()) {
      out << "free columns:";
      for (auto c : result.free_columns) out << " " << c;
      out << "\n";
    }
    if (result.inconsistent_row)
      out << "inconsistent row: " << *result.inconsistent_row << " (rhs "
          << *result.inconsistent_rhs << ")\n";
    for (std::size_t k = 0; k < result.solutions.size(); ++k)
      for (std::size_t j = 0; j < result.solutions[k].size(); ++j) {
        if (result.solutions.size() > 1)
          out << "x[" << j << "][" << k << "] = ";
        else
          out << "x[" << j << "] = ";
        out << result.solutions[k][j].to_string() << "\n";
      }
    if (agree) out << "dense oracle: " << (*agree ? "agrees" : "MISMATCH") << "\n";
  }
  if (result.status == SolveStatus::kInconsistent) return kExitViolation;
  if (agree && !*agree) return kExitViolation;
  return kExitOk;
}

int cmd_nullspace(const RunConfig& config, const std::string& file, const std::string& oracle,
                  std::ostream& out) {
  SparseSystem s = load_matrix(file).matrix_only();
  auto basis = nullspace(s, config.threads);
  bool annihilated = true;
  for (const auto& v : basis)
    for (const auto& e : s.multiply(v)) annihilated = annihilated && e.is_zero();
  std::optional<bool> agree;
  if (oracle == "dense")
    agree = s.cols() - rank_bareiss(to_dense(s, config.dense_limit)) == basis.size();
  if (config.format == Format::kStructured) {
    ordered_json vecs = ordered_json::array();
    for (const auto& v : basis) {
      ordered_json entries = ordered_json::object();
      for (std::size_t j = 0; j < v.size(); ++j)
        if (!v[j].is_zero()) entries[std::to_string(j)] = v[j].to_string();
      vecs.push_back(std::move(entries));
    }
    ordered_json j{{"cols", s.cols()}, {"dimension", basis.size()},
                   {"verified", annihilated}, {"basis", std::move(vecs)}};
    if (agree) j["oracle_agrees"] = *agree;
    emit(out, j);
  } else {
    out << "dimension: " << basis.size() << "\n";
    for (std::size_t k = 0; k < basis.size(); ++k) {
      out << "v" << k << ":";
      for (std::size_t j = 0; j < basis[k].size(); ++j)
        if (!basis[k][j].is_zero()) out << " " << j << "=" << basis[k][j].to_string();
      out << "\n";
    }
    out << "A v = 0: " << (annihilated ? "verified" : "FAILED") << "\n";
    if (agree) out << "dense oracle: " << (*agree ? "agrees" : "MISMATCH") << "\n";
  }
  return annihilated && (!agree || *agree) ? kExitOk : kExitViolation;
}

// ---- cg / witt ------------------------------------------------------------

int parse_spin_arg(const std::string& text, const char* what) {
  if (text.find('/') != std::string::npos || text.find('.') != std::string::npos)
    throw DomainError(std::string(what) + " = " + text +
                      ": half-integer spins are not supported");
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty())
    throw DomainError(std::string(what) + " must be an integer, got '" + text + "'");
  return v;
}

int cmd_cg(const RunConfig& config, const std::vector<std::string>& args, bool ladder,
           std::ostream& out) {
  static const char* names[] = {"j1", "m1", "j2", "m2", "j", "m"};
  int v[6];
  for (int i = 0; i < 6; ++i) v[i] = parse_spin_arg(args[i], names[i]);
  CgKey key{v[0], v[1], v[2], v[3], v[4], v[5]};
  if (v[0] < 0 || v[2] < 0 || v[4] < 0) throw DomainError("spins must be non-negative");
  if (std::max({v[0], v[2], v[4]}) > config.max_spin)
    throw LimitError("spin above --max-spin " + std::to_string(config.max_spin));
  RadNum value = ladder ? cg_ladder(key) : cg(key);
  if (config.format == Format::kStructured) {
    emit(out, {{"key", {v[0], v[1], v[2], v[3], v[4], v[5]}},
               {"method", ladder ? "ladder" : "racah"},
               {"value", value.to_string()}});
  } else {
    out << value.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_witt(const RunConfig& config, long k, long n, std::ostream& out) {
  mpz_class w = witt(k, n);
  if (config.format == Format::kStructured)
    emit(out, {{"k", k}, {"n", n}, {"witt", w.get_str()}});
  else
    out << w.get_str() << "\n";
  return kExitOk;
}

int cmd_selfcheck(const RunConfig& config, const std::string& corpus, std::ostream& out) {
  auto lines = selfcheck(corpus, config.threads);
  bool ok = true;
  for (const auto& l : lines) ok = ok && l.passed;
  if (config.format == Format::kStructured) {
    ordered_json checks = ordered_json::array();
    for (const auto& l : lines)
      checks.push_back({{"name", l.name}, {"passed", l.passed}, {"detail", l.detail}});
    emit(out, {{"checks", std::move(checks)}, {"ok", ok}});
  } else {
    for (const auto& l : lines) {
      out << (l.passed ? "PASS " : "FAIL ") << l.name;
      if (!l.detail.empty()) out << ": " << l.detail;
      out << "\n";
    }
    out << "result: " << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? kExitOk : kExitViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact so(3)-covariant bracket calculus", "spinrel"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "human";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"human", "structured"}));
  app.add_option("--threads", config.threads,
                 "Worker threads (0: $SPINREL_THREADS or hardware concurrency)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--max-spin", config.max_spin, "Largest accepted spin label")
      ->check(CLI::Range(0, 8));
  app.add_option("--dense-limit", config.dense_limit, "Largest dense oracle dimension")
      ->check(CLI::PositiveNumber);

  std::function<int()> action;

  std::string corpus_path = SPINREL_DEFAULT_CORPUS;
  auto* validate_cmd = app.add_subcommand("validate", "Validate a relation file");
  validate_cmd->add_option("file", corpus_path, "Relation file (default: shipped corpus)");
  validate_cmd->callback([&] {
    action = [&] { return cmd_validate(config, corpus_path, out); };
  });

  std::string tree_text;
  int m = 0;
  auto* expand_cmd = app.add_subcommand("expand", "Expand a bracket tree component");
  expand_cmd->add_option("tree", tree_text, "Bracket expression")->required();
  expand_cmd->add_option("--m", m, "Projection");
  expand_cmd->callback([&] { action = [&] { return cmd_expand(config, tree_text, m, out); }; });

  std::string op;
  auto* act_cmd = app.add_subcommand("act", "Apply J3, Jplus or Jminus to an expansion");
  act_cmd->add_option("op", op, "J3, Jplus or Jminus")->required();
  act_cmd->add_option("tree", tree_text, "Bracket expression")->required();
  act_cmd->add_option("--m", m, "Projection");
  act_cmd->callback([&] { action = [&] { return cmd_act(config, op, tree_text, m, out); }; });

  int grade = 0;
  int spin = 0;
  std::string parity = "+";
  bool pure = false;
  std::string alphabet;
  std::size_t limit = 2'000'000;
  auto* enum_cmd = app.add_subcommand("enumerate", "List bracket monomials of a slice");
  enum_cmd->add_option("--grade", grade, "Target grade")->required()->check(CLI::PositiveNumber);
  enum_cmd->add_option("--spin", spin, "Target spin")->required()->check(CLI::NonNegativeNumber);
  enum_cmd->add_option("--parity", parity, "+ or -")->required();
  enum_cmd->add_option("--max-leaves", config.max_leaves, "Leaf bound")
      ->check(CLI::Range(1, 8));
  enum_cmd->add_flag("--pure", pure, "Commutators only");
  enum_cmd->add_option("--alphabet", alphabet, "Comma-separated generators");
  enum_cmd->add_option("--limit", limit, "Resource limit on generated trees")
      ->check(CLI::PositiveNumber);
  enum_cmd->callback([&] {
    action = [&] {
      return cmd_enumerate(config, grade, spin, parity, pure, alphabet, limit, out);
    };
  });

  std::string relation_file;
  std::string matrix_file;
  std::string oracle;
  auto* rank_cmd = app.add_subcommand("rank", "Free-envelope rank or matrix rank");
  rank_cmd->add_option("--file", relation_file, "Relation file; its trees are the candidates");
  rank_cmd->add_option("--matrix", matrix_file, "Matrix file");
  rank_cmd->add_option("--oracle", oracle, "Cross-check")->check(CLI::IsMember({"dense"}));
  rank_cmd->callback([&] {
    action = [&] { return cmd_rank(config, relation_file, matrix_file, oracle, out, err); };
  });

  std::string method = "auto";
  auto* solve_cmd = app.add_subcommand("solve", "Solve a linear system");
  solve_cmd->add_option("file", matrix_file, "Matrix file")->required();
  solve_cmd->add_option("--method", method, "auto, sparse or padic");
  solve_cmd->add_option("--oracle", oracle, "Cross-check")->check(CLI::IsMember({"dense"}));
  solve_cmd->callback([&] {
    action = [&] { return cmd_solve(config, matrix_file, method, oracle, out); };
  });

  auto* null_cmd = app.add_subcommand("nullspace", "Null-space basis of a matrix");
  null_cmd->add_option("file", matrix_file, "Matrix file")->required();
  null_cmd->add_option("--oracle", oracle, "Cross-check")->check(CLI::IsMember({"dense"}));
  null_cmd->callback([&] {
    action = [&] { return cmd_nullspace(config, matrix_file, oracle, out); };
  });

  std::vector<std::string> cg_args;
  bool ladder = false;
  auto* cg_cmd = app.add_subcommand("cg", "Clebsch-Gordan coefficient <j1 m1; j2 m2 | j m>");
  cg_cmd->add_option("indices", cg_args, "j1 m1 j2 m2 j m")->required()->expected(6);
  cg_cmd->add_flag("--ladder", ladder, "Use the ladder construction");
  cg_cmd->callback([&] { action = [&] { return cmd_cg(config, cg_args, ladder, out); }; });

  long wk = 0;
  long wn = 0;
  auto* witt_cmd = app.add_subcommand("witt", "Witt dimension for k letters, degree n");
  witt_cmd->add_option("k", wk, "Alphabet size")->required()->check(CLI::Range(1L, 1000L));
  witt_cmd->add_option("n", wn, "Degree")->required()->check(CLI::Range(1L, 1000L));
  witt_cmd->callback([&] { action = [&] { return cmd_witt(config, wk, wn, out); }; });

  std::string selfcheck_corpus = SPINREL_DEFAULT_CORPUS;
  auto* self_cmd = app.add_subcommand("selfcheck", "Run the property suite");
  self_cmd->add_option("--corpus", selfcheck_corpus, "Relation file");
  self_cmd->callback([&] {
    action = [&] { return cmd_selfcheck(config, selfcheck_corpus, out); };
  });

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }
  config.format = format == "structured" ? Format::kStructured : Format::kHuman;
  try {
    return action ? action() : kExitError;
  } catch (const spinrel::Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace spinrel::cli
