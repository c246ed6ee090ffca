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

#include "spinrel/relation_io.hpp"

#include <fstream>
#include <sstream>

#include "spinrel/coefficient_text.hpp"
#include "spinrel/error.hpp"
#include "spinrel/parallel.hpp"

namespace spinrel {

Relation RelationCorpus::relation() const {
  Relation r;
  r.terms.reserve(terms.size());
  for (const auto& t : terms) r.terms.push_back(t.term);
  return r;
}

namespace {

std::string_view trim(std::string_view s) {
  std::size_t b = 0;
  while (b < s.size() && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  std::size_t e = s.size();
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return s.substr(b, e - b);
}

std::optional<int> parse_marker(std::string_view line, std::size_t line_no) {
  constexpr std::string_view kPrefix = "## grade";
  if (line.substr(0, kPrefix.size()) != kPrefix) return std::nullopt;
  TextCursor cursor(line, line_no);
  cursor.set_pos(kPrefix.size());
  auto digits = cursor.read_digits();
  if (digits.size() > 4) cursor.fail("grade too large");
  if (cursor.peek() != '\0') cursor.fail("unexpected text after grade marker");
  return std::stoi(std::string(digits));
}

}  // namespace

RelationCorpus parse_corpus(std::string_view text) {
  RelationCorpus corpus;
  std::optional<int> block;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (auto g = parse_marker(line, line_no)) block = g;
      continue;
    }
    std::string note;
    std::size_t hash = raw.find('#');
    std::string_view body = raw;
    if (hash != std::string_view::npos) {
      note = std::string(trim(raw.substr(hash + 1)));
      body = raw.substr(0, hash);
    }
    TextCursor cursor(body, line_no);
    ParamPoly coeff = parse_coefficient(
        cursor, [](TextCursor& c) { return starts_tree(c); });
    cursor.expect('*');
    std::size_t tree_pos = cursor.pos();
    BracketTree tree = parse_tree(cursor);
    if (cursor.peek() != '\0') cursor.fail("unexpected trailing input");
    TreeReport report = check_tree(tree);
    if (!report.valid()) {
      cursor.set_pos(tree_pos);
      cursor.skip_space();
      for (const auto& issue : report.issues) {
        if (issue.kind == TreeIssue::Kind::kTriangle)
          cursor.fail("term " + std::to_string(corpus.terms.size() + 1) +
                      ": triangle violation at " + issue.path + ": " +
                      issue.message);
      }
    }
    corpus.terms.push_back({Term{std::move(coeff), std::move(tree)}, block,
                            std::move(note), line_no});
  }
  return corpus;
}

RelationCorpus load_corpus(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str());
}

std::string serialize(const RelationCorpus& corpus) {
  std::string out;
  std::optional<int> block;
  bool first = true;
  for (const auto& t : corpus.terms) {
    if (t.block_grade != block) {
      if (t.block_grade) {
        if (!first) out += '\n';
        out += "## grade " + std::to_string(*t.block_grade) + "\n";
      }
      block = t.block_grade;
    }
    first = false;
    std::string coeff = t.term.coefficient.to_string();
    if (coeff.find(' ') != std::string::npos) coeff = "(" + coeff + ")";
    out += coeff;
    out += " * ";
    out += t.term.tree.to_string();
    if (!t.note.empty()) {
      out += "  # ";
      out += t.note;
    }
    out += '\n';
  }
  return out;
}

namespace {

bool is_b_leaf(const BracketTree& t) {
  return t.is_leaf() && generator_info(t.generator()).family == Family::kAbelian;
}

bool is_jj_scalar(const BracketTree& t) {
  return t.kind() == NodeKind::kAcom && t.spin() == 0 && t.left().is_leaf() &&
         t.right().is_leaf() && t.left().generator() == kJ1 &&
         t.right().generator() == kJ1;
}

std::string degree_summary(const ParamPoly& p) {
  return "deg(f)=" + std::to_string(p.degree(Param::kF)) +
         " deg(g1)=" + std::to_string(p.degree(Param::kG1)) +
         " deg(g2)=" + std::to_string(p.degree(Param::kG2)) +
         " total=" + std::to_string(p.total_degree());
}

bool mixes_f_and_g2(const ParamPoly& p) {
  for (const auto& [mono, c] : p.terms())
    if (mono.degree(Param::kF) > 0 && mono.degree(Param::kG2) > 0) return true;
  return false;
}

}  // namespace

BlockReport validate(const RelationCorpus& corpus, int threads) {
  BlockReport report;
  report.term_count = corpus.terms.size();
  auto add = [&](Clause c, std::size_t k, std::string msg) {
    std::size_t line = k == 0 ? 0 : corpus.terms[k - 1].line;
    report.violations.push_back({c, k, line, std::move(msg)});
  };

  auto tree_reports = parallel_map(
      corpus.terms.size(),
      resolve_threads(static_cast<unsigned>(threads < 0 ? 0 : threads)),
      [&](std::size_t k) { return check_tree(corpus.terms[k].term.tree); });

  std::size_t b1_terms = 0;
  std::size_t jj_terms = 0;
  for (std::size_t i = 0; i < corpus.terms.size(); ++i) {
    std::size_t k = i + 1;
    const CorpusTerm& ct = corpus.terms[i];
    const BracketTree& tree = ct.term.tree;
    const ParamPoly& coeff = ct.term.coefficient;
    int g = tree.grade();
    bool b_leaf = is_b_leaf(tree);

    GradeBlock& block = report.grades[g];
    ++block.terms;
    if (b_leaf) ++block.b_terms;
    for (int p = 0; p < kParamCount; ++p)
      block.max_degree[p] =
          std::max(block.max_degree[p], coeff.degree(static_cast<Param>(p)));
    block.max_total_degree = std::max(block.max_total_degree, coeff.total_degree());

    for (const auto& issue : tree_reports[i].issues)
      add(Clause::kTree, k, issue.path + ": " + issue.message);

    if (tree.spin() != 0 || tree.parity() != Parity::kPlus)
      add(Clause::kSpinParity, k,
          "spin-parity " + spin_parity(tree).to_string() + ", expected 0+");

    if (ct.block_grade && *ct.block_grade != g)
      add(Clause::kBlockMarker, k,
          "grade " + std::to_string(g) + " under marker for grade " +
              std::to_string(*ct.block_grade));

    if (coeff.is_zero()) add(Clause::kTree, k, "zero coefficient");

    if (g % 2 != 0) {
      add(Clause::kGrading, k,
          "odd grade " + std::to_string(g) + " breaks the Z2 grading");
      continue;
    }
    if (g != 6 && g != 4 && g != 2) {
      add(Clause::kGrading, k, "grade " + std::to_string(g) + " outside {6, 4, 2}");
      continue;
    }

    if (g == 6) {
      if (!coeff.is_constant())
        add(Clause::kLeadingParams, k, "parameter-dependent coefficient, " +
                                           degree_summary(coeff));
    } else if (g == 4) {
      if (b_leaf) {
        if (tree.generator() != b_generator(3)) {
          add(Clause::kB3, k, "unexpected B-term " + tree.to_string());
          continue;
        }
        ++report.b3_terms;
        if (!report.b3_coefficient) report.b3_coefficient = coeff;
        if (!coeff.is_constant())
          add(Clause::kB3, k, "B3 coefficient depends on parameters, " +
                                  degree_summary(coeff));
        else if (coeff.is_zero())
          add(Clause::kB3, k, "B3 coefficient vanishes");
      } else {
        ++report.u_terms_grade4;
        if (coeff.degree(Param::kF) > 1 || coeff.degree(Param::kG1) != 0 ||
            coeff.degree(Param::kG2) != 0 || coeff.total_degree() > 1)
          add(Clause::kUTermParams, k,
              "coefficient not affine in f alone, " + degree_summary(coeff));
      }
    } else {
      if (is_jj_scalar(tree)) {
        ++jj_terms;
        if (!report.jj_coefficient) report.jj_coefficient = coeff;
        if (coeff.degree(Param::kF) != 2 || coeff.degree(Param::kG2) != 1 ||
            coeff.degree(Param::kG1) != 0 || mixes_f_and_g2(coeff))
          add(Clause::kGrade2, k,
              "{J1,J1} coefficient must be quadratic in f and linear in g2, " +
                  degree_summary(coeff));
      } else if (b_leaf && tree.generator() == b_generator(1)) {
        ++b1_terms;
        if (!report.b1_coefficient) report.b1_coefficient = coeff;
        if (coeff.degree(Param::kF) != 1 || coeff.degree(Param::kG1) != 1 ||
            coeff.degree(Param::kG2) != 0 || coeff.total_degree() != 1)
          add(Clause::kGrade2, k,
              "B1 coefficient must be affine in f and g1, " + degree_summary(coeff));
      } else {
        add(Clause::kGrade2, k, "unexpected grade-2 term " + tree.to_string());
      }
    }
  }

  if (report.u_terms_grade4 != 11)
    add(Clause::kUTermParams, 0,
        "expected 11 grade-4 non-B terms, found " +
            std::to_string(report.u_terms_grade4));
  if (report.b3_terms != 1)
    add(Clause::kB3, 0,
        "expected one B3 term, found " + std::to_string(report.b3_terms));
  if (jj_terms != 1)
    add(Clause::kGrade2, 0,
        "expected one {J1,J1} term, found " + std::to_string(jj_terms));
  if (b1_terms != 1)
    add(Clause::kGrade2, 0,
        "expected one B1 term, found " + std::to_string(b1_terms));
  return report;
}

CovarianceReport covariance_check(const RelationCorpus& corpus, int threads) {
  CovarianceReport report;
  unsigned n_threads =
      resolve_threads(static_cast<unsigned>(threads < 0 ? 0 : threads));
  report.entries = parallel_map(corpus.terms.size(), n_threads, [&](std::size_t i) {
    const CorpusTerm& ct = corpus.terms[i];
    CovarianceEntry e;
    e.term = i + 1;
    e.line = ct.line;
    const BracketTree& tree = ct.term.tree;
    if (tree.spin() != 0) return e;
    WordPoly w = expand(tree, 0);
    e.words = w.size();
    e.plus_annihilates = act(SpinOp::kJplus, w).is_zero();
    e.minus_annihilates = act(SpinOp::kJminus, w).is_zero();
    return e;
  });
  for (const auto& e : report.entries)
    if (!e.ok()) ++report.failures;
  try {
    report.relation_words = expand_relation(corpus.relation(), 0, threads).size();
  } catch (const DomainError&) {
  }
  return report;
}

}  // namespace spinrel
