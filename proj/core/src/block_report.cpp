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

#include "spinrel/block_report.hpp"

#include <json.hpp>

namespace spinrel {

using ordered_json = nlohmann::ordered_json;

const char* clause_name(Clause c) {
  switch (c) {
    case Clause::kSpinParity:
      return "spin-parity";
    case Clause::kGrading:
      return "grading";
    case Clause::kLeadingParams:
      return "leading-parameters";
    case Clause::kUTermParams:
      return "u-term-parameters";
    case Clause::kB3:
      return "b3-coefficient";
    case Clause::kGrade2:
      return "grade2-block";
    case Clause::kTree:
      return "tree";
    case Clause::kBlockMarker:
      return "block-marker";
  }
  return "?";
}

std::size_t BlockReport::count(Clause c) const {
  std::size_t n = 0;
  for (const auto& v : violations) n += v.clause == c;
  return n;
}

namespace {

std::string poly_or_none(const std::optional<ParamPoly>& p) {
  return p ? p->to_string() : "none";
}

ordered_json poly_json(const std::optional<ParamPoly>& p) {
  return p ? ordered_json(p->to_string()) : ordered_json(nullptr);
}

ordered_json block_json(const BlockReport& r) {
  ordered_json j;
  j["terms"] = r.term_count;
  ordered_json grades = ordered_json::array();
  for (const auto& [g, b] : r.grades) {
    grades.push_back({{"grade", g},
                      {"terms", b.terms},
                      {"b_terms", b.b_terms},
                      {"deg_f", b.max_degree[0]},
                      {"deg_g1", b.max_degree[1]},
                      {"deg_g2", b.max_degree[2]},
                      {"total_degree", b.max_total_degree}});
  }
  j["grades"] = std::move(grades);
  j["grade4_u_terms"] = r.u_terms_grade4;
  j["grade4_b3_terms"] = r.b3_terms;
  j["b3_coefficient"] = poly_json(r.b3_coefficient);
  j["b1_coefficient"] = poly_json(r.b1_coefficient);
  j["jj_coefficient"] = poly_json(r.jj_coefficient);
  ordered_json vs = ordered_json::array();
  for (const auto& v : r.violations) {
    vs.push_back({{"clause", clause_name(v.clause)},
                  {"term", v.term},
                  {"line", v.line},
                  {"message", v.message}});
  }
  j["violations"] = std::move(vs);
  j["ok"] = r.ok();
  return j;
}

ordered_json covariance_json(const CovarianceReport& r) {
  ordered_json j;
  j["terms"] = r.entries.size();
  j["failures"] = r.failures;
  j["relation_words"] =
      r.relation_words ? ordered_json(*r.relation_words) : ordered_json(nullptr);
  ordered_json failed = ordered_json::array();
  for (const auto& e : r.entries) {
    if (e.ok()) continue;
    failed.push_back({{"term", e.term},
                      {"line", e.line},
                      {"jplus", e.plus_annihilates},
                      {"jminus", e.minus_annihilates}});
  }
  j["failed_terms"] = std::move(failed);
  j["ok"] = r.ok();
  return j;
}

}  // namespace

std::string to_text(const BlockReport& r) {
  std::string out;
  out += "terms: " + std::to_string(r.term_count) + "\n";
  for (const auto& [g, b] : r.grades) {
    out += "grade " + std::to_string(g) + ": " + std::to_string(b.terms) +
           " terms (" + std::to_string(b.b_terms) + " B), deg(f)=" +
           std::to_string(b.max_degree[0]) +
           " deg(g1)=" + std::to_string(b.max_degree[1]) +
           " deg(g2)=" + std::to_string(b.max_degree[2]) + "\n";
  }
  out += "grade-4 U-terms: " + std::to_string(r.u_terms_grade4) + "\n";
  out += "grade-4 B3 terms: " + std::to_string(r.b3_terms) + "\n";
  out += "B3 coefficient: " + poly_or_none(r.b3_coefficient) + "\n";
  out += "B1 coefficient: " + poly_or_none(r.b1_coefficient) + "\n";
  out += "{J1,J1} coefficient: " + poly_or_none(r.jj_coefficient) + "\n";
  out += "violations: " + std::to_string(r.violations.size()) + "\n";
  for (const auto& v : r.violations) {
    out += "  [" + std::string(clause_name(v.clause)) + "]";
    if (v.term != 0) out += " term " + std::to_string(v.term);
    if (v.line != 0) out += " (line " + std::to_string(v.line) + ")";
    out += ": " + v.message + "\n";
  }
  return out;
}

std::string to_text(const CovarianceReport& r) {
  std::string out;
  out += "covariance: " + std::to_string(r.entries.size() - r.failures) + "/" +
         std::to_string(r.entries.size()) + " terms annihilated by J+ and J-\n";
  for (const auto& e : r.entries) {
    if (e.ok()) continue;
    out += "  term " + std::to_string(e.term);
    if (e.line != 0) out += " (line " + std::to_string(e.line) + ")";
    out += ": J+ " + std::string(e.plus_annihilates ? "ok" : "fails") +
           ", J- " + (e.minus_annihilates ? "ok" : "fails") + "\n";
  }
  out += "relation expansion at m=0: ";
  out += r.relation_words ? std::to_string(*r.relation_words) + " words"
                          : std::string("not defined (mixed spin-parity)");
  out += "\n";
  return out;
}

std::string to_json(const BlockReport& report) {
  return block_json(report).dump(2) + "\n";
}

std::string to_json(const CovarianceReport& report) {
  return covariance_json(report).dump(2) + "\n";
}

std::string to_json(const BlockReport& block, const CovarianceReport& covariance) {
  ordered_json j;
  j["report"] = "validate";
  j["blocks"] = block_json(block);
  j["covariance"] = covariance_json(covariance);
  j["ok"] = block.ok() && covariance.ok();
  return j.dump(2) + "\n";
}

}  // namespace spinrel
