// Copyright 2026 The mmt Authors.
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

// Command dispatch behind the mmt tool. Argument parsing lives in
// tools/mmt.cpp; everything here takes a RunConfig and two streams so it can
// be driven from tests.
//
//   verify     run identity checks, one report per line
//   eval       permanent variants of a matrix read from a JSON file
//   sequences  the p_r / d_r tables and their EGF check
//   explain    graph-class decomposition for (n, N, kind)
//
// Exit status: 0 when every check matches, 1 on a mismatch, 2 on bad input.

#ifndef MMT_CLI_HPP_
#define MMT_CLI_HPP_

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "mmt/genfunc.hpp"
#include "mmt/graphs.hpp"
#include "mmt/modular.hpp"
#include "mmt/permanents.hpp"
#include "mmt/poly.hpp"
#include "mmt/theorems.hpp"

namespace mmt {

enum class Command { kVerify, kEval, kSequences, kExplain };
enum class Mode { kSymbolic, kModular };

struct RunConfig {
  Command command = Command::kVerify;
  std::string theorem = "mmt";
  int n = 1;
  int n_prime = 1;
  int order = 4;
  Mode mode = Mode::kSymbolic;
  std::uint64_t modulus = 1000000007ull;
  std::uint64_t seed = 1;
  int seeds = 1;
  bool json = false;
  bool timing = true;
  std::string out_path;
  std::string matrix_path;
  std::string kind;
  int r_max = 8;
};

inline const std::vector<std::string>& theorem_selectors() {
  static const std::vector<std::string> names = {"mmt",   "sub",   "pperm", "subpperm", "der",   "subder",
                                                 "remark", "lemma", "prop1", "oracle",   "trace", "all"};
  return names;
}

inline std::optional<Command> command_from_name(std::string_view name) {
  if (name == "verify") return Command::kVerify;
  if (name == "eval") return Command::kEval;
  if (name == "sequences") return Command::kSequences;
  if (name == "explain") return Command::kExplain;
  return std::nullopt;
}

inline std::optional<Mode> mode_from_name(std::string_view name) {
  if (name == "symbolic") return Mode::kSymbolic;
  if (name == "modular") return Mode::kModular;
  return std::nullopt;
}

inline GraphKind graph_kind_from_name(std::string_view name) {
  if (name.empty() || name == "full") return GraphKind::kFull;
  if (name == "partial") return GraphKind::kPartial;
  if (name == "derangement") return GraphKind::kDerangement;
  throw std::invalid_argument("unknown graph kind '" + std::string(name) + "' (full|partial|derangement)");
}

inline SequenceKind sequence_kind_from_name(std::string_view name) {
  if (name.empty() || name == "p") return SequenceKind::kP;
  if (name == "d") return SequenceKind::kD;
  throw std::invalid_argument("unknown sequence kind '" + std::string(name) + "' (p|d)");
}

// Theorem ids selected by a --theorem value, in report order.
inline std::vector<TheoremId> selected_theorems(const std::string& selector, Mode mode) {
  static const std::map<std::string, TheoremId> single = {
      {"mmt", TheoremId::kMMT},          {"sub", TheoremId::kSubMMT},       {"pperm", TheoremId::kPPermMMT},
      {"subpperm", TheoremId::kSubPPermMMT}, {"der", TheoremId::kDerMMT},   {"subder", TheoremId::kSubDerMMT},
      {"remark", TheoremId::kRemark},    {"lemma", TheoremId::kLemma},      {"prop1", TheoremId::kProposition1},
      {"oracle", TheoremId::kGraphOracle}, {"trace", TheoremId::kTraceIdentity}};
  if (selector == "all") {
    std::vector<TheoremId> out = {TheoremId::kMMT,    TheoremId::kSubMMT,      TheoremId::kPPermMMT,
                                  TheoremId::kSubPPermMMT, TheoremId::kDerMMT, TheoremId::kSubDerMMT,
                                  TheoremId::kRemark, TheoremId::kLemma,       TheoremId::kProposition1};
    if (mode == Mode::kSymbolic) {
      out.push_back(TheoremId::kGraphOracle);
      out.push_back(TheoremId::kTraceIdentity);
    }
    return out;
  }
  const auto it = single.find(selector);
  if (it == single.end()) throw std::invalid_argument("unknown theorem '" + selector + "'");
  if (mode == Mode::kModular && !supports_modular(it->second)) {
    throw std::invalid_argument("theorem '" + selector + "' has no modular mode");
  }
  return {it->second};
}

inline std::vector<VerificationReport> symbolic_reports(TheoremId id, const RunConfig& c) {
  switch (id) {
    case TheoremId::kMMT: return {verify_mmt(c.n, c.order)};
    case TheoremId::kSubMMT: return {verify_submatrix_mmt(c.n_prime, c.n, c.order)};
    case TheoremId::kPPermMMT: return {verify_pperm_mmt(c.n, c.order)};
    case TheoremId::kSubPPermMMT: return {verify_sub_pperm_mmt(c.n_prime, c.n, c.order)};
    case TheoremId::kDerMMT: return {verify_derangement_mmt(c.n, c.order)};
    case TheoremId::kSubDerMMT: return {verify_sub_derangement_mmt(c.n_prime, c.n, c.order)};
    case TheoremId::kRemark: return {verify_remark_beta_minus1(c.n)};
    case TheoremId::kLemma: return {verify_lemma_beta_minus1(c.n_prime, c.n)};
    case TheoremId::kProposition1: return {verify_proposition1(c.n, c.order)};
    case TheoremId::kGraphOracle: {
      if (!c.kind.empty()) return {verify_graph_oracle(c.n, c.order, graph_kind_from_name(c.kind))};
      std::vector<VerificationReport> out;
      for (GraphKind k : {GraphKind::kFull, GraphKind::kPartial, GraphKind::kDerangement}) {
        out.push_back(verify_graph_oracle(c.n, c.order, k));
      }
      return out;
    }
    case TheoremId::kTraceIdentity: {
      if (c.order < 1) throw std::invalid_argument("trace identity needs --order >= 1");
      return {verify_trace_identity(c.n, c.order)};
    }
  }
  return {};
}

inline std::string format_text(const VerificationReport& r) {
  std::ostringstream os;
  os << to_string(r.theorem);
  if (r.kind) os << "[" << to_string(*r.kind) << "]";
  os << " n=" << r.n;
  if (r.n_prime) os << " n'=" << *r.n_prime;
  os << " order=" << r.order << " " << r.mode;
  if (r.seed) os << " seed=" << *r.seed;
  os << ": " << (r.match ? "match" : "MISMATCH") << " (" << r.lhs_terms << "/" << r.rhs_terms << " terms, "
     << r.elapsed_ms << " ms)";
  if (r.first_mismatch) {
    os << " at " << r.first_mismatch->monomial << ": lhs " << r.first_mismatch->lhs << ", rhs "
       << r.first_mismatch->rhs;
  }
  return os.str();
}

namespace detail {

inline void emit_report(VerificationReport r, const RunConfig& c, std::ostream& out) {
  if (!c.timing) r.elapsed_ms = 0;
  if (c.json) {
    out << to_json(r).dump() << "\n";
  } else {
    out << format_text(r) << "\n";
  }
  out.flush();
}

inline int run_verify(const RunConfig& c, std::ostream& out) {
  if (c.n < 1) throw std::invalid_argument("--n must be >= 1");
  if (c.order < 0) throw std::invalid_argument("--order must be >= 0");
  if (c.seeds < 1) throw std::invalid_argument("--seeds must be >= 1");
  const std::vector<TheoremId> ids = selected_theorems(c.theorem, c.mode);
  if (c.mode == Mode::kModular) detail::validate_modulus(c.modulus, c.order);
  bool all_match = true;
  for (TheoremId id : ids) {
    if (c.mode == Mode::kSymbolic) {
      for (const auto& r : symbolic_reports(id, c)) {
        all_match = all_match && r.match;
        emit_report(r, c, out);
      }
      continue;
    }
    for (int k = 0; k < c.seeds; ++k) {
      ModularOptions opt;
      opt.modulus = c.modulus;
      opt.seed = c.seed + static_cast<std::uint64_t>(k);
      const VerificationReport r = modular_verify(id, c.n_prime, c.n, c.order, opt);
      all_match = all_match && r.match;
      emit_report(r, c, out);
    }
  }
  return all_match ? 0 : 1;
}

inline Polynomial parse_entry(const nlohmann::json& e) {
  if (e.is_number_integer()) return Polynomial(Rational(Integer(e.dump())));
  if (!e.is_string()) throw std::invalid_argument("matrix entry must be a string, an integer or null");
  const std::string s = e.get<std::string>();
  if (s.empty()) throw std::invalid_argument("empty matrix entry");
  if ((s[0] >= '0' && s[0] <= '9') || s[0] == '-' || s[0] == '+') return Polynomial(parse_rational(s));
  return Polynomial(parse_variable(s));
}

}  // namespace detail

// {"n": k, "entries": [[...], ...]}; missing or null entries default to A(i,j).
inline SymbolicMatrix parse_matrix_json(const std::string& text) {
  const nlohmann::json doc = nlohmann::json::parse(text);
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()) {
    throw std::invalid_argument("matrix file needs an integer field \"n\"");
  }
  const int n = doc["n"].get<int>();
  if (n < 0 || n > 12) throw std::invalid_argument("matrix size must be between 0 and 12");
  SymbolicMatrix m = default_matrix(n);
  if (!doc.contains("entries")) return m;
  const auto& rows = doc["entries"];
  if (!rows.is_array() || rows.size() > static_cast<std::size_t>(n)) {
    throw std::invalid_argument("\"entries\" must be an array of at most n rows");
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() > static_cast<std::size_t>(n)) {
      throw std::invalid_argument("row " + std::to_string(i + 1) + " must be an array of at most n entries");
    }
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (!rows[i][j].is_null()) m.entries(i, j) = detail::parse_entry(rows[i][j]);
    }
  }
  return m;
}

inline nlohmann::ordered_json evaluate_matrix(const SymbolicMatrix& m) {
  const Polynomial beta(var::beta());
  nlohmann::ordered_json j;
  j["n"] = m.size();
  j["perm"] = perm_beta(m.entries, Polynomial(1)).to_string();
  j["det"] = determinant(m.entries, Polynomial(1)).to_string();
  j["perm_beta"] = perm_beta(m).to_string();
  j["dperm_beta"] = dperm_beta(m).to_string();
  j["pperm"] = pperm(m).to_string();
  j["pperm_btp"] = pperm_btp(m).to_string();
  return j;
}

namespace detail {

inline int run_eval(const RunConfig& c, std::ostream& out) {
  if (c.matrix_path.empty()) throw std::invalid_argument("eval needs --matrix <path>");
  std::ifstream in(c.matrix_path);
  if (!in) throw std::invalid_argument("cannot read matrix file '" + c.matrix_path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const nlohmann::ordered_json j = evaluate_matrix(parse_matrix_json(buf.str()));
  if (c.json) {
    out << j.dump() << "\n";
  } else {
    for (const auto& [key, value] : j.items()) {
      out << std::left << std::setw(11) << key << (value.is_string() ? value.get<std::string>() : value.dump())
          << "\n";
    }
  }
  return 0;
}

// Dense coefficient grid: grid[s][t] for alpha^s beta^t.
inline std::vector<std::vector<std::string>> coefficient_grid(const SequenceRow& row) {
  int s_max = 0;
  int t_max = 0;
  for (const auto& [st, c] : row.coefficients) {
    s_max = std::max(s_max, st.first);
    t_max = std::max(t_max, st.second);
  }
  std::vector<std::vector<std::string>> grid(s_max + 1, std::vector<std::string>(t_max + 1, "0"));
  for (const auto& [st, c] : row.coefficients) grid[st.first][st.second] = c.get_str();
  return grid;
}

inline Integer value_at_one(const SequenceRow& row) {
  Integer sum = 0;
  for (const auto& [st, c] : row.coefficients) sum += c;
  return sum;
}

inline int run_sequences(const RunConfig& c, std::ostream& out) {
  if (c.r_max < 0) throw std::invalid_argument("--rmax must be >= 0");
  const SequenceKind kind = sequence_kind_from_name(c.kind);
  const SequenceTable table = kind == SequenceKind::kP ? p_sequence(c.r_max) : d_sequence(c.r_max);
  const int bad = first_egf_mismatch(table);
  const std::string name = kind == SequenceKind::kP ? "p" : "d";
  if (c.json) {
    nlohmann::ordered_json j;
    j["kind"] = name;
    j["r_max"] = c.r_max;
    j["egf_match"] = bad < 0;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
      j["rows"].push_back({{"r", row.r},
                           {"value", row.value.to_string()},
                           {"at_one", value_at_one(row).get_str()},
                           {"coefficients", coefficient_grid(row)}});
    }
    out << j.dump() << "\n";
  } else {
    const std::string at_one = kind == SequenceKind::kP ? "p_r(1,1)" : "d_r(1)";
    out << std::left << std::setw(4) << "r" << std::setw(12) << at_one << name << "_r\n";
    for (const auto& row : table.rows) {
      out << std::left << std::setw(4) << row.r << std::setw(12) << value_at_one(row).get_str()
          << row.value.to_string() << "\n";
    }
    out << "egf: " << (bad < 0 ? "match" : "MISMATCH at r=" + std::to_string(bad)) << "\n";
  }
  return bad < 0 ? 0 : 1;
}

// Number of maps on the class's own multiset that share its graph: |Lambda(r)| / |Aut|.
inline Integer maps_in_class(const GraphClass& g, int n) {
  std::vector<int> r(n, 0);
  for (const auto& [comp, mult] : g.parts) {
    for (const auto& v : comp.labels) r[v.index - 1] += mult;
  }
  return multiset_factorial(MultisetIndex(r)) / Integer(std::to_string(g.aut_order));
}

inline int run_explain(const RunConfig& c, std::ostream& out) {
  if (c.n < 1 || c.order < 0) throw std::invalid_argument("explain needs --n >= 1 and --order >= 0");
  const GraphKind kind = graph_kind_from_name(c.kind);
  const std::vector<GraphClass> classes = enumerate_classes(c.n, c.order, kind);
  const Sides sides = graph_oracle_sides(c.n, c.order, kind);
  const bool match = sides.lhs == sides.rhs;
  if (c.json) {
    nlohmann::ordered_json j;
    j["n"] = c.n;
    j["N"] = c.order;
    j["kind"] = to_string(kind);
    j["class_count"] = classes.size();
    j["classes"] = nlohmann::ordered_json::array();
    for (const auto& g : classes) {
      nlohmann::ordered_json parts = nlohmann::ordered_json::array();
      for (const auto& [comp, mult] : g.parts) parts.push_back({{"component", to_string(comp)}, {"multiplicity", mult}});
      j["classes"].push_back({{"key", g.key},
                              {"aut_order", g.aut_order},
                              {"maps", maps_in_class(g, c.n).get_str()},
                              {"weight", g.weight.to_string()},
                              {"parts", parts}});
    }
    j["class_sum"] = class_sum(classes).to_string();
    j["match"] = match;
    out << j.dump() << "\n";
  } else {
    out << to_string(kind) << " graphs, n=" << c.n << ", N=" << c.order << ": " << classes.size() << " classes\n";
    for (const auto& g : classes) {
      out << "  " << std::left << std::setw(28) << g.key << " |Aut|=" << std::setw(4) << g.aut_order
          << " maps=" << std::setw(6) << maps_in_class(g, c.n).get_str() << " w=" << g.weight.to_string() << "\n";
    }
    out << "enumeration vs class sum: " << (match ? "match" : "MISMATCH") << "\n";
  }
  return match ? 0 : 1;
}

}  // namespace detail

inline int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    std::ofstream file;
    std::ostream* sink = &out;
    if (!config.out_path.empty()) {
      file.open(config.out_path);
      if (!file) throw std::invalid_argument("cannot open output file '" + config.out_path + "'");
      sink = &file;
    }
    switch (config.command) {
      case Command::kVerify: return detail::run_verify(config, *sink);
      case Command::kEval: return detail::run_eval(config, *sink);
      case Command::kSequences: return detail::run_sequences(config, *sink);
      case Command::kExplain: return detail::run_explain(config, *sink);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace mmt

#endif  // MMT_CLI_HPP_
