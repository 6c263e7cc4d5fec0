/**************************************************************************
 * cli.hpp
 *
 * Copyright 2026 The ringdna Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ringdna/audit.hpp"
#include "ringdna/code.hpp"
#include "ringdna/dna.hpp"
#include "ringdna/psi.hpp"
#include "ringdna/ring.hpp"

// Command-line front end. `run` takes the arguments after the program name
// and returns the process exit code:
//   0 success / all checks pass, 1 constraint violation,
//   2 invalid input, 3 span size guard refused the request.

namespace ringdna::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kInvalidInput = 2, kGuardRefused = 3 };

using Json = nlohmann::ordered_json;

struct FastaRecord {
  std::string header;
  DnaSequence sequence;
  std::size_t line = 0;  // line of the '>' header
};

/// Reads FASTA: '>' header lines, one or more sequence lines per record,
/// blank lines ignored. Errors carry the 1-based line number.
inline std::vector<FastaRecord> parse_fasta(std::istream& in) {
  std::vector<FastaRecord> records;
  std::string line;
  std::string pending;
  std::size_t line_no = 0;
  auto flush = [&] {
    if (records.empty()) return;
    if (pending.empty()) {
      throw std::invalid_argument("line " + std::to_string(records.back().line) + ": record '" +
                                  records.back().header + "' has no sequence");
    }
    records.back().sequence = DnaSequence::from_canonical(std::move(pending));
    pending.clear();
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '>') {
      flush();
      records.push_back({line.substr(1), {}, line_no});
      continue;
    }
    if (records.empty()) throw std::invalid_argument("line " + std::to_string(line_no) + ": sequence before first header");
    try {
      pending += DnaSequence(line).str();
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  flush();
  if (records.empty()) throw std::invalid_argument("no FASTA records found");
  for (const auto& r : records) {
    if (r.sequence.size() != records.front().sequence.size()) {
      throw std::invalid_argument("line " + std::to_string(r.line) + ": sequence length " +
                                  std::to_string(r.sequence.size()) + " differs from " +
                                  std::to_string(records.front().sequence.size()));
    }
  }
  return records;
}

/// One record per codeword in span order: ">cw_<index> m=<m> z=<z>".
inline void write_fasta(std::ostream& out, const SpanCode& code, unsigned m, RingElement z) {
  const std::string suffix = " m=" + std::to_string(m) + " z=" + format_element(z) + "\n";
  for (std::size_t i = 0; i < code.size(); ++i) {
    out << ">cw_" << i << suffix << psi_vec(code[i]).str() << '\n';
  }
}

inline std::string table_tsv() {
  std::string out;
  for (RingElement x : kAllElements) out += format_element(x) + "\t" + psi(x).str() + "\n";
  return out;
}

inline Json table_json() {
  Json rows = Json::array();
  for (RingElement x : kAllElements) rows.push_back({{"element", format_element(x)}, {"dna", psi(x).str()}});
  return rows;
}

namespace detail {

inline Json pair_verdict_json(const PairVerdict& v) {
  Json j;
  j["satisfied"] = v.satisfied;
  j["method"] = std::string(to_string(v.method));
  j["threshold"] = v.threshold ? Json(*v.threshold) : Json("own minimum distance");
  if (v.method == AuditMethod::closure) j["closed"] = v.closed;
  if (v.min_observed) j["min_observed"] = *v.min_observed;
  if (v.witness) {
    j["witness"] = v.witness->second.empty() ? Json::array({v.witness->first.str()})
                                             : Json::array({v.witness->first.str(), v.witness->second.str()});
  }
  j["evidence"] = v.evidence;
  return j;
}

inline Json gc_json(const GcVerdict& v) {
  Json j;
  j["satisfied"] = v.satisfied;
  if (v.w) {
    j["w"] = *v.w;
    j["fraction"] = std::to_string(*v.w) + "/" + std::to_string(v.length);
  }
  Json hist = Json::object();
  for (const auto& [gc, count] : v.histogram) hist[std::to_string(gc)] = count;
  j["histogram"] = hist;
  return j;
}

inline Json homopolymer_json(const HomopolymerVerdict& v) {
  return {{"satisfied", v.satisfied}, {"k", v.k}, {"max_observed", v.max_observed}, {"witness", v.witness.str()}};
}

}  // namespace detail

inline Json report_json(const CodeReport& r, const GeneratorMatrix& g, const DistanceMode& mode) {
  Json j;
  j["n_ring"] = r.params.n_ring;
  j["n_dna"] = r.params.n_dna;
  j["size"] = r.params.size;
  j["d_gau"] = r.params.d_gau;
  j["d_hamming"] = r.params.d_hamming;
  j["distance_method"] = r.distance_method;
  j["distance_exact"] = r.params.exact;
  j["hamming_measured"] = r.params.hamming_measured;
  if (!r.params.exact) {
    j["distance_note"] = "upper bound";
    const auto* sampled = std::get_if<SampledDistance>(&mode);
    j["sampling"] = {{"pairs", r.params.distance.pairs_examined},
                     {"seed", sampled ? sampled->seed : kDefaultSeed}};
  }
  if (r.witness) {
    j["witness"] = {{"first", format_vector(r.witness->first)},
                    {"second", format_vector(r.witness->second)},
                    {"d_gau", r.witness->distance}};
  }
  j["rate"] = r.rate.rounded();
  j["rate_decimal"] = r.rate.decimal();
  j["rate_exact"] = r.rate.exact ? Json(*r.rate.exact) : Json(nullptr);
  j["relative_distance"] = r.relative.rounded();
  j["relative_distance_decimal"] = r.relative.decimal();
  j["relative_distance_exact"] = r.relative.exact ? Json(*r.relative.exact) : Json(nullptr);
  j["constraints"] = {{"gc", r.gc.satisfied},
                      {"homopolymer", r.homopolymer.satisfied},
                      {"reversible", r.reversible.satisfied},
                      {"reversible_complement", r.reversible_complement.satisfied}};
  j["verdicts"] = {{"gc", detail::gc_json(r.gc)},
                   {"homopolymer", detail::homopolymer_json(r.homopolymer)},
                   {"reversible", detail::pair_verdict_json(r.reversible)},
                   {"reversible_complement", detail::pair_verdict_json(r.reversible_complement)}};
  Json failing = Json::array();
  for (auto i : r.reverse_closure.failing_rows) failing.push_back(i + 1);
  j["generator"] = {{"k", g.k()},
                    {"complement_vector_in_span", r.complement_condition},
                    {"row_reverses_in_span", r.reverse_closure.closed},
                    {"failing_rows", failing}};
  if (g.provenance()) {
    j["generator"]["m"] = g.provenance()->m;
    j["generator"]["z"] = format_element(g.provenance()->z);
  }
  return j;
}

inline std::string report_text(const CodeReport& r) {
  std::ostringstream os;
  const auto yes = [](bool b) { return b ? "yes" : "no"; };
  os << "(n, M, d_H) = (" << r.params.n_dna << ", " << r.params.size << ", " << r.params.d_hamming << ")"
     << (r.params.exact ? "" : "  [d is an upper bound]") << '\n';
  os << "ring length      " << r.params.n_ring << '\n';
  os << "d_gau            " << r.params.d_gau << " (" << r.distance_method << ")\n";
  os << "code rate        " << r.rate.decimal() << (r.rate.exact ? " = " + *r.rate.exact : "") << '\n';
  os << "relative dist    " << r.relative.decimal() << " = " << *r.relative.exact << '\n';
  os << "gc content       " << yes(r.gc.satisfied);
  if (r.gc.w) os << " (w = " << *r.gc.w << ")";
  os << '\n';
  os << "homopolymer " << r.homopolymer.k << "    " << yes(r.homopolymer.satisfied)
     << " (max run " << r.homopolymer.max_observed << ")\n";
  os << "reversible       " << yes(r.reversible.satisfied) << " (" << to_string(r.reversible.method) << ")\n";
  os << "reversible-comp  " << yes(r.reversible_complement.satisfied) << " ("
     << to_string(r.reversible_complement.method) << ")\n";
  return os.str();
}

namespace detail {

inline void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open '" + path + "' for writing");
  file << text;
  if (!file) throw std::invalid_argument("failed writing '" + path + "'");
}

inline std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

inline std::vector<std::string> split_tokens(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (const auto& a : args) {
    std::istringstream is(a);
    std::string t;
    while (is >> t) out.push_back(t);
  }
  return out;
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constructs and audits DNA codes from linear codes over Z4 + uZ4 + u^2Z4 (u^3 = 1)", "ringdna"};
  app.require_subcommand(1);

  std::string format = "tsv";
  auto* table = app.add_subcommand("table", "Print the element-to-triple map");
  table->add_option("--format", format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));

  unsigned m = 0;
  std::string z_text;
  std::string out_path;
  auto* rm = app.add_subcommand("rm", "Print a Reed-Muller type generator matrix");
  rm->add_option("--m", m, "Order parameter, >= 1")->required();
  rm->add_option("--z", z_text, "Generator element, e.g. 020")->required();
  rm->add_option("--out", out_path, "Output file (default stdout)");

  std::string matrix_path;
  std::string distance = "exact";
  std::optional<std::uint64_t> sample_pairs;
  std::uint64_t seed = kDefaultSeed;
  bool slow = false;
  std::string report_format = "json";
  std::size_t k = 2;
  std::optional<std::uint32_t> d_override;
  unsigned threads = 0;
  std::size_t span_limit = kDefaultSpanLimit;
  auto* analyze = app.add_subcommand("analyze", "Build a code and report its parameters and constraints");
  auto* m_opt = analyze->add_option("--m", m, "Order parameter, >= 1");
  auto* z_opt = analyze->add_option("--z", z_text, "Generator element");
  auto* mat_opt = analyze->add_option("--matrix", matrix_path, "Generator matrix file");
  mat_opt->excludes(m_opt)->excludes(z_opt);
  m_opt->needs(z_opt);
  z_opt->needs(m_opt);
  analyze->add_option("--distance", distance, "exact or sample")->check(CLI::IsMember({"exact", "sample"}));
  analyze->add_option("--sample-pairs", sample_pairs, "Pairs to sample in sample mode");
  analyze->add_option("--seed", seed, "Sampler seed");
  analyze->add_flag("--slow", slow, "Allow the exhaustive distance sweep on large codes");
  analyze->add_option("--format", report_format, "json or text")->check(CLI::IsMember({"json", "text"}));
  analyze->add_option("--k", k, "Homopolymer run-length bound");
  analyze->add_option("--d", d_override, "Override the reversible / RC threshold");
  analyze->add_option("--threads", threads, "Worker threads (0 = all cores)");
  analyze->add_option("--span-limit", span_limit, "Maximum number of codewords to enumerate");
  analyze->add_option("--out", out_path, "Output file (default stdout)");

  auto* exp = app.add_subcommand("export", "Write the DNA image of a Reed-Muller type code as FASTA");
  exp->add_option("--m", m, "Order parameter, >= 1")->required();
  exp->add_option("--z", z_text, "Generator element")->required();
  exp->add_option("--out", out_path, "FASTA output file")->required();
  exp->add_option("--span-limit", span_limit, "Maximum number of codewords to enumerate");

  std::string fasta_path;
  std::string constraints = "gc,homopolymer,reversible,reversible_complement";
  std::string method = "auto";
  auto* check = app.add_subcommand("check", "Audit a FASTA file of equal-length codewords");
  check->add_option("fasta", fasta_path, "FASTA file")->required();
  check->add_option("--d", d_override, "Reversible / RC threshold (default: the set's own minimum distance)");
  check->add_option("--constraints", constraints, "Comma-separated: gc,homopolymer,reversible,reversible_complement");
  check->add_option("--k", k, "Homopolymer run-length bound");
  check->add_option("--method", method, "auto, exhaustive or closure")
      ->check(CLI::IsMember({"auto", "exhaustive", "closure"}));
  check->add_option("--threads", threads, "Worker threads (0 = all cores)");

  std::string direction;
  std::vector<std::string> tokens;
  auto* map = app.add_subcommand("map", "Convert between ring elements and DNA triples");
  map->add_option("direction", direction, "ring-to-dna or dna-to-ring")
      ->required()
      ->check(CLI::IsMember({"ring-to-dna", "dna-to-ring"}));
  map->add_option("tokens", tokens, "Elements or triples")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    if (table->parsed()) {
      out << (format == "json" ? table_json().dump(2) + "\n" : table_tsv());
      return kOk;
    }

    if (rm->parsed()) {
      detail::write_output(format_matrix(rm_generator(m, parse_element(z_text))), out_path, out);
      return kOk;
    }

    if (analyze->parsed()) {
      if (matrix_path.empty() && z_text.empty()) throw std::invalid_argument("analyze needs --m/--z or --matrix");
      if (distance == "sample" && !sample_pairs) throw std::invalid_argument("--distance sample needs --sample-pairs");
      if (distance == "exact" && sample_pairs) throw std::invalid_argument("--sample-pairs only applies to --distance sample");
      const GeneratorMatrix g = matrix_path.empty() ? rm_generator(m, parse_element(z_text))
                                                    : parse_matrix(detail::read_file(matrix_path));
      ReportOptions options;
      if (distance == "sample") options.distance = SampledDistance{*sample_pairs, seed};
      options.slow = slow;
      options.homopolymer_k = k;
      options.threshold = d_override;
      options.threads = threads;
      options.span_limit = span_limit;
      const CodeReport report = full_report(g, options);
      DistanceMode used = options.distance;
      if (!report.params.exact && std::holds_alternative<ExactDistance>(used)) {
        used = SampledDistance{options.fallback_sample_pairs, kDefaultSeed};
      }
      detail::write_output(report_format == "json" ? report_json(report, g, used).dump(2) + "\n"
                                                   : report_text(report),
                           out_path, out);
      return kOk;
    }

    if (exp->parsed()) {
      const RingElement z = parse_element(z_text);
      const SpanCode code = span(rm_generator(m, z), span_limit);
      std::ostringstream fasta;
      write_fasta(fasta, code, m, z);
      detail::write_output(fasta.str(), out_path, out);
      return kOk;
    }

    if (check->parsed()) {
      std::ifstream file(fasta_path, std::ios::binary);
      if (!file) throw std::invalid_argument("cannot open '" + fasta_path + "'");
      const auto records = parse_fasta(file);
      std::vector<DnaSequence> seqs;
      seqs.reserve(records.size());
      for (const auto& r : records) seqs.push_back(r.sequence);
      const DnaCode code(std::move(seqs));

      std::vector<std::string> selected;
      {
        std::istringstream is(constraints);
        std::string item;
        while (std::getline(is, item, ',')) {
          if (item.empty()) continue;
          if (item != "gc" && item != "homopolymer" && item != "reversible" && item != "reversible_complement") {
            throw std::invalid_argument("unknown constraint '" + item + "'");
          }
          selected.push_back(item);
        }
      }
      if (selected.empty()) throw std::invalid_argument("no constraints selected");
      if (d_override && *d_override < 1) throw std::invalid_argument("--d must be >= 1");

      const AuditMethod audit_method =
          method == "closure" ? AuditMethod::closure
          : method == "exhaustive" ? AuditMethod::exhaustive
          : code.size() <= (std::size_t{1} << 16) ? AuditMethod::exhaustive
                                                  : AuditMethod::closure;
      bool all_pass = true;
      out << "codewords " << code.size() << ", length " << code.length() << '\n';
      for (const auto& c : selected) {
        if (c == "gc") {
          const auto v = check_gc_constraint(code);
          all_pass &= v.satisfied;
          out << "gc: " << (v.satisfied ? "pass" : "FAIL");
          if (v.w) out << " w=" << *v.w << "/" << v.length;
          else for (const auto& [gc, count] : v.histogram) out << " " << gc << ":" << count;
          out << '\n';
        } else if (c == "homopolymer") {
          const auto v = check_homopolymer(code, k);
          all_pass &= v.satisfied;
          out << "homopolymer: " << (v.satisfied ? "pass" : "FAIL") << " k=" << k << " max_run=" << v.max_observed;
          if (!v.satisfied) out << " witness=" << v.witness;
          out << '\n';
        } else {
          const bool rc = c == "reversible_complement";
          const auto v = rc ? check_reversible_complement(code, d_override, audit_method, threads)
                            : check_reversible(code, d_override, audit_method, threads);
          all_pass &= v.satisfied;
          out << c << ": " << (v.satisfied ? "pass" : "FAIL") << " (" << to_string(v.method) << ") "
              << v.evidence;
          if (!v.satisfied && v.witness) {
            out << " witness=" << v.witness->first;
            if (!v.witness->second.empty()) out << "," << v.witness->second;
          }
          out << '\n';
        }
      }
      return all_pass ? kOk : kViolation;
    }

    if (map->parsed()) {
      std::vector<std::string> converted;
      for (const auto& t : detail::split_tokens(tokens)) {
        try {
          converted.push_back(direction == "ring-to-dna" ? psi(parse_element(t)).str()
                                                         : format_element(psi_inv(DnaSequence(t))));
        } catch (const std::invalid_argument& e) {
          throw std::invalid_argument("invalid token '" + t + "': " + e.what());
        }
      }
      for (std::size_t i = 0; i < converted.size(); ++i) out << (i ? " " : "") << converted[i];
      out << '\n';
      return kOk;
    }
  } catch (const SpanLimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kGuardRefused;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace ringdna::cli
