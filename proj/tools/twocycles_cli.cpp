// Command-line front end: sequence checks, witness digraphs, constructions,
// disjoint-cycle search and exhaustive verification runs.
//
// Exit codes: 0 ok, 1 verification found a disagreement, 2 usage or parse
// error, 3 no witness found, 4 sequence is large, 5 unrealizable sequence,
// 6 verification incomplete (node budget hit).

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "twocycles/constructions.hpp"
#include "twocycles/cycle_search.hpp"
#include "twocycles/error.hpp"
#include "twocycles/verifier.hpp"

namespace tc = twocycles;

namespace {

enum Exit : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kNoWitness = 3,
  kLarge = 4,
  kUnrealizable = 5,
  kIncomplete = 6,
};

int exit_code_for(tc::ErrorKind kind) {
  switch (kind) {
    case tc::ErrorKind::SequenceIsLarge: return kLarge;
    case tc::ErrorKind::UnrealizableDegree: return kUnrealizable;
    default: return kUsage;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw tc::Error(tc::ErrorKind::Parse, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// `1,2,3` or `@file` holding the same text.
tc::DegreeSequence load_sequence(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') return tc::parse_sequence(read_file(arg.substr(1)));
  return tc::parse_sequence(arg);
}

bool use_color() {
  if (std::getenv("NO_COLOR")) return false;
  return isatty(STDOUT_FILENO) != 0;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw tc::Error(tc::ErrorKind::Parse, "cannot write '" + path + "'");
  out << text;
}

std::string certificate_text(const tc::LargenessCertificate& c) {
  std::string out = "(r=" + std::to_string(c.r) + ", s=" + std::to_string(c.s);
  if (c.j) out += ", j=" + std::to_string(*c.j);
  return out + ")";
}

struct Config {
  std::string sequence;
  std::string input;
  std::string output;
  std::string kind;
  std::string format = "edge-list";
  int n = 0;
  int r = 0;
  int s = 0;
  int k = 2;
  bool loops = true;
  bool roles = false;
  int max_n = 4;
  unsigned jobs = 1;
  std::uint64_t node_limit = 0;
  bool timing = false;
  bool verbose = false;
};

int cmd_check_seq(const Config& cfg) {
  const tc::DegreeSequence d = load_sequence(cfg.sequence);
  const auto one = tc::forces_one(d);
  const auto two = tc::forces_two(d);
  const bool realizable = tc::is_realizable(d, true);
  if (cfg.format == "json") {
    nlohmann::ordered_json doc;
    doc["sequence"] = std::vector<int>(d.terms().begin(), d.terms().end());
    doc["realizable"] = realizable;
    doc["forces_one"] = one.has_value();
    doc["forces_one_j"] = one ? nlohmann::ordered_json(*one) : nlohmann::ordered_json(nullptr);
    doc["forces_two"] = two.forces;
    if (two.certificate) {
      nlohmann::ordered_json cert{{"r", two.certificate->r}, {"s", two.certificate->s}};
      cert["j"] = two.certificate->j ? nlohmann::ordered_json(*two.certificate->j)
                                     : nlohmann::ordered_json(nullptr);
      doc["certificate"] = std::move(cert);
    } else {
      doc["certificate"] = nullptr;
    }
    std::cout << doc.dump() << "\n";
    return kOk;
  }
  std::cout << "sequence: " << d.to_string() << "\n";
  std::cout << "forces-1: " << (one ? "yes, j=" + std::to_string(*one) : std::string("none"))
            << "\n";
  std::cout << "forces-2: "
            << (two.certificate ? "yes, certificate " + certificate_text(*two.certificate)
                                : std::string("none"))
            << "\n";
  if (!realizable) std::cout << "note: no digraph on " << d.size() << " vertices realizes it\n";
  return kOk;
}

int cmd_witness(const Config& cfg) {
  const tc::DegreeSequence d = load_sequence(cfg.sequence);
  const tc::Format format = tc::parse_format(cfg.format);
  const auto witness = tc::realize_nonlarge(d);
  if (witness.construction == tc::WitnessCase::Fig1Trim) {
    std::cerr << "construction: fig1-trim\n";
  } else {
    std::cerr << "construction: fig2-trim (r=" << witness.r << ", s=" << witness.s << ")\n";
  }
  write_output(tc::render_digraph(witness.digraph, format), cfg.output);
  return kOk;
}

int cmd_construct(const Config& cfg) {
  const tc::Format format = tc::parse_format(cfg.format);
  std::string text;
  if (cfg.kind == "tournament") {
    text = tc::render_digraph(tc::transitive_tournament(cfg.n), format);
  } else if (cfg.kind == "fig1") {
    text = tc::render_digraph(tc::fig1(cfg.n), format);
  } else {
    const auto built = tc::fig2(cfg.n, cfg.r, cfg.s);
    text = tc::render_digraph(built.digraph, format);
    if (cfg.roles) text += tc::render_roles_json(built.layout);
  }
  write_output(text, cfg.output);
  return kOk;
}

int cmd_find_cycles(const Config& cfg) {
  const tc::Digraph d = tc::parse_digraph(read_file(cfg.input));
  const auto witness = tc::find_disjoint_cycles(d, cfg.k);
  if (!witness) {
    std::cout << "\"none\"\n";
    return kNoWitness;
  }
  std::cout << tc::render_witness_json(*witness);
  return kOk;
}

int cmd_verify(const Config& cfg) {
  tc::VerifyOptions options;
  options.jobs = cfg.jobs;
  options.search.node_limit = cfg.node_limit;

  std::vector<tc::VerificationReport> reports;
  reports.push_back(tc::verify_theorem(cfg.max_n, cfg.k, cfg.loops, options));
  if (cfg.max_n >= 2) reports.push_back(tc::verify_fact_deletion(cfg.max_n));
  if (cfg.k == 2) reports.push_back(tc::adjudicate_intro_examples(cfg.loops, options.search));

  bool ok = true;
  bool complete = true;
  for (const auto& report : reports) {
    ok = ok && report.ok();
    complete = complete && report.complete();
  }

  if (cfg.format == "json") {
    nlohmann::ordered_json doc;
    for (const auto& report : reports) {
      auto section = nlohmann::ordered_json::parse(tc::report_to_json(report));
      if (cfg.timing) section["wall_seconds"] = report.wall_seconds;
      doc[report.kind] = std::move(section);
    }
    doc["ok"] = ok;
    doc["complete"] = complete;
    std::cout << doc.dump(2) << "\n";
  } else {
    const bool color = use_color();
    for (const auto& report : reports) {
      // The intro examples are always listed in full.
      std::cout << tc::report_to_table(report, color,
                                       cfg.verbose || report.kind == "intro-examples")
                << "\n";
    }
  }
  if (!ok) return kVerifyFailed;
  if (!complete) return kIncomplete;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Outdegree sequences forcing one or two disjoint cycles in digraphs"};
  app.require_subcommand(1);
  Config cfg;

  auto* check = app.add_subcommand("check-seq", "Decide forcing of 1 and 2 disjoint cycles");
  check->add_option("sequence", cfg.sequence, "comma-separated nondecreasing sequence or @file")
      ->required();
  check->add_option("--format", cfg.format, "text or json")->default_str("text");

  auto* witness = app.add_subcommand("witness", "Digraph realizing a non-large sequence");
  witness->add_option("sequence", cfg.sequence, "comma-separated sequence or @file")->required();
  witness->add_option("--format", cfg.format, "edge-list, dot or json")
      ->check(CLI::IsMember({"edge-list", "dot", "json"}));
  witness->add_option("-o,--output", cfg.output, "write the digraph here instead of stdout");

  auto* construct = app.add_subcommand("construct", "Emit an extremal construction");
  construct->add_option("kind", cfg.kind, "tournament, fig1 or fig2")
      ->required()
      ->check(CLI::IsMember({"tournament", "fig1", "fig2"}));
  construct->add_option("--n", cfg.n, "vertex count")->required();
  construct->add_option("--r", cfg.r, "fig2 parameter r");
  construct->add_option("--s", cfg.s, "fig2 parameter s");
  construct->add_option("--format", cfg.format, "edge-list, dot or json")
      ->check(CLI::IsMember({"edge-list", "dot", "json"}));
  construct->add_flag("--roles", cfg.roles, "append the fig2 role map as JSON");
  construct->add_option("-o,--output", cfg.output, "write here instead of stdout");

  auto* find = app.add_subcommand("find-cycles", "Search an edge-list file for k disjoint cycles");
  find->add_option("file", cfg.input, "edge-list file")->required();
  find->add_option("-k", cfg.k, "number of disjoint cycles")->default_val(2);

  auto* verify = app.add_subcommand("verify", "Exhaustively check the characterizations");
  verify->add_option("--max-n", cfg.max_n, "largest sequence length")->default_val(4);
  verify->add_option("-k", cfg.k, "1 or 2")->default_val(2)->check(CLI::IsMember({1, 2}));
  verify->add_flag("--loops,!--no-loops", cfg.loops, "allow loops in realizations (default)");
  verify->add_option("--jobs", cfg.jobs, "worker threads")->default_val(1);
  verify->add_option("--node-limit", cfg.node_limit, "per-sequence search budget, 0 = none");
  verify->add_option("--format", cfg.format, "table or json")->default_str("table");
  verify->add_flag("--timing", cfg.timing, "include wall-clock seconds in JSON output");
  verify->add_flag("-v,--verbose", cfg.verbose, "list every sequence");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (construct->parsed() && cfg.kind == "fig2" && (!construct->count("--r") || !construct->count("--s"))) {
    std::cerr << "error: construct fig2 needs --r and --s\n";
    return kUsage;
  }
  if (check->parsed() && cfg.format == "edge-list") cfg.format = "text";
  if (verify->parsed() && cfg.format == "edge-list") cfg.format = "table";

  try {
    if (check->parsed()) return cmd_check_seq(cfg);
    if (witness->parsed()) return cmd_witness(cfg);
    if (construct->parsed()) return cmd_construct(cfg);
    if (find->parsed()) return cmd_find_cycles(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
  } catch (const tc::Error& e) {
    std::cerr << "error (" << tc::to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kUsage;
}
