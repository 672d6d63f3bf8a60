// weylgrid_cli.cpp
// ----------------
// Command-line driver for the weylgrid library.  Subcommands:
//   construct  build the two-color grid poset for (system, lambda, order)
//   lattice    enumerate its lattice of order ideals
//   character  compute the Weyl character for (system, lambda)
//   rgf        closed-form rank generating function for (system, lambda)
//   verify     run the full twelve-check battery on one instance
//   sweep      run verify over the whole (system, order, a, b) matrix
//   export     lattice as Graphviz DOT, optionally with weight labels
//
// The artifact goes to stdout (or --out FILE) and is byte-identical across
// identical invocations; all diagnostics go to stderr.  Exit codes: 0 every
// check passed, 1 a check failed (or an internal error), 2 usage error,
// 3 a resource cap cut a check short (failures dominate skips).
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "weylgrid/coloring.hpp"
#include "weylgrid/core.hpp"
#include "weylgrid/gridposet.hpp"
#include "weylgrid/groupring.hpp"
#include "weylgrid/ideallattice.hpp"
#include "weylgrid/jsonio.hpp"
#include "weylgrid/pipeline.hpp"
#include "weylgrid/qseries.hpp"
#include "weylgrid/rootsys.hpp"

namespace {

using namespace weylgrid;

// Options shared by the instance-scoped subcommands.
struct CommonOpts {
  std::string system;
  std::string lambda;
  std::string order = "ba";
  std::string format;
  std::string out;
};

struct ParsedCommon {
  RootSystemId sys;
  Lambda2 lam;
  FundamentalOrder order;
};

void add_common(CLI::App* cmd, CommonOpts& o, const std::string& default_fmt,
                const std::string& fmt_help) {
  cmd->add_option("--system", o.system, "Root system: A1xA1, A2, C2 or G2")
      ->required();
  cmd->add_option("--lambda", o.lambda,
                  "Dominant weight as \"a,b\" with a,b >= 0")
      ->required();
  cmd->add_option("--order", o.order,
                  "Fundamental stacking order: ba (default) or ab");
  o.format = default_fmt;
  cmd->add_option("--format", o.format, fmt_help);
  cmd->add_option("--out", o.out, "Write the artifact to FILE instead of stdout");
}

// "a,b" -> Lambda2; nullopt on malformed input.
std::optional<Lambda2> parse_lambda(const std::string& s) {
  std::istringstream in(s);
  long long a = 0, b = 0;
  char comma = 0;
  if (!(in >> a >> comma >> b) || comma != ',') return std::nullopt;
  std::string rest;
  if (in >> rest) return std::nullopt;
  if (a < 0 || b < 0 || a > 1'000'000 || b > 1'000'000) return std::nullopt;
  return Lambda2(static_cast<int>(a), static_cast<int>(b));
}

std::optional<ParsedCommon> parse_common(const CommonOpts& o) {
  ParsedCommon p;
  try {
    p.sys = system_from_string(o.system);
    p.order = order_from_string(o.order);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return std::nullopt;
  }
  const std::optional<Lambda2> lam = parse_lambda(o.lambda);
  if (!lam) {
    std::cerr << "weylgrid: bad --lambda \"" << o.lambda
              << "\": expected \"a,b\" with nonnegative integers\n";
    return std::nullopt;
  }
  p.lam = *lam;
  return p;
}

bool format_allowed(const std::string& fmt,
                    std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (fmt == a) return true;
  std::cerr << "weylgrid: unsupported --format \"" << fmt
            << "\" for this subcommand\n";
  return false;
}

// Writes the artifact; returns false (caller exits 1) if the file can't be
// opened.
bool emit(const std::string& artifact, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << artifact;
    return true;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "weylgrid: cannot open output file " << out_path << "\n";
    return false;
  }
  f << artifact;
  return f.good();
}

std::string header_line(const ParsedCommon& p) {
  return "system " + to_string(p.sys) + " lambda (" +
         std::to_string(p.lam.a) + "," + std::to_string(p.lam.b) +
         ") order " + to_string(p.order);
}

std::string poset_text(const ParsedCommon& p, const GridPoset& poset) {
  std::ostringstream out;
  out << header_line(p) << "\n";
  out << poset.size() << " vertices, " << poset.chain_count() << " chains\n";
  for (int i = 0; i < poset.size(); ++i)
    out << i << ": " << poset.vertex(i).str() << " chain "
        << poset.chain_of(i) << "\n";
  out << "covers:\n";
  for (const auto& [from, to] : poset.cover_edges())
    out << from << " -> " << to << "\n";
  return out.str();
}

std::string character_text(const ParsedCommon& p, const GroupRingElement& chi) {
  std::ostringstream out;
  out << "system " << to_string(p.sys) << " lambda (" << p.lam.a << ","
      << p.lam.b << ")\n";
  out << "dimension " << chi.evaluate_at_one() << "\n";
  std::vector<std::pair<Weight, std::int64_t>> terms(chi.terms.begin(),
                                                     chi.terms.end());
  std::sort(terms.begin(), terms.end(), [&](const auto& x, const auto& y) {
    return term_order_less(p.sys, y.first, x.first);
  });
  for (const auto& [w, c] : terms)
    out << "weight " << w.str() << ": " << c << "\n";
  return out.str();
}

std::string rgf_text(const ParsedCommon& p, const QPolynomial& rgf) {
  std::ostringstream out;
  out << "system " << to_string(p.sys) << " lambda (" << p.lam.a << ","
      << p.lam.b << ")\n";
  out << "coefficients";
  for (const std::int64_t c : rgf.coefficients) out << " " << c;
  out << "\n";
  out << "factored " << closed_form_rgf_factored(p.sys, p.lam) << "\n";
  return out.str();
}

std::string verdict_text(const VerificationVerdict& v) {
  std::ostringstream out;
  out << "system " << to_string(v.system) << " lambda (" << v.lambda.a << ","
      << v.lambda.b << ") order " << to_string(v.order) << "\n";
  out << "poset_size " << v.poset_size << " lattice_size " << v.lattice_size
      << "\n";
  for (const CheckResult& c : v.checks) {
    out << c.name << ": " << to_string(c.status) << "\n";
    for (const std::string& w : c.witnesses) out << "  " << w << "\n";
  }
  return out.str();
}

int exit_code_for(bool any_fail, bool any_skipped) {
  if (any_fail) return 1;
  if (any_skipped) return 3;
  return 0;
}

void timing_summary_to_stderr(const VerificationVerdict& v) {
  double total = 0;
  for (const auto& [name, ms] : v.timings_ms) total += ms;
  std::cerr << "timings " << to_string(v.system) << " (" << v.lambda.a << ","
            << v.lambda.b << ") " << to_string(v.order) << ": total " << total
            << " ms\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-color grid posets, their ideal lattices, and Weyl "
               "character verification for the rank-two root systems"};
  app.require_subcommand(1);

  CommonOpts construct_o, lattice_o, character_o, rgf_o, verify_o, export_o;
  bool export_weights = false;
  bool verify_timings = false, sweep_timings = false;
  std::int64_t verify_max_elements = VerifyCaps{}.max_elements;
  double verify_budget = VerifyCaps{}.budget_seconds;

  CLI::App* construct_c =
      app.add_subcommand("construct", "Build the two-color grid poset");
  add_common(construct_c, construct_o, "json", "Output format: json or text");

  CLI::App* lattice_c =
      app.add_subcommand("lattice", "Enumerate the lattice of order ideals");
  add_common(lattice_c, lattice_o, "json", "Output format: json or dot");

  CLI::App* character_c =
      app.add_subcommand("character", "Compute the Weyl character");
  add_common(character_c, character_o, "json", "Output format: json or text");

  CLI::App* rgf_c = app.add_subcommand(
      "rgf", "Closed-form rank generating function");
  add_common(rgf_c, rgf_o, "json", "Output format: json or text");

  CLI::App* verify_c =
      app.add_subcommand("verify", "Run the full check battery");
  add_common(verify_c, verify_o, "json", "Output format: json or text");
  verify_c->add_flag("--timings", verify_timings,
                     "Include wall-clock timings (non-deterministic output)");
  verify_c->add_option("--max-elements", verify_max_elements,
                       "Lattice element cap before checks are skipped");
  verify_c->add_option("--budget-seconds", verify_budget,
                       "Wall-clock budget before checks are skipped");

  CLI::App* sweep_c = app.add_subcommand(
      "sweep", "Verify the whole (system, order, a, b) matrix");
  int sweep_max_a = 3, sweep_max_b = 3, sweep_jobs = 1;
  std::string sweep_format = "json", sweep_out;
  std::int64_t sweep_max_elements = VerifyCaps{}.max_elements;
  double sweep_budget = VerifyCaps{}.budget_seconds;
  sweep_c->add_option("--max-a", sweep_max_a, "Largest first coordinate");
  sweep_c->add_option("--max-b", sweep_max_b, "Largest second coordinate");
  sweep_c->add_option("--jobs", sweep_jobs, "Worker threads");
  sweep_c->add_option("--format", sweep_format,
                      "Output format: json (one verdict per line)");
  sweep_c->add_option("--out", sweep_out,
                      "Write the artifact to FILE instead of stdout");
  sweep_c->add_flag("--timings", sweep_timings,
                    "Include wall-clock timings (non-deterministic output)");
  sweep_c->add_option("--max-elements", sweep_max_elements,
                      "Lattice element cap before checks are skipped");
  sweep_c->add_option("--budget-seconds", sweep_budget,
                      "Wall-clock budget per instance");

  CLI::App* export_c = app.add_subcommand(
      "export", "Export the lattice as Graphviz DOT");
  add_common(export_c, export_o, "dot", "Output format: dot");
  export_c->add_flag("--weights", export_weights,
                     "Label lattice elements with their weights");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(construct_c)) {
      if (!format_allowed(construct_o.format, {"json", "text"})) return 2;
      const std::optional<ParsedCommon> p = parse_common(construct_o);
      if (!p) return 2;
      const GridPoset poset = semistandard_poset(p->sys, p->lam, p->order);
      const std::string artifact = construct_o.format == "json"
                                       ? poset_to_json(poset).dump() + "\n"
                                       : poset_text(*p, poset);
      return emit(artifact, construct_o.out) ? 0 : 1;
    }

    if (app.got_subcommand(lattice_c)) {
      if (!format_allowed(lattice_o.format, {"json", "dot"})) return 2;
      const std::optional<ParsedCommon> p = parse_common(lattice_o);
      if (!p) return 2;
      const GridPoset poset = semistandard_poset(p->sys, p->lam, p->order);
      const ColoredLattice lat = ColoredLattice::enumerate(poset);
      const std::string artifact = lattice_o.format == "json"
                                       ? lattice_to_json(lat).dump() + "\n"
                                       : lattice_to_dot(lat);
      std::cerr << "lattice has " << lat.size() << " elements\n";
      return emit(artifact, lattice_o.out) ? 0 : 1;
    }

    if (app.got_subcommand(character_c)) {
      if (!format_allowed(character_o.format, {"json", "text"})) return 2;
      const std::optional<ParsedCommon> p = parse_common(character_o);
      if (!p) return 2;
      const GroupRingElement& chi = weyl_character(p->sys, p->lam);
      const std::string artifact =
          character_o.format == "json"
              ? character_to_json(p->sys, p->lam).dump() + "\n"
              : character_text(*p, chi);
      return emit(artifact, character_o.out) ? 0 : 1;
    }

    if (app.got_subcommand(rgf_c)) {
      if (!format_allowed(rgf_o.format, {"json", "text"})) return 2;
      const std::optional<ParsedCommon> p = parse_common(rgf_o);
      if (!p) return 2;
      const QPolynomial rgf = closed_form_rgf(p->sys, p->lam);
      const std::string artifact =
          rgf_o.format == "json"
              ? rgf_to_json(p->sys, p->lam).dump() + "\n"
              : rgf_text(*p, rgf);
      return emit(artifact, rgf_o.out) ? 0 : 1;
    }

    if (app.got_subcommand(verify_c)) {
      if (!format_allowed(verify_o.format, {"json", "text"})) return 2;
      const std::optional<ParsedCommon> p = parse_common(verify_o);
      if (!p) return 2;
      if (verify_max_elements < 0 || verify_budget < 0) {
        std::cerr << "weylgrid: caps must be nonnegative\n";
        return 2;
      }
      VerifyCaps caps;
      caps.max_elements = verify_max_elements;
      caps.budget_seconds = verify_budget;
      const VerificationVerdict v =
          verify_instance(p->sys, p->lam, p->order, caps);
      const std::string artifact =
          verify_o.format == "json"
              ? verdict_to_json(v, verify_timings).dump() + "\n"
              : verdict_text(v);
      if (verify_timings) timing_summary_to_stderr(v);
      if (!emit(artifact, verify_o.out)) return 1;
      return exit_code_for(v.any_fail(), v.any_skipped());
    }

    if (app.got_subcommand(sweep_c)) {
      if (!format_allowed(sweep_format, {"json"})) return 2;
      if (sweep_max_a < 0 || sweep_max_b < 0) {
        std::cerr << "weylgrid: sweep bounds must be nonnegative\n";
        return 2;
      }
      if (sweep_max_elements < 0 || sweep_budget < 0) {
        std::cerr << "weylgrid: caps must be nonnegative\n";
        return 2;
      }
      VerifyCaps caps;
      caps.max_elements = sweep_max_elements;
      caps.budget_seconds = sweep_budget;
      const std::vector<VerificationVerdict> verdicts =
          verify_matrix(sweep_max_a, sweep_max_b, caps, sweep_jobs);
      std::string artifact;
      bool any_fail = false, any_skipped = false;
      for (const VerificationVerdict& v : verdicts) {
        artifact += verdict_to_json(v, sweep_timings).dump() + "\n";
        any_fail = any_fail || v.any_fail();
        any_skipped = any_skipped || v.any_skipped();
        if (sweep_timings) timing_summary_to_stderr(v);
      }
      std::cerr << "sweep: " << verdicts.size() << " instances, "
                << (any_fail ? "with failures" : "no failures") << "\n";
      if (!emit(artifact, sweep_out)) return 1;
      return exit_code_for(any_fail, any_skipped);
    }

    if (app.got_subcommand(export_c)) {
      if (!format_allowed(export_o.format, {"dot"})) return 2;
      const std::optional<ParsedCommon> p = parse_common(export_o);
      if (!p) return 2;
      const GridPoset poset = semistandard_poset(p->sys, p->lam, p->order);
      const ColoredLattice lat = ColoredLattice::enumerate(poset);
      return emit(lattice_to_dot(lat, export_weights), export_o.out) ? 0 : 1;
    }
  } catch (const cap_exceeded& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 2;
}
