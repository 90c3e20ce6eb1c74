#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <string>

#include "cfladder/export.hpp"
#include "cfladder/number_spec.hpp"

namespace {

using namespace cfl;

Integer parse_m(const std::string& text) {
  try {
    return Integer(text);
  } catch (const std::invalid_argument&) {
    throw spec_parse_error("bad --m value '" + text + "': not an integer");
  }
}

void write_text(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::domain_error("cannot open '" + path + "' for writing");
  f << content;
  if (!f) throw std::domain_error("write to '" + path + "' failed");
}

// --out: empty or "csv"/"json" pick the stdout format; anything else is a
// file path whose format follows its extension (.json, else CSV)
void emit(const std::string& out, const std::string& csv,
          const nlohmann::ordered_json& json) {
  if (out.empty() || out == "csv") {
    std::cout << csv;
    return;
  }
  if (out == "json") {
    std::cout << json.dump(2) << "\n";
    return;
  }
  if (out.ends_with(".json")) {
    write_text(out, json.dump(2) + "\n");
  } else {
    write_text(out, csv);
  }
}

int run_expand(const std::string& spec, int terms, const std::string& out,
               bool verify) {
  const AlgebraicNumber x = parse_number_spec(spec);
  const Expansion exp = expand(x, terms);
  const ExportMeta meta = {
      {"tool", kToolVersion},
      {"command", "expand"},
      {"number", spec},
      {"number_canonical", canonical_spec(x)},
      {"terms", std::to_string(terms)},
      {"length_interpretation", "terms bounds the quotient count b_0..b_N"},
      {"terminated", exp.terminated ? "true" : "false"},
  };
  emit(out, expand_csv(exp, meta), expand_json(exp, meta));
  if (verify) {
    const IdentityReport rep = verify_identities(exp);
    if (!rep.all_ok) {
      std::cerr << "verify: FAILED (convergent identities)\n";
      return 4;
    }
    std::cerr << "verify: ok (" << rep.checks.size() << " indices)\n";
  }
  return 0;
}

int run_ladder(const std::string& xi_spec, const std::string& eta_spec,
               const std::string& m_text, int terms, const std::string& out,
               const std::string& figure3, const std::string& svg, bool verify,
               bool inject_fault) {
  const AlgebraicNumber xi = parse_number_spec(xi_spec);
  const Integer m = parse_m(m_text);
  const AlgebraicNumber eta = reciprocal_scale(xi, m);
  if (!eta_spec.empty() && !equals(parse_number_spec(eta_spec), eta)) {
    throw std::domain_error("--eta does not equal m / xi");
  }

  // triplet indices reach `terms`, so each expansion needs terms + 1
  // quotients; the two numbers expand independently
  auto xi_future = std::async(std::launch::async,
                              [&] { return expand(xi, terms + 1); });
  const Expansion exp_eta = expand(eta, terms + 1);
  const Expansion exp_xi = xi_future.get();
  Ladder lad = build_ladder(exp_xi, exp_eta, m);
  if (inject_fault && !lad.connections.empty()) {
    lad.connections.front().value += 1;
  }

  const ExportMeta meta = {
      {"tool", kToolVersion},
      {"command", "ladder"},
      {"xi", xi_spec},
      {"xi_canonical", canonical_spec(xi)},
      {"eta", eta_spec.empty() ? "derived" : eta_spec},
      {"eta_canonical", canonical_spec(eta)},
      {"m", to_string(m)},
      {"terms", std::to_string(terms)},
      {"length_interpretation", "n,k are triplet indices 1..terms"},
  };
  emit(out, ladder_csv(lad, meta), ladder_json(lad, meta));
  if (!figure3.empty()) {
    const ExportMeta fmeta = {
        {"tool", kToolVersion},
        {"command", "ladder --figure3"},
        {"xi", xi_spec},
        {"m", to_string(m)},
        {"terms", std::to_string(terms)},
    };
    if (figure3.ends_with(".json")) {
      write_text(figure3, figure3_json(lad, fmeta).dump(2) + "\n");
    } else {
      write_text(figure3, figure3_csv(lad, fmeta));
    }
  }
  if (!svg.empty()) write_text(svg, ladder_svg(lad));

  if (verify) {
    const LadderReport rep = verify_ladder(lad);
    if (!rep.all_ok) {
      std::cerr << "verify: FAILED (ladder invariants)\n";
      return 4;
    }
    std::cerr << "verify: ok (" << lad.connections.size() << " connections, "
              << rep.runs.size() << " runs)\n";
  }
  return 0;
}

int run_stats(const std::string& spec, int terms, int skip_first,
              const std::string& out) {
  const AlgebraicNumber x = parse_number_spec(spec);
  const Expansion exp = expand(x, terms);
  const KuzminReport rep = kuzmin_report(exp, skip_first);
  const ExportMeta meta = {
      {"tool", kToolVersion},
      {"command", "stats"},
      {"number", spec},
      {"number_canonical", canonical_spec(x)},
      {"terms", std::to_string(terms)},
      {"length_interpretation",
       "sample is b_n for n >= skip_first, tail bucket keyed >" +
           std::to_string(kKuzminCap)},
      {"skip_first", std::to_string(skip_first)},
      {"sample_size", std::to_string(rep.sample_size)},
      {"max_abs_deviation", format_double(rep.max_abs_deviation)},
      {"largest_quotient", "n=" + std::to_string(rep.largest_quotient.first) +
                               " b=" + to_string(rep.largest_quotient.second)},
  };
  emit(out, stats_csv(rep, meta), stats_json(rep, meta));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact continued-fraction expansions and connection ladders "
               "of algebraic numbers"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  auto* cmd_expand =
      app.add_subcommand("expand", "expand a number into partial quotients");
  std::string e_number, e_out;
  int e_terms = 0;
  bool e_verify = false;
  cmd_expand->add_option("--number", e_number, "number spec (see README)")
      ->required();
  cmd_expand->add_option("--terms", e_terms, "how many quotients")->required();
  cmd_expand->add_option("--out", e_out,
                         "csv|json (stdout format) or an output path");
  cmd_expand->add_flag("--verify", e_verify,
                       "check convergent identities; exit 4 on failure");

  auto* cmd_ladder =
      app.add_subcommand("ladder", "connections between xi and eta = m/xi");
  std::string l_xi, l_eta, l_m, l_out, l_fig3, l_svg;
  int l_terms = 0;
  bool l_verify = false, l_fault = false;
  cmd_ladder->add_option("--xi", l_xi, "number spec for xi")->required();
  cmd_ladder->add_option("--m", l_m, "positive integer m")->required();
  cmd_ladder->add_option("--terms", l_terms, "largest triplet index n, k")
      ->required();
  cmd_ladder->add_option("--eta", l_eta,
                         "optional spec for eta, cross-checked against m/xi");
  cmd_ladder->add_option("--out", l_out,
                         "csv|json (stdout format) or an output path");
  cmd_ladder->add_option("--figure3", l_fig3,
                         "write the n-k alternation series to this path");
  cmd_ladder->add_option("--svg", l_svg, "write a ladder drawing to this path");
  cmd_ladder->add_flag("--verify", l_verify,
                       "check every ladder invariant; exit 4 on failure");
  cmd_ladder->add_flag("--inject-fault", l_fault)->group("");

  auto* cmd_stats =
      app.add_subcommand("stats", "quotient frequencies vs the Kuzmin law");
  std::string s_number, s_out;
  int s_terms = 0, s_skip = 1;
  cmd_stats->add_option("--number", s_number, "number spec")->required();
  cmd_stats->add_option("--terms", s_terms, "how many quotients to expand")
      ->required();
  cmd_stats->add_option("--skip-first", s_skip,
                        "leading quotients to drop from the sample");
  cmd_stats->add_option("--out", s_out,
                        "csv|json (stdout format) or an output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cmd_expand) return run_expand(e_number, e_terms, e_out, e_verify);
    if (*cmd_ladder) {
      return run_ladder(l_xi, l_eta, l_m, l_terms, l_out, l_fig3, l_svg,
                        l_verify, l_fault);
    }
    return run_stats(s_number, s_terms, s_skip, s_out);
  } catch (const spec_parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
