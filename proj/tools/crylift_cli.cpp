// crylift: command-line front end. Every subcommand reads one JSON request
// (from --json, --input FILE, or stdin) and writes one JSON document to
// stdout. Exit codes: 0 ok, 1 verification failed, 2 malformed input,
// 3 infeasible instance, 4 internal invariant breach.

#include "crylift/commands.hpp"
#include "crylift/json_codec.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

using crylift::ExitCode;
using crylift::cli::CommandResult;
using nlohmann::json;

struct RequestSource {
  std::string input = "-";
  std::string inline_json;
};

json read_request(const RequestSource& source) {
  std::string text;
  if (!source.inline_json.empty()) {
    text = source.inline_json;
  } else if (source.input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream file(source.input, std::ios::binary);
    if (!file) throw crylift::MalformedInput("cannot read input file '" + source.input + "'");
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw crylift::MalformedInput(std::string("malformed JSON: ") + e.what());
  }
}

int emit(const CommandResult& result) {
  std::cout << result.output.dump(2) << '\n';
  return static_cast<int>(result.code);
}

void add_source(CLI::App* cmd, RequestSource& source) {
  cmd->add_option("-i,--input", source.input, "Request JSON file, '-' for stdin");
  cmd->add_option("-j,--json", source.inline_json, "Request JSON given inline");
}

crylift::sweep::Range parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const auto v = static_cast<std::uint32_t>(std::stoul(text));
      return {v, v};
    }
    return {static_cast<std::uint32_t>(std::stoul(text.substr(0, colon))),
            static_cast<std::uint32_t>(std::stoul(text.substr(colon + 1)))};
  } catch (const std::exception&) {
    throw crylift::MalformedInput("bad range '" + text + "', expected LO:HI");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lift certificates: character digits, congruence-constrained assignments, "
               "induced determinants and weight ledgers"};
  app.require_subcommand(1);

  RequestSource source;
  using Body = CommandResult (*)(const json&);
  const std::vector<std::tuple<std::string, std::string, Body>> simple = {
      {"digits", "Digit decomposition / restriction of a finite-field character", crylift::cli::cmd_digits},
      {"transport", "Exact transport with prescribed row and column sums", crylift::cli::cmd_transport},
      {"regular", "Distinct, bounded assignment with modular column sums", crylift::cli::cmd_regular},
      {"lift", "Build and self-check an irreducible-case lift certificate", crylift::cli::cmd_lift},
      {"induction", "Check the determinant-of-induction identities on a finite model",
       crylift::cli::cmd_induction},
      {"twist", "Weight twists, extension shifts, d-th roots and fixed-determinant twists",
       crylift::cli::cmd_twist},
  };
  std::vector<std::pair<CLI::App*, Body>> handlers;
  for (const auto& [name, help, body] : simple) {
    auto* cmd = app.add_subcommand(name, help);
    add_source(cmd, source);
    handlers.emplace_back(cmd, body);
  }

  auto* verify_cmd = app.add_subcommand("verify", "Re-verify a lift certificate from its raw fields");
  add_source(verify_cmd, source);
  bool per_sigma = false;
  verify_cmd->add_flag("--per-sigma", per_sigma,
                       "Accept weights distinct per embedding of F instead of globally");

  auto* sweep_cmd = app.add_subcommand("sweep", "Exhaustive lift sweep with independent re-verification");
  crylift::sweep::SweepConfig config;
  std::string config_file, primes = "2,3,5", f_range = "1:2", e_range = "1:2", d_range = "1:3";
  std::string t_modes = "both", out_path;
  std::int64_t a_bound = 10;
  sweep_cmd->add_option("--config", config_file, "Sweep config JSON (flags below are ignored when given)");
  sweep_cmd->add_option("--primes", primes, "Comma-separated primes");
  sweep_cmd->add_option("--f", f_range, "Residue degree range LO:HI");
  sweep_cmd->add_option("--e", e_range, "Ramification range LO:HI");
  sweep_cmd->add_option("--d", d_range, "Extension degree range LO:HI");
  sweep_cmd->add_option("--t", t_modes, "t values: units (q-1), with-p (p(q-1)) or both");
  sweep_cmd->add_option("--a-bound", a_bound, "Bound on sampled determinant exponents");
  sweep_cmd->add_option("--samples", config.samples, "Determinant samples per residual character");
  sweep_cmd->add_option("--seed", config.seed, "Random seed");
  sweep_cmd->add_option("--jobs", config.jobs, "Parallel cells");
  sweep_cmd->add_option("--max-field-bits", config.max_field_bits, "Cap on log2 p^{fd}");
  sweep_cmd->add_option("--out", out_path, "Report file (stdout when omitted)");
  sweep_cmd->add_flag("--timing", config.timing, "Record per-instance timings (breaks byte-identity)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(crylift::ExitCode::kMalformedInput);
  }

  for (const auto& [cmd, body] : handlers) {
    if (cmd->parsed()) {
      return emit(crylift::cli::guarded([&, body = body] { return body(read_request(source)); }));
    }
  }
  if (verify_cmd->parsed()) {
    return emit(crylift::cli::guarded([&] {
      crylift::verify::VerifyOptions options;
      if (per_sigma) options.distinctness = crylift::verify::Distinctness::kPerSigma;
      return crylift::cli::cmd_verify(read_request(source), options);
    }));
  }
  return emit(crylift::cli::guarded([&] {
    crylift::sweep::SweepConfig c = config;
    if (!config_file.empty()) {
      c = crylift::sweep::config_from_json(read_request({config_file, ""}));
    } else {
      c.primes.clear();
      std::stringstream list(primes);
      for (std::string item; std::getline(list, item, ',');) c.primes.push_back(crylift::parse_integer(item));
      c.f = parse_range(f_range);
      c.e = parse_range(e_range);
      c.d = parse_range(d_range);
      c.a_bound = a_bound;
      if (t_modes == "units") c.t_modes = {crylift::sweep::TMode::kUnits};
      else if (t_modes == "with-p") c.t_modes = {crylift::sweep::TMode::kWithP};
      else if (t_modes != "both") throw crylift::MalformedInput("--t: expected units, with-p or both");
    }
    return crylift::cli::cmd_sweep(c, out_path.empty() ? std::nullopt : std::optional(out_path));
  }));
}
