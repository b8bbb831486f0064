#include "crylift/commands.hpp"

#include "crylift/assign_solver.hpp"
#include "crylift/det_ledger.hpp"
#include "crylift/ff_chars.hpp"
#include "crylift/induction_oracle.hpp"
#include "crylift/json_codec.hpp"
#include "crylift/lift_builder.hpp"

#include <fstream>
#include <random>
#include <set>

namespace crylift::cli {

using codec::field;
using codec::integer_from_json;
using codec::integers_from_json;
using codec::small_from_json;

json error_json(ExitCode code, const std::string& message) {
  const char* kind = code == ExitCode::kMalformedInput ? "malformed_input"
                     : code == ExitCode::kInfeasible   ? "infeasible"
                                                       : "internal";
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

CommandResult guarded(const std::function<CommandResult()>& body) {
  try {
    return body();
  } catch (const MalformedInput& e) {
    return {ExitCode::kMalformedInput, error_json(ExitCode::kMalformedInput, e.what())};
  } catch (const json::exception& e) {
    return {ExitCode::kMalformedInput, error_json(ExitCode::kMalformedInput, e.what())};
  } catch (const Infeasible& e) {
    return {ExitCode::kInfeasible, error_json(ExitCode::kInfeasible, e.what())};
  } catch (const std::exception& e) {
    return {ExitCode::kInternal, error_json(ExitCode::kInternal, e.what())};
  }
}

CommandResult cmd_digits(const json& request) {
  const auto spec = ff::FiniteFieldSpec::make(integer_from_json(field(request, "p", "request"), "request.p"),
                                              small_from_json(field(request, "f", "request"), "request.f"));
  ff::MultChar c;
  if (request.contains("digits")) {
    c = ff::from_digits({spec.p, integers_from_json(request["digits"], "request.digits")}, spec);
  } else {
    c = ff::MultChar::make(spec, integer_from_json(field(request, "b", "request"), "request.b"));
  }
  json out = {{"p", to_decimal(spec.p)},
              {"f", std::to_string(spec.f)},
              {"b", to_decimal(c.exponent)},
              {"digits", codec::to_json(ff::digits(c))}};
  if (request.contains("restrict_f")) {
    const auto sub = ff::FiniteFieldSpec::make(spec.p, small_from_json(request["restrict_f"], "request.restrict_f"));
    const auto r = ff::restrict_to(c, sub);
    out["restricted"] = {{"f", std::to_string(sub.f)},
                         {"b", to_decimal(r.exponent)},
                         {"digits", codec::to_json(ff::digits(r))}};
  }
  return {ExitCode::kOk, out};
}

CommandResult cmd_transport(const json& request) {
  const auto a = integers_from_json(field(request, "a", "request"), "request.a");
  const auto b = integers_from_json(field(request, "b", "request"), "request.b");
  const auto solution = assign::transport(a, b);
  const auto report = assign::verify_assignment(solution);
  if (!report.ok) return {ExitCode::kInternal, error_json(ExitCode::kInternal, "transport output rejected")};
  return {ExitCode::kOk, {{"matrix", codec::to_json(solution.entries)}, {"verified", true}}};
}

CommandResult cmd_regular(const json& request) {
  const auto a = integers_from_json(field(request, "a", "request"), "request.a");
  const auto b = integers_from_json(field(request, "b", "request"), "request.b");
  const Integer m = integer_from_json(field(request, "m", "request"), "request.m");
  const Integer bound = integer_from_json(field(request, "C", "request"), "request.C");
  const bool want_trace = request.value("trace", false);

  assign::RebalanceTrace trace;
  const auto solution = assign::regular_transport(a, b, m, bound, want_trace ? &trace : nullptr);
  const auto report = assign::verify_assignment(solution);
  if (!report.ok || !assign::rows_separated(solution.entries)) {
    return {ExitCode::kInternal, error_json(ExitCode::kInternal, "regular transport output rejected")};
  }
  json out = {{"matrix", codec::to_json(solution.entries)}, {"verified", true}};
  if (want_trace) out["trace"] = codec::to_json(trace);
  return {ExitCode::kOk, out};
}

CommandResult cmd_lift(const json& request) {
  const auto shape = codec::shape_from_json(field(request, "shape", "request"), "request.shape");
  const auto theta_bar = ff::MultChar::make(shape.extension_residue_field(),
                                            integer_from_json(field(request, "theta_bar", "request"),
                                                              "request.theta_bar"));
  lift::DetSpec psi;
  psi.a = integers_from_json(field(request, "a", "request"), "request.a");
  if (request.contains("psi_uniformizer")) {
    psi.uniformizer = codec::unit_from_json(request["psi_uniformizer"], "request.psi_uniformizer");
  }
  const auto cert = lift::irr_crys_lift(theta_bar, psi, shape);
  json out = codec::to_json(cert);
  const auto verdict = verify::verify_certificate(out);
  out["self_check"] = verdict.passed() ? "pass" : "fail";
  return {verdict.passed() ? ExitCode::kOk : ExitCode::kInternal, out};
}

CommandResult cmd_induction(const json& request) {
  const auto q = to_int64(integer_from_json(field(request, "q", "request"), "request.q"));
  const auto d = small_from_json(field(request, "d", "request"), "request.d");
  const auto cap = request.contains("max_modulus")
                       ? to_int64(integer_from_json(request["max_modulus"], "request.max_modulus"))
                       : induction::FrobeniusModel::kDefaultMaxModulus;
  const auto model = induction::FrobeniusModel::make(q, d, cap);

  std::vector<std::int64_t> bs;
  if (request.contains("b")) {
    bs.push_back(to_int64(integer_from_json(request["b"], "request.b")));
  } else {
    const auto full_limit = request.contains("full_sweep_limit")
                                ? to_int64(integer_from_json(request["full_sweep_limit"], "request.full_sweep_limit"))
                                : std::int64_t{4000};
    const auto samples = request.contains("random_b")
                             ? to_int64(integer_from_json(request["random_b"], "request.random_b"))
                             : std::int64_t{512};
    if (model.modulus <= full_limit) {
      for (std::int64_t b = 0; b < model.modulus; ++b) bs.push_back(b);
    } else {
      const auto seed = request.contains("seed") ? to_uint64(integer_from_json(request["seed"], "request.seed")) : 0;
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<std::int64_t> pick(0, model.modulus - 1);
      for (std::int64_t i = 0; i < samples; ++i) bs.push_back(pick(rng));
    }
  }

  std::uint64_t subgroup_checks = 0, generator_checks = 0, counterexamples = 0;
  json failing = json::array();
  for (std::int64_t b : bs) {
    const auto report = induction::verify_det_induction(model, b);
    subgroup_checks += report.subgroup_checks;
    generator_checks += report.generator_checks;
    counterexamples += report.counterexample_count;
    if (!report.ok()) failing.push_back(codec::to_json(report));
  }
  json out = {{"q", std::to_string(q)},
              {"d", std::to_string(d)},
              {"M", std::to_string(model.modulus)},
              {"norm_exponent", to_decimal(ff::norm_exponent(q, d))},
              {"b_checked", std::to_string(bs.size())},
              {"subgroup_checks", std::to_string(subgroup_checks)},
              {"generator_checks", std::to_string(generator_checks)},
              {"counterexample_count", std::to_string(counterexamples)},
              {"failing_reports", failing},
              {"result", counterexamples == 0 ? "pass" : "fail"}};
  return {counterexamples == 0 ? ExitCode::kOk : ExitCode::kInternal, out};
}

CommandResult cmd_twist(const json& request) {
  const json& op_field = field(request, "op", "request");
  if (!op_field.is_string()) throw MalformedInput("request.op: expected a string");
  const std::string op = op_field.get<std::string>();

  if (op == "twist") {
    const auto profile = codec::profile_from_json(field(request, "profile", "request"), "request.profile");
    const Integer m = integer_from_json(field(request, "m", "request"), "request.m");
    const auto shifted = ledger::twist(profile, m);
    return {ExitCode::kOk, {{"profile", codec::to_json(shifted)}, {"regular", shifted.regular()}}};
  }
  if (op == "shift") {
    const auto p1 = codec::profile_from_json(field(request, "p1", "request"), "request.p1");
    const auto p2 = codec::profile_from_json(field(request, "p2", "request"), "request.p2");
    const Integer p = integer_from_json(field(request, "p", "request"), "request.p");
    auto convention = ledger::SlightlyLessConvention::kReversedSign;
    if (request.contains("convention")) {
      const auto& c = request["convention"];
      if (c == "literal") convention = ledger::SlightlyLessConvention::kLiteral;
      else if (c != "reversed-sign") throw MalformedInput("request.convention: unknown");
    }
    const auto psi1 = request.contains("psi1") ? codec::unit_from_json(request["psi1"], "request.psi1")
                                               : UnitExpr::symbol("psi_1(varpi_F)");
    const auto psi2 = request.contains("psi2") ? codec::unit_from_json(request["psi2"], "request.psi2")
                                               : UnitExpr::symbol("psi_2(varpi_F)");
    return {ExitCode::kOk, codec::to_json(ledger::shift_for_extension(p1, p2, p, psi1, psi2, convention))};
  }
  if (op == "shout") {
    const auto shape = codec::shape_from_json(field(request, "shape", "request"), "request.shape");
    const auto rho = codec::profile_from_json(field(request, "rho", "request"), "request.rho");
    const auto rho_x = codec::profile_from_json(field(request, "rho_x", "request"), "request.rho_x");
    const auto eta = request.contains("eta") ? codec::unit_from_json(request["eta"], "request.eta")
                                             : UnitExpr::symbol("eta(varpi_F)");
    const auto theta = ledger::twist_shout(rho, rho_x, shape, eta);
    const auto twisted = ledger::tensor_with(rho_x, theta.k);
    return {ExitCode::kOk,
            {{"theta", codec::to_json(theta)},
             {"twisted", codec::to_json(twisted)},
             {"det_twisted", codec::to_json(twisted.det_exponents())},
             {"det_rho", codec::to_json(rho.det_exponents())}}};
  }
  if (op == "root") {
    const auto eta = codec::unit_from_json(field(request, "eta", "request"), "request.eta");
    const Integer d = integer_from_json(field(request, "d", "request"), "request.d");
    return {ExitCode::kOk, {{"root", codec::to_json(ledger::dth_root_correction(eta, d))}}};
  }
  throw MalformedInput("request.op: expected one of twist, shift, shout, root");
}

CommandResult cmd_verify(const json& certificate, const verify::VerifyOptions& options) {
  const auto result = verify::verify_certificate(certificate, options);
  if (!result.schema_ok()) {
    json out = verify::to_json(result);
    return {ExitCode::kMalformedInput, out};
  }
  return {result.passed() ? ExitCode::kOk : ExitCode::kCheckFailed, verify::to_json(result)};
}

CommandResult cmd_sweep(const sweep::SweepConfig& config, const std::optional<std::string>& out_path) {
  const auto report = sweep::run_sweep(config);
  const json document = sweep::to_json(report);
  json summary = {{"totals", document["totals"]}};
  if (out_path) {
    std::ofstream file(*out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw MalformedInput("cannot open report file '" + *out_path + "' for writing");
    file << document.dump(1) << '\n';
    if (!file) throw MalformedInput("failed writing report file '" + *out_path + "'");
    summary["report"] = *out_path;
  } else {
    summary = document;
  }
  return {report.totals.failed == 0 ? ExitCode::kOk : ExitCode::kInternal, summary};
}

}  // namespace crylift::cli
