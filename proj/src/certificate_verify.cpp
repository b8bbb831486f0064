#include "crylift/certificate_verify.hpp"

#include "crylift/errors.hpp"
#include "crylift/integer.hpp"
#include "crylift/json_codec.hpp"
#include "crylift/unit_expr.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace crylift::verify {

namespace {

using nlohmann::json;

struct RawCertificate {
  Integer p;
  std::size_t f = 0, e = 0, d = 0;
  Integer t;
  Integer theta_p;
  std::size_t theta_f = 0;
  Integer b;
  std::vector<Integer> a;
  UnitExpr psi_uniformizer;
  std::vector<Integer> k;
  std::vector<std::vector<Integer>> induced;
  UnitExpr theta_uniformizer;
  std::vector<std::pair<std::size_t, std::size_t>> tau;  // (sigma, tau0)
  std::vector<std::string> hypotheses;
  std::map<std::string, std::string> recorded;
};

std::size_t index_from_json(const json& j, const std::string& path) {
  return codec::small_from_json(j, path);
}

RawCertificate read(const json& j) {
  const std::string root = "certificate";
  if (codec::field(j, "schema", root) != codec::kCertificateSchema) {
    throw MalformedInput(root + ".schema: unsupported");
  }
  RawCertificate c;
  const json& shape = codec::field(j, "shape", root);
  c.p = codec::integer_from_json(codec::field(shape, "p", root + ".shape"), root + ".shape.p");
  c.f = index_from_json(codec::field(shape, "f", root + ".shape"), root + ".shape.f");
  c.e = index_from_json(codec::field(shape, "e", root + ".shape"), root + ".shape.e");
  c.d = index_from_json(codec::field(shape, "d", root + ".shape"), root + ".shape.d");
  c.t = codec::integer_from_json(codec::field(shape, "t", root + ".shape"), root + ".shape.t");

  const json& tb = codec::field(j, "theta_bar", root);
  c.theta_p = codec::integer_from_json(codec::field(tb, "p", root + ".theta_bar"), root + ".theta_bar.p");
  c.theta_f = index_from_json(codec::field(tb, "f", root + ".theta_bar"), root + ".theta_bar.f");
  c.b = codec::integer_from_json(codec::field(tb, "b", root + ".theta_bar"), root + ".theta_bar.b");

  const json& psi = codec::field(j, "psi", root);
  c.a = codec::integers_from_json(codec::field(psi, "a", root + ".psi"), root + ".psi.a");
  c.psi_uniformizer = codec::unit_from_json(codec::field(psi, "uniformizer", root + ".psi"),
                                            root + ".psi.uniformizer");
  c.k = codec::integers_from_json(codec::field(j, "weights", root), root + ".weights");
  const json& induced = codec::field(j, "induced_weights", root);
  if (!induced.is_array()) throw MalformedInput(root + ".induced_weights: expected an array");
  for (std::size_t i = 0; i < induced.size(); ++i) {
    c.induced.push_back(
        codec::integers_from_json(induced[i], root + ".induced_weights[" + std::to_string(i) + "]"));
  }
  c.theta_uniformizer =
      codec::unit_from_json(codec::field(j, "theta_uniformizer", root), root + ".theta_uniformizer");

  const json& tau = codec::field(codec::field(j, "layout", root), "tau", root + ".layout");
  if (!tau.is_array()) throw MalformedInput(root + ".layout.tau: expected an array");
  for (std::size_t i = 0; i < tau.size(); ++i) {
    const std::string at = root + ".layout.tau[" + std::to_string(i) + "]";
    c.tau.emplace_back(index_from_json(codec::field(tau[i], "sigma", at), at + ".sigma"),
                       index_from_json(codec::field(tau[i], "tau0", at), at + ".tau0"));
  }

  const json& hyps = codec::field(j, "hypotheses", root);
  if (!hyps.is_array()) throw MalformedInput(root + ".hypotheses: expected an array");
  for (const auto& h : hyps) {
    if (!h.is_string()) throw MalformedInput(root + ".hypotheses: expected strings");
    c.hypotheses.push_back(h.get<std::string>());
  }

  const json& checks = codec::field(j, "checks", root);
  if (!checks.is_array()) throw MalformedInput(root + ".checks: expected an array");
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const std::string at = root + ".checks[" + std::to_string(i) + "]";
    const json& id = codec::field(checks[i], "id", at);
    const json& status = codec::field(checks[i], "status", at);
    if (!id.is_string() || !status.is_string()) throw MalformedInput(at + ": expected strings");
    const std::string s = status.get<std::string>();
    if (s != "pass" && s != "fail" && s != "n/a") throw MalformedInput(at + ".status: unknown");
    if (!c.recorded.emplace(id.get<std::string>(), s).second) {
      throw MalformedInput(at + ".id: duplicate check");
    }
  }
  return c;
}

bool pairwise_distinct(std::vector<Integer> values) {
  std::sort(values.begin(), values.end());
  return std::adjacent_find(values.begin(), values.end()) == values.end();
}

}  // namespace

VerifyResult verify_certificate(const json& certificate, const VerifyOptions& options) {
  VerifyResult result;
  RawCertificate c;
  try {
    c = read(certificate);
  } catch (const MalformedInput& error) {
    result.schema_errors.emplace_back(error.what());
    return result;
  } catch (const json::exception& error) {
    result.schema_errors.emplace_back(error.what());
    return result;
  }

  auto fail = [&](const std::string& check, const std::string& detail) {
    result.failures.push_back({check, detail});
  };

  // Shape and sizes. Anything wrong here makes the identities meaningless.
  if (!is_prime(c.p) || c.e < 1 || c.f < 1 || c.d < 1 || c.t < 1) {
    fail("shape", "invalid local field shape");
    return result;
  }
  const Integer q = ipow(c.p, c.f);
  if (c.t % (q - 1) != 0) fail("shape", "q - 1 does not divide t");
  const std::size_t n_sigma = c.e * c.f;
  const std::size_t n_tau0 = c.f * c.d;
  const std::size_t n_tau = n_sigma * c.d;
  if (c.theta_p != c.p || c.theta_f != n_tau0) {
    fail("theta_bar", "residual character does not live on F_{p^{fd}}");
    return result;
  }
  const Integer big_q = ipow(c.p, n_tau0);
  if (c.b < 0 || c.b > big_q - 2) {
    fail("theta_bar", "exponent outside [0, p^{fd} - 2]");
    return result;
  }
  if (c.a.size() != n_sigma) {
    fail("psi", "expected " + std::to_string(n_sigma) + " determinant exponents");
    return result;
  }
  if (c.k.size() != n_tau || c.tau.size() != n_tau) {
    fail("weights", "expected " + std::to_string(n_tau) + " weights and pairings");
    return result;
  }

  // Canonical pairing: tau = (s e + r) d + j  <->  (sigma = s e + r, tau0 = s + f j).
  for (std::size_t tau = 0; tau < n_tau; ++tau) {
    const std::size_t sigma = tau / c.d;
    const std::size_t j = tau % c.d;
    const std::size_t s = sigma / c.e;
    if (c.tau[tau] != std::pair{sigma, s + c.f * j}) {
      fail("layout", "pairing of tau " + std::to_string(tau) + " is not canonical");
      return result;
    }
  }

  const Integer m = c.p - 1;
  std::vector<Integer> b_digits;
  Integer rest = c.b;
  for (std::size_t u = 0; u < n_tau0; ++u) {
    b_digits.push_back(rest % c.p);
    rest /= c.p;
  }
  std::vector<Integer> c_digits;
  rest = c.b % (q - 1);
  for (std::size_t s = 0; s < c.f; ++s) {
    c_digits.push_back(rest % c.p);
    rest /= c.p;
  }

  std::vector<Integer> by_sigma(n_sigma), by_tau0(n_tau0);
  for (std::size_t tau = 0; tau < n_tau; ++tau) {
    by_sigma[c.tau[tau].first] += c.k[tau];
    by_tau0[c.tau[tau].second] += c.k[tau];
  }

  const bool degenerate = c.d == 1;
  std::map<std::string, std::string> computed;
  auto set = [&](const char* id, bool ok, const std::string& detail) {
    computed[id] = ok ? "pass" : "fail";
    if (!ok) fail(id, detail);
  };

  {
    bool ok = true;
    for (std::size_t s = 0; s < c.f; ++s) {
      Integer rows = 0, cols = 0;
      for (std::size_t r = 0; r < c.e; ++r) rows += c.a[s * c.e + r];
      for (std::size_t j = 0; j < c.d; ++j) cols += b_digits[s + c.f * j];
      ok = ok && floor_mod(rows - c_digits[s], m) == 0 && floor_mod(cols - c_digits[s], m) == 0;
    }
    set("eq_one", ok, "psi is not congruent to theta-bar on O_F^x");
  }

  if (degenerate) {
    computed["distinct"] = "n/a";
    computed["lifts_residual"] = "n/a";
    computed["block_separation"] = "n/a";
  } else {
    bool distinct = true;
    if (options.distinctness == Distinctness::kGlobal) {
      distinct = pairwise_distinct(c.k);
    } else {
      for (std::size_t sigma = 0; sigma < n_sigma; ++sigma) {
        distinct = distinct && pairwise_distinct({c.k.begin() + sigma * c.d,
                                                  c.k.begin() + (sigma + 1) * c.d});
      }
    }
    set("distinct", distinct, "weights are not pairwise distinct");

    bool lifts = true;
    for (std::size_t u = 0; u < n_tau0; ++u) lifts = lifts && floor_mod(by_tau0[u] - b_digits[u], m) == 0;
    set("lifts_residual", lifts, "column sums are not congruent to the digits of theta-bar");

    bool separated = true;
    for (std::size_t s = 0; s + 1 < c.f; ++s) {
      Integer previous = 0;
      for (std::size_t tau = s * c.e * c.d; tau < (s + 1) * c.e * c.d; ++tau) {
        previous = std::max(previous, crylift::abs(c.k[tau]));
      }
      for (std::size_t tau = (s + 1) * c.e * c.d; tau < (s + 2) * c.e * c.d; ++tau) {
        separated = separated && crylift::abs(c.k[tau]) > previous;
      }
    }
    set("block_separation", separated, "sigma0-blocks are not magnitude-separated");
  }

  set("four", by_sigma == c.a, "sum of k over tau|_F = sigma differs from a_sigma");

  const UnitExpr twist = (c.d % 2 == 1) ? UnitExpr::one() : UnitExpr::minus_one();
  set("eq_three", c.theta_uniformizer == twist * c.psi_uniformizer,
      "theta(varpi_E) != (-1)^{d-1} psi(varpi_F)");
  set("five", twist * c.theta_uniformizer == c.psi_uniformizer,
      "(-1)^{d-1} theta(varpi_E) != psi(varpi_F)");

  {
    bool regular = true;
    for (std::size_t sigma = 0; sigma < n_sigma; ++sigma) {
      regular = regular && pairwise_distinct({c.k.begin() + sigma * c.d, c.k.begin() + (sigma + 1) * c.d});
    }
    set("regular", regular, "induced weights are not regular");

    std::vector<std::vector<Integer>> expected(n_sigma);
    for (std::size_t sigma = 0; sigma < n_sigma; ++sigma) {
      expected[sigma].assign(c.k.begin() + sigma * c.d, c.k.begin() + (sigma + 1) * c.d);
      std::sort(expected[sigma].begin(), expected[sigma].end(), std::greater<>());
    }
    if (c.induced != expected) fail("induced_weights", "not the per-sigma weights sorted descending");
  }

  for (const auto& [id, status] : computed) {
    auto it = c.recorded.find(id);
    if (it == c.recorded.end()) {
      fail("record", "check '" + id + "' is not recorded");
    } else if (it->second != status) {
      fail("record", "check '" + id + "' recorded as " + it->second + ", recomputed " + status);
    }
  }
  for (const auto& [id, status] : c.recorded) {
    if (!computed.contains(id)) fail("record", "unknown check '" + id + "'");
  }
  if (std::find(c.hypotheses.begin(), c.hypotheses.end(), "eq_two") == c.hypotheses.end()) {
    fail("record", "hypothesis eq_two is not declared");
  }
  return result;
}

json to_json(const VerifyResult& result) {
  json failures = json::array();
  for (const auto& f : result.failures) failures.push_back({{"check", f.check}, {"detail", f.detail}});
  return {{"result", result.passed() ? "pass" : "fail"},
          {"schema_errors", result.schema_errors},
          {"failures", failures}};
}

}  // namespace crylift::verify
