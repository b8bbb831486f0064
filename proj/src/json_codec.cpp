#include "crylift/json_codec.hpp"

#include "crylift/errors.hpp"

#include <limits>

namespace crylift::codec {

json to_json(const Integer& value) { return to_decimal(value); }

json to_json(const std::vector<Integer>& values) {
  json out = json::array();
  for (const Integer& v : values) out.push_back(to_decimal(v));
  return out;
}

json to_json(const UnitExpr& unit) {
  json factors = json::array();
  for (const auto& [label, e] : unit.factors()) {
    factors.push_back({{"label", label},
                       {"num", to_decimal(numerator(e))},
                       {"den", to_decimal(denominator(e))}});
  }
  return {{"sign", std::to_string(unit.sign())}, {"factors", factors}};
}

json to_json(const lift::LocalFieldShape& shape) {
  return {{"p", to_decimal(shape.p)},
          {"f", std::to_string(shape.f)},
          {"e", std::to_string(shape.e)},
          {"d", std::to_string(shape.d)},
          {"t", to_decimal(shape.t)}};
}

json to_json(const ff::DigitVector& digits) { return to_json(digits.digits); }

json to_json(const assign::IntegerMatrix& matrix) {
  json out = json::array();
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    out.push_back(to_json(std::vector<Integer>(matrix.row(i).begin(), matrix.row(i).end())));
  }
  return out;
}

json to_json(const assign::RebalanceTrace& trace) {
  json out = json::array();
  for (const auto& step : trace) {
    const char* kind = step.kind == assign::RebalanceStep::Kind::kInitial     ? "initial"
                       : step.kind == assign::RebalanceStep::Kind::kCollision ? "collision"
                                                                               : "magnitude";
    json raised = json::array();
    json lowered = json::array();
    for (auto j : step.raised) raised.push_back(std::to_string(j));
    for (auto j : step.lowered) lowered.push_back(std::to_string(j));
    out.push_back({{"kind", kind},
                   {"row", std::to_string(step.row)},
                   {"raised", raised},
                   {"lowered", lowered},
                   {"n", to_decimal(step.n)},
                   {"matrix", to_json(step.after)}});
  }
  return out;
}

json to_json(const ledger::WeightProfile& profile) {
  json weights = json::array();
  for (const auto& w : profile.weights()) weights.push_back(to_json(w));
  return {{"dim", std::to_string(profile.dim())}, {"weights", weights}};
}

json to_json(const ledger::CrystCharSpec& spec) {
  return {{"k", to_json(spec.k)}, {"uniformizer", to_json(spec.uniformizer)}};
}

json to_json(const ledger::ExtensionShift& shift) {
  const auto& l = shift.ledger;
  return {
      {"n", to_decimal(shift.n)},
      {"p1_shifted", to_json(shift.p1_shifted)},
      {"p2_shifted", to_json(shift.p2_shifted)},
      {"ledger",
       {{"shift", to_decimal(l.shift)},
        {"det1", to_json(l.det1)},
        {"det2", to_json(l.det2)},
        {"det1_shifted", to_json(l.det1_shifted)},
        {"det2_shifted", to_json(l.det2_shifted)},
        {"psi1", to_json(l.psi1)},
        {"psi2", to_json(l.psi2)},
        {"psi1_shifted", to_json(l.psi1_shifted)},
        {"psi2_shifted", to_json(l.psi2_shifted)},
        {"psi", to_json(l.psi)},
        {"slightly_less_convention",
         l.convention == ledger::SlightlyLessConvention::kReversedSign ? "reversed-sign" : "literal"},
        {"slightly_less", l.slightly_less},
        {"assumption", l.assumption}}},
  };
}

json to_json(const induction::DetInductionReport& report) {
  json examples = json::array();
  for (const auto& c : report.counterexamples) {
    examples.push_back({{"identity", c.identity},
                        {"frob", std::to_string(c.element.frob)},
                        {"h", std::to_string(c.element.h)},
                        {"expected", {std::to_string(c.expected.sign), std::to_string(c.expected.exponent)}},
                        {"actual", {std::to_string(c.actual.sign), std::to_string(c.actual.exponent)}}});
  }
  return {{"q", std::to_string(report.q)},
          {"d", std::to_string(report.d)},
          {"b", std::to_string(report.b)},
          {"subgroup_checks", std::to_string(report.subgroup_checks)},
          {"generator_checks", std::to_string(report.generator_checks)},
          {"counterexample_count", std::to_string(report.counterexample_count)},
          {"counterexamples", examples}};
}

json to_json(const lift::LiftCertificate& cert) {
  json pairing = json::array();
  for (const auto& pair : cert.layout.pairing()) {
    pairing.push_back({{"sigma", std::to_string(pair.sigma)}, {"tau0", std::to_string(pair.tau0)}});
  }
  json checks = json::array();
  for (const auto& check : cert.checks) {
    checks.push_back({{"id", check.id}, {"status", lift::to_string(check.status)}});
  }
  json induced = json::array();
  for (const auto& w : lift::induce_weights(cert.weights, cert.layout).per_sigma) {
    induced.push_back(to_json(w));
  }
  return {
      {"schema", kCertificateSchema},
      {"shape", to_json(cert.shape)},
      {"layout",
       {{"sigma_F", std::to_string(cert.layout.sigma_f_count())},
        {"sigma_E0", std::to_string(cert.layout.sigma_e0_count())},
        {"sigma_E", std::to_string(cert.layout.sigma_e_count())},
        {"tau", pairing}}},
      {"theta_bar",
       {{"p", to_decimal(cert.theta_bar.field.p)},
        {"f", std::to_string(cert.theta_bar.field.f)},
        {"b", to_decimal(cert.theta_bar.exponent)}}},
      {"psi", {{"a", to_json(cert.psi.a)}, {"uniformizer", to_json(cert.psi.uniformizer)}}},
      {"weights", to_json(cert.weights.k)},
      {"induced_weights", induced},
      {"theta_uniformizer", to_json(cert.theta_uniformizer)},
      {"hypotheses", cert.hypotheses},
      {"checks", checks},
  };
}

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw MalformedInput(path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw MalformedInput(path + "." + key + ": missing");
  return *it;
}

Integer integer_from_json(const json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const MalformedInput&) {
      throw MalformedInput(path + ": not a decimal integer");
    }
  }
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  }
  throw MalformedInput(path + ": expected an integer (decimal string)");
}

std::uint32_t small_from_json(const json& j, const std::string& path) {
  const Integer v = integer_from_json(j, path);
  if (v < 0 || v > std::numeric_limits<std::uint32_t>::max()) {
    throw MalformedInput(path + ": out of range");
  }
  return v.convert_to<std::uint32_t>();
}

std::vector<Integer> integers_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) throw MalformedInput(path + ": expected an array");
  std::vector<Integer> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(integer_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

UnitExpr unit_from_json(const json& j, const std::string& path) {
  const Integer sign = integer_from_json(field(j, "sign", path), path + ".sign");
  if (sign != 1 && sign != -1) throw MalformedInput(path + ".sign: must be 1 or -1");
  const json& factors = field(j, "factors", path);
  if (!factors.is_array()) throw MalformedInput(path + ".factors: expected an array");
  std::map<std::string, Rational> parts;
  std::string previous;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const std::string at = path + ".factors[" + std::to_string(i) + "]";
    const json& label = field(factors[i], "label", at);
    if (!label.is_string() || label.get<std::string>().empty()) {
      throw MalformedInput(at + ".label: expected a nonempty string");
    }
    const std::string name = label.get<std::string>();
    if (i > 0 && !(previous < name)) throw MalformedInput(at + ": labels must be sorted and unique");
    previous = name;
    const Integer num = integer_from_json(field(factors[i], "num", at), at + ".num");
    const Integer den = integer_from_json(field(factors[i], "den", at), at + ".den");
    if (den < 1) throw MalformedInput(at + ".den: must be positive");
    parts[name] = Rational(num, den);
  }
  return UnitExpr::from_parts(sign.convert_to<int>(), parts);
}

lift::LocalFieldShape shape_from_json(const json& j, const std::string& path) {
  lift::LocalFieldShape shape;
  shape.p = integer_from_json(field(j, "p", path), path + ".p");
  shape.f = small_from_json(field(j, "f", path), path + ".f");
  shape.e = small_from_json(field(j, "e", path), path + ".e");
  shape.d = small_from_json(field(j, "d", path), path + ".d");
  shape.t = integer_from_json(field(j, "t", path), path + ".t");
  shape.validate();
  return shape;
}

assign::IntegerMatrix matrix_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) throw MalformedInput(path + ": expected an array of rows");
  std::vector<std::vector<Integer>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    rows.push_back(integers_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return assign::IntegerMatrix::from_rows(rows);
}

ledger::WeightProfile profile_from_json(const json& j, const std::string& path) {
  const std::uint32_t dim = small_from_json(field(j, "dim", path), path + ".dim");
  const json& weights = field(j, "weights", path);
  if (!weights.is_array()) throw MalformedInput(path + ".weights: expected an array");
  std::vector<std::vector<Integer>> tuples;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    tuples.push_back(integers_from_json(weights[i], path + ".weights[" + std::to_string(i) + "]"));
  }
  return ledger::WeightProfile::make(dim, std::move(tuples));
}

lift::LiftCertificate certificate_from_json(const json& j) {
  const std::string root = "certificate";
  const json& schema = field(j, "schema", root);
  if (schema != kCertificateSchema) throw MalformedInput(root + ".schema: unsupported");

  lift::LiftCertificate cert;
  cert.shape = shape_from_json(field(j, "shape", root), root + ".shape");
  cert.layout = lift::build_layout(cert.shape);

  const json& tb = field(j, "theta_bar", root);
  const auto field_spec = ff::FiniteFieldSpec::make(
      integer_from_json(field(tb, "p", root + ".theta_bar"), root + ".theta_bar.p"),
      small_from_json(field(tb, "f", root + ".theta_bar"), root + ".theta_bar.f"));
  cert.theta_bar = ff::MultChar::make(
      field_spec, integer_from_json(field(tb, "b", root + ".theta_bar"), root + ".theta_bar.b"));

  const json& psi = field(j, "psi", root);
  cert.psi.a = integers_from_json(field(psi, "a", root + ".psi"), root + ".psi.a");
  cert.psi.uniformizer = unit_from_json(field(psi, "uniformizer", root + ".psi"), root + ".psi.uniformizer");
  cert.weights.k = integers_from_json(field(j, "weights", root), root + ".weights");
  cert.theta_uniformizer = unit_from_json(field(j, "theta_uniformizer", root), root + ".theta_uniformizer");

  const json& hypotheses = field(j, "hypotheses", root);
  if (!hypotheses.is_array()) throw MalformedInput(root + ".hypotheses: expected an array");
  for (const auto& h : hypotheses) {
    if (!h.is_string()) throw MalformedInput(root + ".hypotheses: expected strings");
    cert.hypotheses.push_back(h.get<std::string>());
  }
  const json& checks = field(j, "checks", root);
  if (!checks.is_array()) throw MalformedInput(root + ".checks: expected an array");
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const std::string at = root + ".checks[" + std::to_string(i) + "]";
    const json& id = field(checks[i], "id", at);
    const json& status = field(checks[i], "status", at);
    if (!id.is_string() || !status.is_string()) throw MalformedInput(at + ": expected strings");
    cert.checks.push_back({id.get<std::string>(), lift::check_status_from_string(status.get<std::string>())});
  }
  return cert;
}

}  // namespace crylift::codec
