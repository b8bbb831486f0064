#pragma once

// JSON wire format. Integers are always emitted as decimal strings; on input
// both decimal strings and JSON integers are accepted. Parse failures throw
// MalformedInput with the offending field path.

#include "crylift/assign_solver.hpp"
#include "crylift/det_ledger.hpp"
#include "crylift/ff_chars.hpp"
#include "crylift/induction_oracle.hpp"
#include "crylift/lift_builder.hpp"
#include "crylift/unit_expr.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace crylift::codec {

using nlohmann::json;

inline constexpr const char* kCertificateSchema = "crylift.lift-certificate/1";

json to_json(const Integer& value);
json to_json(const std::vector<Integer>& values);
json to_json(const UnitExpr& unit);
json to_json(const lift::LocalFieldShape& shape);
json to_json(const ff::DigitVector& digits);
json to_json(const assign::IntegerMatrix& matrix);
json to_json(const assign::RebalanceTrace& trace);
json to_json(const ledger::WeightProfile& profile);
json to_json(const ledger::CrystCharSpec& spec);
json to_json(const ledger::ExtensionShift& shift);
json to_json(const induction::DetInductionReport& report);
json to_json(const lift::LiftCertificate& cert);

Integer integer_from_json(const json& j, const std::string& path);
std::uint32_t small_from_json(const json& j, const std::string& path);
std::vector<Integer> integers_from_json(const json& j, const std::string& path);
const json& field(const json& j, const char* key, const std::string& path);

UnitExpr unit_from_json(const json& j, const std::string& path);
lift::LocalFieldShape shape_from_json(const json& j, const std::string& path);
assign::IntegerMatrix matrix_from_json(const json& j, const std::string& path);
ledger::WeightProfile profile_from_json(const json& j, const std::string& path);
lift::LiftCertificate certificate_from_json(const json& j);

}  // namespace crylift::codec
