#pragma once

// Independent re-verification of lift certificates from their raw JSON
// fields. Nothing here calls the solver, the layout builder or the digit
// code; every identity is recomputed from the recorded data.

#include <json.hpp>

#include <string>
#include <vector>

namespace crylift::verify {

enum class Distinctness {
  kGlobal,     // all weights pairwise distinct (default)
  kPerSigma,   // only within each tau|_F = sigma group
};

struct VerifyOptions {
  Distinctness distinctness = Distinctness::kGlobal;
};

struct Failure {
  std::string check;
  std::string detail;
};

struct VerifyResult {
  std::vector<std::string> schema_errors;
  std::vector<Failure> failures;

  bool schema_ok() const { return schema_errors.empty(); }
  bool passed() const { return schema_ok() && failures.empty(); }
};

VerifyResult verify_certificate(const nlohmann::json& certificate, const VerifyOptions& options = {});

nlohmann::json to_json(const VerifyResult& result);

}  // namespace crylift::verify
