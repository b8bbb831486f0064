#pragma once

// Exhaustive lift sweep: every shape in the configured grid (subject to the
// p^{fd} cap), every residual character exponent, and sampled determinant
// exponents forced to be compatible. Each instance is lifted, serialized,
// re-parsed and re-verified by the independent verifier.

#include "crylift/integer.hpp"
#include "crylift/lift_builder.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace crylift::sweep {

struct Range {
  std::uint32_t lo = 1;
  std::uint32_t hi = 1;
  bool empty() const { return lo > hi; }
};

enum class TMode { kUnits, kWithP };  // t = q - 1, t = p (q - 1)

struct SweepConfig {
  std::vector<Integer> primes{2, 3, 5};
  Range f{1, 2};
  Range e{1, 2};
  Range d{1, 3};
  std::vector<TMode> t_modes{TMode::kUnits, TMode::kWithP};
  Integer a_bound = 10;
  std::uint32_t samples = 1;  // determinant samples per residual character
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  unsigned max_field_bits = 10;
  bool timing = false;

  /// Throws MalformedInput on empty ranges, non-primes, zero samples/jobs.
  void validate() const;
};

enum class Status { kPass, kFail, kSkipped };

struct InstanceRow {
  std::size_t cell = 0;
  lift::LocalFieldShape shape;
  Integer b;
  std::vector<Integer> a;
  Status status = Status::kPass;
  std::vector<std::string> violations;
  std::uint64_t micros = 0;
};

struct Totals {
  std::uint64_t instances = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;
};

struct Report {
  SweepConfig config;
  std::vector<InstanceRow> rows;
  Totals totals;
};

/// Shapes of the grid in canonical order (p, f, e, d, t-mode), capped by
/// p^{fd} <= 2^max_field_bits.
std::vector<lift::LocalFieldShape> grid(const SweepConfig& config);

/// Lifts and re-verifies one instance; returns the violated invariant ids.
std::vector<std::string> check_instance(const lift::LocalFieldShape& shape, const Integer& b,
                                        const std::vector<Integer>& a);

/// Determinant exponents in [-bound, bound], then the first exponent of each
/// inertia block moved by the smallest residue correction so compat_check
/// holds. Returns nothing when no psi can be compatible with theta-bar.
std::optional<std::vector<Integer>> forced_compatible_exponents(const lift::EmbeddingLayout& layout,
                                                                const Integer& b,
                                                                std::vector<Integer> raw);

Report run_sweep(const SweepConfig& config);

nlohmann::json to_json(const Report& report);
SweepConfig config_from_json(const nlohmann::json& j);

}  // namespace crylift::sweep
