#include "crylift/sweep.hpp"

#include "crylift/certificate_verify.hpp"
#include "crylift/errors.hpp"
#include "crylift/ff_chars.hpp"
#include "crylift/json_codec.hpp"

#include <atomic>
#include <chrono>
#include <random>
#include <thread>

namespace crylift::sweep {

void SweepConfig::validate() const {
  if (primes.empty()) throw MalformedInput("sweep: prime list is empty");
  for (const Integer& p : primes) {
    if (!is_prime(p)) throw MalformedInput("sweep: " + to_decimal(p) + " is not prime");
  }
  if (f.empty() || e.empty() || d.empty()) throw MalformedInput("sweep: empty f, e or d range");
  if (f.lo < 1 || e.lo < 1 || d.lo < 1) throw MalformedInput("sweep: ranges must start at 1 or above");
  if (t_modes.empty()) throw MalformedInput("sweep: no t modes");
  if (a_bound < 0 || a_bound > 1'000'000'000) throw MalformedInput("sweep: a-bound out of range");
  if (samples < 1) throw MalformedInput("sweep: samples must be >= 1");
  if (jobs < 1) throw MalformedInput("sweep: jobs must be >= 1");
  if (max_field_bits < 1 || max_field_bits > 24) {
    throw MalformedInput("sweep: max-field-bits must lie in [1, 24]");
  }
}

std::vector<lift::LocalFieldShape> grid(const SweepConfig& config) {
  const Integer cap = ipow(2, config.max_field_bits);
  std::vector<lift::LocalFieldShape> out;
  for (const Integer& p : config.primes) {
    for (std::uint32_t f = config.f.lo; f <= config.f.hi; ++f) {
      for (std::uint32_t e = config.e.lo; e <= config.e.hi; ++e) {
        for (std::uint32_t d = config.d.lo; d <= config.d.hi; ++d) {
          if (ipow(p, std::uint64_t{f} * d) > cap) continue;
          const Integer q = ipow(p, f);
          for (TMode mode : config.t_modes) {
            const Integer t = mode == TMode::kUnits ? Integer(q - 1) : Integer(p * (q - 1));
            out.push_back({p, f, e, d, t});
          }
        }
      }
    }
  }
  return out;
}

std::optional<std::vector<Integer>> forced_compatible_exponents(const lift::EmbeddingLayout& layout,
                                                                const Integer& b,
                                                                std::vector<Integer> raw) {
  const auto& shape = layout.shape();
  const auto theta_bar = ff::MultChar::make(shape.extension_residue_field(), b);
  const auto b_digits = ff::digits(theta_bar).digits;
  const auto c_digits = ff::digits(ff::restrict_to(theta_bar, shape.residue_field())).digits;
  const Integer m = shape.p - 1;

  for (std::size_t s = 0; s < layout.sigma_f0_count(); ++s) {
    Integer cols = 0;
    for (std::size_t tau0 : layout.residue_block(s)) cols += b_digits[tau0];
    if (floor_mod(cols - c_digits[s], m) != 0) return std::nullopt;

    Integer rows = 0;
    for (std::size_t sigma : layout.inertia_block(s)) rows += raw[sigma];
    Integer delta = floor_mod(c_digits[s] - rows, m);
    if (2 * delta > m) delta -= m;
    raw[layout.inertia_block(s).front()] += delta;
  }
  return raw;
}

std::vector<std::string> check_instance(const lift::LocalFieldShape& shape, const Integer& b,
                                        const std::vector<Integer>& a) {
  std::vector<std::string> violations;
  try {
    const auto theta_bar = ff::MultChar::make(shape.extension_residue_field(), b);
    const lift::DetSpec psi{a, UnitExpr::symbol("psi(varpi_F)")};
    const auto cert = lift::irr_crys_lift(theta_bar, psi, shape);

    const auto document = codec::to_json(cert);
    if (codec::to_json(codec::certificate_from_json(document)).dump() != document.dump()) {
      violations.emplace_back("roundtrip");
    }
    const auto verdict = verify::verify_certificate(document);
    for (const auto& e : verdict.schema_errors) violations.push_back("schema: " + e);
    for (const auto& f : verdict.failures) violations.push_back(f.check);
  } catch (const std::exception& error) {
    violations.push_back(std::string("exception: ") + error.what());
  }
  return violations;
}

namespace {

std::vector<InstanceRow> run_cell(const SweepConfig& config, std::size_t cell,
                                  const lift::LocalFieldShape& shape) {
  std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                    static_cast<std::uint32_t>(cell)};
  std::mt19937_64 rng(seq);
  const auto bound = config.a_bound.convert_to<std::int64_t>();
  std::uniform_int_distribution<std::int64_t> sample(-bound, bound);

  const auto layout = lift::build_layout(shape);
  const Integer top = ipow(shape.p, std::uint64_t{shape.f} * shape.d) - 2;
  std::vector<InstanceRow> rows;
  for (Integer b = 0; b <= top; ++b) {
    for (std::uint32_t n = 0; n < config.samples; ++n) {
      std::vector<Integer> raw(layout.sigma_f_count());
      for (auto& x : raw) x = sample(rng);

      InstanceRow row;
      row.cell = cell;
      row.shape = shape;
      row.b = b;
      const auto start = std::chrono::steady_clock::now();
      if (auto a = forced_compatible_exponents(layout, b, std::move(raw))) {
        row.a = std::move(*a);
        row.violations = check_instance(shape, b, row.a);
        row.status = row.violations.empty() ? Status::kPass : Status::kFail;
      } else {
        row.status = Status::kSkipped;
      }
      if (config.timing) {
        row.micros = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::microseconds>(
                                                    std::chrono::steady_clock::now() - start)
                                                    .count());
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace

Report run_sweep(const SweepConfig& config) {
  config.validate();
  const auto shapes = grid(config);
  std::vector<std::vector<InstanceRow>> per_cell(shapes.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t cell = next++; cell < shapes.size(); cell = next++) {
      per_cell[cell] = run_cell(config, cell, shapes[cell]);
    }
  };
  const unsigned width = std::min<std::size_t>(config.jobs, std::max<std::size_t>(shapes.size(), 1));
  std::vector<std::jthread> pool;
  for (unsigned i = 1; i < width; ++i) pool.emplace_back(worker);
  worker();
  pool.clear();

  Report report;
  report.config = config;
  for (auto& rows : per_cell) {
    for (auto& row : rows) {
      ++report.totals.instances;
      switch (row.status) {
        case Status::kPass: ++report.totals.passed; break;
        case Status::kFail: ++report.totals.failed; break;
        case Status::kSkipped: ++report.totals.skipped; break;
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

namespace {

const char* to_string(Status s) {
  switch (s) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kSkipped: return "skipped";
  }
  return "fail";
}

const char* to_string(TMode mode) { return mode == TMode::kUnits ? "q-1" : "p(q-1)"; }

nlohmann::json range_json(const Range& r) { return {std::to_string(r.lo), std::to_string(r.hi)}; }

Range range_from_json(const nlohmann::json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) throw MalformedInput(path + ": expected [lo, hi]");
  return {codec::small_from_json(j[0], path + "[0]"), codec::small_from_json(j[1], path + "[1]")};
}

}  // namespace

nlohmann::json to_json(const Report& report) {
  const auto& c = report.config;
  nlohmann::json modes = nlohmann::json::array();
  for (TMode m : c.t_modes) modes.push_back(to_string(m));
  nlohmann::json config = {{"primes", codec::to_json(c.primes)},
                           {"f", range_json(c.f)},
                           {"e", range_json(c.e)},
                           {"d", range_json(c.d)},
                           {"t_modes", modes},
                           {"a_bound", to_decimal(c.a_bound)},
                           {"samples", std::to_string(c.samples)},
                           {"seed", std::to_string(c.seed)},
                           {"max_field_bits", std::to_string(c.max_field_bits)}};

  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : report.rows) {
    nlohmann::json r = {{"cell", std::to_string(row.cell)},
                        {"shape", codec::to_json(row.shape)},
                        {"b", to_decimal(row.b)},
                        {"a", codec::to_json(row.a)},
                        {"status", to_string(row.status)},
                        {"violations", row.violations}};
    if (c.timing) r["micros"] = std::to_string(row.micros);
    rows.push_back(std::move(r));
  }
  return {{"schema", "crylift.sweep-report/1"},
          {"config", config},
          {"totals",
           {{"instances", std::to_string(report.totals.instances)},
            {"passed", std::to_string(report.totals.passed)},
            {"failed", std::to_string(report.totals.failed)},
            {"skipped", std::to_string(report.totals.skipped)}}},
          {"rows", rows}};
}

SweepConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw MalformedInput("sweep config: expected an object");
  SweepConfig c;
  if (j.contains("primes")) c.primes = codec::integers_from_json(j["primes"], "config.primes");
  if (j.contains("f")) c.f = range_from_json(j["f"], "config.f");
  if (j.contains("e")) c.e = range_from_json(j["e"], "config.e");
  if (j.contains("d")) c.d = range_from_json(j["d"], "config.d");
  if (j.contains("t_modes")) {
    c.t_modes.clear();
    for (const auto& m : j["t_modes"]) {
      if (m == "q-1") c.t_modes.push_back(TMode::kUnits);
      else if (m == "p(q-1)") c.t_modes.push_back(TMode::kWithP);
      else throw MalformedInput("config.t_modes: unknown mode");
    }
  }
  if (j.contains("a_bound")) c.a_bound = codec::integer_from_json(j["a_bound"], "config.a_bound");
  if (j.contains("samples")) c.samples = codec::small_from_json(j["samples"], "config.samples");
  if (j.contains("seed")) c.seed = to_uint64(codec::integer_from_json(j["seed"], "config.seed"));
  if (j.contains("jobs")) c.jobs = codec::small_from_json(j["jobs"], "config.jobs");
  if (j.contains("max_field_bits")) {
    c.max_field_bits = codec::small_from_json(j["max_field_bits"], "config.max_field_bits");
  }
  if (j.contains("timing")) c.timing = j["timing"].get<bool>();
  c.validate();
  return c;
}

}  // namespace crylift::sweep
