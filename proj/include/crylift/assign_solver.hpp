#pragma once

// Integer assignments with prescribed row sums and exact or modular column
// sums, optionally with pairwise-distinct entries bounded away from zero.

#include "crylift/integer.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace crylift::assign {

/// Dense row-major matrix of exact integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Integer> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<const Integer> data() const { return data_; }

  std::vector<Integer> row_sums() const;
  std::vector<Integer> col_sums() const;
  /// max_j |x_ij|
  Integer row_max_abs(std::size_t i) const;
  Integer row_min_abs(std::size_t i) const;

  static IntegerMatrix from_rows(const std::vector<std::vector<Integer>>& rows);
  std::vector<std::vector<Integer>> to_rows() const;

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

enum class Mode { kExact, kRegular };

struct TransportInstance {
  std::vector<Integer> row_sums;
  std::vector<Integer> col_sums;
  std::optional<Integer> modulus;  // present in regular mode
  std::optional<Integer> bound;    // C; present in regular mode

  Mode mode() const { return modulus ? Mode::kRegular : Mode::kExact; }
};

struct AssignmentMatrix {
  IntegerMatrix entries;
  TransportInstance instance;
};

/// One rebalancing pass of regular_transport, with the matrix it produced.
struct RebalanceStep {
  enum class Kind { kInitial, kCollision, kMagnitude };
  Kind kind = Kind::kInitial;
  std::size_t row = 0;
  std::vector<std::size_t> raised;   // columns that gained m*N (or m*(|J|-1)*N)
  std::vector<std::size_t> lowered;  // columns that lost m*N
  Integer n = 0;
  IntegerMatrix after;
};

using RebalanceTrace = std::vector<RebalanceStep>;

/// Exact transport: row sums a, column sums b. Requires sum(a) == sum(b)
/// (Infeasible otherwise) and both lists nonempty (MalformedInput).
/// Row i_0 and column j_0 are always the first remaining ones.
AssignmentMatrix transport(std::span<const Integer> a, std::span<const Integer> b);

/// Pairwise-distinct assignment with exact row sums a, column sums congruent
/// to b mod m, and every |x_ij| > C. Rows are block-separated in input order:
/// max |row i| < min |row i+1|.
///
/// Throws MalformedInput for |J| < 2, m < 1, C < 0 or empty inputs, and
/// Infeasible when sum(a) != sum(b) mod m. When `trace` is given, every
/// rebalancing pass is appended to it.
AssignmentMatrix regular_transport(std::span<const Integer> a, std::span<const Integer> b,
                                   const Integer& m, const Integer& bound,
                                   RebalanceTrace* trace = nullptr);

struct Violation {
  std::string constraint;  // "shape", "row_sum", "col_sum", "col_congruence", "distinct", "magnitude"
  std::string detail;
};

struct AssignmentReport {
  bool ok = true;
  std::vector<Violation> violations;
};

/// Checks every constraint appropriate to the instance's mode.
AssignmentReport verify_assignment(const AssignmentMatrix& m);

/// max |row i| < min |row i+1| for every consecutive row pair.
bool rows_separated(const IntegerMatrix& x);

}  // namespace crylift::assign
