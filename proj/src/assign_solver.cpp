#include "crylift/assign_solver.hpp"

#include "crylift/errors.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace crylift::assign {

std::vector<Integer> IntegerMatrix::row_sums() const {
  std::vector<Integer> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j);
  }
  return out;
}

std::vector<Integer> IntegerMatrix::col_sums() const {
  std::vector<Integer> out(cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[j] += (*this)(i, j);
  }
  return out;
}

Integer IntegerMatrix::row_max_abs(std::size_t i) const {
  Integer best = 0;
  for (const Integer& v : row(i)) best = std::max(best, crylift::abs(v));
  return best;
}

Integer IntegerMatrix::row_min_abs(std::size_t i) const {
  auto r = row(i);
  Integer best = crylift::abs(r.front());
  for (const Integer& v : r) best = std::min(best, crylift::abs(v));
  return best;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntegerMatrix out(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw MalformedInput("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = rows[i][j];
  }
  return out;
}

std::vector<std::vector<Integer>> IntegerMatrix::to_rows() const {
  std::vector<std::vector<Integer>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i].assign(row(i).begin(), row(i).end());
  return out;
}

namespace {

Integer sum_of(std::span<const Integer> xs) {
  return std::accumulate(xs.begin(), xs.end(), Integer(0));
}

Integer ceil_div(const Integer& a, const Integer& b) { return -floor_div(-a, b); }

// Values of N for which |value + step*N| <= bound, as a closed interval
// [lo, hi] (empty when lo > hi). step != 0.
std::pair<Integer, Integer> forbidden_interval(const Integer& value, const Integer& step,
                                               const Integer& bound) {
  if (step > 0) return {ceil_div(-bound - value, step), floor_div(bound - value, step)};
  const Integer t = -step;
  return {ceil_div(value - bound, t), floor_div(value + bound, t)};
}

// Row i, in place: make entries pairwise distinct by (x_j + mN, x_k - mN)
// swaps with the smallest N >= 1 that creates no new collision.
void repair_collisions(IntegerMatrix& x, std::size_t i, const Integer& m, RebalanceTrace* trace) {
  const std::size_t cols = x.cols();
  for (;;) {
    std::optional<std::pair<std::size_t, std::size_t>> hit;
    for (std::size_t j = 0; j < cols && !hit; ++j) {
      for (std::size_t k = j + 1; k < cols; ++k) {
        if (x(i, j) == x(i, k)) {
          hit = std::pair{j, k};
          break;
        }
      }
    }
    if (!hit) return;
    const auto [j, k] = *hit;

    auto clashes = [&](const Integer& candidate) {
      for (std::size_t c = 0; c < cols; ++c) {
        if (c != j && c != k && x(i, c) == candidate) return true;
      }
      return false;
    };
    Integer n = 1;
    while (clashes(x(i, j) + m * n) || clashes(x(i, k) - m * n)) ++n;

    x(i, j) += m * n;
    x(i, k) -= m * n;
    if (trace) {
      trace->push_back({RebalanceStep::Kind::kCollision, i, {j}, {k}, n, x});
    }
  }
}

// Row i, in place: raise the largest entry by m(|J|-1)N and lower the others
// by mN, with the smallest N >= 0 making every |x_ij| > bound.
void enforce_magnitude(IntegerMatrix& x, std::size_t i, const Integer& m, const Integer& bound,
                       RebalanceTrace* trace) {
  const std::size_t cols = x.cols();
  std::size_t top = 0;
  for (std::size_t j = 1; j < cols; ++j) {
    if (x(i, j) > x(i, top)) top = j;
  }

  std::vector<std::pair<Integer, Integer>> forbidden;
  forbidden.reserve(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    const Integer step = (j == top) ? Integer(m * (cols - 1)) : Integer(-m);
    auto [lo, hi] = forbidden_interval(x(i, j), step, bound);
    if (lo <= hi) forbidden.emplace_back(std::move(lo), std::move(hi));
  }

  // Scan N = 0, 1, 2, ... jumping past each forbidden interval that covers N.
  Integer n = 0;
  for (bool moved = true; moved;) {
    moved = false;
    for (const auto& [lo, hi] : forbidden) {
      if (lo <= n && n <= hi) {
        n = hi + 1;
        moved = true;
      }
    }
  }
  if (n == 0) return;

  std::vector<std::size_t> lowered;
  for (std::size_t j = 0; j < cols; ++j) {
    if (j == top) {
      x(i, j) += m * (cols - 1) * n;
    } else {
      x(i, j) -= m * n;
      lowered.push_back(j);
    }
  }
  if (trace) {
    trace->push_back({RebalanceStep::Kind::kMagnitude, i, {top}, std::move(lowered), n, x});
  }
}

}  // namespace

AssignmentMatrix transport(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.empty() || b.empty()) throw MalformedInput("transport needs nonempty row and column sums");
  if (sum_of(a) != sum_of(b)) {
    throw Infeasible("row total " + to_decimal(sum_of(a)) + " != column total " +
                     to_decimal(sum_of(b)));
  }

  IntegerMatrix x(a.size(), b.size());
  std::vector<Integer> remaining(b.begin(), b.end());
  // Peel off the first row into the first column, then recurse on the rest.
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    x(i, 0) = a[i];
    remaining[0] -= a[i];
  }
  for (std::size_t j = 0; j < b.size(); ++j) x(a.size() - 1, j) = remaining[j];

  TransportInstance instance{{a.begin(), a.end()}, {b.begin(), b.end()}, std::nullopt, std::nullopt};
  return AssignmentMatrix{std::move(x), std::move(instance)};
}

AssignmentMatrix regular_transport(std::span<const Integer> a, std::span<const Integer> b,
                                   const Integer& m, const Integer& bound, RebalanceTrace* trace) {
  if (a.empty()) throw MalformedInput("regular transport needs at least one row");
  if (b.size() < 2) throw MalformedInput("regular transport needs at least two columns");
  if (m < 1) throw MalformedInput("modulus must be >= 1");
  if (bound < 0) throw MalformedInput("magnitude bound must be >= 0");
  if (floor_mod(sum_of(a) - sum_of(b), m) != 0) {
    throw Infeasible("row total and column total differ mod " + to_decimal(m));
  }

  // Exact column targets in the residue classes of b: all of the slack goes
  // on the last column.
  std::vector<Integer> exact_cols(b.begin(), b.end());
  exact_cols.back() = sum_of(a) - sum_of(b.first(b.size() - 1));
  ensure(floor_mod(exact_cols.back() - b.back(), m) == 0, "last column left its residue class");

  IntegerMatrix x = transport(a, exact_cols).entries;
  if (trace) trace->push_back({RebalanceStep::Kind::kInitial, 0, {}, {}, 0, x});

  for (std::size_t i = 0; i < x.rows(); ++i) {
    const Integer row_bound = (i == 0) ? bound : std::max(bound, x.row_max_abs(i - 1));
    repair_collisions(x, i, m, trace);
    enforce_magnitude(x, i, m, row_bound, trace);
  }

  TransportInstance instance{{a.begin(), a.end()}, {b.begin(), b.end()}, m, bound};
  return AssignmentMatrix{std::move(x), std::move(instance)};
}

AssignmentReport verify_assignment(const AssignmentMatrix& am) {
  AssignmentReport report;
  auto fail = [&](std::string what, std::string detail) {
    report.ok = false;
    report.violations.push_back({std::move(what), std::move(detail)});
  };

  const auto& x = am.entries;
  const auto& inst = am.instance;
  if (x.rows() != inst.row_sums.size() || x.cols() != inst.col_sums.size()) {
    fail("shape", std::to_string(x.rows()) + "x" + std::to_string(x.cols()) + " matrix for " +
                      std::to_string(inst.row_sums.size()) + "x" +
                      std::to_string(inst.col_sums.size()) + " instance");
    return report;
  }

  const auto rows = x.row_sums();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] != inst.row_sums[i]) {
      fail("row_sum", "row " + std::to_string(i) + " sums to " + to_decimal(rows[i]) +
                          ", expected " + to_decimal(inst.row_sums[i]));
    }
  }

  const auto cols = x.col_sums();
  if (inst.mode() == Mode::kExact) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j] != inst.col_sums[j]) {
        fail("col_sum", "column " + std::to_string(j) + " sums to " + to_decimal(cols[j]) +
                            ", expected " + to_decimal(inst.col_sums[j]));
      }
    }
    return report;
  }

  const Integer& m = *inst.modulus;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (floor_mod(cols[j] - inst.col_sums[j], m) != 0) {
      fail("col_congruence", "column " + std::to_string(j) + " sums to " + to_decimal(cols[j]) +
                                 ", not " + to_decimal(inst.col_sums[j]) + " mod " + to_decimal(m));
    }
  }

  std::vector<Integer> sorted(x.data().begin(), x.data().end());
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    fail("distinct", "value " + to_decimal(*dup) + " occurs more than once");
  }

  const Integer bound = inst.bound.value_or(0);
  for (const Integer& v : x.data()) {
    if (crylift::abs(v) <= bound) {
      fail("magnitude", "|" + to_decimal(v) + "| <= " + to_decimal(bound));
    }
  }
  return report;
}

bool rows_separated(const IntegerMatrix& x) {
  for (std::size_t i = 0; i + 1 < x.rows(); ++i) {
    if (!(x.row_max_abs(i) < x.row_min_abs(i + 1))) return false;
  }
  return true;
}

}  // namespace crylift::assign
